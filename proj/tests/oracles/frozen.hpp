#pragma once

// Generated by make_oracles.py from 50-digit mpmath evaluations. Do not edit.

#include <array>
#include <complex>

namespace oracle {

struct ComplexCase {
  std::complex<double> arg;
  std::complex<double> value;
};

inline const std::array<ComplexCase, 9> gamma_cases{{
    {{0.5, 0.0}, {1.7724538509055160273, 0.0}},
    {{2.5, 0.0}, {1.3293403881791370205, 0.0}},
    {{1.5, 0.0}, {0.88622692545275801365, 0.0}},
    {{0.3, 2.0}, {0.057465337569588035291, -0.074984912582646137681}},
    {{-2.5, 0.5}, {-0.3338752035224323374, -0.20645730796360841492}},
    {{10.0, 10.0}, {1423.851941789183074, -3496.081973307944589}},
    {{-7.25, -3.0}, {8.0249487419971615708e-8, -7.0224354525740557527e-8}},
    {{0.001, 0.0}, {999.42377248459546611, 0.0}},
    {{25.5, -0.75}, {-2.2799990526391368198e+24, -2.0292428209711469824e+24}},
}};

inline const std::array<ComplexCase, 3> log_gamma_cases{{
    {{50.0, 30.0}, {135.96296410344415869, 118.72299064233304554}},
    {{120.0, -5.0}, {452.92032483675608059, -23.918054545884290488}},
    {{3.0, 40.0}, {-52.689155060822636631, 111.4051324154599655}},
}};

inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double gamma_5_2 = 1.3293403881791370205;
inline constexpr double two_e_squared = 14.778112197861300454;

// 1F1(1; 2; y) = (e^y - 1) / y
inline const std::array<ComplexCase, 3> kummer_1_2_cases{{
    {{0.7, -1.2}, {1.0689454486046626215, -0.84880242072745019482}},
    {{-3.0, 2.0}, {0.24251528456299342993, 0.14658643865663129479}},
    {{5.0, 0.5}, {27.002001239079816047, 11.530411623832830654}},
}};

// e^z erf(sqrt z) for z = 0.1 k, k = 1..20
inline constexpr std::array<double, 20> erf_form_on_grid{
    0.38159247959803212726,
    0.57761448602800738285,
    0.75784039626126744992,
    0.93821844385639181217,
    1.1255646869698814035,
    1.3240942318198260612,
    1.5370499761764126634,
    1.7672949057002400801,
    2.0175816996387842679,
    2.2906982523032382309,
    2.5895588552028785015,
    2.9172697046968751746,
    3.2771819943046242921,
    3.6729393528675623383,
    4.1085233960600493152,
    4.5882996848128898089,
    5.1170656235645163808,
    5.7001014284702085403,
    6.3432250834007249041,
    7.0528520964843090144,
};

inline constexpr double mr_5_2_c2_third_derivative_at_1 = 10.538428671807382812;
inline constexpr double mr_half_c1_at_2 = 7.0528520964843090144;
inline constexpr std::complex<double> mr_complex_case{1.1403729231496986316, 0.64641011812077507303};  // E_{0.3+0.4i, -0.6+0.2i}(1.1-0.7i)

// E_nu(-t^nu) for nu = 0.5, 1.5 and t = 0.1 k, k = 1..20
inline constexpr std::array<double, 20> ml_half{
    0.72357843847761549756,
    0.64378827213216245107,
    0.59201841131473565407,
    0.55360625378487850566,
    0.52315658373024674336,
    0.49802456857068291367,
    0.47670273129406385826,
    0.45824602279222752445,
    0.44202141151816539591,
    0.42758357615580700441,
    0.41460716874355461058,
    0.40284721803967231498,
    0.39211467331461992834,
    0.38226061397711224895,
    0.37316567427801550744,
    0.3647327395822249948,
    0.35688176816268338004,
    0.34954603594273754342,
    0.34266935887854451193,
    0.33620400244634121285,
};

inline constexpr std::array<double, 20> ml_three_halves{
    0.97637774235675260574,
    0.93403621758990865237,
    0.88080849977498797495,
    0.82005638635026414176,
    0.75404880386935694369,
    0.68452989382008376739,
    0.61292156894177996524,
    0.54041695111553099623,
    0.46803069756644584432,
    0.39662936531808808449,
    0.32695153735028035523,
    0.25962231410142518345,
    0.19516454139040317004,
    0.13400807175895729649,
    0.076497799277217415112,
    0.02290090167454249092,
    -0.026586452527483808801,
    -0.071832779206693811488,
    -0.11276524768277553179,
    -0.14936389502406369011,
};

}  // namespace oracle
