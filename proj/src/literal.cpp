#include "bicx/literal.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "bicx/error.hpp"

namespace bicx {

namespace {

[[noreturn]] void fail(std::string_view text, const char* why) {
  throw Error(ErrorKind::ParseError, std::string(why) + " in \"" + std::string(text) + "\"");
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (const char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

// Sums signed terms "<number>?<unit>?" into coefficients of 1, i, j, k.
// `units` lists the accepted unit letters after the implicit real unit.
std::array<double, 4> parse_terms(std::string_view whole, std::string_view s, std::string_view units) {
  if (s.empty()) fail(whole, "empty literal");
  std::array<double, 4> coef{};
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (!first) {
      fail(whole, "expected '+' or '-' between terms");
    }
    first = false;
    double value = 1.0;
    bool has_number = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      const auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
      if (ec != std::errc()) fail(whole, "bad number");
      pos = static_cast<std::size_t>(end - s.data());
      has_number = true;
    }
    std::size_t slot = 0;
    if (pos < s.size()) {
      const std::size_t u = units.find(s[pos]);
      if (u != std::string_view::npos) {
        slot = u + 1;
        ++pos;
      }
    }
    if (!has_number && slot == 0) fail(whole, "expected a number or unit");
    if (!std::isfinite(value)) fail(whole, "non-finite number");
    coef[slot] += sign * value;
  }
  return coef;
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Bicomplex parse_bicomplex(std::string_view text) {
  const std::string s = strip_spaces(text);
  const std::size_t bar = s.find('|');
  if (bar == std::string::npos) {
    const auto c = parse_terms(text, s, "ijk");
    return Bicomplex::from_parts(c[0], c[1], c[2], c[3]);
  }
  if (s.find('|', bar + 1) != std::string::npos) fail(text, "more than one '|'");
  const std::string_view view(s);
  const auto a = parse_terms(text, view.substr(0, bar), "i");
  const auto b = parse_terms(text, view.substr(bar + 1), "i");
  return Bicomplex::idempotent({a[0], a[1]}, {b[0], b[1]});
}

std::string format_complex(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) return format_real(re);
  const std::string imag = format_real(im) + "i";
  if (re == 0.0) return imag;
  return format_real(re) + (im > 0.0 ? "+" : "") + imag;
}

std::string format_bicomplex(const Bicomplex& z) { return format_complex(z.z1()) + "|" + format_complex(z.z2()); }

}  // namespace bicx
