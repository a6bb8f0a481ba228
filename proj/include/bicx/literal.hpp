#pragma once

#include <string>
#include <string_view>

#include "bicx/bicomplex.hpp"

namespace bicx {

/// Parses "a+bi+cj+dk" (any subset of terms, any order, units may repeat and
/// are summed) or the idempotent form "z1|z2" where each side is a complex
/// literal such as "1.5", "-2i" or "3-4e-2i". Throws ParseError.
Bicomplex parse_bicomplex(std::string_view text);

/// A complex number as "re", "imi" or "re+imi" with 17 significant digits.
std::string format_complex(Complex z);

/// Canonical idempotent form "z1|z2"; parse_bicomplex reads it back exactly.
std::string format_bicomplex(const Bicomplex& z);

}  // namespace bicx
