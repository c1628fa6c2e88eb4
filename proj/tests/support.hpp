#pragma once

#include <string_view>

#include "folia/expression.hpp"

namespace support {

inline folia::Poly P(std::string_view text, std::size_t n = 3) {
    return folia::parse_poly(text, folia::Variables::defaults(n));
}

inline folia::Form W(std::string_view text, std::size_t n = 3) {
    return folia::parse_form(text, folia::Variables::defaults(n));
}

inline folia::Scalar S(std::string_view text) { return folia::parse_scalar(text); }

} // namespace support
