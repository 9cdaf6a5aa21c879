#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace cpmat {

/// Exact arbitrary-precision rational used for every numeric decision.
/// No decision in this library ever goes through floating point.
using Rational = mpq_class;
/// Exact arbitrary-precision integer (fraction-free elimination, polynomial
/// coefficients, permanents).
using Integer = mpz_class;

/// Renders a rational as "p" or "p/q" in lowest terms, e.g. "-3/2".
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

/// Parses "p" or "p/q" (optionally signed, q > 0 after canonicalization).
/// Returns nullopt on malformed input or zero denominator.
inline std::optional<Rational> rational_from_string(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // Accept only an optional leading '-', digits, optional "/digits".
    std::size_t i = 0;
    if (text[i] == '-') ++i;
    if (i >= text.size()) return std::nullopt;
    bool seen_slash = false;
    std::size_t digits_before = 0, digits_after = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (seen_slash) return std::nullopt;
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digits_after : digits_before)++;
        } else {
            return std::nullopt;
        }
    }
    if (digits_before == 0 || (seen_slash && digits_after == 0)) return std::nullopt;
    Rational r;
    if (r.set_str(std::string(text), 10) != 0) return std::nullopt;
    if (seen_slash && r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

}  // namespace cpmat
