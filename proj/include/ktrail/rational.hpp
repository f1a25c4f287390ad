#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ktrail {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ktrail
