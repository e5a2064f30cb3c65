#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sytdesc {

using Rational = mpq_class;
using BigCount = mpz_class;

// Canonical "p/q" text: lowest terms, sign carried by p, q always present.
static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 target expected");

inline BigCount to_big(std::uint64_t v) { return BigCount(static_cast<unsigned long>(v)); }

// p/q reduced to lowest terms.
inline Rational ratio(const BigCount& p, const BigCount& q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value);
std::string to_string(const BigCount& value);

// Accepts "p" or "p/q" with an optional leading sign. Decimal points and
// exponents are rejected so no value is ever rounded on the way in.
Rational parse_rational(std::string_view text);

double approx(const Rational& value);

BigCount factorial(unsigned n);

// n (n-1) ... (n-k+1); zero when k > n.
BigCount falling_factorial(unsigned n, unsigned k);

} // namespace sytdesc
