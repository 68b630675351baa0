#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "ks/errors.hpp"

namespace ks {

// Exact arithmetic is carried by GMP throughout. mpq_class values produced by
// arithmetic are always canonical (reduced, positive denominator); direct
// num/den construction goes through make_rat which canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

inline Int to_int(std::int64_t v) { return Int(static_cast<long>(v)); }

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(std::int64_t num, std::int64_t den);

// Strict "p" or "p/q" syntax; a sign is permitted on the numerator only.
Rat rat_from_string(std::string_view s);
Int int_from_string(std::string_view s);

std::string to_string(const Rat& x);  // "p/q", "/1" omitted
std::string to_string(const Int& x);

inline int sign(const Rat& x) { return sgn(x); }
inline int sign(const Int& x) { return sgn(x); }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }
inline double to_double(const Rat& x) { return x.get_d(); }

// Exact conversion: every finite double is a rational.
Rat rat_from_double(double x);

// log|x| computed from the bit sizes of num/den, safe for values whose
// magnitude overflows double.
double log_abs(const Rat& x);

Rat pow_rat(const Rat& x, unsigned k);

}  // namespace ks
