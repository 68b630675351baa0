#pragma once

#include "ks/rational_function.hpp"

namespace ks {

// Exact value of the definite integral of p over [a, b].
Rat integrate_poly(const Poly& p, const Rat& a, const Rat& b);

// b |-> \int_{-1}^{1} q(t) (t+b)^{-s} dt as an exact rational function of b.
//
// Requires deg q < s - 1 so every antiderivative term stays a power of
// (t+b) and no logarithm appears: expand q in powers of (t+b),
// q(t) = sum_j q^(j)(-b)/j! (t+b)^j, and integrate term by term. The result's
// denominator divides (b-1)^{s-1} (b+1)^{s-1}.
RatFunc integrate_shifted_pole(const Poly& q, int s);

}  // namespace ks
