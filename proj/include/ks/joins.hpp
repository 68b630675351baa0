#pragma once

#include <array>
#include <optional>

#include "ks/orbifold.hpp"

namespace ks {

// Identification of a diagonally polarized KS orbifold as the quasi-regular
// quotient of an S^3_w-join M *_l S^3_w.
struct JoinData {
  Int w0, winf;             // coprime positive weights
  Int l0, linf;             // coprime positive join integers
  Int s_frak;               // gcd(linf, |w0 vinf - winf v0|)
  bool smooth = false;      // gcd(linf, w0 winf) = 1
  Int class_multiplier;     // m gcd(s_frak, w0 vinf): transverse class = multiplier * primitive
  Int h4_order;             // w0 winf l0^2 linf^2
};

// True iff n1 n2 > 0 and r1 = r2 (with n1 n2 < 0 the signs of the ri differ,
// so equality is impossible).
bool is_diagonally_admissible(const KSOrbifold& orb, const AdmissiblePair& r);

// Solve r = (w0 minf - winf m0)/(w0 minf + winf m0) and
// linf n = l0 (w0 minf - winf m0) for coprime positive pairs, where
// n = sign(n1) gcd(|n1|, |n2|). Requires n1 n2 > 0, sign(r) = sign(n1),
// 0 < |r| < 1 and gcd(m0, minf, |n|) = 1.
JoinData join_identify(const KSOrbifold& orb, const Rat& r);

// gcd(linf, w0 winf) = 1.
bool smooth_join_check(const Int& l0, const Int& linf, const Int& w0, const Int& winf);

// For a primitive transverse class (multiplier 1) the join must be smooth
// and gcd(m0, minf) = 1; false flags a consistency violation.
bool primitive_class_smoothness(const KSOrbifold& orb, const JoinData& join);

// Positive integer matrix K = [[k1^1, k1^2], [k2^1, k2^2]] with
// k1^i - k2^i = n_i and (k1^i - k2^i)/(k1^i + k2^i) = r_i, when one exists.
std::optional<std::array<std::array<Int, 2>, 2>> yamazaki_feasible(std::int64_t n1,
                                                                   std::int64_t n2,
                                                                   const AdmissiblePair& r);

// Whether x^2 (x^2 + 4) / (5 x^2 - 4) is an integer (x >= 1).
bool integrality_lemma(const Int& x);

}  // namespace ks
