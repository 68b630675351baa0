#pragma once

#include <cstdint>

#include "ks/rational.hpp"

namespace ks {

// The log pair (S_n, Delta_m): the projectivization P(1 + O(n1,n2)) over
// CP^1 x CP^1 with ramification indices m0 (zero section) and minf (infinity
// section). m = gcd(m0, minf) and (m0, minf) = m (v0, vinf).
struct KSOrbifold {
  std::int64_t n1 = 0, n2 = 0;
  std::int64_t m0 = 1, minf = 1;
  std::int64_t m = 1, v0 = 1, vinf = 1;  // derived

  static KSOrbifold create(std::int64_t n1, std::int64_t n2, std::int64_t m0, std::int64_t minf);

  // Orbit of the symmetry group action on KS orbifolds.
  KSOrbifold transposed() const { return create(n2, n1, m0, minf); }
  KSOrbifold fiber_inverted() const { return create(-n1, -n2, minf, m0); }
};

// Parameters (r1, r2) of an admissible Kahler class: 0 < |ri| < 1 and, bound
// to an orbifold, sign(ri) = sign(ni).
struct AdmissiblePair {
  Rat r1, r2;

  bool in_range() const;
  bool valid_for(const KSOrbifold& orb) const;
  void require_valid_for(const KSOrbifold& orb) const;
};

enum class Basis { X, Y };

// Degree-2 (orbifold) cohomology class by coefficients in the x- or y-basis.
struct CohClass {
  Basis basis = Basis::Y;
  Rat a1, a2, a3;

  bool operator==(const CohClass& o) const = default;
};

// Log Fano test: n1/minf < 2, n2/minf < 2, -n1/m0 < 2, -n2/m0 < 2.
bool is_log_fano(const KSOrbifold& orb);

// Orbifold first Chern class, Y basis: (2 - n1/minf, 2 - n2/minf, 1/m0 + 1/minf).
CohClass c1_orb(const KSOrbifold& orb);

// gcd(2 m v0 vinf - n1 v0, 2 m v0 vinf - n2 v0, v0 + vinf); requires log Fano.
Int fano_index(const KSOrbifold& orb);

// Basis change via y3 - x3 = n1 x1 + n2 x2 (x1 = y1, x2 = y2).
CohClass convert_basis(const CohClass& c, std::int64_t n1, std::int64_t n2);

// The admissible class Omega_r / 2pi in the Y basis:
// (n1 (1-r1)/r1, n2 (1-r2)/r2, 2).
CohClass admissible_class(const KSOrbifold& orb, const AdmissiblePair& r);

// Inverse of admissible_class up to overall positive scale:
// ri = ni a3 / (2 ai + ni a3) for a Y-basis class with a3 != 0.
AdmissiblePair class_to_r(const KSOrbifold& orb, const CohClass& c);

// Rescale a Y-basis class by 2/a3 so it is admissible-normalized (a3 = 2).
CohClass normalize_admissible_scale(const CohClass& c);

// Kahler-cone membership of a Y-basis class on the regular S_n. For
// n1 n2 > 0 all coefficients must be positive; for n1 n2 < 0 (arranged
// n1 > 0 > n2, otherwise apply the transposition) the conditions are
// c1 > 0, c2 > -n2 c3, c3 > 0. n1 n2 = 0 is rejected.
bool is_kahler_class_regular(std::int64_t n1, std::int64_t n2, const CohClass& c);

}  // namespace ks
