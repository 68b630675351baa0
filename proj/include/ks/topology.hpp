#pragma once

#include <array>
#include <vector>

#include "ks/orbifold.hpp"

namespace ks {

// Torsion of one cohomology group. The artifact reports exactly what is
// proved: an exact order, a lower-bound order ("contains"), or an explicit
// product of cyclic factors.
struct Torsion {
  enum class Kind { trivial, exact, contains, group };
  Kind kind = Kind::trivial;
  Int order = 1;
  std::vector<std::pair<Int, int>> cyclic;  // (modulus, multiplicity), group kind

  static Torsion trivial() { return {}; }
  static Torsion exact(Int n) { return {Kind::exact, std::move(n), {}}; }
  static Torsion contains(Int n) { return {Kind::contains, std::move(n), {}}; }
  static Torsion group(std::vector<std::pair<Int, int>> factors);
};

struct CohEntry {
  int degree = 0;
  int free_rank = 0;
  Torsion torsion;
};

struct CohSummary {
  std::vector<CohEntry> entries;  // degrees ascending
};

enum class Generator { y1, y2, y3 };

// Cup product u . y_k in H^4, coefficients over {y1 y2, y1 y3, y2 y3}; ring
// relations y1^2 = y2^2 = 0, y3^2 = n1 y1 y3 + n2 y2 y3.
std::array<Rat, 3> cup_product_h2(std::int64_t n1, std::int64_t n2, const CohClass& u,
                                  Generator generator);

// The degree-2 differential of the regular S^1 bundle, rows ordered by
// generator: [[c2, c3, 0], [c1, 0, c3], [0, c1 + n1 c3, c2 + n2 c3]].
// Requires integer entries.
std::array<std::array<Int, 3>, 3> d2_matrix(std::int64_t n1, std::int64_t n2, const CohClass& c);

// |det d2| = c3 (c2 (c1 + n1 c3) + c1 (c2 + n2 c3)): the order of the H^4
// torsion of the regular bundle. Requires a primitive Kahler class; the
// result is always > 1.
Int g_reg_order(std::int64_t n1, std::int64_t n2, const CohClass& c);

// Full H^* of the regular S^1 bundle: ranks (1,0,2,0,0,2,0,1), exact H^4
// torsion of order g_reg_order.
CohSummary regular_cohomology(std::int64_t n1, std::int64_t n2, const CohClass& c);

// Orbifold cohomology of (S_n, Delta_m); entries for degrees 0..8, the
// degree-8 entry being the stable pattern for all higher even degrees.
CohSummary orbifold_cohomology(const KSOrbifold& orb);

Int mu(const KSOrbifold& orb);  // lcm(m0, minf)

// Largest divisor of N coprime to mu.
Int coprime_part(Int N, const Int& mu);

// H^* bounds for the 7-orbifold over (S_n, Delta_m) polarized by c, where
// mu*c must be a primitive integral Kahler class: H^3 = 0 and the H^4
// torsion contains a group of order coprime_part(g_reg_order(n, mu*c), mu).
CohSummary orbifold_m7_summary(const KSOrbifold& orb, const CohClass& c);

}  // namespace ks
