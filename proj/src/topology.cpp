#include "ks/topology.hpp"

namespace ks {

namespace {

Int as_int(const Rat& x, errc code, const char* what) {
  require(is_integer(x), code, what);
  return x.get_num();
}

// Kahler-cone test that also covers the untwisted n = (0, 0) product, where
// positivity of all coefficients is the cone condition.
bool kahler_for_order(std::int64_t n1, std::int64_t n2, const CohClass& c) {
  if (n1 == 0 || n2 == 0) return c.a1 > 0 && c.a2 > 0 && c.a3 > 0;
  return is_kahler_class_regular(n1, n2, c);
}

}  // namespace

Torsion Torsion::group(std::vector<std::pair<Int, int>> factors) {
  Torsion t;
  t.cyclic.clear();
  t.order = 1;
  for (auto& [mod, mult] : factors) {
    if (mod <= 1 || mult <= 0) continue;
    for (int i = 0; i < mult; ++i) t.order *= mod;
    t.cyclic.emplace_back(mod, mult);
  }
  t.kind = t.cyclic.empty() ? Kind::trivial : Kind::group;
  return t;
}

std::array<Rat, 3> cup_product_h2(std::int64_t n1, std::int64_t n2, const CohClass& u,
                                  Generator generator) {
  require(u.basis == Basis::Y, errc::invalid_argument, "cup product expects the Y basis");
  switch (generator) {
    case Generator::y1:
      return {u.a2, u.a3, Rat(0)};
    case Generator::y2:
      return {u.a1, Rat(0), u.a3};
    case Generator::y3:
      return {Rat(0), u.a1 + to_int(n1) * u.a3, u.a2 + to_int(n2) * u.a3};
  }
  fail(errc::invalid_argument, "bad generator");
}

std::array<std::array<Int, 3>, 3> d2_matrix(std::int64_t n1, std::int64_t n2, const CohClass& c) {
  require(c.basis == Basis::Y, errc::invalid_argument, "d2 matrix expects the Y basis");
  auto entry = [&](const Rat& x) { return as_int(x, errc::non_integer_class, "class entries must be integers"); };
  Int c1 = entry(c.a1), c2 = entry(c.a2), c3 = entry(c.a3);
  return {{{c2, c3, Int(0)},
           {c1, Int(0), c3},
           {Int(0), c1 + to_int(n1) * c3, c2 + to_int(n2) * c3}}};
}

Int g_reg_order(std::int64_t n1, std::int64_t n2, const CohClass& c) {
  require(c.basis == Basis::Y, errc::invalid_argument, "order expects the Y basis");
  auto entry = [&](const Rat& x) { return as_int(x, errc::not_primitive, "class entries must be integers"); };
  Int c1 = entry(c.a1), c2 = entry(c.a2), c3 = entry(c.a3);
  require(gcd(gcd(abs(c1), abs(c2)), abs(c3)) == 1, errc::not_primitive,
          "class must be primitive (gcd of entries 1)");
  require(kahler_for_order(n1, n2, c), errc::not_kahler, "class is not Kahler");
  Int order = c3 * (c2 * (c1 + to_int(n1) * c3) + c1 * (c2 + to_int(n2) * c3));
  require(order > 1, errc::internal_inconsistency, "H^4 torsion order must exceed 1");
  return order;
}

CohSummary regular_cohomology(std::int64_t n1, std::int64_t n2, const CohClass& c) {
  Int order = g_reg_order(n1, n2, c);
  CohSummary s;
  const int ranks[8] = {1, 0, 2, 0, 0, 2, 0, 1};
  for (int d = 0; d <= 7; ++d) {
    CohEntry e;
    e.degree = d;
    e.free_rank = ranks[d];
    e.torsion = (d == 4) ? Torsion::exact(order) : Torsion::trivial();
    s.entries.push_back(std::move(e));
  }
  return s;
}

CohSummary orbifold_cohomology(const KSOrbifold& orb) {
  Int m0 = to_int(orb.m0), minf = to_int(orb.minf);
  CohSummary s;
  auto add = [&s](int degree, int rank, Torsion t) {
    s.entries.push_back({degree, rank, std::move(t)});
  };
  add(0, 1, Torsion::trivial());
  add(1, 0, Torsion::trivial());
  add(2, 3, Torsion::trivial());
  add(3, 0, Torsion::trivial());
  add(4, 3, Torsion::group({{m0, 2}, {minf, 2}}));
  add(5, 0, Torsion::trivial());
  add(6, 1, Torsion::group({{m0, 3}, {minf, 3}}));
  add(7, 0, Torsion::trivial());
  add(8, 0, Torsion::group({{m0, 3}, {minf, 3}}));  // repeats for every even degree >= 8
  return s;
}

Int mu(const KSOrbifold& orb) { return lcm(to_int(orb.m0), to_int(orb.minf)); }

Int coprime_part(Int N, const Int& mu) {
  require(N >= 1 && mu >= 1, errc::invalid_argument, "coprime_part needs positive arguments");
  Int g = gcd(N, mu);
  while (g > 1) {
    N /= g;
    g = gcd(N, mu);
  }
  return N;
}

CohSummary orbifold_m7_summary(const KSOrbifold& orb, const CohClass& c) {
  require(c.basis == Basis::Y, errc::invalid_argument, "summary expects the Y basis");
  Int u = mu(orb);
  CohClass scaled{Basis::Y, Rat(u) * c.a1, Rat(u) * c.a2, Rat(u) * c.a3};
  require(is_integer(scaled.a1) && is_integer(scaled.a2) && is_integer(scaled.a3),
          errc::not_primitive, "mu * class must be integral");
  Int order = g_reg_order(orb.n1, orb.n2, scaled);  // validates primitivity and positivity
  Int bound = coprime_part(order, u);
  CohSummary s;
  const int ranks[8] = {1, 0, 2, 0, 0, 2, 0, 1};
  for (int d = 0; d <= 7; ++d) {
    CohEntry e;
    e.degree = d;
    e.free_rank = ranks[d];
    e.torsion = (d == 4) ? Torsion::contains(bound) : Torsion::trivial();
    s.entries.push_back(std::move(e));
  }
  return s;
}

}  // namespace ks
