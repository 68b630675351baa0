#include "ks/orbifold.hpp"

namespace ks {

KSOrbifold KSOrbifold::create(std::int64_t n1, std::int64_t n2, std::int64_t m0,
                              std::int64_t minf) {
  require(n1 != 0 && n2 != 0, errc::invalid_argument, "twist integers must be nonzero");
  require(m0 >= 1 && minf >= 1, errc::invalid_argument, "ramification indices must be positive");
  KSOrbifold orb;
  orb.n1 = n1;
  orb.n2 = n2;
  orb.m0 = m0;
  orb.minf = minf;
  Int g = gcd(to_int(m0), to_int(minf));
  orb.m = g.get_si();
  orb.v0 = m0 / orb.m;
  orb.vinf = minf / orb.m;
  return orb;
}

bool AdmissiblePair::in_range() const {
  return r1 != 0 && r2 != 0 && abs(r1) < 1 && abs(r2) < 1;
}

bool AdmissiblePair::valid_for(const KSOrbifold& orb) const {
  return in_range() && sign(r1) == (orb.n1 > 0 ? 1 : -1) && sign(r2) == (orb.n2 > 0 ? 1 : -1);
}

void AdmissiblePair::require_valid_for(const KSOrbifold& orb) const {
  require(in_range(), errc::invalid_argument, "require 0 < |ri| < 1");
  require(valid_for(orb), errc::sign_mismatch, "sign(ri) must equal sign(ni)");
}

bool is_log_fano(const KSOrbifold& orb) {
  Rat two(2);
  return make_rat(orb.n1, orb.minf) < two && make_rat(orb.n2, orb.minf) < two &&
         make_rat(-orb.n1, orb.m0) < two && make_rat(-orb.n2, orb.m0) < two;
}

CohClass c1_orb(const KSOrbifold& orb) {
  Rat third = make_rat(1, orb.m0) + make_rat(1, orb.minf);
  return {Basis::Y, Rat(2) - make_rat(orb.n1, orb.minf), Rat(2) - make_rat(orb.n2, orb.minf),
          third};
}

Int fano_index(const KSOrbifold& orb) {
  require(is_log_fano(orb), errc::not_log_fano, "Fano index needs a log Fano orbifold");
  Int t = 2 * to_int(orb.m) * to_int(orb.v0) * to_int(orb.vinf);
  Int a = t - to_int(orb.n1) * to_int(orb.v0);
  Int b = t - to_int(orb.n2) * to_int(orb.v0);
  return gcd(gcd(abs(a), abs(b)), to_int(orb.v0 + orb.vinf));
}

CohClass convert_basis(const CohClass& c, std::int64_t n1, std::int64_t n2) {
  if (c.basis == Basis::X)
    return {Basis::Y, c.a1 - to_int(n1) * c.a3, c.a2 - to_int(n2) * c.a3, c.a3};
  return {Basis::X, c.a1 + to_int(n1) * c.a3, c.a2 + to_int(n2) * c.a3, c.a3};
}

CohClass admissible_class(const KSOrbifold& orb, const AdmissiblePair& r) {
  r.require_valid_for(orb);
  return {Basis::Y, to_int(orb.n1) * (Rat(1) - r.r1) / r.r1,
          to_int(orb.n2) * (Rat(1) - r.r2) / r.r2, Rat(2)};
}

AdmissiblePair class_to_r(const KSOrbifold& orb, const CohClass& c) {
  require(c.basis == Basis::Y, errc::invalid_argument, "class_to_r expects the Y basis");
  require(c.a3 != 0, errc::not_admissible, "a3 = 0 admits no admissible rescale");
  AdmissiblePair r;
  auto one = [&](std::int64_t ni, const Rat& ai) {
    Rat den = 2 * ai + to_int(ni) * c.a3;
    require(den != 0, errc::not_admissible, "vanishing denominator in r_i");
    return to_int(ni) * c.a3 / den;
  };
  r.r1 = one(orb.n1, c.a1);
  r.r2 = one(orb.n2, c.a2);
  require(r.valid_for(orb), errc::not_admissible, "class is not admissible for this orbifold");
  return r;
}

CohClass normalize_admissible_scale(const CohClass& c) {
  require(c.basis == Basis::Y, errc::invalid_argument, "normalization expects the Y basis");
  require(c.a3 != 0, errc::not_admissible, "a3 = 0 cannot be normalized");
  Rat s = Rat(2) / c.a3;
  return {Basis::Y, c.a1 * s, c.a2 * s, Rat(2)};
}

bool is_kahler_class_regular(std::int64_t n1, std::int64_t n2, const CohClass& c) {
  require(c.basis == Basis::Y, errc::invalid_argument, "Kahler test expects the Y basis");
  require(n1 != 0 && n2 != 0, errc::zero_twist, "Kahler-cone test needs n1 n2 != 0");
  if ((n1 > 0) == (n2 > 0)) return c.a1 > 0 && c.a2 > 0 && c.a3 > 0;
  // Mixed signs: the stated inequalities assume n1 > 0 > n2.
  if (n1 < 0) return is_kahler_class_regular(n2, n1, {c.basis, c.a2, c.a1, c.a3});
  return c.a1 > 0 && c.a2 > -to_int(n2) * c.a3 && c.a3 > 0;
}

}  // namespace ks
