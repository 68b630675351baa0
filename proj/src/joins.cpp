#include "ks/joins.hpp"

namespace ks {

bool is_diagonally_admissible(const KSOrbifold& orb, const AdmissiblePair& r) {
  return orb.n1 * orb.n2 > 0 && r.r1 == r.r2;
}

JoinData join_identify(const KSOrbifold& orb, const Rat& r) {
  require(orb.n1 * orb.n2 > 0, errc::wrong_sign_regime, "join identification needs n1 n2 > 0");
  int nsign = orb.n1 > 0 ? 1 : -1;
  require(sign(r) == nsign && abs(r) < 1, errc::wrong_sign_regime,
          "require sign(r) = sign(n1) and 0 < |r| < 1");
  Int n = nsign * gcd(abs(to_int(orb.n1)), abs(to_int(orb.n2)));
  require(gcd(gcd(to_int(orb.m0), to_int(orb.minf)), abs(n)) == 1, errc::gcd_hypothesis_failed,
          "require gcd(m0, minf, |n|) = 1");

  // w0/winf = m0 (1+r) / (minf (1-r)); both factors are positive, so the
  // reduced fraction is the unique positive coprime solution.
  Rat w_ratio = to_int(orb.m0) * (Rat(1) + r) / (to_int(orb.minf) * (Rat(1) - r));
  JoinData jd;
  jd.w0 = w_ratio.get_num();
  jd.winf = w_ratio.get_den();

  Int delta = jd.w0 * to_int(orb.minf) - jd.winf * to_int(orb.m0);
  require(sign(delta) == sign(r), errc::internal_inconsistency,
          "w0 minf - winf m0 must carry the sign of r");

  // linf n = l0 delta, so l0/linf is the reduced form of n/delta; n and
  // delta share their sign, making both entries positive.
  Rat l_ratio = make_rat(n, delta);
  jd.l0 = l_ratio.get_num();
  jd.linf = l_ratio.get_den();
  require(jd.l0 > 0 && jd.linf > 0, errc::internal_inconsistency, "join integers must be positive");

  jd.s_frak = gcd(jd.linf, abs(jd.w0 * to_int(orb.vinf) - jd.winf * to_int(orb.v0)));
  jd.smooth = smooth_join_check(jd.l0, jd.linf, jd.w0, jd.winf);
  jd.class_multiplier = to_int(orb.m) * gcd(jd.s_frak, jd.w0 * to_int(orb.vinf));
  jd.h4_order = jd.w0 * jd.winf * jd.l0 * jd.l0 * jd.linf * jd.linf;

  require(jd.s_frak * to_int(orb.m) == jd.linf, errc::internal_inconsistency,
          "m = linf / s_frak failed");
  return jd;
}

bool smooth_join_check(const Int& l0, const Int& linf, const Int& w0, const Int& winf) {
  require(gcd(l0, linf) == 1 && gcd(w0, winf) == 1, errc::invalid_argument,
          "join pairs must each be coprime");
  return gcd(linf, w0 * winf) == 1;
}

bool primitive_class_smoothness(const KSOrbifold& orb, const JoinData& join) {
  require(join.class_multiplier == 1, errc::invalid_argument,
          "smoothness check applies to a primitive transverse class");
  return join.smooth && gcd(to_int(orb.m0), to_int(orb.minf)) == 1;
}

std::optional<std::array<std::array<Int, 2>, 2>> yamazaki_feasible(std::int64_t n1,
                                                                   std::int64_t n2,
                                                                   const AdmissiblePair& r) {
  // The system decouples: k1^i + k2^i = n_i / r_i must be a positive integer
  // of the same parity as n_i, with both halves positive.
  std::array<std::array<Int, 2>, 2> K;
  const std::int64_t n[2] = {n1, n2};
  const Rat* rv[2] = {&r.r1, &r.r2};
  for (int i = 0; i < 2; ++i) {
    if (*rv[i] == 0) return std::nullopt;
    Rat sum = to_int(n[i]) / *rv[i];
    if (!is_integer(sum) || sum <= 0) return std::nullopt;
    Int s = sum.get_num();
    Int k1 = s + to_int(n[i]);
    if (k1 % 2 != 0) return std::nullopt;  // parity obstruction
    k1 /= 2;
    Int k2 = k1 - to_int(n[i]);
    if (k1 <= 0 || k2 <= 0) return std::nullopt;
    K[0][static_cast<std::size_t>(i)] = k1;
    K[1][static_cast<std::size_t>(i)] = k2;
  }
  return K;
}

bool integrality_lemma(const Int& x) {
  require(x >= 1, errc::invalid_argument, "lemma applies to x >= 1");
  Int x2 = x * x;
  return (x2 * (x2 + 4)) % (5 * x2 - 4) == 0;
}

}  // namespace ks
