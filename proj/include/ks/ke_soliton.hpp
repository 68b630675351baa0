#pragma once

#include <string>
#include <vector>

#include "ks/orbifold.hpp"
#include "ks/polynomial.hpp"

namespace ks {

// One member of the four-parameter Kahler-Einstein family, r_i = p_i/q_i.
struct KEFamilyParams {
  std::int64_t p1 = 1, q1 = 2, p2 = -1, q2 = 2;

  static KEFamilyParams create(std::int64_t p1, std::int64_t q1, std::int64_t p2,
                               std::int64_t q2);
};

// Kahler-Ricci soliton constant: either exactly zero (the KE case) or a
// certified floating bracket around the unique zero of the scaled soliton
// function.
struct SolitonC {
  bool exact_zero = false;
  double lo = 0.0, hi = 0.0;

  double value() const { return exact_zero ? 0.0 : lo + (hi - lo) / 2; }
};

struct ProfileSample {
  double z = 0.0, F = 0.0;
};

struct SolitonProfile {
  bool profile_ok = false;
  std::vector<ProfileSample> samples;
  double end_residual_lo = 0.0, end_residual_hi = 0.0;    // |F(-1)|, |F(1)|
  double deriv_residual_lo = 0.0, deriv_residual_hi = 0.0;
};

struct SolitonResult {
  Rat lambda;  // (1/m0 + 1/minf) / 2
  SolitonC c;
  bool profile_ok = false;
  std::vector<ProfileSample> sample_profile;
};

// Log Fano together with the diophantine identity
// 24 (m0^3 minf^2 - m0^2 minf^3) - 8 (n1+n2)(m0^3 minf - m0^2 minf^2 + m0 minf^3)
//   + 3 n1 n2 (m0^3 - m0^2 minf + m0 minf^2 - minf^3) = 0.
bool ke_condition(const KSOrbifold& orb);

// The soliton class parameters r_i = (1/m0 + 1/minf) / (4/n_i + 1/m0 - 1/minf);
// requires log Fano.
AdmissiblePair soliton_r(const KSOrbifold& orb);

// The unique coprime quadruple (n1, n2, m0, minf) carrying a KE metric with
// r = (p1/q1, p2/q2).
std::pair<KSOrbifold, AdmissiblePair> ke_family(const KEFamilyParams& params);

// Independent oracle for ke_condition: the defining integral
// \int_{-1}^{1} ((1/minf - 1/m0) - (1/m0 + 1/minf) t)(1 + r1 t)(1 + r2 t) dt
// vanishes exactly.
bool ke_verify_integral(const KSOrbifold& orb, const AdmissiblePair& r);

// Exact G(0) for the soliton function of this orbifold.
Rat soliton_g0(const KSOrbifold& orb);

// The scaled soliton function e^{-k t0} G(k): strictly decreasing in k with
// limits -+infinity, so it has a unique zero (the soliton constant).
// Polynomial parts are evaluated exactly; only the exponentials are floating.
double soliton_g_scaled(const KSOrbifold& orb, double k);

SolitonResult soliton_constant(const KSOrbifold& orb, double tol = 1e-12,
                               int max_iterations = 200);

// Momentum profile F on a uniform grid over [-1, 1]: positivity at interior
// samples, F(+-1) = 0 and the orbifold endpoint slopes within 1e-8.
SolitonProfile soliton_profile(const KSOrbifold& orb, double c, int samples);

// The built-in parameter list reproducing the published solution table.
std::vector<KEFamilyParams> appendix_params();

// CSV with header p1,q1,p2,q2,n1,n2,m0,minf,m,v0,vinf,index and LF endings.
std::string ke_table_csv(const std::vector<KEFamilyParams>& rows);

}  // namespace ks
