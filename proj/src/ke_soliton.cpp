#include "ks/ke_soliton.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "ks/integration.hpp"
#include "ks/roots.hpp"

namespace ks {

namespace {

Rat lambda_of(const KSOrbifold& orb) {
  return (make_rat(1, orb.m0) + make_rat(1, orb.minf)) / 2;
}

Rat t0_of(const KSOrbifold& orb) { return make_rat(orb.m0 - orb.minf, orb.m0 + orb.minf); }

Poly pc_poly(const AdmissiblePair& r) {
  return Poly::from_coeffs({Rat(1), r.r1}) * Poly::from_coeffs({Rat(1), r.r2});
}

// (t - t0) g(t) with g = -2 lambda p_c: the integrand of the soliton
// function, equal to p_c(t) ((1/minf - 1/m0) - (1/m0 + 1/minf) t).
Poly soliton_integrand(const KSOrbifold& orb) {
  AdmissiblePair r = soliton_r(orb);
  Poly shifted = Poly::from_coeffs({-t0_of(orb), Rat(1)});
  return shifted * pc_poly(r) * (-2 * lambda_of(orb));
}

// Q with (e^{kt} Q(t))' = e^{kt} P(t), valid for k != 0:
// the coefficient recursion a_i = (p_i - (i+1) a_{i+1}) / k from the top.
Poly exp_antiderivative(const Poly& p, const Rat& k) {
  int d = p.degree();
  std::vector<Rat> a(static_cast<std::size_t>(d) + 1, Rat(0));
  for (int i = d; i >= 0; --i) {
    Rat next = (i + 1 <= d) ? Rat(i + 1) * a[static_cast<std::size_t>(i + 1)] : Rat(0);
    a[static_cast<std::size_t>(i)] = (p.coeff(i) - next) / k;
  }
  return Poly::from_coeffs(std::move(a));
}

// s1 e^{L1} + s2 e^{L2} without overflowing intermediate exponentials.
double combine_exponentials(int s1, double l1, int s2, double l2) {
  if (s1 == 0 && s2 == 0) return 0.0;
  double m = std::max(s1 ? l1 : -std::numeric_limits<double>::infinity(),
                      s2 ? l2 : -std::numeric_limits<double>::infinity());
  long double bracket = 0.0L;
  if (s1) bracket += s1 * std::exp(static_cast<long double>(l1 - m));
  if (s2) bracket += s2 * std::exp(static_cast<long double>(l2 - m));
  long double value = bracket * std::exp(std::min(static_cast<long double>(m), 11000.0L));
  if (m > 11000.0) {  // far beyond double range; only the sign matters
    return bracket > 0 ? std::numeric_limits<double>::infinity()
                       : (bracket < 0 ? -std::numeric_limits<double>::infinity() : 0.0);
  }
  return static_cast<double>(value);
}

}  // namespace

KEFamilyParams KEFamilyParams::create(std::int64_t p1, std::int64_t q1, std::int64_t p2,
                                      std::int64_t q2) {
  require(0 < p1 && p1 < q1, errc::invalid_argument, "require 0 < p1 < q1");
  require(p2 != 0 && std::abs(p2) < q2, errc::invalid_argument, "require 0 < |p2| < q2");
  require(gcd(to_int(p1), to_int(q1)) == 1, errc::invalid_argument, "require gcd(p1, q1) = 1");
  require(gcd(abs(to_int(p2)), to_int(q2)) == 1, errc::invalid_argument,
          "require gcd(|p2|, q2) = 1");
  return {p1, q1, p2, q2};
}

bool ke_condition(const KSOrbifold& orb) {
  if (!is_log_fano(orb)) return false;
  Int n1 = to_int(orb.n1), n2 = to_int(orb.n2), m0 = to_int(orb.m0), mi = to_int(orb.minf);
  Int m02 = m0 * m0, m03 = m02 * m0, mi2 = mi * mi, mi3 = mi2 * mi;
  Int value = 24 * (m03 * mi2 - m02 * mi3) - 8 * (n1 + n2) * (m03 * mi - m02 * mi2 + m0 * mi3) +
              3 * n1 * n2 * (m03 - m02 * mi + m0 * mi2 - mi3);
  return value == 0;
}

AdmissiblePair soliton_r(const KSOrbifold& orb) {
  require(is_log_fano(orb), errc::not_log_fano, "soliton parameters need a log Fano orbifold");
  Rat num = make_rat(1, orb.m0) + make_rat(1, orb.minf);
  Rat skew = make_rat(1, orb.m0) - make_rat(1, orb.minf);
  AdmissiblePair r;
  r.r1 = num / (make_rat(4, orb.n1) + skew);
  r.r2 = num / (make_rat(4, orb.n2) + skew);
  r.require_valid_for(orb);
  return r;
}

std::pair<KSOrbifold, AdmissiblePair> ke_family(const KEFamilyParams& params) {
  Int p1 = to_int(params.p1), q1 = to_int(params.q1), p2 = to_int(params.p2),
      q2 = to_int(params.q2);
  Int plus = 3 * q1 * q2 + p1 * p2 + p1 * q2 + p2 * q1;
  Int minus = 3 * q1 * q2 + p1 * p2 - p1 * q2 - p2 * q1;
  Int d1 = 3 * q1 * q1 * q2 + 2 * p1 * p2 * q1 + p1 * p1 * q2;
  Int d2 = 3 * q1 * q2 * q2 + 2 * p1 * p2 * q2 + p2 * p2 * q1;
  Int n1 = 2 * p1 * minus * plus * d2;
  Int n2 = 2 * p2 * minus * plus * d1;
  Int m0 = plus * d1 * d2;
  Int minf = minus * d1 * d2;
  Int k = gcd(gcd(abs(n1), abs(n2)), gcd(m0, minf));
  n1 /= k;
  n2 /= k;
  m0 /= k;
  minf /= k;
  require(n1.fits_slong_p() && n2.fits_slong_p() && m0.fits_slong_p() && minf.fits_slong_p(),
          errc::invalid_argument, "family parameters overflow the orbifold range");
  KSOrbifold orb = KSOrbifold::create(n1.get_si(), n2.get_si(), m0.get_si(), minf.get_si());
  AdmissiblePair r{make_rat(params.p1, params.q1), make_rat(params.p2, params.q2)};
  return {orb, r};
}

bool ke_verify_integral(const KSOrbifold& orb, const AdmissiblePair& r) {
  Poly affine =
      Poly::from_coeffs({make_rat(1, orb.minf) - make_rat(1, orb.m0),
                         -(make_rat(1, orb.m0) + make_rat(1, orb.minf))});
  Rat integral = integrate_poly(affine * pc_poly(r), Rat(-1), Rat(1));
  return integral == 0;
}

Rat soliton_g0(const KSOrbifold& orb) {
  return integrate_poly(soliton_integrand(orb), Rat(-1), Rat(1));
}

double soliton_g_scaled(const KSOrbifold& orb, double k) {
  if (k == 0.0) return to_double(soliton_g0(orb));
  Poly p = soliton_integrand(orb);
  Rat kr = rat_from_double(k);
  Poly q = exp_antiderivative(p, kr);
  Rat at_hi = q(Rat(1));
  Rat at_lo = q(Rat(-1));
  double t0 = to_double(t0_of(orb));
  // e^{-k t0} G(k) = e^{k(1 - t0)} Q(1) - e^{-k(1 + t0)} Q(-1)
  return combine_exponentials(sign(at_hi), k * (1.0 - t0) + log_abs(at_hi), -sign(at_lo),
                              -k * (1.0 + t0) + log_abs(at_lo));
}

SolitonResult soliton_constant(const KSOrbifold& orb, double tol, int max_iterations) {
  require(is_log_fano(orb), errc::not_log_fano, "soliton constant needs a log Fano orbifold");
  SolitonResult result;
  result.lambda = lambda_of(orb);
  if (ke_condition(orb)) {
    result.c.exact_zero = true;
  } else {
    auto g = [&orb](double k) { return soliton_g_scaled(orb, k); };
    double lo = -1.0, hi = 1.0;
    int doublings = 0;
    while (!(g(lo) > 0)) {
      lo *= 2;
      require(++doublings <= 60, errc::scale_overflow, "no bracket after 60 doublings");
    }
    while (!(g(hi) < 0)) {
      hi *= 2;
      require(++doublings <= 60, errc::scale_overflow, "no bracket after 60 doublings");
    }
    BisectResult bracket = bisect_monotone(g, lo, hi, tol, max_iterations);
    result.c.exact_zero = false;
    result.c.lo = bracket.lo;
    result.c.hi = bracket.hi;
  }
  SolitonProfile profile = soliton_profile(orb, result.c.value(), 101);
  result.profile_ok = profile.profile_ok;
  result.sample_profile = std::move(profile.samples);
  return result;
}

SolitonProfile soliton_profile(const KSOrbifold& orb, double c, int samples) {
  require(is_log_fano(orb), errc::not_log_fano, "profile needs a log Fano orbifold");
  require(samples >= 3, errc::invalid_argument, "need at least 3 samples");
  AdmissiblePair r = soliton_r(orb);
  Poly pc = pc_poly(r);
  Poly p = soliton_integrand(orb);

  SolitonProfile out;
  out.samples.reserve(static_cast<std::size_t>(samples));
  bool interior_positive = true;
  double f_lo = 0, f_hi = 0, dlo = 0, dhi = 0;

  // F(-1) = 0 by construction; F' follows the defining first-order relation
  // F'(z) = P(z) - c F(z).
  if (c == 0.0) {
    // Exact polynomial branch: F(z) = int_{-1}^{z} P.
    for (int i = 0; i < samples; ++i) {
      Rat z = Rat(-1) + make_rat(2 * i, samples - 1);
      Rat F = integrate_poly(p, Rat(-1), z);
      if (i > 0 && i < samples - 1 && F <= 0) interior_positive = false;
      out.samples.push_back({to_double(z), to_double(F)});
      if (i == 0) dlo = to_double(p(z));
      if (i == samples - 1) {
        f_hi = to_double(abs(F));
        dhi = to_double(p(z));
      }
    }
    f_lo = 0.0;
  } else {
    Rat kr = rat_from_double(c);
    Poly q = exp_antiderivative(p, kr);
    Rat q_lo = q(Rat(-1));
    for (int i = 0; i < samples; ++i) {
      double z = -1.0 + 2.0 * i / (samples - 1);
      double F = q.eval_double(z) - std::exp(-c * (z + 1.0)) * to_double(q_lo);
      if (i > 0 && i < samples - 1 && F <= 0) interior_positive = false;
      out.samples.push_back({z, F});
      if (i == 0) {
        f_lo = std::fabs(F);
        dlo = p.eval_double(z) - c * F;
      }
      if (i == samples - 1) {
        f_hi = std::fabs(F);
        dhi = p.eval_double(z) - c * F;
      }
    }
  }

  double slope_lo = 2.0 * pc.eval_double(-1.0) / static_cast<double>(orb.minf);
  double slope_hi = -2.0 * pc.eval_double(1.0) / static_cast<double>(orb.m0);
  out.end_residual_lo = f_lo;
  out.end_residual_hi = f_hi;
  out.deriv_residual_lo = std::fabs(dlo - slope_lo);
  out.deriv_residual_hi = std::fabs(dhi - slope_hi);
  out.profile_ok = interior_positive && f_lo < 1e-8 && f_hi < 1e-8 &&
                   out.deriv_residual_lo < 1e-8 && out.deriv_residual_hi < 1e-8;
  return out;
}

std::vector<KEFamilyParams> appendix_params() {
  std::vector<KEFamilyParams> rows;
  for (std::int64_t q = 15; q >= 2; --q) rows.push_back(KEFamilyParams::create(1, 2, -1, q));
  for (std::int64_t q = 2; q <= 15; ++q) rows.push_back(KEFamilyParams::create(1, 2, 1, q));
  return rows;
}

std::string ke_table_csv(const std::vector<KEFamilyParams>& rows) {
  std::ostringstream out;
  out << "p1,q1,p2,q2,n1,n2,m0,minf,m,v0,vinf,index\n";
  for (const auto& params : rows) {
    auto [orb, r] = ke_family(params);
    out << params.p1 << ',' << params.q1 << ',' << params.p2 << ',' << params.q2 << ','
        << orb.n1 << ',' << orb.n2 << ',' << orb.m0 << ',' << orb.minf << ',' << orb.m << ','
        << orb.v0 << ',' << orb.vinf << ',' << to_string(fano_index(orb)) << '\n';
  }
  return out.str();
}

}  // namespace ks
