#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ks/polynomial.hpp"

namespace ks {

// One real root of a target polynomial: lo < hi, exactly one root in
// [lo, hi]. Rational roots carry the exact value.
struct IsolatingInterval {
  Rat lo, hi;
  std::optional<Rat> exact_root;
  bool is_rational = false;

  Rat midpoint() const { return (lo + hi) / 2; }
  double approx() const { return is_rational ? to_double(*exact_root) : to_double(midpoint()); }
};

// Search region for real roots. Interval regions are open.
struct Region {
  enum class Kind { all_reals, outside_unit, interval };
  Kind kind = Kind::all_reals;
  Rat lo, hi;  // interval kind only

  static Region all() { return {Kind::all_reals, Rat(0), Rat(0)}; }
  // (-inf, -1) U (1, +inf)
  static Region outside_unit() { return {Kind::outside_unit, Rat(0), Rat(0)}; }
  static Region open_interval(Rat a, Rat b) { return {Kind::interval, std::move(a), std::move(b)}; }
};

inline Rat default_isolation_width() { return make_rat(Int(1), Int(1) << 64); }

// Disjoint isolating intervals, one per distinct real root of p in the
// region, sorted ascending. Rational roots are detected exactly (via the
// integer-root test on the monic transform of the primitive integer scaling
// of p) before the final Sturm refinement; all intervals end up narrower
// than max_width.
std::vector<IsolatingInterval> sturm_isolate(const Poly& p, const Region& region,
                                             const Rat& max_width = default_isolation_width());

// Number of distinct real roots in the region, straight from the
// sign-variation counts of the Sturm chain at the region endpoints.
int sturm_count(const Poly& p, const Region& region);

struct BisectResult {
  double root = 0.0;
  double lo = 0.0, hi = 0.0;
  int iterations = 0;
};

// Certified bisection for a strictly monotone function with a sign change on
// [lo, hi]; the returned bracket has width < tol.
BisectResult bisect_monotone(const std::function<double(double)>& f, double lo, double hi,
                             double tol = 1e-12, int max_iterations = 200);

// Exact 2x2 linear solve by Cramer's rule.
std::pair<Rat, Rat> solve_2x2(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22,
                              const Rat& c1, const Rat& c2);

}  // namespace ks
