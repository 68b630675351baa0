#include "ks/roots.hpp"

#include <algorithm>
#include <cmath>

namespace ks {

namespace {

// Sturm chain: S0 = S, S1 = S', S_{k+1} = -(S_{k-1} mod S_k). Remainders are
// rescaled to primitive integer form by a positive factor, which preserves
// the sign-variation counts.
struct SturmChain {
  std::vector<Poly> seq;

  explicit SturmChain(const Poly& s) {
    seq.push_back(s);
    if (s.degree() >= 1) {
      seq.push_back(s.derivative().primitive_integer());
      while (true) {
        const Poly& a = seq[seq.size() - 2];
        const Poly& b = seq.back();
        Poly q, r;
        Poly::divmod(a, b, q, r);
        if (r.is_zero()) break;
        Poly next = -r;
        // primitive_integer flips negative leading signs, so scale manually.
        Poly prim = next.primitive_integer();
        if (sign(prim.leading()) != sign(next.leading())) prim = -prim;
        seq.push_back(prim);
        if (prim.degree() == 0) break;
      }
    }
  }

  static int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  int variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(sign(p(x)));
    return count_variations(signs);
  }

  int variations_at_infinity(int dir) const {  // dir = +1 or -1
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) {
      int s = p.is_zero() ? 0 : sign(p.leading());
      if (dir < 0 && p.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count_variations(signs);
  }

  // Distinct roots of S in (a, b].
  int count_half_open(const Rat& a, const Rat& b) const {
    return variations_at(a) - variations_at(b);
  }
};

// Smallest power of two exceeding the Cauchy bound 1 + max|a_i|/|a_d|.
Rat cauchy_bound_pow2(const Poly& p) {
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i) / p.leading()));
  Rat bound = Rat(1) + m;
  Rat b(2);
  while (b <= bound) b *= 2;
  return b;
}

struct RootRecord {
  // Either an exact rational root or a strict sign-change bracket (a, b)
  // around a single irrational root of the squarefree part.
  bool rational = false;
  Rat exact;
  Rat lo, hi;

  Rat position() const { return rational ? exact : (lo + hi) / 2; }
};

class Isolator {
 public:
  explicit Isolator(const Poly& p) {
    Poly prim = p.primitive_integer();
    sf_ = prim.squarefree_part().primitive_integer();
    isolate_all();
    detect_rational_roots();
  }

  std::vector<RootRecord> take_records() {
    // Brackets may still cover rational roots that were deflated away (the
    // bracket's own root is a different, irrational one); shrink them until
    // every exact root lies outside.
    for (auto& rec : records_) {
      if (rec.rational) continue;
      for (const auto& other : records_) {
        if (!other.rational) continue;
        // The bracket's root is irrational, so plain bisection separates it
        // from the rational point in finitely many steps.
        while (rec.lo <= other.exact && other.exact <= rec.hi) {
          Rat m = (rec.lo + rec.hi) / 2;
          if (sign(sf_(m)) == sign(sf_(rec.lo)))
            rec.lo = m;
          else
            rec.hi = m;
        }
      }
    }
    std::sort(records_.begin(), records_.end(),
              [](const RootRecord& a, const RootRecord& b) { return a.position() < b.position(); });
    return std::move(records_);
  }

  const Poly& squarefree() const { return sf_; }

 private:
  // Subdivision keeps the invariant that interval endpoints are never roots
  // of the current polynomial. A midpoint that lands on a root is itself a
  // rational root: record it, deflate, and restart on the smaller problem.
  void isolate_all() {
    for (;;) {
      if (sf_.degree() <= 0) return;
      SturmChain chain(sf_);
      Rat bound = cauchy_bound_pow2(sf_);
      brackets_.clear();
      if (subdivide(chain, -bound, bound)) return;
      // restart after deflation
    }
  }

  // Returns true when subdivision completed without finding an exact root.
  bool subdivide(const SturmChain& chain, const Rat& lo0, const Rat& hi0) {
    std::vector<std::pair<Rat, Rat>> stack{{lo0, hi0}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      int n = chain.count_half_open(a, b);  // S(b) != 0, so = count in (a, b)
      if (n == 0) continue;
      if (n == 1) {
        brackets_.emplace_back(a, b);
        continue;
      }
      Rat m = (a + b) / 2;
      if (sf_(m) == 0) {
        add_exact(m);
        sf_ = sf_.deflate_root(m).primitive_integer();
        return false;
      }
      stack.emplace_back(a, m);
      stack.emplace_back(m, b);
    }
    return true;
  }

  void add_exact(const Rat& q) {
    RootRecord r;
    r.rational = true;
    r.exact = q;
    records_.push_back(std::move(r));
  }

  // A rational root u/v of the primitive integer polynomial S has v dividing
  // the leading coefficient L, i.e. y = L*x is an integer root of the monic
  // transform. Once a bracket is narrower than 1/|L| it contains at most one
  // candidate y/L, which is then tested exactly.
  void detect_rational_roots() {
    if (sf_.degree() <= 0) return;
    Int lead = sf_.leading().get_num();  // primitive integer, positive lead
    for (auto& [a, b] : brackets_) {
      bool rational = false;
      while (true) {
        if ((b - a) * Rat(lead) < 1) {
          Rat scaled_hi = b * Rat(lead);
          Int y;
          mpz_fdiv_q(y.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
          Rat cand = make_rat(y, lead);
          if (cand > a && cand < b && sf_(cand) == 0) {
            add_exact(cand);
            rational = true;
          }
          break;
        }
        if (!refine_once(a, b)) {  // midpoint hit the root exactly
          rational = true;
          break;
        }
      }
      if (!rational) {
        RootRecord r;
        r.lo = a;
        r.hi = b;
        records_.push_back(std::move(r));
      }
    }
  }

  // One bisection step on a sign-change bracket; false when the midpoint is
  // the root itself (recorded as exact).
  bool refine_once(Rat& a, Rat& b) {
    Rat m = (a + b) / 2;
    int sm = sign(sf_(m));
    if (sm == 0) {
      add_exact(m);
      return false;
    }
    if (sm == sign(sf_(a)))
      a = m;
    else
      b = m;
    return true;
  }

  Poly sf_;
  std::vector<std::pair<Rat, Rat>> brackets_;
  std::vector<RootRecord> records_;
};

bool in_region(const Region& region, const Rat& x) {
  switch (region.kind) {
    case Region::Kind::all_reals:
      return true;
    case Region::Kind::outside_unit:
      return x < -1 || x > 1;
    case Region::Kind::interval:
      return region.lo < x && x < region.hi;
  }
  return false;
}

bool bracket_in_region(const Region& region, const Rat& lo, const Rat& hi) {
  switch (region.kind) {
    case Region::Kind::all_reals:
      return true;
    case Region::Kind::outside_unit:
      return hi < -1 || lo > 1;
    case Region::Kind::interval:
      return region.lo < lo && hi < region.hi;
  }
  return false;
}

bool bracket_outside_region(const Region& region, const Rat& lo, const Rat& hi) {
  switch (region.kind) {
    case Region::Kind::all_reals:
      return false;
    case Region::Kind::outside_unit:
      return lo >= -1 && hi <= 1;
    case Region::Kind::interval:
      return hi <= region.lo || lo >= region.hi;
  }
  return false;
}

}  // namespace

std::vector<IsolatingInterval> sturm_isolate(const Poly& p, const Region& region,
                                             const Rat& max_width) {
  require(!p.is_zero(), errc::zero_polynomial, "cannot isolate roots of the zero polynomial");
  require(max_width > 0, errc::invalid_argument, "isolation width must be positive");
  if (p.degree() == 0) return {};

  Isolator iso(p);
  const Poly& sf = iso.squarefree();
  std::vector<RootRecord> records = iso.take_records();

  // Membership and refinement. Brackets hold irrational roots, so refining
  // always separates them from the rational region boundaries; exact roots
  // on a boundary are simply excluded by openness.
  std::vector<RootRecord> kept;
  for (auto& rec : records) {
    if (rec.rational) {
      if (in_region(region, rec.exact)) kept.push_back(rec);
      continue;
    }
    while (!bracket_in_region(region, rec.lo, rec.hi) &&
           !bracket_outside_region(region, rec.lo, rec.hi)) {
      Rat m = (rec.lo + rec.hi) / 2;
      if (sign(sf(m)) == sign(sf(rec.lo)))
        rec.lo = m;
      else
        rec.hi = m;
    }
    if (bracket_in_region(region, rec.lo, rec.hi)) kept.push_back(rec);
  }

  // Width target, then strict disjointness for adjacent brackets that still
  // share a subdivision endpoint.
  auto refine = [&sf](RootRecord& rec) {
    Rat m = (rec.lo + rec.hi) / 2;
    if (sign(sf(m)) == sign(sf(rec.lo)))
      rec.lo = m;
    else
      rec.hi = m;
  };
  for (auto& rec : kept) {
    if (rec.rational) continue;
    while (rec.hi - rec.lo >= max_width) refine(rec);
  }
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    while (!kept[i].rational && !kept[i + 1].rational && kept[i].hi >= kept[i + 1].lo)
      refine(kept[i]);
  }

  std::vector<IsolatingInterval> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const RootRecord& rec = kept[i];
    IsolatingInterval iv;
    if (rec.rational) {
      // Pad the exact root with a margin clear of every neighboring root and
      // of the region boundary.
      Rat delta = max_width / 4;
      auto shrink_against = [&](const Rat& other) {
        Rat gap = abs(other - rec.exact);
        if (gap > 0 && delta >= gap / 2) delta = gap / 4;
      };
      if (i > 0) shrink_against(kept[i - 1].rational ? kept[i - 1].exact : kept[i - 1].hi);
      if (i + 1 < kept.size())
        shrink_against(kept[i + 1].rational ? kept[i + 1].exact : kept[i + 1].lo);
      if (region.kind == Region::Kind::outside_unit) {
        shrink_against(Rat(1));
        shrink_against(Rat(-1));
      } else if (region.kind == Region::Kind::interval) {
        shrink_against(region.lo);
        shrink_against(region.hi);
      }
      iv.lo = rec.exact - delta;
      iv.hi = rec.exact + delta;
      iv.exact_root = rec.exact;
      iv.is_rational = true;
    } else {
      iv.lo = rec.lo;
      iv.hi = rec.hi;
    }
    out.push_back(std::move(iv));
  }
  return out;
}

int sturm_count(const Poly& p, const Region& region) {
  require(!p.is_zero(), errc::zero_polynomial, "cannot count roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  Poly sf = p.primitive_integer().squarefree_part().primitive_integer();
  SturmChain chain(sf);
  auto count_open = [&](int vlo, int vhi, const Rat& b, bool b_finite) {
    int n = vlo - vhi;
    if (b_finite && sf(b) == 0) --n;  // (a, b] minus a root exactly at b
    return n;
  };
  switch (region.kind) {
    case Region::Kind::all_reals:
      return chain.variations_at_infinity(-1) - chain.variations_at_infinity(+1);
    case Region::Kind::outside_unit: {
      int left = count_open(chain.variations_at_infinity(-1), chain.variations_at(Rat(-1)),
                            Rat(-1), true);
      int right = chain.variations_at(Rat(1)) - chain.variations_at_infinity(+1);
      return left + right;
    }
    case Region::Kind::interval:
      return count_open(chain.variations_at(region.lo), chain.variations_at(region.hi),
                        region.hi, true);
  }
  return 0;
}

BisectResult bisect_monotone(const std::function<double(double)>& f, double lo, double hi,
                             double tol, int max_iterations) {
  require(tol > 0, errc::invalid_argument, "tolerance must be positive");
  require(lo < hi, errc::invalid_argument, "bisection needs lo < hi");
  double flo = f(lo), fhi = f(hi);
  auto sgn_of = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  if (sgn_of(flo) == 0) return {lo, lo, lo, 0};
  if (sgn_of(fhi) == 0) return {hi, hi, hi, 0};
  require(sgn_of(flo) != sgn_of(fhi), errc::no_sign_change,
          "f has the same sign at both endpoints");
  int it = 0;
  while (hi - lo >= tol) {
    require(it < max_iterations, errc::max_iterations,
            "tolerance unreachable in " + std::to_string(max_iterations) + " iterations");
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;  // double resolution exhausted
    double fm = f(mid);
    ++it;
    if (sgn_of(fm) == 0) return {mid, mid, mid, it};
    if (sgn_of(fm) == sgn_of(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return {lo + (hi - lo) / 2, lo, hi, it};
}

std::pair<Rat, Rat> solve_2x2(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22,
                              const Rat& c1, const Rat& c2) {
  Rat det = a11 * a22 - a12 * a21;
  require(det != 0, errc::singular_system, "2x2 system is singular");
  return {(c1 * a22 - c2 * a12) / det, (a11 * c2 - a21 * c1) / det};
}

}  // namespace ks
