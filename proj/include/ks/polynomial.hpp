#pragma once

#include <string>
#include <vector>

#include "ks/rational.hpp"

namespace ks {

// Univariate polynomial over Q, coefficients stored ascending by degree.
// Normalized: no trailing zero coefficients. The zero polynomial has an
// empty coefficient vector and degree() == kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(Rat c);
  static Poly x();
  static Poly from_coeffs(std::vector<Rat> coeffs);
  // (x - root)
  static Poly linear_root(const Rat& root);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& x) const;  // Horner
  double eval_double(double x) const;

  Poly derivative() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator/(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

  Poly monic() const;
  // Monic gcd over Q; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);
  // p / gcd(p, p'): same distinct roots, all simple.
  Poly squarefree_part() const;

  // Integer-coefficient scaling: clear denominators, divide by the content,
  // make the leading coefficient positive. Roots are unchanged.
  Poly primitive_integer() const;

  // Exact division by (x - root); the remainder must vanish.
  Poly deflate_root(const Rat& root) const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

Poly pow_poly(const Poly& p, unsigned k);

}  // namespace ks
