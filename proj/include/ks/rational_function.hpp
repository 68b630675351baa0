#pragma once

#include "ks/polynomial.hpp"

namespace ks {

// Rational function over Q in one variable. Canonical form: gcd(num, den) = 1
// and the denominator is monic (hence positive leading coefficient).
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(Rat(1))) {}
  RatFunc(Poly num, Poly den);
  static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), Poly::constant(Rat(1))); }
  static RatFunc constant(const Rat& c) { return from_poly(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  Poly as_polynomial() const;

  Rat operator()(const Rat& x) const;  // throws on a pole

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator*(const Rat& s) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  void reduce();
  Poly num_, den_;
};

}  // namespace ks
