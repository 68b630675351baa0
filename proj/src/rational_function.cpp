#include "ks/rational_function.hpp"

namespace ks {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), errc::invalid_argument, "rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rat lead = den_.leading();
  num_ = num_ / lead;
  den_ = den_ / lead;
}

Poly RatFunc::as_polynomial() const {
  require(is_polynomial(), errc::internal_inconsistency, "denominator did not clear");
  return num_ / den_.coeff(0);
}

Rat RatFunc::operator()(const Rat& x) const {
  Rat d = den_(x);
  require(d != 0, errc::invalid_argument, "evaluation at a pole");
  return num_(x) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const Rat& s) const {
  RatFunc r(*this);
  r.num_ = r.num_ * s;
  if (r.num_.is_zero()) r.den_ = Poly::constant(Rat(1));
  return r;
}

}  // namespace ks
