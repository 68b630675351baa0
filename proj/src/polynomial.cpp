#include "ks/polynomial.hpp"

#include <sstream>

namespace ks {

namespace {
const Rat kZero(0);
}

Poly Poly::constant(Rat c) {
  Poly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

Poly Poly::x() { return from_coeffs({Rat(0), Rat(1)}); }

Poly Poly::from_coeffs(std::vector<Rat> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

Poly Poly::linear_root(const Rat& root) { return from_coeffs({-root, Rat(1)}); }

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
  require(!is_zero(), errc::zero_polynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return from_coeffs(std::move(d));
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> s(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) s[i] += o.c_[i];
  return from_coeffs(std::move(s));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> s(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) s[i + j] += c_[i] * o.c_[j];
  return from_coeffs(std::move(s));
}

Poly Poly::operator*(const Rat& s) const {
  Poly p(*this);
  for (auto& c : p.c_) c *= s;
  p.normalize();
  return p;
}

Poly Poly::operator/(const Rat& s) const {
  require(s != 0, errc::invalid_argument, "division of polynomial by zero scalar");
  return *this * (Rat(1) / s);
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  require(!b.is_zero(), errc::zero_polynomial, "polynomial division by zero");
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo;
  int db = b.degree();
  if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  while (static_cast<int>(rem.size()) - 1 >= db) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (static_cast<int>(rem.size()) - 1 < db) break;
    std::size_t k = rem.size() - 1 - static_cast<std::size_t>(db);
    Rat f = rem.back() / b.c_.back();
    quo[k] = f;
    for (int i = 0; i <= db; ++i) rem[k + static_cast<std::size_t>(i)] -= f * b.c_[static_cast<std::size_t>(i)];
    rem.pop_back();
  }
  q = from_coeffs(std::move(quo));
  r = from_coeffs(std::move(rem));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    // Scale remainders to primitive integer form; keeps coefficient growth in
    // check without disturbing the root set.
    b = r.is_zero() ? r : r.primitive_integer();
  }
  return a.monic();
}

Poly Poly::squarefree_part() const {
  if (is_zero() || degree() == 0) return *this;
  Poly g = gcd(*this, derivative());
  Poly q, r;
  divmod(*this, g, q, r);
  // g divides *this by construction
  require(r.is_zero(), errc::internal_inconsistency, "squarefree division left a remainder");
  return q;
}

Poly Poly::primitive_integer() const {
  if (is_zero()) return *this;
  Int l(1);
  for (const auto& c : c_) l = lcm(l, c.get_den());
  Int content(0);
  for (const auto& c : c_) content = gcd(content, Int(c.get_num() * (l / c.get_den())));
  if (sign(leading()) < 0) content = -content;
  Poly p = *this * Rat(l) / Rat(content);
  return p;
}

Poly Poly::deflate_root(const Rat& root) const {
  Poly q, r;
  divmod(*this, linear_root(root), q, r);
  require(r.is_zero(), errc::internal_inconsistency, "deflation at a non-root");
  return q;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (c == 0) continue;
    if (!first) out << (sign(c) < 0 ? " - " : " + ");
    else if (sign(c) < 0) out << "-";
    first = false;
    Rat a = abs(c);
    if (a != 1 || i == 0) out << to_string(a);
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Poly pow_poly(const Poly& p, unsigned k) {
  Poly acc = Poly::constant(Rat(1));
  Poly base = p;
  while (k) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1u;
  }
  return acc;
}

}  // namespace ks
