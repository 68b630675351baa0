#include "ks/integration.hpp"

namespace ks {

Rat integrate_poly(const Poly& p, const Rat& a, const Rat& b) {
  // Antiderivative with zero constant term, evaluated at both ends.
  std::vector<Rat> anti(p.coeffs().size() + 1, Rat(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    anti[i + 1] = p.coeffs()[i] / Rat(static_cast<long>(i + 1));
  Poly A = Poly::from_coeffs(std::move(anti));
  return A(b) - A(a);
}

RatFunc integrate_shifted_pole(const Poly& q, int s) {
  require(s >= 1, errc::invalid_argument, "pole order must be positive");
  require(q.degree() < s - 1, errc::degree_too_high,
          "deg q = " + std::to_string(q.degree()) + " not < s - 1 = " + std::to_string(s - 1));
  if (q.is_zero()) return RatFunc();

  RatFunc acc;
  Poly deriv = q;
  Rat fact(1);
  for (int j = 0; j <= q.degree(); ++j) {
    if (j > 0) {
      deriv = deriv.derivative();
      fact *= Rat(j);
    }
    // Taylor coefficient q^(j)(-b)/j! as a polynomial in b.
    std::vector<Rat> cb(deriv.coeffs().size());
    for (std::size_t i = 0; i < cb.size(); ++i)
      cb[i] = deriv.coeffs()[i] / fact * ((i % 2) ? Rat(-1) : Rat(1));
    Poly cj = Poly::from_coeffs(std::move(cb));

    // \int (t+b)^{j-s} dt = (t+b)^{j-s+1}/(j-s+1); at t = 1 and t = -1 the
    // base is b+1 and b-1 respectively, with exponent j-s+1 < 0.
    int e = j - s + 1;
    unsigned m = static_cast<unsigned>(-e);
    RatFunc at_hi(Poly::constant(Rat(1)), pow_poly(Poly::from_coeffs({Rat(1), Rat(1)}), m));
    RatFunc at_lo(Poly::constant(Rat(1)), pow_poly(Poly::from_coeffs({Rat(-1), Rat(1)}), m));
    acc = acc + (RatFunc::from_poly(cj) * (at_hi - at_lo)) * (Rat(1) / Rat(e));
  }
  return acc;
}

}  // namespace ks
