#include "ks/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace ks {

Rat make_rat(const Int& num, const Int& den) {
  require(den != 0, errc::invalid_argument, "zero denominator");
  Rat q;
  mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
  q.canonicalize();
  return q;
}

Rat make_rat(std::int64_t num, std::int64_t den) { return make_rat(to_int(num), to_int(den)); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Int int_from_string(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  require(all_digits(body), errc::invalid_argument, "bad integer '" + std::string(s) + "'");
  return Int(std::string(s), 10);
}

Rat rat_from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(int_from_string(s));
  std::string_view den = s.substr(slash + 1);
  require(all_digits(den), errc::invalid_argument,
          "bad rational '" + std::string(s) + "' (sign belongs on the numerator)");
  return make_rat(int_from_string(s.substr(0, slash)), Int(std::string(den), 10));
}

std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const Int& x) { return x.get_str(); }

Rat rat_from_double(double x) {
  require(std::isfinite(x), errc::invalid_argument, "non-finite double");
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

double log_abs(const Rat& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(std::fabs(md)) +
         static_cast<double>(en - ed) * std::log(2.0);
}

Rat pow_rat(const Rat& x, unsigned k) {
  Rat acc(1), base(x);
  while (k) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1u;
  }
  return acc;
}

}  // namespace ks
