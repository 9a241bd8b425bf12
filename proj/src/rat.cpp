#include "rootheight/rat.hpp"

#include <stdexcept>

#include "rootheight/errors.hpp"

namespace rootheight {

Rat::Rat(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

long Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::domain_error("rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw DivisionByZero();
    return pow(Rat(1) / r, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.value().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.value().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(mpq_class(num, den));
}

}  // namespace rootheight
