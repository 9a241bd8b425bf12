#pragma once

#include <string>
#include <utility>

#include "rootheight/errors.hpp"
#include "rootheight/polynomial.hpp"

namespace rootheight {

/// Quotient num/den of polynomials over the field K.
///
/// The denominator is kept monic. Arithmetic combines denominators through
/// their lcm but leaves common factors of numerator and denominator in
/// place; normalized() produces the canonical reduced form. Equality is
/// decided by cross-multiplication, so it never depends on normalisation.
template <class K>
class RationalFunction {
 public:
  using Poly = Polynomial<K>;

  RationalFunction() : den_(Poly::constant(K(1))) {}
  RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::constant(K(1))) {}  // NOLINT
  RationalFunction(const K& c) : RationalFunction(Poly::constant(c)) {}           // NOLINT

  /// num/den without cancelling common factors; throws DivisionByZero for den = 0.
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (!(den_.lead() == K(1))) {
      const K inv = K(1) / den_.lead();
      num_ *= inv;
      den_ *= inv;
    }
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 || divides(den_, num_); }
  /// The polynomial this function equals; throws NotDivisible otherwise.
  Poly as_polynomial() const { return divexact(num_, den_); }

  /// gcd(num, den) = 1 and monic den; zero becomes 0/1.
  RationalFunction normalized() const {
    if (num_.is_zero()) return RationalFunction();
    if (den_.degree() == 0) return *this;
    auto [q, r] = divmod(num_, den_);
    if (r.is_zero()) return RationalFunction(std::move(q));
    const Poly g = gcd(num_, den_);
    if (g.degree() == 0) return *this;
    return RationalFunction(divexact(num_, g), divexact(den_, g));
  }

  /// f(1/q), written again as a quotient of polynomials in q.
  RationalFunction at_inverse() const {
    if (num_.is_zero()) return *this;
    const int dn = num_.degree(), dd = den_.degree();
    Poly n = reversed(num_, dn), d = reversed(den_, dd);
    if (dd >= dn)
      n = shift(n, dd - dn);
    else
      d = shift(d, dn - dd);
    return RationalFunction(std::move(n), std::move(d));
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    if (b.den_.degree() == 0) return RationalFunction(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.degree() == 0) return RationalFunction(a.num_ * b.den_ + b.num_, b.den_);
    const Poly g = gcd(a.den_, b.den_);
    const Poly bc = divexact(b.den_, g);  // cofactor of a
    const Poly ac = divexact(a.den_, g);  // cofactor of b
    return RationalFunction(a.num_ * bc + b.num_ * ac, a.den_ * bc);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    return RationalFunction(-a.num_, a.den_, Raw{});
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return a * RationalFunction(b.den_, b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  struct Raw {};
  RationalFunction(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// num/den in lowest terms with monic denominator.
template <class K>
RationalFunction<K> ratfun_normalize(const Polynomial<K>& num, const Polynomial<K>& den) {
  return RationalFunction<K>(num, den).normalized();
}

/// Coefficient-wise map of numerator and denominator into another field.
template <class To, class From>
RationalFunction<To> convert(const RationalFunction<From>& f) {
  return RationalFunction<To>(convert<To>(f.num()), convert<To>(f.den()));
}

/// Index of the first coefficient where num_a*den_b and num_b*den_a differ, or -1.
template <class K>
int first_difference(const RationalFunction<K>& a, const RationalFunction<K>& b) {
  return first_difference(a.num() * b.den(), b.num() * a.den());
}

template <class K>
std::string to_string(const RationalFunction<K>& f, const std::string& var = "q") {
  if (f.den().degree() == 0) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace rootheight
