#pragma once

#include <algorithm>
#include <concepts>
#include <initializer_list>
#include <ostream>
#include <tuple>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rootheight/errors.hpp"
#include "rootheight/rat.hpp"

namespace rootheight {

/// Scalars usable as polynomial coefficients: exact field elements with a
/// zero-test. Rat and CycNum model this.
template <class K>
concept ExactField = requires(const K& a, const K& b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  K(0);
  K(1);
};

/// Dense univariate polynomial; coeffs()[i] is the coefficient of q^i.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and degree() is -1 for it.
template <class K>
class Polynomial {
 public:
  using Scalar = K;

  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}); }
  static Polynomial monomial(const K& c, int degree) {
    std::vector<K> v(static_cast<std::size_t>(degree) + 1, K(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// q^degree - 1
  static Polynomial x_pow_minus_one(int degree) {
    std::vector<K> v(static_cast<std::size_t>(degree) + 1, K(0));
    v.front() = K(-1);
    v.back() = K(1);
    return Polynomial(std::move(v));
  }
  /// 1 + q + ... + q^(len-1)
  static Polynomial geometric(int len) {
    return Polynomial(std::vector<K>(static_cast<std::size_t>(std::max(len, 0)), K(1)));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : K(0);
  }
  const K& lead() const { return c_.back(); }

  /// Horner evaluation.
  template <class V>
  V operator()(const V& x) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const K& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x = x * s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
  friend Polynomial operator*(const K& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

using RatPoly = Polynomial<Rat>;

/// Quotient and remainder with deg(rem) < deg(divisor).
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<K>{}, a};
  std::vector<K> rem = a.coeffs();
  const int db = b.degree();
  const K inv_lead = K(1) / b.lead();
  std::vector<K> quo(static_cast<std::size_t>(a.degree() - db + 1), K(0));
  for (int i = a.degree(); i >= db; --i) {
    const K& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const K f = top * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      const K& bj = b.coeffs()[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      auto& r = rem[static_cast<std::size_t>(i - db + j)];
      r = r - f * bj;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

template <class K>
Polynomial<K> rem(const Polynomial<K>& a, const Polynomial<K>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws NotDivisible when the remainder is nonzero.
template <class K>
Polynomial<K> divexact(const Polynomial<K>& a, const Polynomial<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible("polynomial division leaves a nonzero remainder");
  return q;
}

template <class K>
bool divides(const Polynomial<K>& b, const Polynomial<K>& a) {
  return divmod(a, b).second.is_zero();
}

template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
  if (p.is_zero() || p.lead() == K(1)) return p;
  return p * (K(1) / p.lead());
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> extended_gcd(const Polynomial<K>& a,
                                                                     const Polynomial<K>& b) {
  Polynomial<K> r0 = a, r1 = b;
  Polynomial<K> s0 = Polynomial<K>::constant(K(1)), s1;
  Polynomial<K> t0, t1 = Polynomial<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial<K> s2 = s0 - q * s1;
    Polynomial<K> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const K inv = K(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class K>
Polynomial<K> derivative(const Polynomial<K>& p) {
  if (p.degree() < 1) return {};
  std::vector<K> d(p.size() - 1, K(0));
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p.coeffs()[i] * K(static_cast<long>(i));
  return Polynomial<K>(std::move(d));
}

/// p(q^k) for k >= 1.
template <class K>
Polynomial<K> inflate(const Polynomial<K>& p, int k) {
  if (p.is_zero()) return p;
  std::vector<K> out(static_cast<std::size_t>(p.degree()) * static_cast<std::size_t>(k) + 1, K(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i * static_cast<std::size_t>(k)] = p.coeffs()[i];
  return Polynomial<K>(std::move(out));
}

/// q^k * p(q) for k >= 0.
template <class K>
Polynomial<K> shift(const Polynomial<K>& p, int k) {
  if (p.is_zero()) return p;
  std::vector<K> out(static_cast<std::size_t>(k), K(0));
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return Polynomial<K>(std::move(out));
}

/// q^n * p(1/q); requires n >= deg p.
template <class K>
Polynomial<K> reversed(const Polynomial<K>& p, int n) {
  if (p.degree() > n) throw DegreeTooHigh("reversal length shorter than the degree");
  std::vector<K> out(static_cast<std::size_t>(n) + 1, K(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(n) - i] = p.coeffs()[i];
  return Polynomial<K>(std::move(out));
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& p, unsigned e) {
  Polynomial<K> acc = Polynomial<K>::constant(K(1));
  Polynomial<K> base = p;
  while (e) {
    if (e & 1u) acc *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return acc;
}

/// Coefficient-wise map into another scalar type.
template <class To, class From>
Polynomial<To> convert(const Polynomial<From>& p) {
  std::vector<To> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(To(c));
  return Polynomial<To>(std::move(out));
}

/// Index of the first coefficient where a and b differ, or -1.
template <class K>
int first_difference(const Polynomial<K>& a, const Polynomial<K>& b) {
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i)
    if (!(a.coeff(i) == b.coeff(i))) return i;
  return -1;
}

/// Human-readable form, lowest degree first: "2 + q - 3/2*q^3".
template <class K>
std::string to_string(const Polynomial<K>& p, const std::string& var = "q") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const K& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    std::ostringstream cs;
    cs << c;
    std::string s = cs.str();
    const bool negative = !s.empty() && s[0] == '-' && s.find_first_of("+-", 1) == std::string::npos;
    if (negative) s.erase(0, 1);
    const bool compound = s.find_first_of("+-", 0) != std::string::npos;
    if (compound) s = "(" + s + ")";
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << s;
      continue;
    }
    if (s != "1") os << s << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
  return os << to_string(p);
}

}  // namespace rootheight
