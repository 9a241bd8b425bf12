#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rootheight/polynomial.hpp"
#include "rootheight/rat.hpp"

namespace rootheight {

/// Element of the cyclotomic field Q(zeta_h), zeta_h = exp(2 pi i / h),
/// stored in the power basis 1, zeta, ..., zeta^(phi(h)-1).
///
/// Order 1 is Q itself; such values combine with any order. Values of
/// different orders are combined in Q(zeta_lcm).
class CycNum {
 public:
  CycNum() : order_(1), c_{Rat(0)} {}
  template <std::integral I>
  CycNum(I v) : CycNum(Rat(v)) {}  // NOLINT(google-explicit-constructor)
  CycNum(const Rat& r) : order_(1), c_{r} {}  // NOLINT(google-explicit-constructor)

  /// r embedded in Q(zeta_order).
  static CycNum rational(const Rat& r, int order);
  /// zeta_order^k; k is reduced mod order.
  static CycNum zeta(int order, long k = 1);
  /// sum_j powers[j] * zeta_order^j, for any length of `powers`.
  static CycNum from_powers(int order, const std::vector<Rat>& powers);

  int order() const { return order_; }
  /// Coordinates in the power basis; length phi(order).
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rat rational_value() const;

  /// The same number in Q(zeta_target); order() must divide target.
  CycNum embed(int target) const;
  /// Image under zeta -> zeta^k, gcd(k, order) = 1.
  CycNum galois(long k) const;
  /// Complex conjugate (zeta -> zeta^-1).
  CycNum conj() const { return galois(-1); }
  CycNum inverse() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend CycNum operator-(CycNum a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend bool operator==(const CycNum& a, const CycNum& b);

  /// "3/2", or "1 - 2*z30 + z30^3" for non-rational values.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const CycNum& z) { return os << z.str(); }

 private:
  CycNum(int order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}
  static CycNum reduce(int order, std::vector<Rat> dense);
  static void unify(CycNum& a, CycNum& b);

  int order_;
  std::vector<Rat> c_;
};

using CycPoly = Polynomial<CycNum>;

/// p(zeta_h^k), reduced in Q(zeta_h); k taken mod h.
CycNum cyc_eval(const Polynomial<Rat>& p, int h, long k);
/// p(zeta_h^k) for a polynomial with cyclotomic coefficients.
CycNum cyc_eval(const Polynomial<CycNum>& p, int h, long k);

}  // namespace rootheight
