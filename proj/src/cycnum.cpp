#include "rootheight/cycnum.hpp"

#include <numeric>
#include <stdexcept>

#include "rootheight/errors.hpp"
#include "rootheight/numth.hpp"

namespace rootheight {

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CycNum CycNum::reduce(int order, std::vector<Rat> dense) {
  if (order == 1) {
    Rat s(0);
    for (const auto& x : dense) s += x;
    return CycNum(1, {s});
  }
  // zeta^order = 1 folds everything below degree `order`
  if (dense.size() > static_cast<std::size_t>(order)) {
    for (std::size_t i = static_cast<std::size_t>(order); i < dense.size(); ++i) {
      if (!dense[i].is_zero()) dense[i % static_cast<std::size_t>(order)] += dense[i];
    }
    dense.resize(static_cast<std::size_t>(order));
  }
  const auto& phi = cyclotomic_poly(order);
  const int deg = phi.degree();
  const auto& pc = phi.coeffs();
  for (int i = static_cast<int>(dense.size()) - 1; i >= deg; --i) {
    const Rat top = dense[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    // Phi is monic with integer coefficients
    for (int j = 0; j < deg; ++j) {
      if (pc[static_cast<std::size_t>(j)].is_zero()) continue;
      dense[static_cast<std::size_t>(i - deg + j)] -= top * pc[static_cast<std::size_t>(j)];
    }
  }
  dense.resize(static_cast<std::size_t>(deg), Rat(0));
  return CycNum(order, std::move(dense));
}

CycNum CycNum::rational(const Rat& r, int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rat> c(static_cast<std::size_t>(totient(order)), Rat(0));
  c[0] = r;
  return CycNum(order, std::move(c));
}

CycNum CycNum::zeta(int order, long k) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rat> dense(static_cast<std::size_t>(mod(k, order)) + 1, Rat(0));
  dense.back() = Rat(1);
  return reduce(order, std::move(dense));
}

CycNum CycNum::from_powers(int order, const std::vector<Rat>& powers) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return reduce(order, powers);
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number " + str() + " is not rational");
  return c_[0];
}

CycNum CycNum::embed(int target) const {
  if (target == order_) return *this;
  if (target % order_ != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                std::to_string(target) + ")");
  if (order_ == 1) return rational(c_[0], target);
  const std::size_t step = static_cast<std::size_t>(target / order_);
  std::vector<Rat> dense((c_.size() - 1) * step + 1, Rat(0));
  for (std::size_t j = 0; j < c_.size(); ++j) dense[j * step] = c_[j];
  return reduce(target, std::move(dense));
}

CycNum CycNum::galois(long k) const {
  if (order_ == 1) return *this;
  if (std::gcd(mod(k, order_), static_cast<long>(order_)) != 1)
    throw std::invalid_argument("galois exponent must be coprime to the order");
  std::vector<Rat> dense(static_cast<std::size_t>(order_), Rat(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    dense[static_cast<std::size_t>(mod(static_cast<long>(j) * k, order_))] += c_[j];
  }
  return reduce(order_, std::move(dense));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in a cyclotomic field");
  if (is_rational()) return rational(Rat(1) / c_[0], order_);
  auto [g, s, t] = extended_gcd(Polynomial<Rat>(c_), cyclotomic_poly(order_));
  if (g.degree() != 0) throw std::logic_error("cyclotomic polynomial is not irreducible?");
  return reduce(order_, s.coeffs());
}

void CycNum::unify(CycNum& a, CycNum& b) {
  if (a.order_ == b.order_) return;
  if (a.order_ == 1) {
    a = rational(a.c_[0], b.order_);
    return;
  }
  if (b.order_ == 1) {
    b = rational(b.c_[0], a.order_);
    return;
  }
  const int l = std::lcm(a.order_, b.order_);
  a = a.embed(l);
  b = b.embed(l);
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (order_ == o.order_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  if (o.order_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  CycNum b = o;
  unify(*this, b);
  return *this += b;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.order_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    const Rat s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (order_ != o.order_) {
    CycNum b = o;
    unify(*this, b);
    return *this *= b;
  }
  std::vector<Rat> dense(2 * c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      dense[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = reduce(order_, std::move(dense));
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  CycNum x = a, y = b;
  CycNum::unify(x, y);
  return x.c_ == y.c_;
}

std::string CycNum::str() const {
  if (is_rational()) return c_[0].str();
  return to_string(Polynomial<Rat>(c_), "z" + std::to_string(order_));
}

CycNum cyc_eval(const Polynomial<Rat>& p, int h, long k) {
  if (h < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rat> dense(static_cast<std::size_t>(h), Rat(0));
  const long kk = mod(k, h);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    dense[static_cast<std::size_t>(mod(static_cast<long>(i) * kk, h))] += p.coeffs()[i];
  }
  return CycNum::from_powers(h, dense);
}

CycNum cyc_eval(const Polynomial<CycNum>& p, int h, long k) {
  return p(CycNum::zeta(h, k));
}

}  // namespace rootheight
