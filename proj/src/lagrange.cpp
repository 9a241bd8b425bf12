#include "rootheight/lagrange.hpp"

#include "rootheight/errors.hpp"
#include "rootheight/numth.hpp"

namespace rootheight {

namespace {

void require_size(const std::vector<CycNum>& values, std::size_t n, const char* what) {
  if (values.size() != n)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) +
                                " values, got " + std::to_string(values.size()));
}

CycPoly q_minus(const CycNum& r) { return CycPoly{-r, CycNum(1)}; }

std::vector<Polynomial<CycNum>> monomial_row(int len) {
  std::vector<CycPoly> row;
  row.emplace_back();
  for (int k = 0; k < len; ++k) row.push_back(CycPoly::monomial(CycNum(1), k));
  return row;
}

}  // namespace

std::vector<CycNum> values_at_roots(const Polynomial<Rat>& f, int h) {
  std::vector<CycNum> out;
  for (int i = 0; i < h; ++i) out.push_back(cyc_eval(f, h, i));
  return out;
}

std::vector<CycNum> values_at_primitive_roots(const Polynomial<Rat>& f, int h) {
  std::vector<CycNum> out;
  for (int k : coprime_residues(h)) out.push_back(cyc_eval(f, h, k));
  return out;
}

CycPoly lagrange_all_roots_formula(const std::vector<CycNum>& values, int h) {
  require_size(values, static_cast<std::size_t>(h), "lagrange_all_roots");
  const CycPoly qh = convert<CycNum>(Polynomial<Rat>::x_pow_minus_one(h));
  CycPoly out;
  for (int i = 0; i < h; ++i) {
    if (values[static_cast<std::size_t>(i)].is_zero()) continue;
    const CycNum z = CycNum::zeta(h, i);
    out += divexact(qh, q_minus(z)) * (z * values[static_cast<std::size_t>(i)]);
  }
  return out * CycNum(Rat(1, h));
}

CycPoly lagrange_all_roots_dft(const std::vector<CycNum>& values, int h) {
  require_size(values, static_cast<std::size_t>(h), "lagrange_all_roots");
  std::vector<CycNum> c(static_cast<std::size_t>(h));
  for (int k = 0; k < h; ++k) {
    CycNum s(0);
    for (int i = 0; i < h; ++i)
      s += values[static_cast<std::size_t>(i)] * CycNum::zeta(h, static_cast<long>(h - i) * k);
    c[static_cast<std::size_t>(k)] = s * CycNum(Rat(1, h));
  }
  return CycPoly(std::move(c));
}

std::vector<CycNum> all_roots_moments(const std::vector<CycNum>& values, int h) {
  require_size(values, static_cast<std::size_t>(h), "all_roots_moments");
  std::vector<CycNum> u(static_cast<std::size_t>(h));
  for (int j = 0; j < h; ++j) {
    CycNum s(0);
    for (int i = 0; i < h; ++i)
      s += CycNum::zeta(h, static_cast<long>(i) * j).conj() * values[static_cast<std::size_t>(i)];
    u[static_cast<std::size_t>(j)] = s;
  }
  return u;
}

CycPoly all_roots_determinant_form(const std::vector<CycNum>& moments, int h) {
  require_size(moments, static_cast<std::size_t>(h), "all_roots_determinant_form");
  Matrix<CycNum> rest = Matrix<CycNum>::Zero(h, h + 1);
  for (int i = 0; i < h; ++i) {
    rest(i, 0) = moments[static_cast<std::size_t>(i)];
    rest(i, i + 1) = CycNum(h);
  }
  const CycPoly det = determinant_with_polynomial_row(monomial_row(h), rest);
  return det * CycNum(-(Rat(1) / pow(Rat(h), h)));
}

CycPoly lagrange_all_roots(const std::vector<CycNum>& values, int h) {
  CycPoly a = lagrange_all_roots_formula(values, h);
  const CycPoly b = lagrange_all_roots_dft(values, h);
  const CycPoly c = all_roots_determinant_form(all_roots_moments(values, h), h);
  if (!(a == b) || !(a == c))
    throw MethodMismatch("interpolation at the " + std::to_string(h) +
                         "-th roots of unity: formula, DFT and determinant forms disagree");
  return a;
}

CycPoly lagrange_primitive_roots_formula(const std::vector<CycNum>& values, int h) {
  const auto ks = coprime_residues(h);
  require_size(values, ks.size(), "lagrange_primitive_roots");
  const CycPoly phi = convert<CycNum>(cyclotomic_poly(h));
  const CycPoly dphi = derivative(phi);
  CycPoly out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (values[i].is_zero()) continue;
    const CycNum z = CycNum::zeta(h, ks[i]);
    out += divexact(phi, q_minus(z)) * (values[i] / cyc_eval(dphi, h, ks[i]));
  }
  return out;
}

std::vector<CycNum> primitive_roots_moments(const std::vector<CycNum>& values, int h) {
  const auto ks = coprime_residues(h);
  require_size(values, ks.size(), "primitive_roots_moments");
  std::vector<CycNum> u(ks.size());
  for (std::size_t j = 0; j < ks.size(); ++j) {
    CycNum s(0);
    for (std::size_t i = 0; i < ks.size(); ++i)
      s += CycNum::zeta(h, static_cast<long>(ks[i]) * static_cast<long>(j)) * values[i];
    u[j] = s;
  }
  return u;
}

Matrix<Rat> ramanujan_gram(int h) {
  const int phi = totient(h);
  Matrix<Rat> c(phi, phi);
  for (int i = 0; i < phi; ++i)
    for (int j = 0; j < phi; ++j) c(i, j) = Rat(ramanujan_sum(h, i + j, RamanujanMethod::divisor_sum));
  return c;
}

CycPoly primitive_roots_determinant_form(const std::vector<CycNum>& moments, int h) {
  if (h < 3) throw UnsupportedOrder("primitive-root determinant form requires h >= 3");
  const int phi = totient(h);
  require_size(moments, static_cast<std::size_t>(phi), "primitive_roots_determinant_form");
  const Matrix<Rat> gram = ramanujan_gram(h);
  Matrix<CycNum> rest(phi, phi + 1);
  for (int i = 0; i < phi; ++i) {
    rest(i, 0) = moments[static_cast<std::size_t>(i)];
    for (int j = 0; j < phi; ++j) rest(i, j + 1) = CycNum(gram(i, j));
  }
  Rat scale(1);
  for (int p : prime_divisors(h)) scale *= pow(Rat(p), phi / (p - 1));
  scale /= pow(Rat(h), phi);
  if ((1 + phi / 2) % 2) scale = -scale;
  return determinant_with_polynomial_row(monomial_row(phi), rest) * CycNum(scale);
}

CycPoly lagrange_primitive_roots(const std::vector<CycNum>& values, int h) {
  if (h < 3) throw UnsupportedOrder("lagrange_primitive_roots requires h >= 3");
  CycPoly a = lagrange_primitive_roots_formula(values, h);
  const CycPoly b = primitive_roots_determinant_form(primitive_roots_moments(values, h), h);
  if (!(a == b))
    throw MethodMismatch("interpolation at primitive " + std::to_string(h) +
                         "-th roots: formula and determinant forms disagree");
  return a;
}

CycNum l_sum(int d, int j, int order) {
  if (d < 2 || order % d != 0)
    throw std::invalid_argument("l_sum needs d >= 2 dividing the field order");
  const int step = order / d;
  CycNum s(0);
  for (int k : coprime_residues(d)) {
    const CycNum z = CycNum::zeta(order, static_cast<long>(k) * step);
    s += CycNum::zeta(order, static_cast<long>(k) * step * (j - 1)) / (CycNum(1) - z);
  }
  return s;
}

}  // namespace rootheight
