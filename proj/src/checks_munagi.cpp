#include "report_builder.hpp"
#include "rootheight/cycnum.hpp"
#include "rootheight/errors.hpp"
#include "rootheight/lagrange.hpp"

namespace rootheight {

using detail::CycFn;
using detail::one_minus_qpow;
using detail::over_one_minus_qpow;
using detail::qpow;
using detail::RatFn;
using detail::ReportBuilder;

namespace {

using P = Polynomial<Rat>;

/// E_h (shift 0) or F_h (shift 1) against (n - e(1)) L*[q^shift/(1-q)] and
/// the determinant form built from L_{h, j+shift}.
void primitive_part_check(ReportBuilder& rb, const RootSystem& rs, const P& part, int shift) {
  const int h = rs.coxeter_number();
  const Rat factor(rs.rank() - rs.e(1));
  const auto& phi_h = cyclotomic_poly(h);
  const CycPoly part_cyc = convert<CycNum>(part);
  const std::string name = shift == 0 ? "E_h" : "F_h";

  rb.equal(rem(b_poly(rs) * (shift == 0 ? P::constant(Rat(1)) : qpow(1)), phi_h), part,
           "L*[" + std::string(shift == 0 ? "B" : "qB") + "]", name);

  std::vector<CycNum> values;
  const auto ks = coprime_residues(h);
  for (int k : ks) {
    const CycNum z = CycNum::zeta(h, k);
    values.push_back(CycNum::zeta(h, static_cast<long>(k) * shift) / (CycNum(1) - z));
  }
  rb.equal(lagrange_primitive_roots_formula(values, h) * CycNum(factor), part_cyc,
           "(n - e(1)) L*[q^" + std::to_string(shift) + "/(1-q)]", name);

  const CycPoly dphi = convert<CycNum>(derivative(phi_h));
  CycFn by_roots;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const CycNum z = CycNum::zeta(h, ks[i]);
    const CycNum c = CycNum(factor) * values[i] / cyc_eval(dphi, h, ks[i]);
    by_roots += CycFn(CycPoly::constant(c), CycPoly{-z, CycNum(1)});
  }
  rb.equal(CycFn(part_cyc, convert<CycNum>(phi_h)), by_roots, name + "/Phi_h",
           "(n - e(1)) sum zeta^{k s}/(Phi_h'(zeta^k)(1-zeta^k)(q-zeta^k))");

  if (h < 3) {
    rb.note("determinant form needs h >= 3");
    return;
  }
  const int phi = totient(h);
  std::vector<CycNum> lvec;
  for (int j = 1; j <= phi; ++j) lvec.push_back(l_sum(h, j + shift, h));
  const auto moments = primitive_roots_moments(values, h);
  for (int j = 0; j < phi; ++j)
    rb.equal(moments[static_cast<std::size_t>(j)], lvec[static_cast<std::size_t>(j)],
             "moment vs L_{h," + std::to_string(j + 1 + shift) + "}");
  rb.equal(primitive_roots_determinant_form(lvec, h) * CycNum(factor), part_cyc, "(n - e(1)) det form", name);

  const CycNum phi_at_one(phi_h(Rat(1)));
  for (int j = 1; j <= phi; ++j) {
    const auto interp = lagrange_primitive_roots_formula(
        values_at_primitive_roots(qpow(j - 1) * derivative(phi_h), h), h);
    rb.equal(interp(CycNum(1)) / phi_at_one, l_sum(h, j, h),
             "L*[q^{j-1} Phi_h'](1)/Phi_h(1) vs L_{h,j} at j=" + std::to_string(j));
  }
}

}  // namespace

IdentityReport check_prop3(const RootSystem& rs) {
  ReportBuilder rb("prop3", rs.id().name());
  const int h = rs.coxeter_number();
  const P E = rs.exponent_poly(), B = b_poly(rs);
  rb.equal(lagrange_all_roots(values_at_roots(E, h), h), convert<CycNum>(E), "L[E]", "E(q)");
  rb.equal(lagrange_all_roots(values_at_roots(B, h), h), convert<CycNum>(B), "L[B]", "B(q)");
  return rb.finish();
}

IdentityReport check_prop4(const RootSystem& rs) {
  ReportBuilder rb("prop4", rs.id().name());
  const int h = rs.coxeter_number();
  const P E = rs.exponent_poly();
  const CycPoly want = convert<CycNum>(rem(E, cyclotomic_poly(h)));
  const auto values = values_at_primitive_roots(E, h);
  if (h < 3) {
    rb.equal(lagrange_primitive_roots_formula(values, h), want, "L*[E]", "E mod Phi_h");
    rb.note("determinant form needs h >= 3; interpolation formula only");
    return rb.finish();
  }
  rb.equal(lagrange_primitive_roots(values, h), want, "L*[E]", "E mod Phi_h");
  rb.equal(determinant(ramanujan_gram(h)), cyclotomic_discriminant(h), "det (c_h(i+j-2)) vs discriminant of Phi_h");
  return rb.finish();
}

IdentityReport check_prop13(const RootSystem& rs) {
  ReportBuilder rb("prop13", rs.id().name());
  const int h = rs.coxeter_number();
  const Rat n(rs.rank());
  const auto parts = e_parts(rs);
  Rat at0(0), d1(0), top(0);
  for (int d : divisors(h)) {
    const P& e = parts.part(d);
    at0 += e.coeff(0);
    d1 += e.coeff(1);
    if (is_prime(d)) top += e.coeff(totient(d) - 1);
  }
  rb.equal(at0, n, "sum E_d(0) vs n");
  rb.equal(d1, n - Rat(1), "sum E_d'(0) vs n-1");
  rb.equal(top, Rat(1), "sum over prime d of E*_d");
  rb.equal(parts.part(1), P(), "E_1", "0");
  return rb.finish();
}

IdentityReport check_prop14(const RootSystem& rs) {
  ReportBuilder rb("prop14", rs.id().name());
  primitive_part_check(rb, rs, e_parts(rs).part(rs.coxeter_number()), 0);
  return rb.finish();
}

IdentityReport check_prop18(const RootSystem& rs) {
  ReportBuilder rb("prop18", rs.id().name());
  primitive_part_check(rb, rs, f_parts(rs).part(rs.coxeter_number()), 1);
  return rb.finish();
}

IdentityReport check_prop15(int h) {
  ReportBuilder rb("prop15", detail::h_label(h));
  for (int m = 1; m <= h; ++m) {
    CycNum s(0);
    for (int d : divisors(h))
      if (d > 1) s += l_sum(d, m + 1, h);
    const std::string where = " at m=" + std::to_string(m);
    if (!rb.expect(s.is_rational(), "sum L_{d,m+1} is not rational" + where)) continue;
    rb.equal(s.rational_value(), Rat(m) - Rat(h + 1, 2), "sum_{d|h,d>1} L_{d,m+1} vs m-(h+1)/2" + where);
  }
  return rb.finish();
}

IdentityReport check_prop16(const RootSystem& rs) {
  ReportBuilder rb("prop16", rs.id().name());
  const auto parts = e_parts(rs);
  RatFn sum;
  for (const auto& [d, e] : parts.parts) sum += over_one_minus_qpow(e + reversed(e, d - 1), d);
  rb.equal(sum, over_one_minus_qpow(P::constant(Rat(rs.rank())), 1), "sum (E_d + q^{d-1}E_d(1/q))/(1-q^d)",
           "n/(1-q)");
  return rb.finish();
}

IdentityReport check_prop17(const RootSystem& rs) {
  ReportBuilder rb("prop17", rs.id().name());
  const int h = rs.coxeter_number();
  const Rat n(rs.rank());
  const auto parts = f_parts(rs);
  const P& f2 = parts.part(2);
  rb.expect(f2.degree() <= 0, "F_2 is not constant");
  const Rat A = f2.coeff(1), B = f2.coeff(0);
  Rat d1(0), d1_big(0), d2_big(0), at0(0);
  for (int d : divisors(h)) {
    const P& f = parts.part(d);
    d1 += f.coeff(1);
    at0 += f.coeff(0);
    if (d > 2) {
      d1_big += f.coeff(1);
      d2_big += f.coeff(2);  // F''(0)/2
    }
  }
  rb.equal(Rat(1) + d1, n, "1 + sum F_d'(0) vs n");
  rb.equal(Rat(1) + A + d1_big, n, "1 + A + sum_{d>2} F_d'(0) vs n");
  rb.equal(Rat(1) + B + d2_big, n - Rat(1), "1 + B + (1/2) sum_{d>2} F_d''(0) vs n-1");
  rb.equal(parts.part(1), P::constant(Rat(1)), "F_1", "1");
  rb.equal(at0, Rat(0), "sum F_d(0)");
  if (h % 2 == 1) rb.expect(A.is_zero() && B.is_zero(), "F_2 nonzero for odd h");
  return rb.finish();
}

IdentityReport check_prop19(const RootSystem& rs) {
  ReportBuilder rb("prop19", rs.id().name());
  const auto parts = f_parts(rs);
  RatFn sum;
  for (const auto& [d, f] : parts.parts) {
    if (f.is_zero()) continue;
    sum += RatFn(f, qpow(1) * one_minus_qpow(d)) + over_one_minus_qpow(reversed(f, d), d);
  }
  rb.equal(sum, over_one_minus_qpow(P::constant(Rat(rs.rank())), 1), "sum (F_d/q + q^d F_d(1/q))/(1-q^d)",
           "n/(1-q)");
  return rb.finish();
}

}  // namespace rootheight
