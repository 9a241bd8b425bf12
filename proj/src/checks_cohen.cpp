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

RatFn scaled(const RatFn& f, const Rat& c) { return f * RatFn(c); }

/// Phi_d'(1/q) / (q Phi_d(1/q)).
RatFn reciprocal_log_derivative(int d) {
  const auto& phi = cyclotomic_poly(d);
  return RatFn(derivative(phi), phi).at_inverse() * RatFn(P::constant(Rat(1)), qpow(1));
}

/// sum_{d'|d} d' mu(d/d') / (1 - q^{d'}).
RatFn mobius_simple_fractions(int d) {
  RatFn s;
  for (int dp : divisors(d))
    if (const int mu = mobius(d / dp)) s += over_one_minus_qpow(P::constant(Rat(dp * mu)), dp);
  return s;
}

/// phi(d)/(1-q^d) (1 - q^d + sum_{d'|d} mu(d')/phi(d') Psi_{d'}(q^{d/d'})).
RatFn psi_bracket(int d) {
  P inner = one_minus_qpow(d);
  for (int dp : divisors(d))
    if (const int mu = mobius(dp)) inner += detail::psi_inflated(dp, d / dp) * Rat(mu, totient(dp));
  return over_one_minus_qpow(inner * Rat(totient(d)), d);
}

/// The chain A(q)/(1-q^h) = (1/h) sum_{d|h} A(zeta^{h/d}) ... shared by the
/// Cohen-function propositions. Returns the values A(zeta^k).
std::vector<CycNum> cohen_chain(ReportBuilder& rb, const P& A, int h) {
  std::vector<CycNum> vals;
  for (int k = 0; k < h; ++k) vals.push_back(cyc_eval(A, h, k));
  const auto divs = divisors(h);
  std::vector<Rat> v;
  for (int d : divs) {
    const CycNum& z = vals[static_cast<std::size_t>(h / d % h)];
    if (!rb.expect(z.is_rational(), "A(zeta^{h/d}) is irrational for d=" + std::to_string(d))) return vals;
    v.push_back(z.rational_value());
  }
  const Rat inv_h(1, h);
  const RatFn lhs = over_one_minus_qpow(A, h);
  RatFn f1, f2, f3, f4;
  P by_k;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const int d = divs[i];
    if (v[i].is_zero()) continue;
    f1 += over_one_minus_qpow(detail::ramanujan_poly(d) * v[i], d);
    f2 += scaled(reciprocal_log_derivative(d), v[i]);
    f3 += scaled(mobius_simple_fractions(d), v[i]);
    f4 += scaled(psi_bracket(d), v[i]);
    std::vector<Rat> c;
    for (int k = 0; k < h; ++k) c.push_back(v[i] * Rat(ramanujan_sum(d, k, RamanujanMethod::divisor_sum)));
    by_k += P(std::move(c));
  }
  rb.chain<Rat>({{"A(q)/(1-q^h)", lhs},
                 {"(1/h) sum A(zeta^{h/d}) sum_k c_d(k) q^k/(1-q^d)", scaled(f1, inv_h)},
                 {"(1/h) sum A(zeta^{h/d}) Phi_d'(1/q)/(q Phi_d(1/q))", scaled(f2, inv_h)},
                 {"(1/h) sum A(zeta^{h/d}) sum d' mu(d/d')/(1-q^{d'})", scaled(f3, inv_h)},
                 {"(1/h) sum A(zeta^{h/d}) phi(d)/(1-q^d) (1-q^d+sum mu(d')/phi(d') Psi_{d'}(q^{d/d'}))",
                  scaled(f4, inv_h)},
                 {"(1/h) sum_k q^k sum_d A(zeta^{h/d}) c_d(k) / (1-q^h)", over_one_minus_qpow(by_k * inv_h, h)}});

  const CycFn lhs_cyc = convert<CycNum>(lhs);
  CycFn by_roots;
  for (int k = 0; k < h; ++k) {
    const CycNum& a = vals[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    const CycNum z = CycNum::zeta(h, k);
    by_roots += CycFn(CycPoly::constant(z * a * CycNum(inv_h)), CycPoly{z, CycNum(-1)});
  }
  rb.equal(by_roots, lhs_cyc, "(1/h) sum zeta^k A(zeta^k)/(zeta^k - q)", "A(q)/(1-q^h)");
  const CycFn dft(lagrange_all_roots_dft(vals, h), convert<CycNum>(one_minus_qpow(h)));
  rb.equal(dft, lhs_cyc, "(1/h) sum_i A(zeta^i) sum_k zeta^{(h-i)k} q^k / (1-q^h)", "A(q)/(1-q^h)");
  return vals;
}

/// A(q)/(1-q^h) - a(0) = sum_{d|h} a(h/d) Psi_d(q^{h/d})/(1-q^h) = ...
void divisor_chain(ReportBuilder& rb, const ArithSeq& a) {
  const int h = a.h;
  const P A = a.as_polynomial();
  const Rat& a0 = a(0);
  RatFn by_psi, by_mobius_q, by_mobius, full;
  for (int d : divisors(h)) {
    const Rat& ad = a(h / d);
    if (ad.is_zero()) continue;
    by_psi += over_one_minus_qpow(detail::psi_inflated(d, h / d) * ad, h);
    for (int dp : divisors(d)) {
      const int mu = mobius(dp);
      if (!mu) continue;
      const int s = h * dp / d;
      by_mobius_q += over_one_minus_qpow(qpow(s) * (ad * Rat(mu)), s);
      full += over_one_minus_qpow(P::constant(ad * Rat(mu)), s);
      if (d > 1) by_mobius += over_one_minus_qpow(P::constant(ad * Rat(mu)), s);
    }
  }
  by_mobius += over_one_minus_qpow(qpow(h) * a0, h);
  rb.chain<Rat>({{"A(q)/(1-q^h) - a(0)", over_one_minus_qpow(A, h) - RatFn(a0)},
                 {"sum a(h/d) Psi_d(q^{h/d})/(1-q^h)", by_psi},
                 {"sum a(h/d) sum mu(d') q^{hd'/d}/(1-q^{hd'/d})", by_mobius_q},
                 {"a(0) q^h/(1-q^h) + sum_{d>1} a(h/d) sum mu(d')/(1-q^{hd'/d})", by_mobius}});
  rb.equal(full, over_one_minus_qpow(A, h), "sum a(h/d) sum mu(d')/(1-q^{hd'/d})", "A(q)/(1-q^h)");
}

bool require_cohen(ReportBuilder& rb, const ArithSeq& a, const std::string& label) {
  const auto c = is_cohen(a);
  return rb.expect(c.cohen, label + " is not a Cohen function (first violation at k=" +
                                std::to_string(c.witness.value_or(-1)) + ")");
}

}  // namespace

IdentityReport check_cohen_chain(const ArithSeq& a, const std::string& label) {
  ReportBuilder rb("cohen_chain", label);
  if (require_cohen(rb, a, label)) cohen_chain(rb, a.as_polynomial(), a.h);
  return rb.finish();
}

IdentityReport check_divisor_chain(const ArithSeq& a, const std::string& label) {
  ReportBuilder rb("divisor_chain", label);
  if (require_cohen(rb, a, label)) divisor_chain(rb, a);
  return rb.finish();
}

IdentityReport check_prop5(const RootSystem& rs) {
  ReportBuilder rb("prop5", rs.id().name());
  const int h = rs.coxeter_number();
  if (!require_cohen(rb, ArithSeq::from_integers(rs.m()), "m")) return rb.finish();
  const auto vals = cohen_chain(rb, rs.exponent_poly(), h);
  for (int k = 0; k < h; ++k)
    rb.equal(vals[static_cast<std::size_t>(k)], CycNum(rs.p()[static_cast<std::size_t>(k)]),
             "E(zeta^k) vs p(k) at k=" + std::to_string(k));
  return rb.finish();
}

IdentityReport check_prop6(int h) {
  ReportBuilder rb("prop6", detail::h_label(h));
  if (h < 2) throw UnsupportedOrder("Psi_h chain needs h >= 2");
  const P psi = psi_poly(h);
  const auto vals = cohen_chain(rb, psi, h);
  for (int k = 0; k < h; ++k)
    rb.equal(vals[static_cast<std::size_t>(k)], CycNum(ramanujan_sum(h, k)),
             "Psi_h(zeta^k) vs c_h(k) at k=" + std::to_string(k));
  RatFn eq10_q, eq10, eq11, last;
  long mu_sum = 0;
  for (int d : divisors(h)) {
    const int mu = mobius(d);
    mu_sum += mu;
    rb.equal(Rat(ramanujan_sum(h, h / d)), Rat(totient(h) * mu, totient(d)), "c_h(h/d) vs phi(h) mu(d)/phi(d) at d=" + std::to_string(d));
    if (!mu) continue;
    eq10_q += over_one_minus_qpow(qpow(d) * Rat(mu), d);
    eq11 += over_one_minus_qpow(P::constant(Rat(mu)), d);
    last += scaled(psi_bracket(d), Rat(mu, totient(d)));
  }
  eq10 = eq11 - RatFn(Rat(mu_sum));
  const RatFn lhs = over_one_minus_qpow(psi, h);
  rb.chain<Rat>({{"Psi_h(q)/(1-q^h)", lhs},
                 {"sum mu(d) q^d/(1-q^d)", eq10_q},
                 {"sum mu(d)/(1-q^d) - sum mu(d)", eq10},
                 {"sum mu(d)/(1-q^d)", eq11},
                 {"phi(h)/h sum mu(d)/(1-q^d) (1-q^d+sum mu(d')/phi(d') Psi_{d'}(q^{d/d'}))",
                  scaled(last, Rat(totient(h), h))}});
  return rb.finish();
}

IdentityReport check_prop7(const RootSystem& rs) {
  ReportBuilder rb("prop7", rs.id().name());
  const auto m = ArithSeq::from_integers(rs.m());
  if (require_cohen(rb, m, "m")) divisor_chain(rb, m);
  return rb.finish();
}

IdentityReport check_prop9(const RootSystem& rs) {
  ReportBuilder rb("prop9", rs.id().name());
  const int h = rs.coxeter_number();
  const long n = rs.rank();
  const P A = P::constant(Rat(n)) - rs.exponent_poly();
  const auto vals = cohen_chain(rb, A, h);
  const auto& p = rs.p();
  for (int k = 0; k < h; ++k)
    rb.equal(vals[static_cast<std::size_t>(k)], CycNum(p[0] - p[static_cast<std::size_t>(k)]),
             "(n - E)(zeta^k) vs p(0) - p(k) at k=" + std::to_string(k));
  rb.equal(RatFn(b_poly(rs) * P{Rat(1), Rat(-1)}, one_minus_qpow(h)), over_one_minus_qpow(A, h),
           "(1-q)/(1-q^h) B(q)", "(n - E(q))/(1-q^h)");
  rb.note("k=0 term of the root sum included; it vanishes since p(0)-p(0)=0");
  return rb.finish();
}

RationalFunction<Rat> prop10_printed_last_form(const RootSystem& rs) {
  const int h = rs.coxeter_number();
  P num;
  for (int d : divisors(h)) {
    const Rat md(rs.m()[static_cast<std::size_t>(h / d % h)]);
    if (d == 1 || md.is_zero()) continue;
    for (int dp : divisors(d))
      if (const int mu = mobius(dp)) {
        const int s = h * dp / d;
        num += qpow(s) * (P::constant(Rat(d / dp)) - inflate(P::geometric(h / s), s)) * (md * Rat(mu));
      }
  }
  return RatFn(num, P{Rat(1), Rat(-1)});
}

RationalFunction<Rat> prop10_last_form(const RootSystem& rs) {
  const int h = rs.coxeter_number();
  P num;
  for (int d : divisors(h)) {
    const Rat md(rs.m()[static_cast<std::size_t>(h / d % h)]);
    if (d == 1 || md.is_zero()) continue;
    for (int dp : divisors(d))
      if (const int mu = mobius(dp)) {
        const int s = h * dp / d;
        num += (P::constant(Rat(d / dp)) - qpow(s) * inflate(P::geometric(h / s), s)) * (md * Rat(mu));
      }
  }
  return RatFn(num, P{Rat(1), Rat(-1)});
}

IdentityReport check_prop10(const RootSystem& rs) {
  ReportBuilder rb("prop10", rs.id().name());
  const int h = rs.coxeter_number();
  const long n = rs.rank();
  const P one_minus_q{Rat(1), Rat(-1)};
  P by_psi, by_mobius;
  for (int d : divisors(h)) {
    const Rat md(rs.m()[static_cast<std::size_t>(h / d % h)]);
    if (d == 1 || md.is_zero()) continue;
    by_psi += (P::constant(psi_poly(d)(Rat(1))) - detail::psi_inflated(d, h / d)) * md;
    for (int dp : divisors(d))
      if (const int mu = mobius(dp)) {
        const int s = h * dp / d;
        by_mobius += (P::constant(Rat(d / dp)) - inflate(P::geometric(h / s), s)) * (md * Rat(mu));
      }
  }
  rb.chain<Rat>({{"B(q)", RatFn(b_poly(rs))},
                 {"(n - E(q))/(1-q)", RatFn(P::constant(Rat(n)) - rs.exponent_poly(), one_minus_q)},
                 {"sum_{d>1} m(h/d) (Psi_d(1) - Psi_d(q^{h/d}))/(1-q)", RatFn(by_psi, one_minus_q)},
                 {"sum_{d>1} m(h/d) sum mu(d')/(1-q) (d/d' - (1-q^h)/(1-q^{hd'/d}))", RatFn(by_mobius, one_minus_q)},
                 {"sum_{d>1} m(h/d) sum mu(d')/(1-q) (d/d' - q^{hd'/d}(1-q^h)/(1-q^{hd'/d}))", prop10_last_form(rs)}});
  rb.note("last form checked with q^{hd'/d} on the second bracket term; the printed placement does not reproduce B(q)");
  return rb.finish();
}

IdentityReport check_prop11(const RootSystem& rs) {
  ReportBuilder rb("prop11", rs.id().name());
  const int h = rs.coxeter_number();
  const auto m = ArithSeq::from_integers(rs.m());
  const auto p = ArithSeq::from_integers(rs.p());
  const auto dm = munagi_decompose(m.as_polynomial(), h);
  const auto dp = munagi_decompose(p.as_polynomial(), h);
  rb.expect(is_cohen(m).cohen, "m is not a Cohen function");
  rb.expect(is_cohen(p).cohen, "p is not a Cohen function");
  rb.expect(dm.all_constant(), "Munagi parts of the m-sequence are not all constant");
  rb.expect(dp.all_constant(), "Munagi parts of the p-sequence are not all constant");
  for (int d : divisors(h)) {
    rb.equal(dm.part(d), P::constant(Rat(rs.e(h / d))), "H_d of m at d=" + std::to_string(d), "e(h/d)");
    rb.equal(dp.part(d), P::constant(Rat(d * rs.e(d))), "H_d of p at d=" + std::to_string(d), "d e(d)");
  }
  if (h <= 2) {
    rb.note("non-Cohen direction vacuous: every sequence of period " + std::to_string(h) + " is Cohen");
    return rb.finish();
  }
  // Changing a(1) alone breaks a(1) = a(h-1).
  std::vector<Rat> perturbed = m.values;
  perturbed[1] += Rat(1);
  const ArithSeq bad(h, perturbed);
  rb.expect(!is_cohen(bad).cohen, "perturbed m-sequence still reported Cohen");
  rb.expect(!munagi_decompose(bad.as_polynomial(), h).all_constant(),
            "perturbed m-sequence decomposes with constant parts");
  return rb.finish();
}

IdentityReport check_prop12(const RootSystem& rs) {
  ReportBuilder rb("prop12", rs.id().name());
  const int h = rs.coxeter_number();
  const long n = rs.rank();
  RatFn sum;
  for (int d : divisors(h))
    if (const long e = rs.e(h / d)) sum += over_one_minus_qpow(P::constant(Rat(e)), d);
  const RatFn rhs = over_one_minus_qpow(P::constant(Rat(n)), 1) - RatFn(P::geometric(h)) * sum;
  rb.equal(rhs, RatFn(b_poly(rs)), "n/(1-q) - (1-q^h)/(1-q) sum e(h/d)/(1-q^d)", "B(q)");
  return rb.finish();
}

}  // namespace rootheight
