#include <numeric>
#include <sstream>

#include "report_builder.hpp"
#include "rootheight/cycnum.hpp"
#include "rootheight/errors.hpp"

namespace rootheight {

using detail::CycFn;
using detail::qpow;
using detail::RatFn;
using detail::ReportBuilder;

namespace {

Polynomial<Rat> from_longs(const std::vector<long>& v, std::size_t offset = 0) {
  std::vector<Rat> c(offset, Rat(0));
  for (long x : v) c.emplace_back(x);
  return Polynomial<Rat>(std::move(c));
}

std::string at(const std::string& what, long k) { return what + " at k=" + std::to_string(k); }

}  // namespace

IdentityReport check_eq1(const RootSystem& rs) {
  ReportBuilder rb("eq1", rs.id().name());
  const auto heights = b_from_heights(rs);
  rb.equal(heights, from_longs(rs.height_counts()), "sum q^{ht-1}", "sum b_k q^{k-1}");
  rb.equal(b_from_exponent_poly(rs), heights, "(E(q)-n)/(q-1)", "sum q^{ht-1}");
  rb.equal(b_from_exponents(rs), heights, "sum_i (1+...+q^{e_i-1})", "sum q^{ht-1}");
  const long n = rs.rank(), h = rs.coxeter_number();
  rb.equal(heights(Rat(1)), Rat(n * h, 2), "B(1)");
  rb.equal(static_cast<long>(rs.positive_roots().size()), n * h / 2, "number of positive roots");
  return rb.finish();
}

IdentityReport check_eq2(const RootSystem& rs) {
  ReportBuilder rb("eq2", rs.id().name());
  const int h = rs.coxeter_number();
  rb.equal(rs.exponent_poly(), from_longs(rs.m()), "sum q^{e_i}", "sum m(k) q^k");
  rb.expect(multiplicities(rs) == rs.m(), "m(k) recomputed from the exponents differs");
  CycPoly roots = CycPoly::constant(CycNum(1));
  for (int e : rs.exponents()) roots = roots * CycPoly{-CycNum::zeta(h, e), CycNum(1)};
  rb.equal(roots, convert<CycNum>(coxeter_element(rs).charpoly), "prod (q - zeta^{e_i})", "charpoly of Coxeter element");
  return rb.finish();
}

IdentityReport check_eq3(const RootSystem& rs) {
  ReportBuilder rb("eq3", rs.id().name());
  const auto e = factor_exponents(rs);
  rb.expect(e == rs.e_of_d(), "e(d) recomputed by Moebius inversion differs");
  const auto product = factored_product(e);
  rb.equal(product, cyclotomic_product(rs), "prod (q^d-1)^{e(d)}", "prod Phi_d^{m(h/d)}");
  rb.equal(product, catalog_charpoly(rs.id()), "prod (q^d-1)^{e(d)}", "catalog formula");
  rb.equal(product, coxeter_element(rs).charpoly, "prod (q^d-1)^{e(d)}", "charpoly of Coxeter element");
  rb.note("C(q) = " + factorization_string(e));
  return rb.finish();
}

IdentityReport check_coxeter(const RootSystem& rs) {
  ReportBuilder rb("coxeter", rs.id().name());
  const int h = rs.coxeter_number(), n = rs.rank();
  const auto cox = coxeter_element(rs);
  const IntMatrix id = IntMatrix::Identity(n, n);
  IntMatrix power = id;
  for (int k = 1; k <= h; ++k) {
    power = power * cox.matrix;
    if (k < h && power == id) {
      rb.fail("Coxeter element has order " + std::to_string(k) + " < h");
      break;
    }
  }
  rb.expect(power == id, "C^h is not the identity");
  rb.equal(cox.charpoly.degree(), n, "degree of the characteristic polynomial");
  rb.equal(cox.charpoly, factored_product(rs.e_of_d()), "charpoly", "prod (q^d-1)^{e(d)}");
  rb.equal(cox.charpoly, catalog_charpoly(rs.id()), "charpoly", "catalog formula");
  return rb.finish();
}

IdentityReport check_eq5(const RootSystem& rs, long bfs_cap) {
  ReportBuilder rb("eq5", rs.id().name());
  const auto [by_roots, by_exponents] = weyl_length_gf_product(rs);
  rb.expect(by_roots.is_polynomial(), "product over positive roots is not a polynomial");
  rb.expect(by_exponents.is_polynomial(), "product over exponents is not a polynomial");
  rb.equal(by_roots, by_exponents, "prod over roots", "prod over exponents");
  if (!rb.ok()) return rb.finish();
  const auto poly = by_exponents.as_polynomial();
  const mpz_class order = weyl_group_order(rs);
  rb.equal(poly(Rat(1)), Rat(order), "value at q=1 vs |W|");
  if (order <= bfs_cap) {
    rb.equal(weyl_length_gf_bruteforce(rs, bfs_cap), poly, "BFS length generating function", "product form");
    rb.note("BFS over " + order.get_str() + " elements");
  } else {
    rb.note("|W| = " + order.get_str() + " exceeds BFS cap " + std::to_string(bfs_cap) + "; products only");
  }
  return rb.finish();
}

IdentityReport check_eq12(const RootSystem& rs) {
  ReportBuilder rb("eq12", rs.id().name());
  const int h = rs.coxeter_number();
  for (int k = 0; k < h; ++k) {
    long s = 0;
    for (int d : divisors(static_cast<int>(gcd(k, h)))) s += rs.e(h / d);
    rb.equal(rs.m()[static_cast<std::size_t>(k)], s, at("m(k) vs sum_{d|(k,h)} e(h/d)", k));
  }
  const auto cohen = is_cohen(ArithSeq::from_integers(rs.m()));
  rb.expect(cohen.cohen, "m is not a Cohen function (k=" + std::to_string(cohen.witness.value_or(-1)) + ")");
  return rb.finish();
}

IdentityReport check_eq13(const RootSystem& rs) {
  ReportBuilder rb("eq13", rs.id().name());
  const int h = rs.coxeter_number();
  const auto& m = rs.m();
  const auto& p = rs.p();
  rb.expect(power_sums(rs) == p, "p(k) recomputed differs");
  for (int k = 0; k < h; ++k) {
    long by_divisors = 0, dft = 0;
    for (int d : divisors(static_cast<int>(gcd(k, h)))) by_divisors += d * rs.e(d);
    for (int d : divisors(h)) dft += m[static_cast<std::size_t>(h / d % h)] * ramanujan_sum(d, k);
    rb.equal(p[static_cast<std::size_t>(k)], by_divisors, at("p(k) vs sum_{d|(k,h)} d e(d)", k));
    rb.equal(p[static_cast<std::size_t>(k)], dft, at("p(k) vs sum_{d|h} m(h/d) c_d(k)", k));
    CycNum direct(0);
    for (int j = 0; j < h; ++j) direct += CycNum(m[static_cast<std::size_t>(j)]) * CycNum::zeta(h, static_cast<long>(j) * k);
    rb.equal(direct, CycNum(p[static_cast<std::size_t>(k)]), at("sum_j m(j) zeta^{jk}", k));
    Rat inverse(0);
    for (int d : divisors(h)) inverse += Rat(p[static_cast<std::size_t>(h / d % h)] * ramanujan_sum(d, k));
    rb.equal(inverse / Rat(h), Rat(m[static_cast<std::size_t>(k)]), at("(1/h) sum_{d|h} p(h/d) c_d(k) vs m(k)", k));
  }
  const auto cohen = is_cohen(ArithSeq::from_integers(p));
  rb.expect(cohen.cohen, "p is not a Cohen function (k=" + std::to_string(cohen.witness.value_or(-1)) + ")");
  return rb.finish();
}

IdentityReport check_prop1(const RootSystem& rs) {
  ReportBuilder rb("prop1", rs.id().name());
  const int h = rs.coxeter_number(), n = rs.rank();
  const auto cox = coxeter_element(rs);
  std::vector<long> traces;
  IntMatrix power = IntMatrix::Identity(n, n);
  for (int t = 0; t < h; ++t) {
    traces.push_back(power.trace());
    power = power * cox.matrix;
  }
  for (int k = 0; k < h; ++k) {
    CycNum s(0);
    for (int t = 0; t < h; ++t) s += CycNum(traces[static_cast<std::size_t>(t)]) * CycNum::zeta(h, -static_cast<long>(k) * t);
    s /= CycNum(h);
    rb.equal(s, CycNum(rs.m()[static_cast<std::size_t>(k)]), at("(chi_k induced, chi) vs m(k)", k));
  }
  rb.equal(rs.m()[0], 0L, "m(0)");
  long partial = 0;
  for (int k = 1; k <= h; ++k) {
    partial += rs.m()[static_cast<std::size_t>(k - 1)];
    rb.equal(rs.b(k), n - partial, at("b_k vs n - sum_{j<k} m(j)", k));
  }
  return rb.finish();
}

IdentityReport check_prop2(const RootSystem& rs) {
  ReportBuilder rb("prop2", rs.id().name());
  const int h = rs.coxeter_number();
  const auto c = coxeter_element(rs).charpoly;
  auto m_of = [&](int d) { return Rat(rs.m()[static_cast<std::size_t>(h / d % h)]); };
  const auto divs = divisors(h);

  RatFn log_derivative(derivative(c), c);
  RatFn by_e, by_phi, by_mobius, by_ramanujan, by_psi;
  for (int d : divs) {
    const Rat e(rs.e(d));
    if (!e.is_zero()) by_e += RatFn(qpow(d - 1) * (e * Rat(d)), Polynomial<Rat>::x_pow_minus_one(d));
    const Rat md = m_of(d);
    if (md.is_zero()) continue;
    const auto& phi = cyclotomic_poly(d);
    by_phi += RatFn(derivative(phi) * md, phi);
    for (int dp : divisors(d))
      if (const int mu = mobius(d / dp))
        by_mobius += RatFn(qpow(dp - 1) * (md * Rat(mu * dp)), Polynomial<Rat>::x_pow_minus_one(dp));
    std::vector<Rat> rc;
    for (int j = 1; j <= d; ++j) rc.emplace_back(ramanujan_sum(d, j, RamanujanMethod::divisor_sum));
    by_ramanujan += RatFn(Polynomial<Rat>(std::move(rc)) * md, Polynomial<Rat>::x_pow_minus_one(d));
    RatFn inner;
    for (int dp : divisors(d))
      if (const int mu = mobius(dp))
        inner += RatFn(detail::psi_inflated(dp, d / dp) * Rat(mu, totient(dp)), qpow(1));
    by_psi += inner * RatFn(Polynomial<Rat>::constant(md * Rat(totient(d))), Polynomial<Rat>::x_pow_minus_one(d));
  }
  rb.chain<Rat>({{"C'/C", log_derivative},
                 {"sum e(d) d q^{d-1}/(q^d-1)", by_e},
                 {"sum m(h/d) Phi_d'/Phi_d", by_phi},
                 {"sum m(h/d) sum mu(d/d') d' q^{d'-1}/(q^{d'}-1)", by_mobius},
                 {"sum m(h/d) sum c_d(j) q^{j-1}/(q^d-1)", by_ramanujan},
                 {"sum m(h/d) phi(d)/(q^d-1) sum mu(d')/phi(d') Psi_{d'}(q^{d/d'})/q", by_psi}});
  CycFn by_roots;
  for (int k = 0; k < h; ++k)
    if (const long mk = rs.m()[static_cast<std::size_t>(k)])
      by_roots += CycFn(CycPoly::constant(CycNum(mk)), CycPoly{-CycNum::zeta(h, k), CycNum(1)});
  rb.equal(by_roots, convert<CycNum>(log_derivative), "sum m(k)/(q - zeta^k)", "C'/C");
  return rb.finish();
}

IdentityReport check_prop8(const RootSystem& rs) {
  ReportBuilder rb("prop8", rs.id().name());
  const int h = rs.coxeter_number();
  const long n = rs.rank();
  long partial = 0;
  for (int k = 1; k < h; ++k) {
    partial += rs.m()[static_cast<std::size_t>(k - 1)];
    long by_counts = 0;
    for (int d : divisors(h)) by_counts += gcd_count(d, h, Rat(k - 1)) * rs.e(h / d);
    rb.equal(rs.b(k), n - partial, at("b_k vs n - sum_{i<k} m(i)", k));
    rb.equal(rs.b(k), n - by_counts, at("b_k vs n - sum a_{d,h}(k-1) e(h/d)", k));
  }
  long e_sum = 0, de_sum = 0;
  for (const auto& [d, e] : rs.e_of_d()) {
    e_sum += e;
    de_sum += d * e;
  }
  rb.equal(e_sum, 0L, "m(0) = sum e(d)");
  rb.equal(de_sum, n, "p(0) = sum d e(d)");
  return rb.finish();
}

IdentityReport check_eq19(const RootSystem& rs) {
  ReportBuilder rb("eq19", rs.id().name());
  if (!rs.id().simply_laced()) {
    rb.note("not applicable: " + rs.id().name() + " is not of type A, D or E");
    return rb.finish();
  }
  const SingularityData s = singularity_data(rs);
  const int h = rs.coxeter_number();
  const long n = rs.rank();
  rb.equal(s.candidates, 1, "number of admissible weight triples");
  rb.equal(s.a + s.b + s.c, Rat(h + 1), "a + b + c vs h + 1");
  rb.equal(s.c, Rat(h, 2), "c vs h/2");
  rb.equal(Rat(2) * s.a * s.b, Rat(s.g), "2ab vs g");

  // the singularity form in t with q = t^2, so that q^a = t^{2a}.
  const int A = (s.a * Rat(2)).to_long(), B = (s.b * Rat(2)).to_long();
  const Polynomial<Rat> t2_minus_one = Polynomial<Rat>::x_pow_minus_one(2);
  RatFn frac(qpow(2) * Polynomial<Rat>::x_pow_minus_one(2 * h - A) * Polynomial<Rat>::x_pow_minus_one(2 * h - B),
             Polynomial<Rat>::x_pow_minus_one(A) * Polynomial<Rat>::x_pow_minus_one(B));
  const RatFn rhs = (frac - RatFn(Rat(n))) * RatFn(Polynomial<Rat>::constant(Rat(1)), t2_minus_one);
  rb.equal(rhs, RatFn(inflate(b_poly(rs), 2)), "singularity form in t", "B(t^2)");

  const long disc = static_cast<long>(h + 2) * (h + 2) - 8 * s.g;
  const long root = disc >= 0 ? mpz_class(sqrt(mpz_class(disc))).get_si() : -1;
  if (rb.expect(root >= 0 && root * root == disc, "(h+2)^2 - 8g = " + std::to_string(disc) + " is not a square")) {
    rb.equal(Rat(h + 2 - root, 4), s.a, "(h+2-sqrt((h+2)^2-8g))/4 vs a");
    rb.equal(Rat(h + 2 + root, 4), s.b, "(h+2+sqrt((h+2)^2-8g))/4 vs b");
  }
  if (s.branch_lengths) {
    const auto& br = *s.branch_lengths;
    rb.equal(Rat(h) / (s.a * s.b * s.c), Rat(s.cartan_det, static_cast<long>(br[0]) * br[1] * br[2]),
             "h/(abc) vs det(Cartan)/(alpha beta gamma)");
  } else {
    rb.note("v relation not checked: branch lengths undefined for even-rank A");
  }
  std::ostringstream os;
  os << "(a,b,c) = (" << s.a << "," << s.b << "," << s.c << "), g = " << s.g;
  rb.note(os.str());
  return rb.finish();
}

IdentityReport check_eq20(const RootSystem& rs) {
  ReportBuilder rb("eq20", rs.id().name());
  const int h = rs.coxeter_number();
  const long n = rs.rank();
  const auto B = RatFn(b_poly(rs));
  const auto D = dynkin_poly(rs), M = antichain_poly(rs);
  const RatFn n_over = RatFn(Polynomial<Rat>::constant(Rat(n)), Polynomial<Rat>::x_pow_minus_one(1));
  rb.equal(RatFn(qpow(1) * D, Polynomial<Rat>::x_pow_minus_one(h)) - n_over, B, "qD/(q^h-1) - n/(q-1)", "B(q)");
  rb.equal(RatFn(qpow(1) * M, Polynomial<Rat>::x_pow_minus_one(h - 1)) - n_over, B, "qM/(q^{h-1}-1) - n/(q-1)",
           "B(q)");
  rb.equal(D(Rat(1)), Rat(n * h), "D(1) vs nh");
  rb.equal(M(Rat(1)), Rat(n * (h - 1)), "M(1) vs n(h-1)");
  rb.equal(D.degree(), 2 * h - 3, "deg D");
  return rb.finish();
}

IdentityReport check_mirimanoff(const RootSystem& rs, int max_m) {
  ReportBuilder rb("mirimanoff", rs.id().name());
  const auto qB = shift(b_poly(rs), 1);
  for (int m = 0; m <= max_m; ++m) {
    const auto lhs = euler_operator(qB, m);
    std::vector<Rat> c{Rat(0)};
    for (int k = 1; k < rs.coxeter_number(); ++k) c.push_back(Rat(rs.b(k)) * pow(Rat(k), m));
    Polynomial<Rat> t;
    for (int e : rs.exponents()) t += mirimanoff_poly(e, m);
    const std::string ms = "m=" + std::to_string(m);
    rb.equal(lhs, Polynomial<Rat>(std::move(c)), "(q d/dq)^m qB, " + ms, "sum b_k k^m q^k");
    rb.equal(lhs, t, "(q d/dq)^m qB, " + ms, "sum T_{e_i,m}");
  }
  return rb.finish();
}

}  // namespace rootheight
