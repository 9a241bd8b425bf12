#include "rootheight/identities.hpp"

#include <algorithm>
#include <sstream>

#include "report_builder.hpp"
#include "rootheight/errors.hpp"

namespace rootheight {

using detail::qpow;

namespace detail {

Polynomial<Rat> ramanujan_poly(int d) {
  std::vector<Rat> c;
  for (int k = 0; k < d; ++k) c.emplace_back(ramanujan_sum(d, k, RamanujanMethod::divisor_sum));
  return Polynomial<Rat>(std::move(c));
}

Polynomial<Rat> psi_inflated(int d, int s) { return inflate(psi_poly(d), s); }

std::string h_label(int h) { return "h=" + std::to_string(h); }

}  // namespace detail

Polynomial<Rat> b_from_heights(const RootSystem& rs) {
  std::vector<Rat> c;
  for (const auto& root : rs.positive_roots()) {
    const auto k = static_cast<std::size_t>(height(root) - 1);
    if (c.size() <= k) c.resize(k + 1, Rat(0));
    c[k] += Rat(1);
  }
  return Polynomial<Rat>(std::move(c));
}

Polynomial<Rat> b_from_exponents(const RootSystem& rs) {
  Polynomial<Rat> out;
  for (int e : rs.exponents()) out += Polynomial<Rat>::geometric(e);
  return out;
}

Polynomial<Rat> b_from_exponent_poly(const RootSystem& rs) {
  return divexact(rs.exponent_poly() - detail::constant(Rat(rs.rank())), Polynomial<Rat>{Rat(-1), Rat(1)});
}

Polynomial<Rat> b_poly(const RootSystem& rs) {
  Polynomial<Rat> a = b_from_heights(rs);
  if (!(a == b_from_exponents(rs)) || !(a == b_from_exponent_poly(rs)))
    throw MethodMismatch("B(q) of " + rs.id().name() + ": heights, exponents and (E(q)-n)/(q-1) disagree");
  return a;
}

namespace {

Polynomial<Rat> shifted_exponent_sum(const RootSystem& rs) {
  Polynomial<Rat> s;
  for (int e : rs.exponents()) s += qpow(e - 1);
  return s;
}

}  // namespace

Polynomial<Rat> dynkin_poly(const RootSystem& rs) {
  return Polynomial<Rat>::geometric(rs.coxeter_number()) * shifted_exponent_sum(rs);
}

Polynomial<Rat> antichain_poly(const RootSystem& rs) {
  return Polynomial<Rat>::geometric(rs.coxeter_number() - 1) * shifted_exponent_sum(rs);
}

Polynomial<Rat> mirimanoff_poly(int k, int m) {
  std::vector<Rat> c(static_cast<std::size_t>(k + 1), Rat(0));
  for (int i = 1; i <= k; ++i) c[static_cast<std::size_t>(i)] = pow(Rat(i), m);
  return Polynomial<Rat>(std::move(c));
}

Polynomial<Rat> euler_operator(const Polynomial<Rat>& p, int m) {
  std::vector<Rat> c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= pow(Rat(static_cast<long>(i)), m);
  return Polynomial<Rat>(std::move(c));
}

Polynomial<Rat> catalog_charpoly(const RootSystemId& id) {
  using P = Polynomial<Rat>;
  auto x = [](int d) { return P::x_pow_minus_one(d); };
  auto ratio = [](const P& num, const P& den) { return divexact(num, den); };
  const int n = id.rank();
  switch (id.family()) {
    case Family::A: return ratio(x(n + 1), x(1));
    case Family::B:
    case Family::C: return ratio(x(2 * n), x(n));
    case Family::D: return ratio(x(2 * n - 2) * x(2), x(n - 1) * x(1));
    case Family::E:
      if (n == 6) return ratio(x(12) * x(3) * x(2), x(6) * x(4) * x(1));
      if (n == 7) return ratio(x(18) * x(3) * x(2), x(9) * x(6) * x(1));
      return ratio(x(30) * x(5) * x(3) * x(2), x(15) * x(10) * x(6) * x(1));
    case Family::F: return ratio(x(12) * x(2), x(6) * x(4));
    case Family::G: return ratio(x(6) * x(1), x(3) * x(2));
  }
  throw InvalidRank("unknown family");
}

std::string factorization_string(const std::map<int, long>& e_of_d) {
  auto factors = [&](bool positive) {
    std::string s;
    int count = 0;
    for (auto it = e_of_d.rbegin(); it != e_of_d.rend(); ++it) {
      const long e = positive ? it->second : -it->second;
      if (e <= 0) continue;
      std::string f = it->first == 1 ? "(q-1)" : "(q^" + std::to_string(it->first) + "-1)";
      if (e > 1) f += "^" + std::to_string(e);
      s += f;
      ++count;
    }
    return std::pair{s, count};
  };
  auto [num, nn] = factors(true);
  auto [den, nd] = factors(false);
  if (nn == 0) num = "1";
  if (nd == 0) return num;
  return num + "/" + (nd > 1 ? "(" + den + ")" : den);
}

MunagiDecomposition e_parts(const RootSystem& rs) {
  std::vector<Rat> c;
  for (long b : rs.height_counts()) c.emplace_back(b);
  return munagi_decompose(Polynomial<Rat>(std::move(c)), rs.coxeter_number());
}

MunagiDecomposition f_parts(const RootSystem& rs) {
  std::vector<Rat> c{Rat(0)};
  for (long b : rs.height_counts()) c.emplace_back(b);
  return munagi_decompose(Polynomial<Rat>(std::move(c)), rs.coxeter_number());
}

long binary_polyhedral_order(const RootSystemId& id) {
  const int n = id.rank();
  switch (id.family()) {
    case Family::A: return n + 1;
    case Family::D: return 4L * (n - 2);
    case Family::E: return n == 6 ? 24 : n == 7 ? 48 : 120;
    default: throw std::invalid_argument(id.name() + " is not of type A, D or E");
  }
}

namespace {

std::optional<std::array<int, 3>> branch_lengths(const RootSystemId& id) {
  const int n = id.rank();
  switch (id.family()) {
    case Family::A:
      if (n % 2 == 1) return std::array<int, 3>{1, (n + 1) / 2, (n + 1) / 2};
      return std::nullopt;
    case Family::D: return std::array<int, 3>{2, 2, n - 2};
    case Family::E: return std::array<int, 3>{2, 3, n - 3};
    default: return std::nullopt;
  }
}

/// E(t^2) t^{2h} prod (t^X - 1) = prod (t^{2h} - t^X) for doubled weights X.
bool weights_reproduce_exponents(const Polynomial<Rat>& e_of_t2, int h, const std::array<int, 3>& doubled) {
  Polynomial<Rat> lhs = shift(e_of_t2, 2 * h);
  Polynomial<Rat> rhs = Polynomial<Rat>::constant(Rat(1));
  for (int x : doubled) {
    lhs = lhs * Polynomial<Rat>::x_pow_minus_one(x);
    rhs = rhs * (qpow(2 * h) - qpow(x));
  }
  return lhs == rhs;
}

}  // namespace

SingularityData singularity_data(const RootSystem& rs) {
  const RootSystemId& id = rs.id();
  if (!id.simply_laced()) throw std::invalid_argument(id.name() + " is not of type A, D or E");
  const int h = rs.coxeter_number();
  const Polynomial<Rat> e2 = inflate(rs.exponent_poly(), 2);
  SingularityData out{id, Rat(0), Rat(0), Rat(h, 2), binary_polyhedral_order(id), branch_lengths(id), 0, 0};
  // 2a + 2b = h + 2 once c = h/2 is fixed; a <= b <= c.
  for (int twice_a = 1; 2 * twice_a <= h + 2; ++twice_a) {
    const int twice_b = h + 2 - twice_a;
    if (twice_b > h) continue;
    if (!weights_reproduce_exponents(e2, h, {twice_a, twice_b, h})) continue;
    if (out.candidates++ == 0) {
      out.a = Rat(twice_a, 2);
      out.b = Rat(twice_b, 2);
    }
  }
  if (out.candidates == 0) throw NoTripleFound("no quasihomogeneity weights reproduce E(q) of " + id.name());
  out.cartan_det = determinant(to_exact<Rat>(rs.cartan())).numerator().get_si();
  return out;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v{"coxeter", "eq1", "eq12", "eq13", "eq19", "eq2", "eq20", "eq3", "eq5", "mirimanoff"};
    for (int i = 1; i <= 19; ++i) v.push_back("prop" + std::to_string(i));
    std::sort(v.begin(), v.end());
    return v;
  }();
  return ids;
}

bool check_applies(const std::string& id, const RootSystem& rs) {
  if (id == "eq19") return rs.id().simply_laced();
  return std::find(check_ids().begin(), check_ids().end(), id) != check_ids().end();
}

IdentityReport run_check(const std::string& id, const RootSystem& rs, const CheckOptions& opts) {
  using Fn = IdentityReport (*)(const RootSystem&);
  static const std::map<std::string, Fn> table{
      {"coxeter", check_coxeter}, {"eq1", check_eq1},       {"eq12", check_eq12},     {"eq13", check_eq13},
      {"eq19", check_eq19},       {"eq2", check_eq2},       {"eq20", check_eq20},     {"eq3", check_eq3},
      {"prop1", check_prop1},     {"prop2", check_prop2},   {"prop3", check_prop3},   {"prop4", check_prop4},
      {"prop5", check_prop5},     {"prop7", check_prop7},   {"prop8", check_prop8},   {"prop9", check_prop9},
      {"prop10", check_prop10},   {"prop11", check_prop11}, {"prop12", check_prop12}, {"prop13", check_prop13},
      {"prop14", check_prop14},   {"prop16", check_prop16}, {"prop17", check_prop17}, {"prop18", check_prop18},
      {"prop19", check_prop19},
  };
  if (!check_applies(id, rs) && id != "eq19") throw std::invalid_argument("unknown check id '" + id + "'");
  try {
    if (id == "eq5") return check_eq5(rs, opts.bfs_cap);
    if (id == "mirimanoff") return check_mirimanoff(rs);
    if (id == "prop6" || id == "prop15") {
      IdentityReport r = id == "prop6" ? check_prop6(rs.coxeter_number()) : check_prop15(rs.coxeter_number());
      r.note = detail::h_label(rs.coxeter_number()) + (r.note.empty() ? "" : "; " + r.note);
      r.system = rs.id().name();
      return r;
    }
    return table.at(id)(rs);
  } catch (const std::exception& e) {
    IdentityReport r;
    r.identity_id = id;
    r.system = rs.id().name();
    r.verdict = Verdict::fail;
    r.witness = std::string("exception: ") + e.what();
    return r;
  }
}

}  // namespace rootheight
