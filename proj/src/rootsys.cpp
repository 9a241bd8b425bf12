#include "rootheight/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "rootheight/cycnum.hpp"
#include "rootheight/errors.hpp"
#include "rootheight/numth.hpp"

namespace rootheight {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw InvalidRank("unknown root system family '" + s + "'");
}

RootSystemId::RootSystemId(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw InvalidRank(std::string("no root system ") + family_letter(family) + std::to_string(rank));
}

RootSystemId RootSystemId::parse(const std::string& name) {
  if (name.size() < 2) throw InvalidRank("malformed root system name '" + name + "'");
  const std::string digits = name.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 9)
    throw InvalidRank("malformed root system name '" + name + "'");
  return RootSystemId(parse_family(name.substr(0, 1)), std::stoi(digits));
}

std::string RootSystemId::name() const { return family_letter(family_) + std::to_string(rank_); }

bool RootSystemId::simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::vector<RootSystemId> default_catalog() {
  std::vector<RootSystemId> out;
  for (int n = 1; n <= 10; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= 8; ++n) out.emplace_back(Family::B, n);
  for (int n = 2; n <= 8; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= 8; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

IntMatrix cartan_matrix(const RootSystemId& id) {
  const int n = id.rank();
  IntMatrix c = 2 * IntMatrix::Identity(n, n);
  auto link = [&](int i, int j) { c(i, j) = c(j, i) = -1; };
  switch (id.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c(2, 1) = -2;
      break;
    case Family::G:
      link(0, 1);
      c(0, 1) = -3;
      break;
  }
  return c;
}

int height(const RootVector& root) { return std::accumulate(root.begin(), root.end(), 0); }

long coroot_pairing(const IntMatrix& cartan, int i, const RootVector& v) {
  long s = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) s += v[j] * cartan(i, static_cast<Eigen::Index>(j));
  return s;
}

long RootSystem::b(int k) const {
  if (k < 1 || k > static_cast<int>(b_.size())) return 0;
  return b_[static_cast<std::size_t>(k - 1)];
}

long RootSystem::e(int d) const {
  auto it = e_.find(d);
  return it == e_.end() ? 0 : it->second;
}

Polynomial<Rat> RootSystem::exponent_poly() const {
  std::vector<Rat> c(static_cast<std::size_t>(h_), Rat(0));
  for (int e : exponents_) c[static_cast<std::size_t>(e)] += Rat(1);
  return Polynomial<Rat>(std::move(c));
}

namespace {

std::vector<RootVector> positive_root_closure(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::set<RootVector> seen;
  std::vector<RootVector> all;
  std::vector<RootVector> level;
  for (int i = 0; i < n; ++i) {
    RootVector v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    level.push_back(v);
    seen.insert(v);
  }
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::set<RootVector> next;
    for (const auto& alpha : level) {
      for (int i = 0; i < n; ++i) {
        // p = length of the alpha_i-string below alpha
        int p = 0;
        RootVector down = alpha;
        while (down[static_cast<std::size_t>(i)] > 0) {
          --down[static_cast<std::size_t>(i)];
          if (!seen.count(down)) break;
          ++p;
        }
        if (p - coroot_pairing(cartan, i, alpha) > 0) {
          RootVector up = alpha;
          ++up[static_cast<std::size_t>(i)];
          next.insert(std::move(up));
        }
      }
    }
    level.assign(next.begin(), next.end());
    seen.insert(level.begin(), level.end());
  }
  return all;
}

}  // namespace

RootSystem build(const RootSystemId& id) {
  RootSystem rs(id);
  rs.cartan_ = cartan_matrix(id);
  rs.roots_ = positive_root_closure(rs.cartan_);
  int max_height = 0;
  for (const auto& r : rs.roots_) max_height = std::max(max_height, height(r));
  rs.h_ = max_height + 1;
  rs.b_.assign(static_cast<std::size_t>(max_height), 0);
  for (const auto& r : rs.roots_) ++rs.b_[static_cast<std::size_t>(height(r) - 1)];
  for (int k = 1; k <= max_height; ++k) {
    const long here = rs.b(k), above = rs.b(k + 1);
    if (above > here) throw std::logic_error("height distribution is not a partition");
    for (long c = 0; c < here - above; ++c) rs.exponents_.push_back(k);
  }
  rs.m_ = multiplicities(rs);
  rs.e_ = factor_exponents(rs);
  rs.p_ = power_sums(rs);
  return rs;
}

std::vector<long> multiplicities(const RootSystem& rs) {
  const int h = rs.coxeter_number();
  std::vector<long> m(static_cast<std::size_t>(h), 0);
  for (int e : rs.exponents()) ++m[static_cast<std::size_t>(e % h)];
  return m;
}

Polynomial<Rat> factored_product(const std::map<int, long>& e_of_d) {
  Polynomial<Rat> num = Polynomial<Rat>::constant(Rat(1)), den = num;
  for (auto [d, e] : e_of_d) {
    if (e > 0) num *= pow(Polynomial<Rat>::x_pow_minus_one(d), static_cast<unsigned>(e));
    if (e < 0) den *= pow(Polynomial<Rat>::x_pow_minus_one(d), static_cast<unsigned>(-e));
  }
  return divexact(num, den);
}

Polynomial<Rat> cyclotomic_product(const RootSystem& rs) {
  const int h = rs.coxeter_number();
  Polynomial<Rat> out = Polynomial<Rat>::constant(Rat(1));
  for (int d : divisors(h)) {
    const long mult = rs.m()[static_cast<std::size_t>((h / d) % h)];
    if (mult) out *= pow(cyclotomic_poly(d), static_cast<unsigned>(mult));
  }
  return out;
}

std::map<int, long> factor_exponents(const RootSystem& rs) {
  const int h = rs.coxeter_number();
  const auto& m = rs.m();
  std::map<int, long> e;
  for (int d : divisors(h)) {
    long s = 0;
    for (int dd : divisors(h)) {
      if (dd % d) continue;
      s += mobius(dd / d) * m[static_cast<std::size_t>((h / dd) % h)];
    }
    e[d] = s;
  }
  if (!(factored_product(e) == cyclotomic_product(rs)))
    throw ReconstructionMismatch("prod (q^d-1)^e(d) differs from prod Phi_d^m(h/d) for " +
                                 rs.id().name());
  return e;
}

std::vector<long> power_sums(const RootSystem& rs) {
  const int h = rs.coxeter_number();
  const auto& m = rs.m();
  std::vector<long> p(static_cast<std::size_t>(h), 0);
  const Polynomial<Rat> E = rs.exponent_poly();
  for (int k = 0; k < h; ++k) {
    const int g = std::gcd(k, h);
    long via_e = 0;
    for (int d : divisors(g)) via_e += static_cast<long>(d) * rs.e(d);
    long via_dft = 0;
    for (int d : divisors(h))
      via_dft += m[static_cast<std::size_t>((h / d) % h)] *
                 ramanujan_sum(d, k, RamanujanMethod::divisor_sum);
    const CycNum z = cyc_eval(E, h, k);
    if (!z.is_rational() || !z.rational_value().is_integer() ||
        z.rational_value().to_long() != via_e || via_dft != via_e)
      throw MethodMismatch("p(" + std::to_string(k) + ") for " + rs.id().name() +
                           ": divisor sum " + std::to_string(via_e) + ", power sum " + z.str() +
                           ", DFT " + std::to_string(via_dft));
    p[static_cast<std::size_t>(k)] = via_e;
  }
  return p;
}

IntMatrix simple_reflection(const IntMatrix& cartan, int i) {
  const Eigen::Index n = cartan.rows();
  IntMatrix s = IntMatrix::Identity(n, n);
  s.row(i) -= cartan.row(i);
  return s;
}

CoxeterElement coxeter_element(const RootSystem& rs) {
  const Eigen::Index n = rs.rank();
  IntMatrix c = IntMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) c = c * simple_reflection(rs.cartan(), i);
  return {c, charpoly(c)};
}

mpz_class weyl_group_order(const RootSystem& rs) {
  mpz_class order = 1;
  for (int e : rs.exponents()) order *= e + 1;
  return order;
}

namespace {

struct MatrixHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (long x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 0x100000001b3ull;
    return h;
  }
};

std::vector<long> flatten(const IntMatrix& m) { return {m.data(), m.data() + m.size()}; }

}  // namespace

Polynomial<Rat> weyl_length_gf_bruteforce(const RootSystem& rs, long cap) {
  const mpz_class order = weyl_group_order(rs);
  if (order > cap)
    throw GroupTooLarge("|W(" + rs.id().name() + ")| = " + order.get_str() + " exceeds cap " +
                        std::to_string(cap));
  const Eigen::Index n = rs.rank();
  std::unordered_set<std::vector<long>, MatrixHash> seen;
  std::vector<IntMatrix> level{IntMatrix::Identity(n, n)};
  seen.insert(flatten(level.front()));
  std::vector<Rat> counts;
  while (!level.empty()) {
    counts.emplace_back(static_cast<long>(level.size()));
    std::vector<IntMatrix> next;
    for (const auto& w : level) {
      for (Eigen::Index i = 0; i < n; ++i) {
        // w * s_i differs from w by (w e_i) cartan.row(i)
        IntMatrix ws = w - w.col(i) * rs.cartan().row(i);
        if (seen.insert(flatten(ws)).second) next.push_back(std::move(ws));
      }
    }
    level = std::move(next);
  }
  return Polynomial<Rat>(std::move(counts));
}

std::pair<RationalFunction<Rat>, RationalFunction<Rat>> weyl_length_gf_product(const RootSystem& rs) {
  auto one_minus = [](int k) { return -Polynomial<Rat>::x_pow_minus_one(k); };
  Polynomial<Rat> num = Polynomial<Rat>::constant(Rat(1)), den = num;
  for (const auto& r : rs.positive_roots()) {
    num *= one_minus(height(r) + 1);
    den *= one_minus(height(r));
  }
  RationalFunction<Rat> by_roots(std::move(num), std::move(den));
  Polynomial<Rat> num2 = Polynomial<Rat>::constant(Rat(1));
  for (int e : rs.exponents()) num2 *= one_minus(e + 1);
  RationalFunction<Rat> by_exponents(std::move(num2),
                                     pow(one_minus(1), static_cast<unsigned>(rs.rank())));
  return {by_roots.normalized(), by_exponents.normalized()};
}

}  // namespace rootheight
