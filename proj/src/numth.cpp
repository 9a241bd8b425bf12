#include "rootheight/numth.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "rootheight/cycnum.hpp"
#include "rootheight/errors.hpp"

namespace rootheight {

ArithSeq::ArithSeq(int period, std::vector<Rat> vals) : h(period), values(std::move(vals)) {
  if (h < 1) throw std::invalid_argument("sequence period must be positive");
  if (values.size() != static_cast<std::size_t>(h))
    throw std::invalid_argument("sequence length " + std::to_string(values.size()) +
                                " does not match period " + std::to_string(h));
}

const Rat& ArithSeq::operator()(long k) const {
  long r = k % h;
  if (r < 0) r += h;
  return values[static_cast<std::size_t>(r)];
}

long gcd(long a, long b) { return std::gcd(a, b); }

std::vector<int> divisors(int n) {
  if (n < 1) throw std::invalid_argument("divisors of a non-positive integer");
  std::vector<int> small, large;
  for (int d = 1; static_cast<long>(d) * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<int, int>> factorize(int n) {
  if (n < 1) throw std::invalid_argument("factorisation of a non-positive integer");
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

int mobius(int n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

int totient(int n) {
  int phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_prime(int n) { return n >= 2 && factorize(n).size() == 1 && factorize(n)[0].second == 1; }

std::vector<int> coprime_residues(int h) {
  if (h < 1) throw std::invalid_argument("modulus must be positive");
  if (h == 1) return {1};
  std::vector<int> out;
  for (int k = 1; k < h; ++k)
    if (std::gcd(k, h) == 1) out.push_back(k);
  return out;
}

long ramanujan_sum(int h, long j, RamanujanMethod method) {
  if (h < 1) throw std::invalid_argument("ramanujan_sum: h must be positive");
  const int g = static_cast<int>(std::gcd(j, static_cast<long>(h)));  // gcd(0, h) = h
  switch (method) {
    case RamanujanMethod::exp_sum: {
      std::vector<Rat> powers(static_cast<std::size_t>(h), Rat(0));
      for (int k : coprime_residues(h)) powers[static_cast<std::size_t>(j * k % h)] += Rat(1);
      return CycNum::from_powers(h, powers).rational_value().to_long();
    }
    case RamanujanMethod::divisor_sum: {
      long s = 0;
      for (int d : divisors(g)) s += static_cast<long>(d) * mobius(h / d);
      return s;
    }
    case RamanujanMethod::closed_form: {
      const int r = h / g;
      return static_cast<long>(totient(h)) * mobius(r) / totient(r);
    }
  }
  throw std::invalid_argument("unknown Ramanujan method");
}

long ramanujan_sum(int h, long j) {
  const long a = ramanujan_sum(h, j, RamanujanMethod::exp_sum);
  const long b = ramanujan_sum(h, j, RamanujanMethod::divisor_sum);
  const long c = ramanujan_sum(h, j, RamanujanMethod::closed_form);
  if (a != b || b != c)
    throw MethodMismatch("c_" + std::to_string(h) + "(" + std::to_string(j) + "): exp_sum=" +
                         std::to_string(a) + " divisor_sum=" + std::to_string(b) +
                         " closed_form=" + std::to_string(c));
  return a;
}

namespace {

struct CyclotomicMemo {
  std::shared_mutex mutex;
  std::map<int, std::unique_ptr<const Polynomial<Rat>>> table;
};

CyclotomicMemo& memo() {
  static CyclotomicMemo m;
  return m;
}

Polynomial<Rat> cyclotomic_by_mobius(int h) {
  Polynomial<Rat> num = Polynomial<Rat>::constant(Rat(1));
  Polynomial<Rat> den = Polynomial<Rat>::constant(Rat(1));
  for (int d : divisors(h)) {
    const int mu = mobius(h / d);
    if (mu == 1) num *= Polynomial<Rat>::x_pow_minus_one(d);
    if (mu == -1) den *= Polynomial<Rat>::x_pow_minus_one(d);
  }
  return divexact(num, den);
}

}  // namespace

const Polynomial<Rat>& cyclotomic_poly(int h) {
  if (h < 1) throw std::invalid_argument("cyclotomic_poly: h must be positive");
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    auto it = m.table.find(h);
    if (it != m.table.end()) return *it->second;
  }
  auto value = std::make_unique<const Polynomial<Rat>>(cyclotomic_by_mobius(h));
  std::unique_lock lock(m.mutex);
  auto [it, inserted] = m.table.try_emplace(h, std::move(value));
  return *it->second;
}

Polynomial<Rat> psi_poly(int h) {
  if (h < 1) throw std::invalid_argument("psi_poly: h must be positive");
  std::vector<Rat> c(static_cast<std::size_t>(h) + 1, Rat(0));
  for (int k : coprime_residues(h)) c[static_cast<std::size_t>(k)] = Rat(1);
  return Polynomial<Rat>(std::move(c));
}

long gcd_count(int d, int h, const Rat& x) {
  if (d < 1 || h < 1) throw std::invalid_argument("gcd_count: d and h must be positive");
  if (h % d != 0 || x.sign() <= 0) return 0;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
  return static_cast<long>(fl.get_si()) / d;
}

CohenResult is_cohen(const ArithSeq& seq) {
  for (int k = 1; k < seq.h; ++k) {
    const int g = std::gcd(k, seq.h);
    if (!(seq(k) == seq(g))) return {false, k};
  }
  return {true, std::nullopt};
}

Rat cyclotomic_discriminant(int h) {
  if (h < 3) throw UnsupportedOrder("cyclotomic_discriminant requires h >= 3");
  const int phi = totient(h);
  Rat value = pow(Rat(h), phi);
  for (int p : prime_divisors(h)) value /= pow(Rat(p), phi / (p - 1));
  if ((phi / 2) % 2 == 1) value = -value;
  return value;
}

}  // namespace rootheight
