#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rootheight/polynomial.hpp"
#include "rootheight/rat.hpp"

namespace rootheight {

/// Period-h sequence a(0), ..., a(h-1).
struct ArithSeq {
  int h = 1;
  std::vector<Rat> values;

  ArithSeq() = default;
  ArithSeq(int period, std::vector<Rat> vals);
  template <class I>
  static ArithSeq from_integers(const std::vector<I>& vals) {
    const int period = static_cast<int>(vals.size());
    return ArithSeq(period, std::vector<Rat>(vals.begin(), vals.end()));
  }

  /// a(k) for any integer k, using h-periodicity.
  const Rat& operator()(long k) const;
  Polynomial<Rat> as_polynomial() const { return Polynomial<Rat>(values); }
};

long gcd(long a, long b);

/// All positive divisors of n in ascending order.
std::vector<int> divisors(int n);
/// Distinct prime factors with multiplicities, ascending.
std::vector<std::pair<int, int>> factorize(int n);
std::vector<int> prime_divisors(int n);

int mobius(int n);
int totient(int n);
bool is_prime(int n);

/// The residues 1 <= k < h with gcd(k, h) = 1 (for h = 1: {1}).
std::vector<int> coprime_residues(int h);

enum class RamanujanMethod { exp_sum, divisor_sum, closed_form };

/// c_h(j) by the chosen route.
long ramanujan_sum(int h, long j, RamanujanMethod method);
/// c_h(j) computed by all three routes; throws MethodMismatch if they disagree.
long ramanujan_sum(int h, long j);

/// Phi_h(q) via the Moebius product over divisors. Memoised process-wide;
/// safe for concurrent callers.
const Polynomial<Rat>& cyclotomic_poly(int h);

/// Psi_h(q) = sum of q^k over 1 <= k <= h with gcd(k, h) = 1; Psi_1(q) = q.
Polynomial<Rat> psi_poly(int h);

/// #{ j : 1 <= j <= x, d | gcd(j, h) }.
long gcd_count(int d, int h, const Rat& x);

struct CohenResult {
  bool cohen = true;
  std::optional<int> witness;  ///< least k with a(k) != a(gcd(k, h))
  explicit operator bool() const { return cohen; }
};

/// Whether a(k) = a(gcd(k, h)) for every k.
CohenResult is_cohen(const ArithSeq& seq);

/// discr Phi_h from the closed form; h >= 3.
Rat cyclotomic_discriminant(int h);

}  // namespace rootheight
