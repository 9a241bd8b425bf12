#pragma once

#include <map>

#include "rootheight/linalg.hpp"
#include "rootheight/polynomial.hpp"

namespace rootheight {

/// A(q)/(1-q^h) = sum_{d|h} H_d(q)/(1-q^d) with deg H_d < phi(d).
struct MunagiDecomposition {
  int h = 1;
  std::map<int, Polynomial<Rat>> parts;

  /// H_d, or zero when d does not divide h.
  const Polynomial<Rat>& part(int d) const;
  /// sum_d H_d(q) (1-q^h)/(1-q^d).
  Polynomial<Rat> reconstruct() const;
  bool all_constant() const;
};

/// The square system sum_d H_d (1-q^h)/(1-q^d) = A in the h unknown
/// coefficients of the H_d, factorised once so many numerators can share it.
class MunagiSystem {
 public:
  explicit MunagiSystem(int h);

  int period() const { return h_; }
  /// Throws DegreeTooHigh if deg numer >= h.
  MunagiDecomposition decompose(const Polynomial<Rat>& numer) const;

 private:
  int h_;
  std::vector<int> divisors_;
  std::vector<int> offsets_;
  ExactLU<Rat> lu_;
};

/// Shared, lazily built system for period h; safe for concurrent callers.
const MunagiSystem& munagi_system(int h);

MunagiDecomposition munagi_decompose(const Polynomial<Rat>& numer, int h);

}  // namespace rootheight
