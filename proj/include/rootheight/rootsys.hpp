#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rootheight/linalg.hpp"
#include "rootheight/polynomial.hpp"
#include "rootheight/rational_function.hpp"

namespace rootheight {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(const std::string& s);

/// Cartan type: family letter and rank, validated on construction.
class RootSystemId {
 public:
  /// Throws InvalidRank for A0, B1, D2, E5, F3, ...
  RootSystemId(Family family, int rank);
  /// "G2", "E8", "A10".
  static RootSystemId parse(const std::string& name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;
  bool simply_laced() const;

  friend auto operator<=>(const RootSystemId&, const RootSystemId&) = default;

 private:
  Family family_;
  int rank_;
};

/// Largest rank accepted by the CLI front end.
inline constexpr int kMaxRank = 500;

/// A1-A10, B2-B8, C2-C8, D4-D8, E6, E7, E8, F4, G2.
std::vector<RootSystemId> default_catalog();

/// cartan(i, j) = <alpha_i^vee, alpha_j>. B_n has the short simple root
/// last, C_n the long one last, D_n forks at the end, E_n follows Bourbaki
/// numbering (node 2 hangs off node 4).
IntMatrix cartan_matrix(const RootSystemId& id);

using RootVector = std::vector<int>;  // coordinates in the simple-root basis

/// Positive roots, heights and all arithmetic data derived from them.
class RootSystem {
 public:
  const RootSystemId& id() const { return id_; }
  int rank() const { return id_.rank(); }
  const IntMatrix& cartan() const { return cartan_; }
  /// Ordered by height, then lexicographically.
  const std::vector<RootVector>& positive_roots() const { return roots_; }

  int coxeter_number() const { return h_; }
  /// e_1 <= ... <= e_n.
  const std::vector<int>& exponents() const { return exponents_; }
  /// b_k for k >= 1 (0 beyond the maximal height).
  long b(int k) const;
  /// b_1, ..., b_{h-1}.
  const std::vector<long>& height_counts() const { return b_; }
  /// m(0), ..., m(h-1).
  const std::vector<long>& m() const { return m_; }
  /// e(d) for every d | h.
  const std::map<int, long>& e_of_d() const { return e_; }
  /// e(d), 0 if d does not divide h.
  long e(int d) const;
  /// p(0), ..., p(h-1).
  const std::vector<long>& p() const { return p_; }

  /// E(q) = sum q^{e_i}.
  Polynomial<Rat> exponent_poly() const;

 private:
  friend RootSystem build(const RootSystemId& id);
  explicit RootSystem(RootSystemId id) : id_(id) {}

  RootSystemId id_;
  IntMatrix cartan_;
  std::vector<RootVector> roots_;
  int h_ = 0;
  std::vector<int> exponents_;
  std::vector<long> b_;
  std::vector<long> m_;
  std::map<int, long> e_;
  std::vector<long> p_;
};

/// Positive roots by height-wise closure from the simple roots, then the
/// exponents as the partition conjugate to (b_1 >= b_2 >= ...).
RootSystem build(const RootSystemId& id);

int height(const RootVector& root);
/// Pairing <alpha_i^vee, v> = sum_j v_j cartan(i, j).
long coroot_pairing(const IntMatrix& cartan, int i, const RootVector& v);

/// m(k) = #{i : e_i = k}, k = 0..h-1.
std::vector<long> multiplicities(const RootSystem& rs);

/// e(d) by Moebius inversion over the divisor lattice; checked by
/// reconstructing prod (q^d-1)^{e(d)} = prod Phi_d^{m(h/d)}.
std::map<int, long> factor_exponents(const RootSystem& rs);

/// prod_{d|h} (q^d - 1)^{e(d)} expanded.
Polynomial<Rat> factored_product(const std::map<int, long>& e_of_d);
/// prod_{d|h} Phi_d(q)^{m(h/d)}.
Polynomial<Rat> cyclotomic_product(const RootSystem& rs);

/// p(k) = sum_{d|(k,h)} d e(d), cross-checked against sum_i zeta^{e_i k}
/// and sum_{d|h} m(h/d) c_d(k); throws MethodMismatch on disagreement.
std::vector<long> power_sums(const RootSystem& rs);

/// Matrix of the simple reflection s_i on simple-root coordinates.
IntMatrix simple_reflection(const IntMatrix& cartan, int i);

struct CoxeterElement {
  IntMatrix matrix;
  Polynomial<Rat> charpoly;
};

/// s_1 s_2 ... s_n with its exact characteristic polynomial.
CoxeterElement coxeter_element(const RootSystem& rs);

/// |W| = prod (e_i + 1).
mpz_class weyl_group_order(const RootSystem& rs);

inline constexpr long kDefaultBfsCap = 1152;

/// sum_{w in W} q^{l(w)} by breadth-first search of the Cayley graph on the
/// simple reflections. Throws GroupTooLarge when |W| > cap.
Polynomial<Rat> weyl_length_gf_bruteforce(const RootSystem& rs, long cap = kDefaultBfsCap);

/// (prod over positive roots of (1-q^{ht+1})/(1-q^{ht}),
///  prod over exponents of (1-q^{e_i+1})/(1-q)).
std::pair<RationalFunction<Rat>, RationalFunction<Rat>> weyl_length_gf_product(const RootSystem& rs);

}  // namespace rootheight
