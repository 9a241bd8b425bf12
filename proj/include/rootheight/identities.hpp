#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootheight/munagi.hpp"
#include "rootheight/numth.hpp"
#include "rootheight/polynomial.hpp"
#include "rootheight/rational_function.hpp"
#include "rootheight/rootsys.hpp"

namespace rootheight {

enum class Verdict { pass, fail };

/// Outcome of one identity check on one root system (or one period h).
struct IdentityReport {
  std::string identity_id;
  std::string system;
  Verdict verdict = Verdict::pass;
  std::optional<std::string> witness;  ///< first mismatch; present iff fail
  std::string note;

  bool passed() const { return verdict == Verdict::pass; }
};

// B(q) = sum over positive roots of q^{ht-1}, by three routes.
Polynomial<Rat> b_from_heights(const RootSystem& rs);
Polynomial<Rat> b_from_exponents(const RootSystem& rs);
/// (E(q) - n)/(q - 1).
Polynomial<Rat> b_from_exponent_poly(const RootSystem& rs);
/// All three routes; throws MethodMismatch if they disagree.
Polynomial<Rat> b_poly(const RootSystem& rs);

/// D(q) = (1-q^h)/(1-q) sum_i q^{e_i-1}.
Polynomial<Rat> dynkin_poly(const RootSystem& rs);
/// M(q) = (1-q^{h-1})/(1-q) sum_i q^{e_i-1}.
Polynomial<Rat> antichain_poly(const RootSystem& rs);
/// T_{k,m}(q) = sum_{i=1}^k i^m q^i.
Polynomial<Rat> mirimanoff_poly(int k, int m);
/// (q d/dq)^m applied to p.
Polynomial<Rat> euler_operator(const Polynomial<Rat>& p, int m);

/// Characteristic polynomial of the Coxeter element as listed in the
/// catalog table, e.g. (q^6-1)(q-1)/((q^3-1)(q^2-1)) for G2.
Polynomial<Rat> catalog_charpoly(const RootSystemId& id);
/// "(q^6-1)(q-1)/((q^3-1)(q^2-1))" from the map d -> e(d).
std::string factorization_string(const std::map<int, long>& e_of_d);

/// Munagi parts of b_1 + b_2 q + ... + b_{h-1} q^{h-2} (the E_d) and of
/// q times it (the F_d).
MunagiDecomposition e_parts(const RootSystem& rs);
MunagiDecomposition f_parts(const RootSystem& rs);

/// Quasihomogeneity data of the simple singularity of an ADE type. The
/// weights a <= b <= c are half-integers; branch lengths and the v relation
/// are only defined for odd-rank A, D and E.
struct SingularityData {
  RootSystemId id;
  Rat a, b, c;
  long g = 0;  ///< order of the binary polyhedral group
  std::optional<std::array<int, 3>> branch_lengths;
  long cartan_det = 0;
  int candidates = 0;  ///< admissible triples found by the search
};

/// Binary polyhedral group orders: A_n n+1, D_n 4(n-2), E6 24, E7 48, E8 120.
long binary_polyhedral_order(const RootSystemId& id);
/// Searches a + b + c = h + 1, c = h/2 for the triple reproducing E(q).
/// Throws NoTripleFound when nothing fits, std::invalid_argument off ADE.
SingularityData singularity_data(const RootSystem& rs);

struct CheckOptions {
  long bfs_cap = kDefaultBfsCap;
};

/// Every check id, sorted.
const std::vector<std::string>& check_ids();
/// Whether a check makes sense for this system (eq19 only for ADE).
bool check_applies(const std::string& id, const RootSystem& rs);
/// Runs one check; exceptions become failing reports. Unknown ids throw
/// std::invalid_argument.
IdentityReport run_check(const std::string& id, const RootSystem& rs, const CheckOptions& opts = {});

IdentityReport check_eq1(const RootSystem& rs);
IdentityReport check_eq2(const RootSystem& rs);
IdentityReport check_eq3(const RootSystem& rs);
IdentityReport check_coxeter(const RootSystem& rs);
IdentityReport check_eq5(const RootSystem& rs, long bfs_cap = kDefaultBfsCap);
IdentityReport check_eq12(const RootSystem& rs);
IdentityReport check_eq13(const RootSystem& rs);
IdentityReport check_prop1(const RootSystem& rs);
IdentityReport check_prop2(const RootSystem& rs);
IdentityReport check_prop3(const RootSystem& rs);
IdentityReport check_prop4(const RootSystem& rs);
IdentityReport check_prop5(const RootSystem& rs);
IdentityReport check_prop6(int h);
IdentityReport check_prop7(const RootSystem& rs);
IdentityReport check_prop8(const RootSystem& rs);
IdentityReport check_prop9(const RootSystem& rs);
IdentityReport check_prop10(const RootSystem& rs);
IdentityReport check_prop11(const RootSystem& rs);
IdentityReport check_prop12(const RootSystem& rs);
IdentityReport check_prop13(const RootSystem& rs);
IdentityReport check_prop14(const RootSystem& rs);
IdentityReport check_prop15(int h);
IdentityReport check_prop16(const RootSystem& rs);
IdentityReport check_prop17(const RootSystem& rs);
IdentityReport check_prop18(const RootSystem& rs);
IdentityReport check_prop19(const RootSystem& rs);
IdentityReport check_eq19(const RootSystem& rs);
IdentityReport check_eq20(const RootSystem& rs);
IdentityReport check_mirimanoff(const RootSystem& rs, int max_m = 4);

/// The Cohen-function chain A(q)/(1-q^h) = (1/h) sum_{d|h} A(zeta^{h/d}) ...
/// for an arbitrary Cohen sequence; fails if a is not Cohen.
IdentityReport check_cohen_chain(const ArithSeq& a, const std::string& label);
/// The divisor-sum chain A(q)/(1-q^h) - a(0) = ... for a Cohen sequence.
IdentityReport check_divisor_chain(const ArithSeq& a, const std::string& label);

/// Variant with q^{hd'/d} outside the bracket;
/// kept to document that it does not reproduce B(q).
RationalFunction<Rat> prop10_printed_last_form(const RootSystem& rs);
RationalFunction<Rat> prop10_last_form(const RootSystem& rs);

/// Reports for several systems and checks, sorted by system then id; runs
/// on up to `jobs` threads.
std::vector<IdentityReport> run_suite(const std::vector<RootSystem>& systems,
                                      const std::vector<std::string>& ids,
                                      const CheckOptions& opts = {}, int jobs = 1);

}  // namespace rootheight
