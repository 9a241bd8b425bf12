#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rootheight/identities.hpp"

namespace rootheight::detail {

/// Accumulates comparisons for one report; the first mismatch becomes the
/// witness and later comparisons are still evaluated but not recorded.
class ReportBuilder {
 public:
  ReportBuilder(std::string id, std::string system) {
    r_.identity_id = std::move(id);
    r_.system = std::move(system);
  }

  bool expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
    return ok;
  }

  template <class T>
  bool equal(const T& got, const T& want, const std::string& what) {
    if (got == want) return true;
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    fail(os.str());
    return false;
  }

  template <class K>
  bool equal(const Polynomial<K>& a, const Polynomial<K>& b, const std::string& la, const std::string& lb) {
    const int i = first_difference(a, b);
    if (i < 0) return true;
    std::ostringstream os;
    os << la << " != " << lb << ": coefficient of q^" << i << " is " << a.coeff(i) << " vs " << b.coeff(i);
    fail(os.str());
    return false;
  }

  template <class K>
  bool equal(const RationalFunction<K>& a, const RationalFunction<K>& b, const std::string& la,
             const std::string& lb) {
    if (a == b) return true;
    std::ostringstream os;
    os << la << " != " << lb << ": cross-multiplied numerators first differ at q^" << first_difference(a, b);
    fail(os.str());
    return false;
  }

  /// Every member of the chain must equal the first.
  template <class K>
  bool chain(const std::vector<std::pair<std::string, RationalFunction<K>>>& forms) {
    bool ok = true;
    for (std::size_t i = 1; i < forms.size(); ++i)
      ok = equal(forms[i].second, forms[0].second, forms[i].first, forms[0].first) && ok;
    return ok;
  }

  void fail(const std::string& what) {
    if (r_.verdict == Verdict::pass) {
      r_.verdict = Verdict::fail;
      r_.witness = what;
    }
  }

  void note(const std::string& text) {
    if (!r_.note.empty()) r_.note += "; ";
    r_.note += text;
  }

  bool ok() const { return r_.verdict == Verdict::pass; }
  IdentityReport finish() { return std::move(r_); }

 private:
  IdentityReport r_;
};

using RatFn = RationalFunction<Rat>;
using CycFn = RationalFunction<CycNum>;

inline Polynomial<Rat> qpow(int k) { return Polynomial<Rat>::monomial(Rat(1), k); }
/// 1 - q^d.
inline Polynomial<Rat> one_minus_qpow(int d) { return -Polynomial<Rat>::x_pow_minus_one(d); }
inline Polynomial<Rat> constant(const Rat& c) { return Polynomial<Rat>::constant(c); }
inline RatFn over_one_minus_qpow(const Polynomial<Rat>& num, int d) { return RatFn(num, one_minus_qpow(d)); }

/// sum_{k=0}^{d-1} c_d(k) q^k.
Polynomial<Rat> ramanujan_poly(int d);
/// Psi_d(q^s).
Polynomial<Rat> psi_inflated(int d, int s);
std::string h_label(int h);

}  // namespace rootheight::detail
