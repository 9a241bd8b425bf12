#include "rootheight/munagi.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "rootheight/errors.hpp"
#include "rootheight/numth.hpp"

namespace rootheight {

namespace {

// (1-q^h)/(1-q^d) = 1 + q^d + ... + q^{h-d}
Polynomial<Rat> period_quotient(int h, int d) {
  return inflate(Polynomial<Rat>::geometric(h / d), d);
}

Matrix<Rat> munagi_matrix(int h, const std::vector<int>& divs) {
  Matrix<Rat> m = Matrix<Rat>::Zero(h, h);
  int col = 0;
  for (int d : divs) {
    for (int i = 0; i < totient(d); ++i, ++col)
      for (int j = 0; j < h / d; ++j) m(i + j * d, col) = Rat(1);
  }
  return m;
}

}  // namespace

const Polynomial<Rat>& MunagiDecomposition::part(int d) const {
  static const Polynomial<Rat> zero;
  auto it = parts.find(d);
  return it == parts.end() ? zero : it->second;
}

Polynomial<Rat> MunagiDecomposition::reconstruct() const {
  Polynomial<Rat> out;
  for (const auto& [d, hd] : parts) out += hd * period_quotient(h, d);
  return out;
}

bool MunagiDecomposition::all_constant() const {
  for (const auto& [d, hd] : parts)
    if (hd.degree() > 0) return false;
  return true;
}

MunagiSystem::MunagiSystem(int h)
    : h_(h), divisors_(divisors(h)), lu_(munagi_matrix(h, divisors_)) {
  if (!lu_.invertible())
    throw SingularSystem("Munagi system for h = " + std::to_string(h) + " is singular");
  int off = 0;
  for (int d : divisors_) {
    offsets_.push_back(off);
    off += totient(d);
  }
}

MunagiDecomposition MunagiSystem::decompose(const Polynomial<Rat>& numer) const {
  if (numer.degree() >= h_)
    throw DegreeTooHigh("numerator degree " + std::to_string(numer.degree()) +
                        " is not below h = " + std::to_string(h_));
  Vector<Rat> rhs(h_);
  for (int i = 0; i < h_; ++i) rhs(i) = numer.coeff(i);
  const Vector<Rat> x = lu_.solve(rhs);
  MunagiDecomposition out;
  out.h = h_;
  for (std::size_t k = 0; k < divisors_.size(); ++k) {
    const int d = divisors_[k];
    std::vector<Rat> c(static_cast<std::size_t>(totient(d)));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x(offsets_[k] + static_cast<int>(i));
    out.parts.emplace(d, Polynomial<Rat>(std::move(c)));
  }
  if (!(out.reconstruct() == numer))
    throw ReconstructionMismatch("Munagi decomposition does not reproduce its numerator");
  return out;
}

const MunagiSystem& munagi_system(int h) {
  if (h < 1) throw std::invalid_argument("Munagi period must be positive");
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<const MunagiSystem>> table;
  {
    std::shared_lock lock(mutex);
    auto it = table.find(h);
    if (it != table.end()) return *it->second;
  }
  auto sys = std::make_unique<const MunagiSystem>(h);
  std::unique_lock lock(mutex);
  auto [it, inserted] = table.try_emplace(h, std::move(sys));
  return *it->second;
}

MunagiDecomposition munagi_decompose(const Polynomial<Rat>& numer, int h) {
  return munagi_system(h).decompose(numer);
}

}  // namespace rootheight
