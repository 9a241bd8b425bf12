#include "rootheight/linalg.hpp"

namespace rootheight {

Polynomial<Rat> charpoly(const Matrix<Rat>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly of a non-square matrix");
  const Eigen::Index n = a.rows();
  Matrix<Rat> h = a;
  for (Eigen::Index m = 1; m + 1 < n; ++m) {
    Eigen::Index i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      h.row(i).swap(h.row(m));
      h.col(i).swap(h.col(m));
    }
    const Rat inv = Rat(1) / h(m, m - 1);
    for (Eigen::Index j = m + 1; j < n; ++j) {
      if (h(j, m - 1).is_zero()) continue;
      const Rat u = h(j, m - 1) * inv;
      for (Eigen::Index c = 0; c < n; ++c) h(j, c) -= u * h(m, c);
      for (Eigen::Index r = 0; r < n; ++r) h(r, m) += u * h(r, j);
    }
  }
  // p[k] = charpoly of the leading k x k block
  std::vector<Polynomial<Rat>> p(static_cast<std::size_t>(n) + 1);
  p[0] = Polynomial<Rat>::constant(Rat(1));
  const Polynomial<Rat> x = Polynomial<Rat>::monomial(Rat(1), 1);
  for (Eigen::Index k = 1; k <= n; ++k) {
    const Eigen::Index m = k - 1;
    Polynomial<Rat> pk = (x - Polynomial<Rat>::constant(h(m, m))) * p[static_cast<std::size_t>(m)];
    Rat t(1);
    for (Eigen::Index i = m - 1; i >= 0; --i) {
      t *= h(i + 1, i);
      if (t.is_zero()) break;
      pk -= p[static_cast<std::size_t>(i)] * (t * h(i, m));
    }
    p[static_cast<std::size_t>(k)] = std::move(pk);
  }
  return p[static_cast<std::size_t>(n)];
}

Polynomial<Rat> charpoly(const IntMatrix& a) { return charpoly(to_exact<Rat>(a)); }

}  // namespace rootheight
