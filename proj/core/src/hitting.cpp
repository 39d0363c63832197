#include "drunkcop/hitting.hpp"

#include <stdexcept>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

namespace drunkcop {
namespace {

// Index of v in the grounded system (target removed).
inline int reduced(Vertex v, Vertex target) { return v < target ? v : v - 1; }

}  // namespace

std::vector<double> hitting_times(const Graph& g, Vertex target) {
  if (!g.contains(target)) throw std::out_of_range("hitting target out of range");
  const int n = g.order();
  std::vector<double> h(n, 0.0);
  if (n == 1) return h;

  using SpMat = Eigen::SparseMatrix<double>;
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(2 * g.edge_count() + n);
  Eigen::VectorXd rhs(n - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v == target) continue;
    const int row = reduced(v, target);
    entries.emplace_back(row, row, g.degree(v));
    rhs[row] = g.degree(v);
    for (Vertex w : g.neighbors(v)) {
      if (w != target) entries.emplace_back(row, reduced(w, target), -1.0);
    }
  }
  SpMat laplacian(n - 1, n - 1);
  laplacian.setFromTriplets(entries.begin(), entries.end());

  Eigen::SimplicialLDLT<SpMat> solver(laplacian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("grounded Laplacian factorization failed");
  }
  const Eigen::VectorXd x = solver.solve(rhs);
  for (Vertex v = 0; v < n; ++v) {
    if (v != target) h[v] = x[reduced(v, target)];
  }
  return h;
}

HittingTimeTable::HittingTimeTable(const Graph& g)
    : n_(g.order()), times_(static_cast<std::size_t>(n_) * n_) {
  for (Vertex t = 0; t < n_; ++t) {
    const std::vector<double> h = hitting_times(g, t);
    std::copy(h.begin(), h.end(), times_.begin() + static_cast<std::size_t>(t) * n_);
  }
}

}  // namespace drunkcop
