#include "wle/matrices.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace wle {

std::string_view to_string(MatrixKind kind) noexcept {
  switch (kind) {
    case MatrixKind::Wf:
      return "W_f";
    case MatrixKind::Af:
      return "A_f";
    case MatrixKind::Lf:
      return "L_f";
    case MatrixKind::LfPlus:
      return "L_f_plus";
    case MatrixKind::A:
      return "A";
    case MatrixKind::L:
      return "L";
    case MatrixKind::LPlus:
      return "L_plus";
  }
  return "unknown";
}

SymMatrix::SymMatrix(MatrixKind kind, Eigen::MatrixXd entries)
    : kind_(kind), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw AsymmetricMatrixError("SymMatrix: matrix is not square");
  }
  const double norm = entries_.norm();
  const double skew = (entries_ - entries_.transpose()).norm();
  if (skew > 1e-12 * norm) {
    throw AsymmetricMatrixError("SymMatrix: asymmetry exceeds tolerance");
  }
}

WeightContext context_for(const Graph& g, const DistanceTable& dist) {
  const GraphStats stats = graph_stats(g, dist);
  return {g.order(), stats.diameter.value_or(kUnreachable)};
}

SymMatrix build_weighted_distance(const Graph& g, const DistanceTable& dist,
                                  const WeightFunction& w,
                                  const WeightContext& ctx) {
  if (!w.adjacency_only() && ctx.diameter == kUnreachable) {
    throw DisconnectedGraphError(w.name());
  }
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double di = static_cast<double>(g.degree(static_cast<Vertex>(i)));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dj = static_cast<double>(g.degree(static_cast<Vertex>(j)));
      const double value = w.evaluate(
          dist.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
          di, dj, ctx);
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return SymMatrix(w.adjacency_only() ? MatrixKind::Af : MatrixKind::Wf,
                   std::move(m));
}

SymMatrix restrict_to_adjacency(const SymMatrix& w, const Graph& g) {
  const auto n = static_cast<Eigen::Index>(w.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = w(e.u, e.v);
    m(e.v, e.u) = w(e.v, e.u);
  }
  return SymMatrix(MatrixKind::Af, std::move(m));
}

LaplacianFamily build_laplacian_family(const SymMatrix& w) {
  const Eigen::MatrixXd& m = w.entries();
  if (m.size() > 0 && m.diagonal().cwiseAbs().maxCoeff() != 0.0) {
    throw std::invalid_argument(
        "build_laplacian_family: weight matrix must have a zero diagonal");
  }
  const Eigen::VectorXd row_sums = m.rowwise().sum();
  Eigen::MatrixXd lap = -m;
  lap.diagonal() = row_sums;
  Eigen::MatrixXd signless = m;
  signless.diagonal() = row_sums;
  const double n = static_cast<double>(w.dim());
  const double mean = n > 0 ? row_sums.sum() / n : 0.0;
  return {SymMatrix(MatrixKind::Lf, std::move(lap)),
          SymMatrix(MatrixKind::LfPlus, std::move(signless)),
          WeightedMean{mean}};
}

UnweightedFamily build_unweighted(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  const Eigen::VectorXd deg = a.rowwise().sum();
  Eigen::MatrixXd lap = -a;
  lap.diagonal() = deg;
  Eigen::MatrixXd signless = a;
  signless.diagonal() = deg;
  return {SymMatrix(MatrixKind::A, std::move(a)),
          SymMatrix(MatrixKind::L, std::move(lap)),
          SymMatrix(MatrixKind::LPlus, std::move(signless))};
}

std::string dump_matrix(const SymMatrix& m) {
  std::string out;
  char buf[32];
  const auto n = static_cast<Eigen::Index>(m.dim());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m.entries()(i, j));
      if (j > 0) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace wle
