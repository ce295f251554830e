#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wle/graph.hpp"
#include "wle/weights.hpp"

namespace wle {

enum class MatrixKind { Wf, Af, Lf, LfPlus, A, L, LPlus };

std::string_view to_string(MatrixKind kind) noexcept;

class AsymmetricMatrixError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense real symmetric matrix tagged with the construction it came from.
class SymMatrix {
 public:
  /// Rejects non-square input and asymmetry beyond 1e-12 * ||M||_F.
  SymMatrix(MatrixKind kind, Eigen::MatrixXd entries);

  MatrixKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(entries_.rows());
  }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  double trace() const { return entries_.trace(); }
  double frobenius_norm() const { return entries_.norm(); }

 private:
  MatrixKind kind_;
  Eigen::MatrixXd entries_;
};

/// (sum_{i != j} f(D(i,j), d_i, d_j)) / n; replaces 2m/n in the Laplacian
/// energies.
struct WeightedMean {
  double value = 0;
};

struct LaplacianFamily {
  SymMatrix laplacian;  // D_f - W
  SymMatrix signless;   // D_f + W
  WeightedMean mean;
};

struct UnweightedFamily {
  SymMatrix adjacency;
  SymMatrix laplacian;
  SymMatrix signless;
};

/// Context derived from the graph itself: n and the actual diameter.
WeightContext context_for(const Graph& g, const DistanceTable& dist);

/// Off-diagonal (i,j) = f(D(i,j), d_i, d_j) with the sampled integer degrees;
/// zero diagonal. Kind is Af for adjacency-only weights, Wf otherwise.
/// Throws DisconnectedGraphError for a distance-dependent weight on a
/// disconnected graph.
SymMatrix build_weighted_distance(const Graph& g, const DistanceTable& dist,
                                  const WeightFunction& w,
                                  const WeightContext& ctx);

/// W_f with every non-adjacent entry zeroed: the degree-weighted adjacency
/// matrix A_f seen by the same weight.
SymMatrix restrict_to_adjacency(const SymMatrix& w, const Graph& g);

/// Requires a zero diagonal.
LaplacianFamily build_laplacian_family(const SymMatrix& w);

UnweightedFamily build_unweighted(const Graph& g);

/// n lines of space-separated %.17g values.
std::string dump_matrix(const SymMatrix& m);

}  // namespace wle
