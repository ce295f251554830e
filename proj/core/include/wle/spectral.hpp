#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wle/matrices.hpp"

namespace wle {

struct SpectrumMeta {
  std::size_t n = 0;
  std::optional<double> p;
  std::string weight;
  std::optional<std::uint64_t> seed;
};

/// Eigenvalues sorted in descending order.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<double> values, MatrixKind source, SpectrumMeta meta);

  /// Sorts the given values; kind defaults to the generic W_f tag.
  static Spectrum from_values(std::vector<double> values,
                              MatrixKind source = MatrixKind::Wf);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  MatrixKind source_kind() const noexcept { return source_; }
  const SpectrumMeta& meta() const noexcept { return meta_; }

 private:
  std::vector<double> values_;
  MatrixKind source_ = MatrixKind::Wf;
  SpectrumMeta meta_;
};

/// All eigenvalues of a dense symmetric matrix, descending. Throws
/// AsymmetricMatrixError if |M - M^T| exceeds 1e-12 * ||M||_F.
std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m);

Spectrum sym_eigenvalues(const SymMatrix& m, SpectrumMeta meta = {});

/// max |lambda_i|. Throws std::invalid_argument on an empty spectrum.
double spectral_radius(const Spectrum& s);

struct ExcludeExtremes {
  std::size_t largest = 0;
  std::size_t smallest = 0;
};

/// Fraction of the remaining eigenvalues with |lambda - center| <=
/// tol * |center| after dropping the requested extremes.
double bulk_fraction(const Spectrum& s, double center, double tol,
                     ExcludeExtremes exclude);

enum class EsdScaling {
  None,        // lambda
  InvSqrtN,    // lambda / sqrt(n)
  InvN,        // lambda / n
  Semicircle,  // lambda / sqrt(n p (1-p)); needs p
};

struct EsdHistogram {
  std::vector<double> bin_edges;  // bins + 1 strictly increasing values
  std::vector<std::size_t> counts;
  EsdScaling scaling = EsdScaling::None;
  double scale_factor = 1.0;

  /// "bin_left,bin_right,count" header plus one row per bin.
  std::string to_csv() const;
};

/// Equal-width bins over [min, max] of the scaled eigenvalues; the last bin
/// is closed. A degenerate range is widened to [v - 0.5, v + 0.5].
EsdHistogram esd_histogram(const Spectrum& s, std::size_t bins,
                           EsdScaling scaling, double p = 0.0);

}  // namespace wle
