#include "wle/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace wle {

Spectrum::Spectrum(std::vector<double> values, MatrixKind source,
                   SpectrumMeta meta)
    : values_(std::move(values)), source_(source), meta_(std::move(meta)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
  if (meta_.n == 0) meta_.n = values_.size();
}

Spectrum Spectrum::from_values(std::vector<double> values, MatrixKind source) {
  return Spectrum(std::move(values), source, {});
}

std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw AsymmetricMatrixError("sym_eigenvalues: matrix is not square");
  }
  if (m.size() == 0) return {};
  if ((m - m.transpose()).norm() > 1e-12 * m.norm()) {
    throw AsymmetricMatrixError("sym_eigenvalues: matrix is not symmetric");
  }
  // Householder tridiagonalization followed by implicit symmetric QR.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("sym_eigenvalues: QR iteration did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  std::reverse(values.begin(), values.end());  // Eigen returns ascending
  return values;
}

Spectrum sym_eigenvalues(const SymMatrix& m, SpectrumMeta meta) {
  if (meta.n == 0) meta.n = m.dim();
  return Spectrum(sym_eigenvalues(m.entries()), m.kind(), std::move(meta));
}

double spectral_radius(const Spectrum& s) {
  if (s.empty()) throw std::invalid_argument("spectral_radius: empty spectrum");
  return std::max(std::abs(s[0]), std::abs(s[s.size() - 1]));
}

double bulk_fraction(const Spectrum& s, double center, double tol,
                     ExcludeExtremes exclude) {
  if (!(tol > 0)) throw std::invalid_argument("bulk_fraction: tol must be > 0");
  if (exclude.largest + exclude.smallest >= s.size()) {
    throw std::invalid_argument(
        "bulk_fraction: excluded extremes leave no eigenvalues");
  }
  const auto vals = s.values();
  const std::size_t first = exclude.largest;
  const std::size_t last = s.size() - exclude.smallest;
  const double radius = tol * std::abs(center);
  std::size_t inside = 0;
  for (std::size_t i = first; i < last; ++i) {
    if (std::abs(vals[i] - center) <= radius) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(last - first);
}

EsdHistogram esd_histogram(const Spectrum& s, std::size_t bins,
                           EsdScaling scaling, double p) {
  if (bins == 0) throw std::invalid_argument("esd_histogram: bins must be >= 1");
  if (s.empty()) throw std::invalid_argument("esd_histogram: empty spectrum");
  const double n = static_cast<double>(s.size());
  double factor = 1.0;
  switch (scaling) {
    case EsdScaling::None:
      break;
    case EsdScaling::InvSqrtN:
      factor = 1.0 / std::sqrt(n);
      break;
    case EsdScaling::InvN:
      factor = 1.0 / n;
      break;
    case EsdScaling::Semicircle:
      if (!(p > 0 && p < 1)) {
        throw std::invalid_argument("esd_histogram: semicircle scaling needs p in (0,1)");
      }
      factor = 1.0 / std::sqrt(n * p * (1 - p));
      break;
  }
  std::vector<double> x(s.values().begin(), s.values().end());
  for (double& v : x) v *= factor;
  // Values are sorted descending.
  double lo = x.back();
  double hi = x.front();
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  EsdHistogram h;
  h.scaling = scaling;
  h.scale_factor = factor;
  h.counts.assign(bins, 0);
  h.bin_edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t k = 0; k <= bins; ++k) {
    h.bin_edges[k] = lo + width * static_cast<double>(k);
  }
  h.bin_edges.back() = hi;
  for (double v : x) {
    auto k = static_cast<std::size_t>((v - lo) / width);
    if (k >= bins) k = bins - 1;
    // Guard the floating-point division against landing one bin off.
    while (k > 0 && v < h.bin_edges[k]) --k;
    while (k + 1 < bins && v >= h.bin_edges[k + 1]) ++k;
    ++h.counts[k];
  }
  return h;
}

std::string EsdHistogram::to_csv() const {
  std::string out = "bin_left,bin_right,count\n";
  char buf[96];
  for (std::size_t k = 0; k < counts.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%zu\n", bin_edges[k],
                  bin_edges[k + 1], counts[k]);
    out += buf;
  }
  return out;
}

}  // namespace wle
