#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "wle/matrices.hpp"
#include "wle/rng.hpp"
#include "wle/spectral.hpp"
#include "wle/verify/charpoly.hpp"

namespace wle {
namespace {

Eigen::MatrixXd random_sym(PortableRng& rng, Eigen::Index n, double scale = 1.0) {
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = scale * (2 * rng.uniform() - 1);
  return m;
}

TEST(Eigen, IdentityFour) {
  EXPECT_EQ(sym_eigenvalues(Eigen::MatrixXd::Identity(4, 4)),
            (std::vector<double>{1, 1, 1, 1}));
}

TEST(Eigen, TwoByTwo) {
  Eigen::MatrixXd m(2, 2);
  m << 2, 1, 1, 2;
  const auto v = sym_eigenvalues(m);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_NEAR(v[0], 3.0, 1e-14);
  EXPECT_NEAR(v[1], 1.0, 1e-14);
}

TEST(Eigen, CompleteGraphLaplacian) {
  for (std::size_t n : {2, 5, 17, 40}) {
    const UnweightedFamily f = build_unweighted(generate_gnp(n, 1.0, 0));
    const Spectrum s = sym_eigenvalues(f.laplacian, {n, 1.0, "unweighted", 0});
    ASSERT_EQ(s.size(), n);
    for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_NEAR(s[i], double(n), 1e-10 * n);
    EXPECT_NEAR(s[n - 1], 0.0, 1e-10 * n);
    EXPECT_EQ(s.source_kind(), MatrixKind::L);
    EXPECT_EQ(s.meta().n, n);
  }
}

TEST(Eigen, CompleteGraphSignless) {
  for (std::size_t n : {3, 8, 25}) {
    const UnweightedFamily f = build_unweighted(generate_gnp(n, 1.0, 0));
    const auto v = sym_eigenvalues(f.signless.entries());
    EXPECT_NEAR(v[0], 2.0 * n - 2, 1e-10 * n);
    for (std::size_t i = 1; i < n; ++i) EXPECT_NEAR(v[i], n - 2.0, 1e-10 * n);
  }
}

TEST(Eigen, RejectsAsymmetric) {
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(sym_eigenvalues(m), AsymmetricMatrixError);
  EXPECT_THROW(sym_eigenvalues(Eigen::MatrixXd::Zero(2, 3)), AsymmetricMatrixError);
}

TEST(Eigen, EmptyMatrix) {
  EXPECT_TRUE(sym_eigenvalues(Eigen::MatrixXd(0, 0)).empty());
}

TEST(Eigen, SortedDescendingTraceAndFrobenius) {
  PortableRng rng(1);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.next() % 60);
    const Eigen::MatrixXd m = random_sym(rng, n, 1 + 100 * rng.uniform());
    const auto v = sym_eigenvalues(m);
    ASSERT_EQ(v.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(std::is_sorted(v.rbegin(), v.rend()));
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    double sq = 0;
    for (double x : v) sq += x * x;
    const double fro2 = m.squaredNorm();
    EXPECT_LE(std::abs(sum - m.trace()), 1e-10 * std::max(1.0, m.norm() * n));
    EXPECT_LE(std::abs(sq - fro2), 1e-10 * fro2);
  }
}

TEST(Eigen, MatchesCharacteristicPolynomialOracle) {
  PortableRng rng(2);
  for (int t = 0; t < 300; ++t) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.next() % 4);
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j)
        m(i, j) = m(j, i) = static_cast<double>(rng.next() % 11) - 5.0;
    const auto a = sym_eigenvalues(m);
    const auto b = verify::charpoly_eigenvalues(m);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-8);
  }
}

TEST(Eigen, WeylInterlacing) {
  PortableRng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.next() % 20);
    const Eigen::MatrixXd h = random_sym(rng, n), p = random_sym(rng, n);
    const auto nu = sym_eigenvalues(h);
    const auto th = sym_eigenvalues(p);
    const auto xi = sym_eigenvalues(Eigen::MatrixXd(h + p));
    for (Eigen::Index i = 0; i < n; ++i) {
      EXPECT_GE(xi[i], nu[i] + th.back() - 1e-8);
      EXPECT_LE(xi[i], nu[i] + th.front() + 1e-8);
    }
  }
}

TEST(Radius, Examples) {
  EXPECT_EQ(spectral_radius(Spectrum::from_values({3, 1})), 3.0);
  EXPECT_EQ(spectral_radius(Spectrum::from_values({-5, 2})), 5.0);
  const UnweightedFamily f = build_unweighted(generate_gnp(6, 1.0, 0));
  EXPECT_NEAR(spectral_radius(sym_eigenvalues(f.laplacian)), 6.0, 1e-12);
  EXPECT_THROW(spectral_radius(Spectrum{}), std::invalid_argument);
}

TEST(SpectrumType, SortsDescending) {
  const Spectrum s = Spectrum::from_values({1, 3, -2, 2});
  EXPECT_EQ(std::vector<double>(s.values().begin(), s.values().end()),
            (std::vector<double>{3, 2, 1, -2}));
}

TEST(Bulk, Examples) {
  EXPECT_DOUBLE_EQ(bulk_fraction(Spectrum::from_values({10, 10, 10, 0}), 10, 0.05, {0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(bulk_fraction(Spectrum::from_values({100, 50, 0}), 50, 0.01, {0, 0}), 1.0 / 3);
  const UnweightedFamily f = build_unweighted(generate_gnp(5, 1.0, 0));
  EXPECT_DOUBLE_EQ(bulk_fraction(sym_eigenvalues(f.laplacian), 5, 0.01, {0, 1}), 1.0);
}

TEST(Bulk, ExcludesLargestToo) {
  EXPECT_DOUBLE_EQ(bulk_fraction(Spectrum::from_values({90, 10, 10, 0}), 10, 0.05, {1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(bulk_fraction(Spectrum::from_values({90, 10, 10, 0}), 10, 0.05, {0, 1}), 2.0 / 3);
}

TEST(Bulk, Errors) {
  const Spectrum s = Spectrum::from_values({1, 2, 3});
  EXPECT_THROW(bulk_fraction(s, 1, 0.0, {}), std::invalid_argument);
  EXPECT_THROW(bulk_fraction(s, 1, -1.0, {}), std::invalid_argument);
  EXPECT_THROW(bulk_fraction(s, 1, 0.1, {3, 0}), std::invalid_argument);
  EXPECT_THROW(bulk_fraction(s, 1, 0.1, {2, 1}), std::invalid_argument);
}

TEST(Esd, SingleBin) {
  const EsdHistogram h = esd_histogram(Spectrum::from_values({1, 1, 1, 1}), 1, EsdScaling::None);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{4}));
  ASSERT_EQ(h.bin_edges.size(), 2u);
  EXPECT_LT(h.bin_edges[0], h.bin_edges[1]);
}

TEST(Esd, TwoEqualBins) {
  const EsdHistogram h = esd_histogram(Spectrum::from_values({0, 1, 2, 3}), 2, EsdScaling::None);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(h.bin_edges, (std::vector<double>{0, 1.5, 3}));
}

TEST(Esd, CsvFormat) {
  const EsdHistogram h = esd_histogram(Spectrum::from_values({0, 1, 2, 3}), 2, EsdScaling::None);
  EXPECT_EQ(h.to_csv(), "bin_left,bin_right,count\n0,1.5,2\n1.5,3,2\n");
}

TEST(Esd, SemicircleMassOfAdjacency) {
  const std::size_t n = 400;
  const double p = 0.5;
  const UnweightedFamily f = build_unweighted(generate_gnp(n, p, 1));
  // Centring removes p(J - I), which carries the single O(n) eigenvalue.
  Eigen::MatrixXd centred = f.adjacency.entries();
  centred.array() -= p;
  centred.diagonal().setZero();
  for (const Eigen::MatrixXd* m : {static_cast<const Eigen::MatrixXd*>(&centred), &f.adjacency.entries()}) {
    const Spectrum s = sym_eigenvalues(SymMatrix(MatrixKind::A, *m));
    const EsdHistogram h = esd_histogram(s, 40, EsdScaling::Semicircle, p);
    EXPECT_EQ(std::accumulate(h.counts.begin(), h.counts.end(), std::size_t{0}), n);
    std::size_t inside = 0;
    for (double v : s.values()) inside += std::abs(v * h.scale_factor) <= 2.1;
    EXPECT_GE(inside, static_cast<std::size_t>(0.95 * n));
  }
}

TEST(Esd, ScalingFactors) {
  const Spectrum s = Spectrum::from_values({4, 0, 0, -4});
  EXPECT_DOUBLE_EQ(esd_histogram(s, 2, EsdScaling::InvSqrtN).scale_factor, 0.5);
  EXPECT_DOUBLE_EQ(esd_histogram(s, 2, EsdScaling::InvN).scale_factor, 0.25);
  EXPECT_DOUBLE_EQ(esd_histogram(s, 2, EsdScaling::Semicircle, 0.5).scale_factor, 1.0);
  const EsdHistogram h = esd_histogram(s, 2, EsdScaling::InvN);
  EXPECT_EQ(h.bin_edges.front(), -1.0);
  EXPECT_EQ(h.bin_edges.back(), 1.0);
}

TEST(Esd, Errors) {
  EXPECT_THROW(esd_histogram(Spectrum::from_values({1}), 0, EsdScaling::None),
               std::invalid_argument);
  EXPECT_THROW(esd_histogram(Spectrum::from_values({1}), 2, EsdScaling::Semicircle, 0.0),
               std::invalid_argument);
}

}  // namespace
}  // namespace wle
