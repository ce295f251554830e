#include "wle/verify/charpoly.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace wle::verify {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Poly = std::vector<cpp_rational>;  // lowest degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a / b; b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const cpp_rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const cpp_rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly subtract(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Yun's algorithm: p = prod_i factors[i]^(i+1), each factor squarefree.
std::vector<Poly> squarefree_factors(const Poly& p) {
  std::vector<Poly> out;
  Poly a = monic(p);
  Poly d = derivative(a);
  Poly g = gcd(a, d);
  Poly b = divmod(a, g).first;
  Poly c = divmod(d, g).first;
  Poly e = subtract(c, derivative(b));
  while (b.size() > 1) {
    Poly f = gcd(b, e);
    out.push_back(f);
    b = divmod(b, f).first;
    c = divmod(e, f).first;
    e = subtract(c, derivative(b));
  }
  return out;
}

long double eval(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Roots of a real-rooted polynomial with simple roots, ascending. The
// derivative's roots strictly interlace, so each gap between consecutive
// critical points (and the Cauchy bound) brackets exactly one root.
std::vector<long double> simple_real_roots(const std::vector<long double>& c) {
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {-c[0] / c[1]};
  std::vector<long double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long double>(i));
  const std::vector<long double> crit = simple_real_roots(d);
  long double bound = 0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i] / c[deg]));
  bound += 1;
  std::vector<long double> edges{-bound};
  edges.insert(edges.end(), crit.begin(), crit.end());
  edges.push_back(bound);
  std::vector<long double> roots;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    long double lo = edges[k], hi = edges[k + 1];
    long double flo = eval(c, lo), fhi = eval(c, hi);
    if (flo == 0) {
      roots.push_back(lo);
      continue;
    }
    if (fhi == 0) {
      roots.push_back(hi);
      continue;
    }
    if ((flo < 0) == (fhi < 0)) {
      // Only possible when rounding hides a root at an endpoint.
      roots.push_back(std::abs(flo) < std::abs(fhi) ? lo : hi);
      continue;
    }
    for (int it = 0; it < 200; ++it) {
      const long double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      const long double fm = eval(c, mid);
      if (fm == 0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(lo + (hi - lo) / 2);
  }
  return roots;
}

std::vector<cpp_int> integer_charpoly(const Eigen::MatrixXd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (v != std::round(v) || std::abs(v) > 1e15) {
        throw std::invalid_argument("charpoly oracle: entries must be integers");
      }
      a[i][j] = static_cast<long long>(v);
    }
  }
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  // All divisions are exact for integer A.
  std::vector<cpp_int> coeff(n + 1);
  coeff[n] = 1;
  std::vector<std::vector<cpp_int>> mk(n, std::vector<cpp_int>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<cpp_int>> next(n, std::vector<cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cpp_int s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += coeff[n - k + 1];
    }
    mk = std::move(next);
    cpp_int trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * mk[l][i];
    }
    coeff[n - k] = -trace / static_cast<long long>(k);
  }
  return coeff;
}

}  // namespace

std::vector<long long> characteristic_polynomial(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("charpoly oracle: matrix must be square");
  }
  std::vector<long long> out;
  for (const auto& c : integer_charpoly(m)) out.push_back(static_cast<long long>(c));
  return out;
}

std::vector<double> charpoly_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("charpoly oracle: matrix must be square");
  }
  if (m.rows() == 0) return {};
  Poly p;
  for (const auto& c : integer_charpoly(m)) p.emplace_back(c);
  std::vector<double> values;
  const auto factors = squarefree_factors(p);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].size() <= 1) continue;
    std::vector<long double> c;
    for (const auto& r : factors[k]) c.push_back(static_cast<long double>(r));
    for (long double root : simple_real_roots(c)) {
      for (std::size_t rep = 0; rep <= k; ++rep) values.push_back(static_cast<double>(root));
    }
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace wle::verify
