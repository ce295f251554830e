#pragma once

#include <Eigen/Core>
#include <vector>

namespace wle::verify {

/// Eigenvalues of an integer symmetric matrix computed without any
/// eigensolver: exact characteristic polynomial (Faddeev-LeVerrier over the
/// rationals), exact squarefree split (Yun), then interlacing bisection on
/// each real-rooted squarefree factor. Descending, with multiplicity.
/// Throws std::invalid_argument if an entry is not an integer.
std::vector<double> charpoly_eigenvalues(const Eigen::MatrixXd& m);

/// Integer coefficients c_0..c_n of det(xI - M), lowest degree first.
std::vector<long long> characteristic_polynomial(const Eigen::MatrixXd& m);

}  // namespace wle::verify
