#include "spaceprint/mds.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "spaceprint/errors.hpp"

namespace spaceprint {

std::vector<std::array<double, 2>> mds_2d(
    const std::vector<std::vector<double>>& dissimilarity) {
  const std::size_t n = dissimilarity.size();
  if (n == 0) throw EmptyInput("mds over an empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (dissimilarity[i].size() != n)
      throw InvalidInput("dissimilarity matrix must be square");
    if (dissimilarity[i][i] != 0.0)
      throw InvalidInput("dissimilarity diagonal must be zero at row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (dissimilarity[i][j] < 0.0)
        throw InvalidInput("dissimilarity must be non-negative at (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
      if (std::abs(dissimilarity[i][j] - dissimilarity[j][i]) > 1e-12)
        throw InvalidInput("dissimilarity must be symmetric at (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
    }
  }

  // Double-centered squared dissimilarities: B = -1/2 J D^2 J.
  Eigen::MatrixXd d2(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d2(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          dissimilarity[i][j] * dissimilarity[i][j];
  const Eigen::VectorXd row_mean = d2.rowwise().mean();
  const double grand_mean = d2.mean();
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i)
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j)
      b(i, j) = -0.5 * (d2(i, j) - row_mean(i) - row_mean(j) + grand_mean);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success)
    throw InvalidInput("eigendecomposition failed on the centered matrix");

  // Eigenvalues come back ascending; the top two span the plane.
  const Eigen::Index last = static_cast<Eigen::Index>(n) - 1;
  std::vector<std::array<double, 2>> coords(n, {0.0, 0.0});
  for (int axis = 0; axis < 2; ++axis) {
    const Eigen::Index which = last - axis;
    if (which < 0) continue;  // a 1x1 input has a single eigenpair
    const double lambda = std::max(solver.eigenvalues()(which), 0.0);
    const double scale = std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i)
      coords[i][static_cast<std::size_t>(axis)] =
          solver.eigenvectors()(static_cast<Eigen::Index>(i), which) * scale;
  }
  return coords;
}

}  // namespace spaceprint
