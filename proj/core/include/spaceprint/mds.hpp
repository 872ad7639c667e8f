#pragma once

#include <array>
#include <vector>

namespace spaceprint {

// Classical (Torgerson) multidimensional scaling to the plane: double-center
// the squared dissimilarities (B = -1/2 J D^2 J), take the two leading
// eigenpairs, and scale the eigenvectors by the square roots of their
// (non-negative-clamped) eigenvalues. The output is centered at the origin
// and reproduces D exactly when D comes from points in the plane.
//
// The input must be square, symmetric, non-negative and zero on the
// diagonal; anything else throws InvalidInput. EmptyInput for a 0x0 matrix.
std::vector<std::array<double, 2>> mds_2d(
    const std::vector<std::vector<double>>& dissimilarity);

}  // namespace spaceprint
