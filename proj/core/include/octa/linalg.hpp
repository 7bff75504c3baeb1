#pragma once
// Dense real linear algebra on R^8 and its 4-planes. Vec8 coordinates are
// the octonion coefficients in the frozen basis order, so conversion is the
// identity on coefficients. Frames are 8x4 matrices with the frame vectors
// as columns.

#include <Eigen/Dense>
#include <vector>

#include "octa/octonion.hpp"
#include "octa/rng.hpp"

namespace octa {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Frame4 = Eigen::Matrix<double, 8, 4>;

inline Vec8 to_vec(const Octonion& x) {
  Vec8 v;
  for (int s = 0; s < 8; ++s) v[s] = x.c[s];
  return v;
}

inline Octonion to_oct(const Vec8& v) {
  Octonion x{};
  for (int s = 0; s < 8; ++s) x.c[s] = v[s];
  return x;
}

struct Plane4 {
  Frame4 frame;  // orthonormal, orientation-carrying
  Mat8 proj;     // cached orthogonal projector sum f_i f_i^T
};

// Modified Gram-Schmidt. Keeps the first direction, normalizes everything,
// throws DegenerateInput when an intermediate norm drops below 1e-8.
std::vector<Vec8> gram_schmidt(const std::vector<Vec8>& vectors);

Mat8 projector(const Frame4& frame);

// Frobenius deviation of the Gram matrix from the identity.
double frame_gram_residual(const Frame4& frame);

// Builds the plane with its cached projector; input must be orthonormal
// within 1e-9 (DegenerateInput otherwise).
Plane4 make_plane(const Frame4& frame);

// Orientation-blind plane identity: Frobenius projector distance < tol.
bool same_plane(const Plane4& p, const Plane4& q, double tol);

// Sign of det(b^T a); requires the frames to span the same plane at 1e-6
// (NotSamePlane otherwise).
int orientation_sign(const Frame4& a, const Frame4& b);

// Orthonormal basis of the numerical kernel: right singular vectors whose
// singular value is below tol * sigma_max. The zero matrix yields all 8.
std::vector<Vec8> kernel(const Mat8& m, double tol);

struct RankInfo {
  int rank = 0;
  double gap = 0.0;  // sigma_r / sigma_{r+1} at the cut; inf when full rank
};

// Count of singular values above rel_tol * sigma_max, with the spectral gap
// at the cut for diagnostics.
RankInfo numerical_rank(const Eigen::MatrixXd& m, double rel_tol);

// Gaussian orthonormal 4-frame (resamples on degeneracy).
Frame4 random_frame(Rng& rng);

}  // namespace octa
