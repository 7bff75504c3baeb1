#include "octa/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "octa/errors.hpp"

namespace octa {

std::vector<Vec8> gram_schmidt(const std::vector<Vec8>& vectors) {
  std::vector<Vec8> out;
  out.reserve(vectors.size());
  for (const Vec8& v : vectors) {
    Vec8 w = v;
    for (const Vec8& u : out) w -= u.dot(w) * u;
    const double n = w.norm();
    if (n < 1e-8) throw DegenerateInput("gram_schmidt: dependent input set");
    out.push_back(w / n);
  }
  return out;
}

Mat8 projector(const Frame4& frame) { return frame * frame.transpose(); }

double frame_gram_residual(const Frame4& frame) {
  const Eigen::Matrix4d g = frame.transpose() * frame;
  return (g - Eigen::Matrix4d::Identity()).norm();
}

Plane4 make_plane(const Frame4& frame) {
  if (frame_gram_residual(frame) > 1e-9)
    throw DegenerateInput("make_plane: frame is not orthonormal");
  return Plane4{frame, projector(frame)};
}

bool same_plane(const Plane4& p, const Plane4& q, double tol) {
  return (p.proj - q.proj).norm() < tol;
}

int orientation_sign(const Frame4& a, const Frame4& b) {
  const Plane4 pa = make_plane(a), pb = make_plane(b);
  if (!same_plane(pa, pb, 1e-6))
    throw NotSamePlane("orientation_sign: frames span different planes");
  const double det = (b.transpose() * a).determinant();
  return det >= 0.0 ? 1 : -1;
}

std::vector<Vec8> kernel(const Mat8& m, double tol) {
  Eigen::JacobiSVD<Mat8> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv[0];
  std::vector<Vec8> out;
  for (int s = 0; s < 8; ++s)
    if (smax == 0.0 || sv[s] < tol * smax) out.push_back(svd.matrixV().col(s));
  return out;
}

RankInfo numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const int n = static_cast<int>(sv.size());
  RankInfo info;
  if (n == 0 || sv[0] == 0.0) {
    info.gap = std::numeric_limits<double>::infinity();
    return info;
  }
  const double cut = rel_tol * sv[0];
  while (info.rank < n && sv[info.rank] > cut) ++info.rank;
  if (info.rank == 0)
    info.gap = 0.0;  // cannot happen with sv[0] > 0, kept for completeness
  else if (info.rank == n || sv[info.rank] == 0.0)
    info.gap = std::numeric_limits<double>::infinity();
  else
    info.gap = sv[info.rank - 1] / sv[info.rank];
  return info;
}

Frame4 random_frame(Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Vec8> raw(4);
    for (auto& v : raw)
      for (int s = 0; s < 8; ++s) v[s] = rng.normal();
    try {
      const std::vector<Vec8> on = gram_schmidt(raw);
      Frame4 f;
      for (int m = 0; m < 4; ++m) f.col(m) = on[m];
      return f;
    } catch (const DegenerateInput&) {
    }
  }
  throw DegenerateInput("random_frame: repeated degenerate samples");
}

}  // namespace octa
