#pragma once
// The sphere S^31 in H^8: moment maps, the Sp(1) and U(1) actions, the
// common zero set N, angle search along U(1) orbits, the tau stratum test,
// and finite-difference dimension checks.
//
// Conventions, frozen here and relied on throughout:
//  - a frame (f1..f4) maps to h_a = (f1[a] + f2[a] i + f3[a] j + f4[a] k)/2;
//  - u1_act rotates the quaternion pairs (h1,h2), (h3,h4), (h5,h6), (h7,h8)
//    with orientations (+1, -1, -1, +1). This is exactly right
//    multiplication of each frame vector by cos t + sin t * i;
//  - moment_nu(h) = sum_b eps_b (h_{2b-1} conj(h_{2b}) - h_{2b} conj(h_{2b-1}))
//    with eps = (-1, +1, +1, -1). With these orientations nu vanishes on
//    Cayley-frame points and is invariant under both actions.

#include <vector>

#include "octa/cayley.hpp"
#include "octa/linalg.hpp"
#include "octa/quaternion.hpp"

namespace octa {

struct SpherePoint {
  std::array<Quaternion, 8> h{};
};

struct MomentMu {
  Quaternion mi, mj, mk;  // imaginary parts only; real slots are exact zeros
};

inline constexpr double kU1Orientation[4] = {1.0, -1.0, -1.0, 1.0};
inline constexpr double kNuOrientation[4] = {-1.0, 1.0, 1.0, -1.0};

SpherePoint frame_to_sphere(const Frame4& f);

// h = a + b i + c j + d k; the frame vectors are 2a, 2b, 2c, 2d.
void sphere_to_vectors(const SpherePoint& h, Vec8& a, Vec8& b, Vec8& c, Vec8& d);
Frame4 sphere_to_frame(const SpherePoint& h);

double sphere_norm2(const SpherePoint& h);

// mu(h) = (sum conj(h_a) i h_a, sum conj(h_a) j h_a, sum conj(h_a) k h_a)
MomentMu moment_mu(const SpherePoint& h);

// See the convention note above; purely imaginary.
Quaternion moment_nu(const SpherePoint& h);

SpherePoint sp1_act(const SpherePoint& h, const Quaternion& q);

SpherePoint u1_act(const SpherePoint& h, double theta);

SpherePoint tau_act(const SpherePoint& h);  // u1_act at pi/2

struct ZeroSetResult {
  bool in = false;
  double mu_res = 0.0;  // Euclidean norm of mu in R^9
  double nu_res = 0.0;  // Euclidean norm of nu in R^3
};

ZeroSetResult in_zero_set(const SpherePoint& h, double tol);

// Cayley residual of the frame of u1_act(h, theta).
double orbit_frame_residual(const SpherePoint& h, double theta);

// All angles in [0, 2pi) whose rotated frame is a Cayley frame: 720-sample
// scan of the orbit residual, golden-section refinement of each local
// minimum below 0.1, accepted at |r| < tol, sorted, deduplicated at 1e-6.
// Returns empty when h is not on the zero set at 1e-8; throws NoSolution
// when it is but no angle reaches tol.
std::vector<double> angle_search(const SpherePoint& h, double tol);

// The complex structure induced on frame vectors by u1_act(pi/2); equals
// right multiplication by i.
Mat8 jstd_operator();

// Whether the plane is carried to itself by jstd_operator (same_plane at tol).
bool is_jstd_invariant(const Plane4& p, double tol);

// Finite-difference dimension checks (central differences, step 1e-5,
// numerical rank at rel_tol 1e-6). Each throws RankAmbiguous when the
// spectral gap at the cut is below 10; callers resample.
//
// Rank of D(mu, nu) on the tangent space of the sphere at a zero-set point;
// 12 at generic points, so the zero set has dimension 31 - 12 = 19.
int tangent_rank_zero_set(const SpherePoint& h);
// Rank of D(mu, frame-product residual) on the tangent space at a
// Cayley-frame point; 13, so frames form an 18-manifold.
int tangent_rank_frame_point(const SpherePoint& h);
// Rank of the closure residual in a 16-parameter Grassmannian chart at a
// Cayley plane; 4, so Cayley planes form a 12-manifold.
int tangent_rank_plane_chart(const CayleyPlane& p);

}  // namespace octa
