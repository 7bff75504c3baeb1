#pragma once
// Cayley 4-planes and 4-frames: closure predicates, generators, the
// tricomplex triple of a plane and its inverse, and the hypercomplex
// operators J_u(x) = x·u (right multiplication).

#include "octa/linalg.hpp"
#include "octa/octonion.hpp"
#include "octa/rng.hpp"

namespace octa {

struct TricomplexTriple {
  Octonion u, v, w;  // unit imaginary, mutually orthogonal, ordered
};

struct CayleyPlane {
  Plane4 plane;
  TricomplexTriple triple;  // regenerates the plane via plane_from_tricomplex
  Mat8 I1, I2, I3;          // right multiplication by triple.u/v/w
};

// Max over the four increasing basis triples (f_i, f_j, f_k) of the part of
// cross3(f_i, f_j, f_k) sticking out of the plane. Closure over basis
// triples extends to all triples by trilinearity.
double cayley_plane_residual(const Plane4& p);
bool is_cayley_plane(const Plane4& p, double tol);

// | conj(f2) f1 - conj(f3) f4 | in the octonion algebra.
double cayley_frame_residual(const Frame4& f);
bool is_cayley_frame(const Frame4& f, double tol);

// Matrix of x -> x·u for unit imaginary u; orthogonal with square -I.
Mat8 right_mult_operator(const Octonion& u);

// Builds the plane with cached triple and operators; NotCayley if the
// closure residual exceeds 1e-8.
CayleyPlane make_cayley_plane(const Frame4& frame);

// Samples orthonormal (x, y, z), completes with w = cross3(x, y, z), returns
// the plane with oriented frame (w, x, y, z).
CayleyPlane random_cayley_plane(Rng& rng);

// Same construction from a caller-supplied imaginary triple; used by the
// pinned examples.
CayleyPlane cayley_plane_from_xyz(const Octonion& x, const Octonion& y, const Octonion& z);

// Picks orthonormal imaginary x, y, z inside the plane (the intersection
// with Im O has dimension 3 or 4) and returns
// (u, v, w) = (cross2(y, z), cross2(z, x), cross2(x, y)).
TricomplexTriple tricomplex_of_plane(const Plane4& p);

// Max residual of the hypercomplex relations J_u^2 = -Id (all three),
// J_v J_u = -J_u J_v = J_w and cyclic, evaluated at the four frame vectors.
// The relations hold only on the plane; see hypercomplex_residual_at for an
// off-plane witness.
double hypercomplex_check(const CayleyPlane& p);

// The same relation residual at an arbitrary vector.
double hypercomplex_residual_at(const CayleyPlane& p, const Vec8& x);

// Kernel of x -> (x·u)·v - x·w; throws BadKernelDimension unless the kernel
// is exactly 4-dimensional. Frame ordered (x0, x0·u, x0·v, x0·w).
CayleyPlane plane_from_tricomplex(const TricomplexTriple& t);

// (x, I1 x, I2 x, I3 x) for x = first frame vector.
Frame4 canonical_cayley_frame(const CayleyPlane& p);

}  // namespace octa
