#pragma once

#include <stdexcept>
#include <string>

namespace octa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linearly dependent input where an independent set is required.
struct DegenerateInput : Error {
  using Error::Error;
};

// orientation_sign called on frames that span different planes.
struct NotSamePlane : Error {
  using Error::Error;
};

// A Cayley-plane operation was handed a plane that fails the closure test.
struct NotCayley : Error {
  using Error::Error;
};

// plane_from_tricomplex found a kernel of dimension != 4; indicates a broken
// invariant, not bad user input.
struct BadKernelDimension : Error {
  using Error::Error;
};

// Numerical rank had no spectral gap >= 10 at the cut; caller should resample.
struct RankAmbiguous : Error {
  using Error::Error;
};

// angle_search: the point lies on the zero set but no angle reached the
// requested residual tolerance.
struct NoSolution : Error {
  using Error::Error;
};

// Unknown fixture name passed to the dump interface.
struct UnknownFixture : Error {
  using Error::Error;
};

// Malformed JSON handed to a parser.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace octa
