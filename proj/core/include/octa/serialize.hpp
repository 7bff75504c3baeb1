#pragma once
// JSON round-tripping for the value types the CLI pins as fixtures.
// Vectors are arrays of 8 reals; a frame is 4 of them, a projector 8,
// a tricomplex triple 3, a sphere point 8 quadruples (w, x, y, z).
// Field names: "frame", "projector" (optional), "tricomplex" (optional),
// "h"; every document carries a "schema" tag.

#include <string>

#include "octa/cayley.hpp"
#include "octa/linalg.hpp"
#include "octa/reduction.hpp"

namespace octa {

std::string frame_to_json(const Frame4& f);
std::string plane_to_json(const Plane4& p);               // frame + projector
std::string cayley_plane_to_json(const CayleyPlane& p);   // + tricomplex
std::string tricomplex_to_json(const TricomplexTriple& t);
std::string sphere_to_json(const SpherePoint& h);

// Each throws ParseError on malformed documents or missing fields.
Frame4 frame_from_json(const std::string& text);
TricomplexTriple tricomplex_from_json(const std::string& text);
SpherePoint sphere_from_json(const std::string& text);

}  // namespace octa
