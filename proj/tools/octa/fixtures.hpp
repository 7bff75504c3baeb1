#pragma once
// Pinned inputs shared by checks, fixtures, and tests.

#include <string>
#include <vector>

#include <octa/linalg.hpp>

namespace octa::cli {

// The frame (1, i, j, k).
Frame4 hframe_fixture();

// The worked example plane span{1-h, i+g, j-f, k+e} / sqrt(2).
Frame4 example_plane_frame();

std::vector<std::string> fixture_names();

// Serialized fixture by name; throws UnknownFixture.
std::string fixture_json(const std::string& name);

// The 64-row signed multiplication table.
std::string table_csv();

}  // namespace octa::cli
