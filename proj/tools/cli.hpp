#pragma once

// Command-line front end, kept in a library so the tests can drive it
// in-process.

#include "hexafern/regions.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace hexafern::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2, resource_cap = 3 };

/// {"family": ..., "params": {...}, "primed": bool}. Unknown fields, missing
/// fields and wrong types throw std::invalid_argument.
RegionSpec parse_spec(const std::string& json_text);

/// Canonical document: base family name, every parameter, explicit "primed".
std::string spec_document(const RegionSpec& spec);

/// SVG 1.1 figure of the region; with a tiling, one <polygon> per lozenge.
std::string render_svg(const RegionGeometry& geometry, const std::optional<Tiling>& tiling);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hexafern::cli
