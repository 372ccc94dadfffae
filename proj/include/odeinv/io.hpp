#pragma once

#include <string>

#include "odeinv/model.hpp"

namespace odeinv {

/// Equation file: {"P": "<expr>", "Q": "<expr>", "R": "<expr>", "S": "<expr>"}.
/// Missing keys default to "0". Throws std::runtime_error on IO/JSON
/// problems and ParseError on bad expressions.
CubicODE readEquation(const std::string& path);

/// Map file: {"forward": {"xt": "...", "yt": "..."},
///            "inverse": {"x": "...", "y": "..."}}.
/// Parses only; the caller validates the pair with validateMap.
PointMap readMap(const std::string& path);

void writeEquation(const CubicODE& eq, const std::string& path);

/// Canonical JSON text of an equation (same shape as the file format).
std::string equationJson(const CubicODE& eq);

}  // namespace odeinv
