#pragma once

// Structure-constants files:
//
//   {
//     "dim": 3,
//     "basis": ["X", "Y", "Z"],
//     "brackets": [ {"i": 1, "j": 2, "coeffs": {"3": "1"}} ]
//   }
//
// Indices are 1-based positions in "basis"; coefficients are rational
// strings ("p" or "p/q"). Each entry gives [U_i, U_j]; pairs with i > j are
// accepted and stored negated.

#include <filesystem>
#include <string>
#include <string_view>

#include "nilcortex/lie_algebra.hpp"

namespace nilcortex {

/// Throws ParseError (with byte offset or entry location) on malformed
/// input, including repeated or diagonal bracket entries.
LieAlgebra parse_structure_constants(std::string_view text);

/// Canonical text: stored brackets with i < j in (i, j) order, coefficient
/// keys in increasing index order, two-space indentation, trailing newline.
std::string write_structure_constants(const LieAlgebra& alg);

LieAlgebra load_structure_constants(const std::filesystem::path& path);

/// Whole file as a string; throws IoError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace nilcortex
