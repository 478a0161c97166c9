#pragma once

// Text round-trips for the command line tools: row-slash matrix syntax,
// permutation specs, and plain-text quiver files.

#include <string>

#include "qcy/eigen_support.hpp"

namespace qcy::textio {

// Parses "a b c/d e f/g h i" (rows separated by '/', entries by spaces or
// commas) into a square or rectangular integer matrix. Throws
// std::invalid_argument on ragged rows or non-integer entries.
IMat parse_matrix(const std::string& spec);

// Renders a matrix in the same row-slash syntax.
std::string matrix_to_string(const IMat& m);

// Permutation matrix specs, 1-based vertex labels:
//   "id"                identity on m vertices
//   "swap" | "swap=i,j" transposition (default 1,2)
//   "cycle" | "cycle=i,j,k" 3-cycle i -> j -> k -> i (default 1,2,3)
// The result P satisfies P(v, mu(v)) = 1 for the permutation mu.
IMat parse_perm(const std::string& spec, int m);

// Loads a matrix from a file: '#' comments and blank lines are skipped, the
// remaining lines are either one row each or a single row-slash line.
IMat load_matrix_file(const std::string& path);

}  // namespace qcy::textio
