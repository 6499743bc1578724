#pragma once

#include <string>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

/// Canonical single-document family format: a JSON object with keys in the
/// fixed order version, vertices, [labels,] a, b; each edge a sorted array
/// of vertex indices, each side sorted in the canonical edge order;
/// two-space indentation, one edge per line, newline-terminated. Output is
/// byte-stable across runs and platforms.
std::string serialize_family(const Family& f);

/// Parse the format above. Input that is well-formed but not canonical
/// (duplicate or unordered edges) is canonicalized; a note per affected
/// side is appended to *warnings when given. Throws std::invalid_argument
/// on malformed documents, unsupported versions, unknown keys, or
/// out-of-range indices.
Family parse_family(const std::string& text, std::vector<std::string>* warnings = nullptr);

} // namespace crossfam
