#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

// Plain-text instance format:
//
//   k m n
//   v v ... v      (m lines, k 0-based vertex ids each)
//
// Lines starting with '#' and blank lines are ignored; the text must end with
// a newline. The writer emits the normal form, so write(parse(write(g))) is
// byte-identical to write(g).

std::string write_hgr(const Hypergraph& g);

/// Throws Error(ParseError) on malformed text and the Hypergraph::build
/// errors on invalid content.
Hypergraph parse_hgr(std::string_view text);

Hypergraph read_hgr_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace hypertrans
