#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypersurf/hypergraph.hpp"
#include "hypersurf/surface.hpp"

namespace hypersurf {

// Shared text format: first line "k n", then one edge per line as k
// ascending space-separated vertex indices. Blank lines and '#' comments are
// ignored on input; output is canonical (header, then edges in sorted
// order), so write(read(x)) is byte-identical for canonical files.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

// metadata lines are emitted first as '# key: value' comments.
void write_hypergraph(std::ostream& out, const Hypergraph& g,
                      const std::vector<std::pair<std::string, std::string>>& metadata = {});
void write_hypergraph_file(const std::string& path, const Hypergraph& g,
                           const std::vector<std::pair<std::string, std::string>>& metadata = {});

// Surfaces use the same grammar with k = 3, faces as lines.
Surface2 read_surface(std::istream& in);
Surface2 read_surface_file(const std::string& path);
void write_surface(std::ostream& out, const Surface2& s,
                   const std::vector<std::pair<std::string, std::string>>& metadata = {});
void write_surface_file(const std::string& path, const Surface2& s,
                        const std::vector<std::pair<std::string, std::string>>& metadata = {});

}  // namespace hypersurf
