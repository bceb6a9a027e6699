#include "hypersurf/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hypersurf/error.hpp"

namespace hypersurf {

namespace {

// Parses non-comment content lines into integer rows.
struct LineParser {
    std::istream& in;
    long lineNo = 0;

    bool nextRow(std::vector<int>& row) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineNo;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            row.clear();
            const char* p = line.data() + start;
            const char* end = line.data() + line.size();
            while (p < end) {
                while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
                if (p >= end) break;
                int value = 0;
                auto [next, ec] = std::from_chars(p, end, value);
                if (ec != std::errc())
                    throw ParseError("expected an integer", lineNo);
                p = next;
                row.push_back(value);
            }
            return true;
        }
        return false;
    }
};

std::vector<std::vector<int>> readRows(std::istream& in, int& k, int& n) {
    LineParser parser{in};
    std::vector<int> row;
    if (!parser.nextRow(row)) throw ParseError("missing header line \"k n\"");
    if (row.size() != 2) throw ParseError("header must be \"k n\"", parser.lineNo);
    k = row[0];
    n = row[1];
    if (k < 2) throw ParseError("uniformity must be at least 2", parser.lineNo);
    if (n < 0) throw ParseError("vertex count must be non-negative", parser.lineNo);

    std::vector<std::vector<int>> rows;
    while (parser.nextRow(row)) {
        if (static_cast<int>(row.size()) != k)
            throw ParseError("edge needs exactly " + std::to_string(k) + " vertices", parser.lineNo);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 0 || row[i] >= n) throw ParseError("vertex out of range", parser.lineNo);
            if (i > 0 && row[i] <= row[i - 1])
                throw ParseError("edge vertices must be strictly ascending", parser.lineNo);
        }
        rows.push_back(row);
    }
    return rows;
}

void writeMetadata(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& metadata) {
    for (const auto& [key, value] : metadata) out << "# " << key << ": " << value << "\n";
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    int k = 0, n = 0;
    auto rows = readRows(in, k, n);
    try {
        return Hypergraph::fromEdges(k, n, rows);
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& g,
                      const std::vector<std::pair<std::string, std::string>>& metadata) {
    writeMetadata(out, metadata);
    out << g.uniformity() << ' ' << g.vertexCount() << '\n';
    for (std::size_t i = 0; i < g.edgeCount(); ++i) {
        auto e = g.edge(i);
        for (int j = 0; j < g.uniformity(); ++j) {
            if (j) out << ' ';
            out << e[static_cast<std::size_t>(j)];
        }
        out << '\n';
    }
}

void write_hypergraph_file(const std::string& path, const Hypergraph& g,
                           const std::vector<std::pair<std::string, std::string>>& metadata) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_hypergraph(out, g, metadata);
}

Surface2 read_surface(std::istream& in) {
    int k = 0, n = 0;
    auto rows = readRows(in, k, n);
    if (k != 3) throw ParseError("surface files must have uniformity 3");
    std::vector<Triangle> faces;
    faces.reserve(rows.size());
    for (const auto& r : rows) faces.push_back({r[0], r[1], r[2]});
    try {
        return Surface2(n, std::move(faces));
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

Surface2 read_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_surface(in);
}

void write_surface(std::ostream& out, const Surface2& s,
                   const std::vector<std::pair<std::string, std::string>>& metadata) {
    writeMetadata(out, metadata);
    out << 3 << ' ' << s.vertexCount() << '\n';
    for (const auto& f : s.faces()) out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_surface_file(const std::string& path, const Surface2& s,
                        const std::vector<std::pair<std::string, std::string>>& metadata) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_surface(out, s, metadata);
}

}  // namespace hypersurf
