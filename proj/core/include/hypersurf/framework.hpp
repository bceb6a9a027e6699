#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypersurf/hypergraph.hpp"
#include "hypersurf/matching.hpp"
#include "hypersurf/rational.hpp"
#include "hypersurf/walks.hpp"

namespace hypersurf {

// Known and open degree thresholds, stored as data. d is given as an offset
// below k (d = k - dBelowK).
struct ThresholdEntry {
    std::string family;  // "hf", "hs", "ham"
    int dBelowK;         // d = k - dBelowK
    std::optional<int> fixedK;  // entry specific to one uniformity, if set
    std::optional<Rational> value;
    std::optional<Rational> upperBound;  // for open entries with a known bound
    std::string status;                  // "known" or "open"
};

const std::vector<ThresholdEntry>& threshold_table();

// Hamilton-framework threshold for minimum d-degree in k-graphs, when known.
std::optional<Rational> hf_threshold(int k, int d);

// Evaluation of the framework properties on one graph with a chosen
// candidate subgraph F.
struct FrameworkReport {
    bool f1 = false;
    std::optional<std::size_t> f1ComponentIndex;  // the part F coincides with, when f1 holds
    std::string f1Reason;
    std::optional<FractionalMatching> f2;
    bool f3 = false;
    std::optional<std::vector<int>> f3Witness;
    std::optional<bool> f4;  // filled only by an explicit consistency check
    std::vector<ThresholdEntry> thresholds;

    bool holds() const { return f1 && f2.has_value() && f3; }
};

// Default F: the tight component with the largest vertex set (ties: most
// edges, then lowest minimum vertex). Returns edge indices.
std::vector<std::size_t> default_framework_subgraph(const Hypergraph& g);

// Evaluates F1 (F is a component covering all vertices), F2 (perfect
// fractional matching of the n-vertex subgraph F), F3 (closed walk of order
// 1 mod k inside F). F defaults to default_framework_subgraph.
FrameworkReport framework_report(const Hypergraph& g,
                                 const std::optional<std::vector<std::size_t>>& edgeSubset = std::nullopt);

using Selector = std::function<std::vector<std::size_t>(const Hypergraph&)>;

// (F4) instance check: true iff selector(H - x) and selector(H - y) have a
// tightly connected union. Empty unions count as not connected.
bool check_consistency(const Hypergraph& h, int x, int y, const Selector& selector);

}  // namespace hypersurf
