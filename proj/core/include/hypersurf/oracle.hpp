#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersurf/hypergraph.hpp"
#include "hypersurf/rational.hpp"
#include "hypersurf/surface.hpp"

namespace hypersurf::oracle {

struct AuditResult {
    int n = 0;
    std::uint64_t tested = 0;
    std::vector<Hypergraph> counterexamples;
    // Best minimum degree among graphs with no spanning component, plus one
    // witness attaining it.
    std::optional<std::pair<std::int64_t, Hypergraph>> extremal;
    std::optional<std::uint64_t> seed;
    double sampleProbability = 0.0;
    double elapsedSeconds = 0.0;
};

struct SampleMode {
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    double p = 0.7;  // independent edge probability
};

// Scans 3-graphs on n vertices for violations of "minimum degree at least
// C(n-1,2)/2 + 1 forces a spanning tight component". Exhaustive mode
// enumerates all 2^C(n,3) edge subsets as bitmasks in colex triple order and
// requires C(n,3) <= 35; threads > 1 splits the mask range.
AuditResult verify_spanning_component_theorem(int n, int threads = 1);
AuditResult verify_spanning_component_theorem(int n, const SampleMode& mode);

struct ThresholdResult {
    int n = 0;
    std::int64_t threshold = 0;  // 1 + max min-degree over graphs without a spanning component
    Hypergraph witness;          // attains threshold - 1 with no spanning component
    std::uint64_t tested = 0;
};

ThresholdResult exact_component_threshold(int n);

enum class SearchStatus { Found, Absent, BudgetExhausted };

struct SphereSearchResult {
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::optional<Surface2> sphere;
    std::uint64_t nodes = 0;
    std::string reason;  // for Absent: which argument proved it
};

struct SearchBudget {
    std::uint64_t maxNodes = 10'000'000;
};

// Backtracking search for a spanning sphere subcomplex of a 3-graph:
// exactly 2n-4 faces, every pair in 0 or 2 faces, links single cycles.
// Proven absence (counting bounds, no spanning component, exhausted search)
// is distinguished from running out of budget.
SphereSearchResult search_spanning_sphere(const Hypergraph& h, const SearchBudget& budget = {});

struct CodegreeProbe {
    std::int64_t codegree = 0;  // minimum (k-1)-degree
    Rational threshold;         // n / k
    bool applies = false;       // codegree > n/k
    bool spanning = false;
    bool counterexample = false;
};

CodegreeProbe codegree_component_probe(const Hypergraph& g);

struct CodegreeBatchResult {
    std::uint64_t tested = 0;
    std::uint64_t applicable = 0;
    std::vector<Hypergraph> counterexamples;
    std::uint64_t seed = 0;
};

// Random k-graph batch for the codegree conjecture: each k-set becomes an
// edge independently with probability p.
CodegreeBatchResult codegree_probe_random(int k, int n, std::uint64_t count, std::uint64_t seed, double p);

}  // namespace hypersurf::oracle
