#pragma once

#include <optional>
#include <vector>

#include "hypersurf/hypergraph.hpp"
#include "hypersurf/rational.hpp"

namespace hypersurf {

// Fractional matching with exact rational weights, one per edge index of the
// source hypergraph. Every vertex load is at most 1; perfect means the total
// weight is exactly n/k.
struct FractionalMatching {
    std::vector<Rational> weights;
    Rational size;

    bool validate(const Hypergraph& g) const;
    bool isPerfect(const Hypergraph& g) const;
};

// Maximum fractional matching via an exact-rational simplex (Bland's rule,
// so pivoting is deterministic and terminating).
FractionalMatching max_fractional_matching(const Hypergraph& g);

// The matching if a perfect one exists (LP optimum equals n/k exactly),
// nothing otherwise.
std::optional<FractionalMatching> perfect_fractional_matching(const Hypergraph& g);

}  // namespace hypersurf
