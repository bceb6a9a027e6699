#include "hypersurf/matching.hpp"

#include <cstddef>

#include "hypersurf/error.hpp"

namespace hypersurf {

bool FractionalMatching::validate(const Hypergraph& g) const {
    if (weights.size() != g.edgeCount()) return false;
    Rational total = 0;
    std::vector<Rational> load(static_cast<std::size_t>(g.vertexCount()), Rational(0));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0 || weights[i] > 1) return false;
        total += weights[i];
        for (int v : g.edge(i)) load[static_cast<std::size_t>(v)] += weights[i];
    }
    if (total != size) return false;
    for (const auto& l : load)
        if (l > 1) return false;
    return true;
}

bool FractionalMatching::isPerfect(const Hypergraph& g) const {
    return size == Rational(g.vertexCount()) / g.uniformity();
}

namespace {

// Dense simplex tableau for: maximize sum(w) subject to, per vertex,
// sum of incident w <= 1 and w >= 0. Slack basis is feasible, Bland's rule
// keeps every pivot choice deterministic and the run finite.
class SimplexTableau {
public:
    SimplexTableau(const Hypergraph& g)
        : rows_(static_cast<std::size_t>(g.vertexCount())),
          cols_(g.edgeCount() + static_cast<std::size_t>(g.vertexCount()) + 1),
          vars_(g.edgeCount()) {
        tab_.assign(rows_ + 1, std::vector<Rational>(cols_, Rational(0)));
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            tab_[r][vars_ + r] = 1;  // slack
            tab_[r][cols_ - 1] = 1;  // rhs
            basis_[r] = vars_ + r;
        }
        for (std::size_t e = 0; e < g.edgeCount(); ++e)
            for (int v : g.edge(e)) tab_[static_cast<std::size_t>(v)][e] = 1;
        // Objective row holds -c so optimality is "no negative entries".
        for (std::size_t e = 0; e < vars_; ++e) tab_[rows_][e] = -1;
    }

    void solve() {
        while (true) {
            std::size_t pivotCol = cols_ - 1;
            for (std::size_t c = 0; c + 1 < cols_; ++c) {
                if (tab_[rows_][c] < 0) {
                    pivotCol = c;  // Bland: first improving column
                    break;
                }
            }
            if (pivotCol == cols_ - 1) return;  // optimal

            std::size_t pivotRow = rows_;
            Rational bestRatio = 0;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (tab_[r][pivotCol] <= 0) continue;
                Rational ratio = tab_[r][cols_ - 1] / tab_[r][pivotCol];
                if (pivotRow == rows_ || ratio < bestRatio ||
                    (ratio == bestRatio && basis_[r] < basis_[pivotRow])) {
                    pivotRow = r;
                    bestRatio = ratio;
                }
            }
            if (pivotRow == rows_) return;  // unbounded; cannot happen here (loads are capped)
            pivot(pivotRow, pivotCol);
        }
    }

    Rational objective() const { return tab_[rows_][cols_ - 1]; }

    std::vector<Rational> solution() const {
        std::vector<Rational> w(vars_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] < vars_) w[basis_[r]] = tab_[r][cols_ - 1];
        return w;
    }

private:
    void pivot(std::size_t pr, std::size_t pc) {
        Rational inv = tab_[pr][pc];
        for (auto& x : tab_[pr]) x /= inv;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == pr) continue;
            Rational factor = tab_[r][pc];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) tab_[r][c] -= factor * tab_[pr][c];
        }
        basis_[pr] = pc;
    }

    std::size_t rows_, cols_, vars_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;
};

}  // namespace

FractionalMatching max_fractional_matching(const Hypergraph& g) {
    if (g.vertexCount() < 1) throw ParameterError("matching needs at least one vertex");
    if (g.edgeCount() == 0) return FractionalMatching{{}, Rational(0)};
    SimplexTableau tableau(g);
    tableau.solve();
    FractionalMatching m{tableau.solution(), tableau.objective()};
    return m;
}

std::optional<FractionalMatching> perfect_fractional_matching(const Hypergraph& g) {
    FractionalMatching m = max_fractional_matching(g);
    if (!m.isPerfect(g)) return std::nullopt;
    return m;
}

}  // namespace hypersurf
