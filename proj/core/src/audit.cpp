#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <random>
#include <thread>

#include "hypersurf/error.hpp"
#include "hypersurf/oracle.hpp"
#include "hypersurf/util.hpp"

namespace hypersurf::oracle {

namespace {

std::uint64_t bernoulliThreshold(double p) {
    if (p >= 1.0) return ~0ull;
    if (p <= 0.0) return 0;
    return static_cast<std::uint64_t>(p * 18446744073709551615.0);
}

// Colex-ordered triples of [0, n) with per-vertex membership masks, shared
// by the mask scanners. Masks are pairs of uint64 words (C(9,3) = 84 bits is
// the largest sampled case).
struct TripleSpace {
    int n;
    std::vector<std::array<int, 3>> triples;
    std::vector<std::array<std::uint64_t, 2>> vertexMask;  // triples containing v
    std::vector<std::array<std::uint16_t, 3>> pairKeys;    // pair index of each 2-subset

    explicit TripleSpace(int n_) : n(n_) {
        for (int c = 2; c < n; ++c)
            for (int b = 1; b < c; ++b)
                for (int a = 0; a < b; ++a) triples.push_back({a, b, c});
        vertexMask.assign(static_cast<std::size_t>(n), {0, 0});
        auto pairIndex = [this](int u, int v) {
            return static_cast<std::uint16_t>(u * n + v);
        };
        pairKeys.resize(triples.size());
        for (std::size_t t = 0; t < triples.size(); ++t) {
            const auto& tr = triples[t];
            for (int v : tr) vertexMask[static_cast<std::size_t>(v)][t >> 6] |= 1ull << (t & 63);
            pairKeys[t] = {pairIndex(tr[0], tr[1]), pairIndex(tr[0], tr[2]), pairIndex(tr[1], tr[2])};
        }
    }

    std::size_t count() const { return triples.size(); }
};

// Minimum degree of the mask graph.
std::int64_t maskMinDegree(const TripleSpace& ts, const std::array<std::uint64_t, 2>& mask) {
    std::int64_t best = -1;
    for (int v = 0; v < ts.n; ++v) {
        const auto& vm = ts.vertexMask[static_cast<std::size_t>(v)];
        std::int64_t d = std::popcount(mask[0] & vm[0]) + std::popcount(mask[1] & vm[1]);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

// Spanning tight component test on a mask graph; scratch buffers are reused
// across calls.
struct MaskComponentScratch {
    std::vector<std::int32_t> pairRep;
    std::vector<std::int32_t> parent;
    std::vector<std::uint32_t> cover;
    std::vector<std::int32_t> edges;

    explicit MaskComponentScratch(int n) : pairRep(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
};

bool maskHasSpanningComponent(const TripleSpace& ts, const std::array<std::uint64_t, 2>& mask,
                              MaskComponentScratch& scratch) {
    scratch.edges.clear();
    for (std::size_t w = 0; w < 2; ++w) {
        std::uint64_t bits = mask[w];
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            scratch.edges.push_back(static_cast<std::int32_t>((w << 6) + static_cast<std::size_t>(b)));
        }
    }
    if (scratch.edges.empty()) return false;

    std::fill(scratch.pairRep.begin(), scratch.pairRep.end(), -1);
    const std::size_t m = scratch.edges.size();
    scratch.parent.resize(m);
    for (std::size_t i = 0; i < m; ++i) scratch.parent[i] = static_cast<std::int32_t>(i);
    auto find = [&](std::int32_t x) {
        while (scratch.parent[static_cast<std::size_t>(x)] != x) {
            scratch.parent[static_cast<std::size_t>(x)] =
                scratch.parent[static_cast<std::size_t>(scratch.parent[static_cast<std::size_t>(x)])];
            x = scratch.parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::uint16_t key : ts.pairKeys[static_cast<std::size_t>(scratch.edges[i])]) {
            auto& rep = scratch.pairRep[key];
            if (rep < 0) {
                rep = static_cast<std::int32_t>(i);
            } else {
                std::int32_t a = find(rep), b = find(static_cast<std::int32_t>(i));
                if (a != b) scratch.parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
    }

    scratch.cover.assign(m, 0);
    const std::uint32_t full = (1u << ts.n) - 1;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& tr = ts.triples[static_cast<std::size_t>(scratch.edges[i])];
        auto root = static_cast<std::size_t>(find(static_cast<std::int32_t>(i)));
        scratch.cover[root] |= (1u << tr[0]) | (1u << tr[1]) | (1u << tr[2]);
        if (scratch.cover[root] == full) return true;
    }
    return false;
}

Hypergraph maskToGraph(const TripleSpace& ts, const std::array<std::uint64_t, 2>& mask) {
    std::vector<int> flat;
    for (std::size_t t = 0; t < ts.count(); ++t) {
        if (mask[t >> 6] & (1ull << (t & 63))) {
            flat.push_back(ts.triples[t][0]);
            flat.push_back(ts.triples[t][1]);
            flat.push_back(ts.triples[t][2]);
        }
    }
    return Hypergraph(3, ts.n, std::move(flat));
}

// Degree bound of the theorem: delta_1 >= C(n-1,2)/2 + 1, evaluated as an
// exact integer comparison (2*delta >= C(n-1,2) + 2).
bool meetsDegreeBound(std::int64_t delta, int n) {
    return 2 * delta >= static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(n - 1), 2)) + 2;
}

// Production-path re-verification of a candidate counterexample.
bool confirmCounterexample(const Hypergraph& g) {
    if (!meetsDegreeBound(min_d_degree(g, 1), g.vertexCount())) return false;
    return !tight_components(g).spanningPartIndex.has_value();
}

struct ScanState {
    std::uint64_t tested = 0;
    std::vector<std::array<std::uint64_t, 2>> counterMasks;
    std::int64_t extremalDegree = -1;
    std::array<std::uint64_t, 2> extremalMask{0, 0};
    bool haveExtremal = false;
};

void scanRange(const TripleSpace& ts, std::uint64_t lo, std::uint64_t hi, ScanState& out) {
    MaskComponentScratch scratch(ts.n);
    for (std::uint64_t m = lo; m < hi; ++m) {
        std::array<std::uint64_t, 2> mask{m, 0};
        std::int64_t delta = maskMinDegree(ts, mask);
        const bool needSpanning = meetsDegreeBound(delta, ts.n) || delta > out.extremalDegree;
        if (!needSpanning) {
            ++out.tested;
            continue;
        }
        bool spanning = maskHasSpanningComponent(ts, mask, scratch);
        if (meetsDegreeBound(delta, ts.n) && !spanning) out.counterMasks.push_back(mask);
        if (!spanning && delta > out.extremalDegree) {
            out.extremalDegree = delta;
            out.extremalMask = mask;
            out.haveExtremal = true;
        }
        ++out.tested;
    }
}

AuditResult finishScan(const TripleSpace& ts, std::vector<ScanState>& states) {
    AuditResult res;
    res.n = ts.n;
    for (auto& st : states) {
        res.tested += st.tested;
        for (const auto& mask : st.counterMasks) {
            Hypergraph g = maskToGraph(ts, mask);
            if (confirmCounterexample(g)) res.counterexamples.push_back(std::move(g));
        }
        if (st.haveExtremal) {
            if (!res.extremal || st.extremalDegree > res.extremal->first)
                res.extremal = {st.extremalDegree, maskToGraph(ts, st.extremalMask)};
        }
    }
    return res;
}

}  // namespace

AuditResult verify_spanning_component_theorem(int n, int threads) {
    if (n < 3) throw ParameterError("theorem audit needs n >= 3");
    const std::uint64_t tripleCount = binomial(static_cast<std::uint64_t>(n), 3);
    if (tripleCount > 35)
        throw ResourceError("exhaustive audit bounded to C(n,3) <= 35 triples, got " +
                            std::to_string(tripleCount));
    const auto start = std::chrono::steady_clock::now();
    TripleSpace ts(n);
    const std::uint64_t total = 1ull << tripleCount;

    threads = std::max(1, threads);
    std::vector<ScanState> states(static_cast<std::size_t>(threads));
    if (threads == 1) {
        scanRange(ts, 0, total, states[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + static_cast<std::uint64_t>(threads) - 1) / static_cast<std::uint64_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
            const std::uint64_t hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&ts, lo, hi, &states, t] { scanRange(ts, lo, hi, states[static_cast<std::size_t>(t)]); });
        }
        for (auto& th : pool) th.join();
    }

    AuditResult res = finishScan(ts, states);
    res.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

AuditResult verify_spanning_component_theorem(int n, const SampleMode& mode) {
    if (n < 3) throw ParameterError("theorem audit needs n >= 3");
    const std::uint64_t tripleCount = binomial(static_cast<std::uint64_t>(n), 3);
    if (tripleCount > 128) throw ResourceError("sampled audit supports up to 128 triples");
    const auto start = std::chrono::steady_clock::now();
    TripleSpace ts(n);
    MaskComponentScratch scratch(n);

    std::mt19937_64 rng(mode.seed);
    // Independent inclusion with probability p via an integer threshold, so
    // results are identical across platforms.
    const std::uint64_t threshold = bernoulliThreshold(mode.p);

    ScanState st;
    for (std::uint64_t i = 0; i < mode.count; ++i) {
        std::array<std::uint64_t, 2> mask{0, 0};
        for (std::uint64_t t = 0; t < tripleCount; ++t)
            if (rng() <= threshold) mask[t >> 6] |= 1ull << (t & 63);
        std::int64_t delta = maskMinDegree(ts, mask);
        const bool passes = meetsDegreeBound(delta, n);
        if (passes || delta > st.extremalDegree) {
            bool spanning = maskHasSpanningComponent(ts, mask, scratch);
            if (passes && !spanning) st.counterMasks.push_back(mask);
            if (!spanning && delta > st.extremalDegree) {
                st.extremalDegree = delta;
                st.extremalMask = mask;
                st.haveExtremal = true;
            }
        }
        ++st.tested;
    }

    std::vector<ScanState> states{std::move(st)};
    AuditResult res = finishScan(ts, states);
    res.seed = mode.seed;
    res.sampleProbability = mode.p;
    res.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

ThresholdResult exact_component_threshold(int n) {
    if (n < 3) throw ParameterError("threshold scan needs n >= 3");
    const std::uint64_t tripleCount = binomial(static_cast<std::uint64_t>(n), 3);
    if (tripleCount > 35)
        throw ResourceError("threshold scan bounded to C(n,3) <= 35 triples");
    TripleSpace ts(n);
    MaskComponentScratch scratch(n);

    std::int64_t bestDegree = -1;
    std::array<std::uint64_t, 2> bestMask{0, 0};
    const std::uint64_t total = 1ull << tripleCount;
    for (std::uint64_t m = 0; m < total; ++m) {
        std::array<std::uint64_t, 2> mask{m, 0};
        std::int64_t delta = maskMinDegree(ts, mask);
        if (delta <= bestDegree) continue;
        if (!maskHasSpanningComponent(ts, mask, scratch)) {
            bestDegree = delta;
            bestMask = mask;
        }
    }

    ThresholdResult out{n, bestDegree + 1, maskToGraph(ts, bestMask), total};
    return out;
}

CodegreeProbe codegree_component_probe(const Hypergraph& g) {
    CodegreeProbe probe;
    probe.codegree = min_d_degree(g, g.uniformity() - 1);
    probe.threshold = Rational(g.vertexCount()) / g.uniformity();
    probe.applies = Rational(probe.codegree) > probe.threshold;
    probe.spanning = tight_components(g).spanningPartIndex.has_value();
    probe.counterexample = probe.applies && !probe.spanning;
    return probe;
}

CodegreeBatchResult codegree_probe_random(int k, int n, std::uint64_t count, std::uint64_t seed, double p) {
    if (k < 2 || n < k) throw ParameterError("random probe needs k >= 2 and n >= k");
    if (k > 4) throw ParameterError("random probe supports k <= 4");
    CodegreeBatchResult out;
    out.seed = seed;
    std::mt19937_64 rng(seed);
    const std::uint64_t threshold = bernoulliThreshold(p);

    std::vector<std::array<int, 4>> ksets;
    for_each_subset(n, k, [&](const std::vector<int>& pick) {
        std::array<int, 4> a{0, 0, 0, 0};
        for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i)];
        ksets.push_back(a);
    });

    for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<int> flat;
        for (const auto& ks : ksets) {
            if (rng() <= threshold)
                for (int j = 0; j < k; ++j) flat.push_back(ks[static_cast<std::size_t>(j)]);
        }
        Hypergraph g(k, n, std::move(flat));
        ++out.tested;
        if (g.edgeCount() == 0) continue;
        CodegreeProbe probe = codegree_component_probe(g);
        if (probe.applies) ++out.applicable;
        if (probe.counterexample) out.counterexamples.push_back(std::move(g));
    }
    return out;
}

}  // namespace hypersurf::oracle
