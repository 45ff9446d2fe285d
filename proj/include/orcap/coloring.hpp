#ifndef ORCAP_COLORING_HPP
#define ORCAP_COLORING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "orcap/clique.hpp"
#include "orcap/graph.hpp"
#include "orcap/search_budget.hpp"

namespace orcap {

struct ColoringResult {
    Feasibility status = Feasibility::Inconclusive;
    std::vector<int> colors;  // valid when Satisfiable
    std::uint64_t nodes_explored = 0;
};

inline bool verify_coloring(const Graph& g, const std::vector<int>& colors, int k) {
    if (static_cast<int>(colors.size()) != g.order()) return false;
    for (int c : colors)
        if (c < 0 || c >= k) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

/// Greedy Welsh-Powell coloring; always succeeds, used as the upper
/// bound seed for chromatic_number. Returns the number of colors used.
inline int greedy_coloring(const Graph& g, std::vector<int>& colors) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    colors.assign(n, -1);
    int used = 0;
    for (int v : order) {
        std::uint64_t taken = 0;
        for (int u : g.neighbors(v))
            if (colors[u] >= 0 && colors[u] < 64) taken |= std::uint64_t(1) << colors[u];
        int c = 0;
        while (c < 64 && (taken >> c) & 1) ++c;
        colors[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

namespace detail {

class ColoringSearcher {
  public:
    ColoringSearcher(const Graph& g, int k, const SearchBudget& budget)
        : g_(g), n_(g.order()), k_(k), clock_(budget) {}

    ColoringResult solve() {
        ColoringResult r;
        if (k_ >= n_) {  // distinct colors always work
            r.status = Feasibility::Satisfiable;
            r.colors.resize(n_);
            std::iota(r.colors.begin(), r.colors.end(), 0);
            return r;
        }
        colors_.assign(n_, -1);
        // precolor a greedy maximal clique: its vertices need distinct
        // colors in any proper coloring, so fixing them breaks the color
        // symmetry without losing solutions
        std::vector<int> clique = greedy_maximal_clique();
        if (static_cast<int>(clique.size()) > k_) {
            r.status = Feasibility::Unsatisfiable;
            r.nodes_explored = clock_.nodes();
            return r;
        }
        int next = 0;
        for (int v : clique) colors_[v] = next++;
        used_ = next;
        assigned_ = next;
        const bool found = extend();
        r.nodes_explored = clock_.nodes();
        if (found) {
            r.status = Feasibility::Satisfiable;
            r.colors = colors_;
            if (!verify_coloring(g_, r.colors, k_))
                throw CertificateError("coloring witness failed re-verification");
        } else {
            r.status = clock_.exhausted() ? Feasibility::Inconclusive : Feasibility::Unsatisfiable;
        }
        return r;
    }

  private:
    std::vector<int> greedy_maximal_clique() const {
        std::vector<int> best;
        int seed = 0;
        for (int v = 1; v < n_; ++v)
            if (g_.degree(v) > g_.degree(seed)) seed = v;
        best.push_back(seed);
        for (;;) {
            int pick = -1;
            for (int v = 0; v < n_; ++v) {
                bool ok = true;
                for (int u : best)
                    if (u == v || !g_.adjacent(u, v)) {
                        ok = false;
                        break;
                    }
                if (ok && (pick < 0 || g_.degree(v) > g_.degree(pick))) pick = v;
            }
            if (pick < 0) break;
            best.push_back(pick);
        }
        return best;
    }

    // DSATUR choice: most saturated, then largest degree, then least index.
    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colors_[v] >= 0) continue;
            std::uint64_t mask = 0;
            for (int u : g_.neighbors(v))
                if (colors_[u] >= 0) mask |= std::uint64_t(1) << colors_[u];
            const int sat = std::popcount(mask);
            const int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool extend() {
        if (clock_.tick()) return false;
        if (assigned_ == n_) return true;
        const int v = pick_vertex();
        std::uint64_t taken = 0;
        for (int u : g_.neighbors(v))
            if (colors_[u] >= 0) taken |= std::uint64_t(1) << colors_[u];
        // colors are introduced in order: at most one brand-new class
        const int limit = std::min(k_, used_ + 1);
        for (int c = 0; c < limit; ++c) {
            if ((taken >> c) & 1) continue;
            colors_[v] = c;
            ++assigned_;
            const int prev_used = used_;
            used_ = std::max(used_, c + 1);
            if (extend()) return true;
            used_ = prev_used;
            --assigned_;
            colors_[v] = -1;
            if (clock_.exhausted()) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_, k_;
    BudgetClock clock_;
    std::vector<int> colors_;
    int used_ = 0;
    int assigned_ = 0;
};

}  // namespace detail

/// Proper k-coloring if one exists, exhaustive refutation otherwise;
/// Inconclusive only on budget exhaustion.
inline ColoringResult is_k_colorable(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k < 1) throw std::invalid_argument("is_k_colorable: k must be >= 1");
    if (k > 64) {
        // color masks are 64-bit; beyond that k >= n always holds in our uses
        if (k >= g.order()) {
            ColoringResult r;
            r.status = Feasibility::Satisfiable;
            r.colors.resize(g.order());
            std::iota(r.colors.begin(), r.colors.end(), 0);
            return r;
        }
        throw std::invalid_argument("is_k_colorable: k > 64 unsupported");
    }
    return detail::ColoringSearcher(g, k, budget).solve();
}

struct ChromaticResult {
    int lower = 0;
    int upper = 0;          // lower == upper iff exact
    bool exact = false;
    std::vector<int> coloring;  // proper coloring with `upper` colors
    std::uint64_t nodes_explored = 0;
};

/// Exact chromatic number by binary search between the clique lower
/// bound and the greedy upper bound; returns the bracketing interval if
/// any decision subcall is inconclusive.
inline ChromaticResult chromatic_number(const Graph& g, const SearchBudget& budget = {}) {
    ChromaticResult r;
    if (g.order() == 0) {
        r.exact = true;
        return r;
    }
    CliqueResult clique = max_clique(g, budget, /*deterministic_witness=*/false);
    r.nodes_explored += clique.nodes_explored;
    int lo = std::max(1, clique.size);
    std::vector<int> greedy;
    int hi = greedy_coloring(g, greedy);
    hi = std::max(hi, lo);
    r.coloring = greedy;
    bool conclusive = true;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        ColoringResult res = is_k_colorable(g, mid, budget);
        r.nodes_explored += res.nodes_explored;
        if (res.status == Feasibility::Satisfiable) {
            hi = mid;
            r.coloring = res.colors;
        } else if (res.status == Feasibility::Unsatisfiable) {
            lo = mid + 1;
        } else {
            conclusive = false;
            break;
        }
    }
    r.lower = lo;
    r.upper = hi;
    r.exact = conclusive && lo == hi;
    return r;
}

}  // namespace orcap

#endif  // ORCAP_COLORING_HPP
