#ifndef ORCAP_CLIQUE_HPP
#define ORCAP_CLIQUE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "orcap/graph.hpp"
#include "orcap/search_budget.hpp"

namespace orcap {

struct CliqueResult {
    int size = 0;
    std::vector<int> witness;  // ascending vertex indices
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
};

inline bool verify_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

inline bool verify_independent_set(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

namespace detail {

using Word = Graph::Word;
using Bits = std::vector<Word>;

inline int bits_count(const Bits& b) {
    int c = 0;
    for (Word w : b) c += std::popcount(w);
    return c;
}

inline bool bits_empty(const Bits& b) {
    for (Word w : b)
        if (w) return false;
    return true;
}

inline void bits_clear(Bits& b, int v) { b[v >> 6] &= ~(Word(1) << (v & 63)); }
inline void bits_set(Bits& b, int v) { b[v >> 6] |= Word(1) << (v & 63); }
inline bool bits_test(const Bits& b, int v) { return (b[v >> 6] >> (v & 63)) & 1u; }

template <typename Fn>
inline void bits_for_each(const Bits& b, Fn&& fn) {
    for (std::size_t w = 0; w < b.size(); ++w) {
        Word x = b[w];
        while (x) {
            fn(static_cast<int>(w * 64) + std::countr_zero(x));
            x &= x - 1;
        }
    }
}

/// Tomita-style maximum clique: candidates as bitsets, greedy coloring
/// bound per node, vertices pre-sorted by degeneracy order.
class CliqueSearcher {
  public:
    CliqueSearcher(const Graph& g, const SearchBudget& budget)
        : n_(g.order()), wpr_(g.words_per_row()), clock_(budget) {
        // degeneracy order: repeatedly remove a minimum-degree vertex
        std::vector<int> deg(n_), order;
        std::vector<char> removed(n_, 0);
        for (int v = 0; v < n_; ++v) deg[v] = g.degree(v);
        order.reserve(n_);
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            for (int v = 0; v < n_; ++v)
                if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
            removed[best] = 1;
            order.push_back(best);
            for (int u = 0; u < n_; ++u)
                if (!removed[u] && g.adjacent(best, u)) --deg[u];
        }
        // later-removed vertices first makes dense cores get explored early
        std::reverse(order.begin(), order.end());
        to_orig_ = order;
        from_orig_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) from_orig_[order[i]] = i;
        adj_.assign(static_cast<std::size_t>(n_) * wpr(), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (g.adjacent(to_orig_[i], to_orig_[j]))
                    adj_[static_cast<std::size_t>(i) * wpr() + (j >> 6)] |= Word(1) << (j & 63);
    }

    /// Maximize; fills best clique (original labels, sorted ascending).
    CliqueResult maximize() {
        CliqueResult r;
        if (n_ == 0) {
            r.proven_optimal = true;
            return r;
        }
        Bits all(wpr(), 0);
        for (int v = 0; v < n_; ++v) bits_set(all, v);
        best_ = 0;
        best_clique_.clear();
        cur_.clear();
        stop_at_ = n_ + 1;
        expand(all);
        r.size = best_;
        r.nodes_explored = clock_.nodes();
        r.proven_optimal = !clock_.exhausted();
        r.witness.reserve(best_clique_.size());
        for (int v : best_clique_) r.witness.push_back(to_orig_[v]);
        std::sort(r.witness.begin(), r.witness.end());
        return r;
    }

    /// Decision: does a clique of size `need` exist inside `subset`
    /// (original labels)? Inconclusive (budget) reports false together
    /// with exhausted().
    bool exists_clique_within(const std::vector<int>& subset, int need) {
        if (need <= 0) return true;
        Bits p(wpr(), 0);
        for (int v : subset) bits_set(p, from_orig_[v]);
        best_ = need - 1;
        best_clique_.clear();
        cur_.clear();
        stop_at_ = need;
        expand(p);
        return best_ >= need;
    }

    std::uint64_t nodes() const { return clock_.nodes(); }
    bool exhausted() const { return clock_.exhausted(); }

  private:
    int wpr() const { return wpr_ == 0 ? 1 : wpr_; }

    const Word* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * wpr(); }

    // Greedy coloring of candidate set; emits vertices ordered by
    // ascending color class so the caller can scan from the back.
    void color_sort(const Bits& p, std::vector<int>& order, std::vector<int>& color) const {
        order.clear();
        color.clear();
        Bits q = p;
        Bits cand(q.size());
        int col = 0;
        while (!bits_empty(q)) {
            ++col;
            cand = q;
            while (true) {
                int v = -1;
                for (std::size_t w = 0; w < cand.size(); ++w)
                    if (cand[w]) {
                        v = static_cast<int>(w * 64) + std::countr_zero(cand[w]);
                        break;
                    }
                if (v < 0) break;
                order.push_back(v);
                color.push_back(col);
                bits_clear(q, v);
                bits_clear(cand, v);
                const Word* rv = row(v);
                for (std::size_t w = 0; w < cand.size(); ++w) cand[w] &= ~rv[w];
            }
        }
    }

    void expand(Bits& p) {
        if (clock_.tick()) return;
        std::vector<int> order, color;
        color_sort(p, order, color);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(cur_.size()) + color[i] <= best_) return;
            const int v = order[i];
            cur_.push_back(v);
            Bits next(p.size());
            const Word* rv = row(v);
            bool empty = true;
            for (std::size_t w = 0; w < p.size(); ++w) {
                next[w] = p[w] & rv[w];
                if (next[w]) empty = false;
            }
            if (static_cast<int>(cur_.size()) > best_) {
                best_ = static_cast<int>(cur_.size());
                best_clique_ = cur_;
            }
            if (!empty && best_ < stop_at_) expand(next);
            cur_.pop_back();
            bits_clear(p, v);
            if (best_ >= stop_at_ || clock_.exhausted()) return;
        }
    }

    int n_;
    int wpr_;
    std::vector<Word> adj_;
    std::vector<int> to_orig_, from_orig_;
    BudgetClock clock_;
    int best_ = 0;
    int stop_at_ = 0;
    std::vector<int> cur_, best_clique_;
};

}  // namespace detail

/// Exact maximum clique. With deterministic_witness (the default) the
/// reported witness is the lexicographically least maximum clique; the
/// optimum value itself never depends on that pass. On budget exhaustion
/// the result is inconclusive and carries the best clique found, a valid
/// lower bound.
inline CliqueResult max_clique(const Graph& g, const SearchBudget& budget = {},
                               bool deterministic_witness = true) {
    detail::CliqueSearcher searcher(g, budget);
    CliqueResult r = searcher.maximize();
    if (r.proven_optimal && deterministic_witness && r.size > 0) {
        // lexicographically least witness: grow the sorted clique by
        // always taking the least vertex that still completes to size.
        std::vector<int> chosen;
        std::vector<int> cand(g.order());
        for (int v = 0; v < g.order(); ++v) cand[v] = v;
        bool ok = true;
        while (static_cast<int>(chosen.size()) < r.size && ok) {
            ok = false;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                const int v = cand[i];
                std::vector<int> next;
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
                const int need = r.size - static_cast<int>(chosen.size()) - 1;
                if (searcher.exists_clique_within(next, need)) {
                    chosen.push_back(v);
                    cand = std::move(next);
                    ok = true;
                    break;
                }
                if (searcher.exhausted()) break;
            }
        }
        if (ok && static_cast<int>(chosen.size()) == r.size) r.witness = std::move(chosen);
        r.nodes_explored = searcher.nodes();
        r.proven_optimal = r.proven_optimal && static_cast<int>(r.witness.size()) == r.size;
    }
    if (!verify_clique(g, r.witness))
        throw CertificateError("max_clique witness failed re-verification");
    return r;
}

/// alpha(G) = omega(complement G); witness re-verified as independent in G.
inline CliqueResult max_independent_set(const Graph& g, const SearchBudget& budget = {},
                                        bool deterministic_witness = true) {
    CliqueResult r = max_clique(complement(g), budget, deterministic_witness);
    if (!verify_independent_set(g, r.witness))
        throw CertificateError("independent-set witness failed re-verification");
    return r;
}

/// The n vertices (v, sigma(v)) of G^2 for a complementing permutation
/// sigma, verified to form a clique. This is the square-clique
/// construction that gives every self-complementary graph capacity at
/// least sqrt(n).
inline std::vector<int> selfcomp_square_clique(const Graph& g, const std::vector<int>& sigma) {
    const int n = g.order();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("selfcomp_square_clique: permutation size mismatch");
    // sigma must be complementing (checked pair by pair, independent of caller)
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) == g.adjacent(sigma[u], sigma[v]))
                throw std::invalid_argument("selfcomp_square_clique: sigma is not complementing");
    std::vector<int> clique(n);
    for (int v = 0; v < n; ++v) clique[v] = pair_index(v, sigma[v], n);
    // verify against an actually constructed square when it fits the budget
    if (static_cast<long long>(n) * n <= kDefaultVertexBudget && n > 0) {
        const Graph sq = or_power(g, 2);
        if (!verify_clique(sq, clique))
            throw CertificateError("square clique failed verification in G^2");
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.adjacent(u, v) && !g.adjacent(sigma[u], sigma[v]))
                    throw CertificateError("square clique failed pairwise verification");
    }
    return clique;
}

}  // namespace orcap

#endif  // ORCAP_CLIQUE_HPP
