#ifndef ORCAP_GRAPH_HPP
#define ORCAP_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orcap {

/// Thrown when a requested construction would exceed a size budget.
/// Callers are expected to lower the power / shrink the input, never to
/// receive a silently truncated graph.
struct SizeBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an internally produced certificate fails re-verification.
struct CertificateError : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr int kDefaultVertexBudget = 20000;
inline constexpr int kDefaultIsoVertexBudget = 64;

/// Vertex (x,u) of any product of F and G sits at index x*|V(G)|+u.
/// Every witness emitted anywhere in the library uses this indexing.
inline int pair_index(int x, int u, int ng) { return x * ng + u; }
inline std::pair<int, int> pair_unindex(int idx, int ng) { return {idx / ng, idx % ng}; }

class GraphBuilder;

/// Immutable simple graph: vertex count plus symmetric adjacency bit rows.
/// All operations on graphs are pure functions returning fresh values.
class Graph {
  public:
    using Word = std::uint64_t;

    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string label = "");

    int order() const { return n_; }
    int words_per_row() const { return wpr_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    std::span<const Word> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * wpr_, static_cast<std::size_t>(wpr_)};
    }

    int degree(int v) const {
        int d = 0;
        for (Word w : row(v)) d += std::popcount(w);
        return d;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
        return twice / 2;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(degree(v)));
        for (int u = 0; u < n_; ++u)
            if (adjacent(v, u)) out.push_back(u);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    const std::string& label() const { return label_; }
    Graph with_label(std::string label) const {
        Graph g = *this;
        g.label_ = std::move(label);
        return g;
    }

    /// Structural equality; labels are provenance only and do not count.
    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  private:
    int n_ = 0;
    int wpr_ = 0;
    std::vector<Word> bits_;
    std::string label_;

    friend class GraphBuilder;
};

/// The only way to materialize a Graph; validates the simple-graph
/// invariants (symmetry, no loops, indices in range) in finish().
class GraphBuilder {
  public:
    explicit GraphBuilder(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("GraphBuilder: negative vertex count");
        wpr_ = n == 0 ? 0 : (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * wpr_, 0);
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("add_edge: endpoint out of range");
        if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
        set_bit(u, v);
        set_bit(v, u);
    }

    /// Fast path for product constructions: write a whole row word.
    void set_row_word(int v, int w, Graph::Word bits) {
        bits_[static_cast<std::size_t>(v) * wpr_ + w] = bits;
    }

    void or_row_word(int v, int w, Graph::Word bits) {
        bits_[static_cast<std::size_t>(v) * wpr_ + w] |= bits;
    }

    void clear_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] &= ~(Graph::Word(1) << (v & 63));
    }

    Graph finish(std::string label = "") {
        validate();
        Graph g;
        g.n_ = n_;
        g.wpr_ = wpr_;
        g.bits_ = std::move(bits_);
        g.label_ = std::move(label);
        return g;
    }

  private:
    void validate() const {
        const Graph::Word tail_mask =
            (n_ % 64 == 0) ? ~Graph::Word(0) : ((Graph::Word(1) << (n_ % 64)) - 1);
        for (int v = 0; v < n_; ++v) {
            if (get_bit(v, v)) throw std::invalid_argument("graph invariant: loop present");
            if (wpr_ > 0 && (bits_[static_cast<std::size_t>(v) * wpr_ + (wpr_ - 1)] & ~tail_mask))
                throw std::invalid_argument("graph invariant: bit index out of range");
        }
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (get_bit(u, v) != get_bit(v, u))
                    throw std::invalid_argument("graph invariant: adjacency not symmetric");
    }

    bool get_bit(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] |= Graph::Word(1) << (v & 63);
    }

    int n_;
    int wpr_;
    std::vector<Graph::Word> bits_;
};

inline Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                               std::string label) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.finish(std::move(label));
}

inline Graph make_empty(int n, std::string label = "") {
    return GraphBuilder(n).finish(std::move(label));
}

inline Graph make_complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.finish("K_" + std::to_string(n));
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.finish("C_" + std::to_string(n));
}

inline Graph make_path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.finish("P_" + std::to_string(n) + "_path");
}

inline Graph complement(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    const int wpr = g.words_per_row();
    const Graph::Word tail_mask =
        (n % 64 == 0) ? ~Graph::Word(0) : ((Graph::Word(1) << (n % 64)) - 1);
    for (int v = 0; v < n; ++v) {
        auto r = g.row(v);
        for (int w = 0; w < wpr; ++w) {
            Graph::Word bits = ~r[w];
            if (w == wpr - 1) bits &= tail_mask;
            b.set_row_word(v, w, bits);
        }
        b.clear_bit(v, v);
    }
    return b.finish();
}

namespace detail {

// Writes src[0..nbits) into dst starting at bit dst_off.
inline void copy_bits(std::vector<Graph::Word>& dst, std::size_t dst_off,
                      std::span<const Graph::Word> src, int nbits) {
    for (int w = 0; w * 64 < nbits; ++w) {
        Graph::Word bits = src[w];
        const int take = std::min(64, nbits - w * 64);
        if (take < 64) bits &= (Graph::Word(1) << take) - 1;
        const std::size_t pos = dst_off + static_cast<std::size_t>(w) * 64;
        dst[pos >> 6] |= bits << (pos & 63);
        if ((pos & 63) != 0 && (pos & 63) + take > 64) dst[(pos >> 6) + 1] |= bits >> (64 - (pos & 63));
    }
}

inline void fill_bits(std::vector<Graph::Word>& dst, std::size_t dst_off, int nbits) {
    for (int i = 0; i < nbits;) {
        const std::size_t pos = dst_off + static_cast<std::size_t>(i);
        const int take = std::min(nbits - i, 64 - static_cast<int>(pos & 63));
        Graph::Word bits = (take == 64) ? ~Graph::Word(0) : ((Graph::Word(1) << take) - 1);
        dst[pos >> 6] |= bits << (pos & 63);
        i += take;
    }
}

enum class ProductRule { Tensor, Or, And };

inline Graph product(const Graph& f, const Graph& g, ProductRule rule, int vertex_budget) {
    const int nf = f.order(), ng = g.order();
    const long long nn = static_cast<long long>(nf) * ng;
    if (nn > vertex_budget)
        throw SizeBudgetError("graph product would have " + std::to_string(nn) +
                              " vertices (budget " + std::to_string(vertex_budget) + ")");
    const int n = static_cast<int>(nn);
    GraphBuilder b(n);
    if (n == 0) return b.finish();

    const int wpr = (n + 63) / 64;
    std::vector<Graph::Word> rowbuf(static_cast<std::size_t>(wpr), 0);
    std::vector<Graph::Word> closed(g.order() == 0 ? 0 : g.words_per_row());
    for (int x = 0; x < nf; ++x) {
        for (int u = 0; u < ng; ++u) {
            std::fill(rowbuf.begin(), rowbuf.end(), 0);
            // closed row of u in G: N(u) plus u itself (And rule needs it)
            if (rule == ProductRule::And) {
                auto r = g.row(u);
                std::copy(r.begin(), r.end(), closed.begin());
                closed[u >> 6] |= Graph::Word(1) << (u & 63);
            }
            for (int y = 0; y < nf; ++y) {
                const std::size_t off = static_cast<std::size_t>(y) * ng;
                const bool xy_edge = f.adjacent(x, y);
                switch (rule) {
                    case ProductRule::Tensor:
                        if (xy_edge) copy_bits(rowbuf, off, g.row(u), ng);
                        break;
                    case ProductRule::Or:
                        if (xy_edge)
                            fill_bits(rowbuf, off, ng);
                        else
                            copy_bits(rowbuf, off, g.row(u), ng);
                        break;
                    case ProductRule::And:
                        if (xy_edge || x == y)
                            copy_bits(rowbuf, off, std::span<const Graph::Word>(closed), ng);
                        break;
                }
            }
            const int idx = pair_index(x, u, ng);
            for (int w = 0; w < wpr; ++w) b.set_row_word(idx, w, rowbuf[w]);
            b.clear_bit(idx, idx);
        }
    }
    return b.finish();
}

}  // namespace detail

/// Categorical product: (x,u)~(y,v) iff both coordinate pairs are edges.
inline Graph tensor_product(const Graph& f, const Graph& g,
                            int vertex_budget = kDefaultVertexBudget) {
    return detail::product(f, g, detail::ProductRule::Tensor, vertex_budget);
}

/// OR-product: adjacent iff at least one coordinate pair is an edge.
inline Graph or_product(const Graph& f, const Graph& g,
                        int vertex_budget = kDefaultVertexBudget) {
    return detail::product(f, g, detail::ProductRule::Or, vertex_budget);
}

/// AND (strong) product: adjacent-or-equal in both coordinates, pairs distinct.
inline Graph and_product(const Graph& f, const Graph& g,
                         int vertex_budget = kDefaultVertexBudget) {
    return detail::product(f, g, detail::ProductRule::And, vertex_budget);
}

/// Join: disjoint union plus all cross edges, F vertices first.
inline Graph join(const Graph& f, const Graph& g) {
    const int nf = f.order(), ng = g.order();
    GraphBuilder b(nf + ng);
    for (auto [u, v] : f.edges()) b.add_edge(u, v);
    for (auto [u, v] : g.edges()) b.add_edge(nf + u, nf + v);
    for (int u = 0; u < nf; ++u)
        for (int v = 0; v < ng; ++v) b.add_edge(u, nf + v);
    return b.finish();
}

/// t-fold OR-power; vertex (v1,..,vt) sits at the mixed-radix index with v1
/// most significant, so G^t = or_product(G, G^(t-1)).
inline Graph or_power(const Graph& g, int t, int vertex_budget = kDefaultVertexBudget) {
    if (t < 1) throw std::invalid_argument("or_power: t must be >= 1");
    double size = 1;
    for (int i = 0; i < t; ++i) size *= g.order();
    if (size > vertex_budget)
        throw SizeBudgetError("or_power: |V|^t exceeds vertex budget");
    Graph acc = g;
    for (int i = 1; i < t; ++i) acc = or_product(g, acc, vertex_budget);
    return acc;
}

/// Induced subgraph on S; vertices relabeled in ascending original order.
inline Graph induced_subgraph(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("induced_subgraph: vertex index out of range");
    GraphBuilder b(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.finish();
}

namespace detail {

// 1-WL style refinement: color by (old color, sorted neighbor colors) until stable.
inline std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, 0);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for (int u : g.neighbors(v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

inline bool iso_extend(const Graph& f, const Graph& g, const std::vector<int>& cf,
                       const std::vector<int>& cg, std::vector<int>& map,
                       std::vector<char>& used, int depth) {
    const int n = f.order();
    if (depth == n) return true;
    for (int v = 0; v < n; ++v) {
        if (used[v] || cg[v] != cf[depth]) continue;
        bool ok = true;
        for (int w = 0; w < depth; ++w)
            if (f.adjacent(depth, w) != g.adjacent(v, map[w])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[depth] = v;
        used[v] = 1;
        if (iso_extend(f, g, cf, cg, map, used, depth + 1)) return true;
        used[v] = 0;
    }
    return false;
}

}  // namespace detail

/// Edge-preserving-and-reflecting bijection F -> G if one exists.
/// Deterministic: returns the lexicographically least witness (as the
/// mapping vector). Intended for small graphs only.
inline std::optional<std::vector<int>> is_isomorphic(const Graph& f, const Graph& g,
                                                     int vertex_budget = kDefaultIsoVertexBudget) {
    if (f.order() > vertex_budget || g.order() > vertex_budget)
        throw SizeBudgetError("is_isomorphic: graph exceeds size budget");
    if (f.order() != g.order()) return std::nullopt;
    if (f.edge_count() != g.edge_count()) return std::nullopt;
    const auto cf = detail::refine_colors(f);
    const auto cg = detail::refine_colors(g);
    {
        auto hf = cf, hg = cg;
        std::sort(hf.begin(), hf.end());
        std::sort(hg.begin(), hg.end());
        if (hf != hg) return std::nullopt;
    }
    std::vector<int> map(f.order(), -1);
    std::vector<char> used(f.order(), 0);
    if (detail::iso_extend(f, g, cf, cg, map, used, 0)) return map;
    return std::nullopt;
}

}  // namespace orcap

#endif  // ORCAP_GRAPH_HPP
