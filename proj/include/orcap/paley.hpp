#ifndef ORCAP_PALEY_HPP
#define ORCAP_PALEY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orcap/finite_field.hpp"
#include "orcap/graph.hpp"

namespace orcap {

enum class PaleyVariant { Full, OneDeleted, TwoDeletedAdjacent, TwoDeletedNonadjacent };

inline const char* variant_name(PaleyVariant v) {
    switch (v) {
        case PaleyVariant::Full: return "full";
        case PaleyVariant::OneDeleted: return "one-deleted";
        case PaleyVariant::TwoDeletedAdjacent: return "two-deleted-adjacent";
        case PaleyVariant::TwoDeletedNonadjacent: return "two-deleted-nonadjacent";
    }
    return "?";
}

namespace detail {

inline std::pair<int, int> factor_prime_power(int q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    int p = q;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int k = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, k};
}

}  // namespace detail

inline FiniteField paley_field(int q) {
    auto [p, k] = detail::factor_prime_power(q);
    if (q % 2 == 0) throw std::invalid_argument("Paley graph needs odd q");
    if (q % 4 != 1)
        throw std::invalid_argument("Paley graph needs q = 1 (mod 4), got " + std::to_string(q));
    return FiniteField::build(p, k);
}

inline int least_nonzero_square(const FiniteField& f) {
    for (int a = 1; a < f.order(); ++a)
        if (f.is_square(a)) return a;
    throw std::logic_error("no nonzero square");
}

inline int least_nonsquare(const FiniteField& f) {
    for (int a = 1; a < f.order(); ++a)
        if (!f.is_square(a)) return a;
    throw std::logic_error("no nonsquare");
}

/// P_q on the field elements, vertex i = element of index i; u ~ v iff
/// u - v is a nonzero square. Requires q = 1 (mod 4) so adjacency is
/// symmetric.
inline Graph paley_graph(const FiniteField& f) {
    const int q = f.order();
    if (q % 4 != 1) throw std::invalid_argument("paley_graph: q = 1 (mod 4) required");
    GraphBuilder b(q);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            if (f.is_square(f.sub(u, v))) b.add_edge(u, v);
    return b.finish("P_" + std::to_string(q));
}

inline Graph paley_graph(int q) { return paley_graph(paley_field(q)); }

/// Deleted variants: OneDeleted removes vertex 0; the two-deleted kinds
/// remove {0, least square} (an edge) or {0, least nonsquare} (a
/// non-edge). Vertex- and edge-transitivity make these canonical choices
/// representative of every deletion.
inline Graph paley_family(int q, PaleyVariant variant) {
    const FiniteField f = paley_field(q);
    const Graph p = paley_graph(f);
    std::vector<int> keep;
    std::string label;
    switch (variant) {
        case PaleyVariant::Full:
            return p;
        case PaleyVariant::OneDeleted: {
            for (int v = 1; v < q; ++v) keep.push_back(v);
            label = "Q_" + std::to_string(q - 1);
            break;
        }
        case PaleyVariant::TwoDeletedAdjacent: {
            const int s = least_nonzero_square(f);
            for (int v = 1; v < q; ++v)
                if (v != s) keep.push_back(v);
            label = "Z_" + std::to_string(q - 2) + "_a";
            break;
        }
        case PaleyVariant::TwoDeletedNonadjacent: {
            const int t = least_nonsquare(f);
            for (int v = 1; v < q; ++v)
                if (v != t) keep.push_back(v);
            label = "Z_" + std::to_string(q - 2) + "_n";
            break;
        }
    }
    return induced_subgraph(p, keep).with_label(label);
}

/// Checks that sigma maps edges to non-edges and back, exactly.
inline bool is_complementing_permutation(const Graph& g, const std::vector<int>& sigma) {
    const int n = g.order();
    if (static_cast<int>(sigma.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) == g.adjacent(sigma[u], sigma[v])) return false;
    return true;
}

inline bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
    return true;
}

/// Multiplication by the least nonsquare: verified complementing
/// permutation of P_q. Multiplying a square difference by a nonsquare
/// lands outside the squares, so edges and non-edges swap.
inline std::vector<int> self_complement_witness(int q) {
    const FiniteField f = paley_field(q);
    const Graph p = paley_graph(f);
    const int t = least_nonsquare(f);
    std::vector<int> sigma(q);
    for (int x = 0; x < q; ++x) sigma[x] = f.mul(t, x);
    if (!is_complementing_permutation(p, sigma))
        throw CertificateError("self-complement witness failed verification");
    return sigma;
}

/// Restriction of a 0-fixing complementing permutation of P_q to
/// Q_{q-1} = P_q - {0} (vertices relabeled down by one).
inline std::vector<int> restrict_witness_to_deleted(const std::vector<int>& sigma) {
    if (sigma.empty() || sigma[0] != 0)
        throw std::invalid_argument("witness restriction needs sigma(0) = 0");
    std::vector<int> out(sigma.size() - 1);
    for (std::size_t v = 1; v < sigma.size(); ++v) out[v - 1] = sigma[v] - 1;
    return out;
}

/// Generators x -> x+1 and x -> s*x (s the least square generating the
/// square subgroup), each verified to be an automorphism, with the
/// orbits of vertex 0, of the edge {0, least square} and of the
/// non-edge {0, least nonsquare} verified to be full.
struct TransitivityCertificate {
    std::vector<std::vector<int>> generators;
    int vertex_orbit_size = 0;
    int edge_orbit_size = 0;
    int nonedge_orbit_size = 0;
};

namespace detail {

inline std::size_t pair_key(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * n + b;
}

inline int orbit_of_pair_count(const std::vector<std::vector<int>>& gens, int n, int a0, int b0) {
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> stack{{a0, b0}};
    seen[pair_key(a0, b0, n)] = 1;
    int count = 0;
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& g : gens) {
            int x = g[a], y = g[b];
            auto key = pair_key(x, y, n);
            if (!seen[key]) {
                seen[key] = 1;
                stack.emplace_back(x, y);
            }
        }
    }
    return count;
}

}  // namespace detail

inline TransitivityCertificate transitivity_generators(int q) {
    const FiniteField f = paley_field(q);
    const Graph p = paley_graph(f);

    std::vector<int> translate(q);
    for (int x = 0; x < q; ++x) translate[x] = f.add(x, 1);

    // least square whose powers run through the whole square subgroup
    const int half = (q - 1) / 2;
    int s = -1;
    for (int a = 1; a < q && s < 0; ++a) {
        if (!f.is_square(a)) continue;
        int ord = 1, x = a;
        while (x != 1) {
            x = f.mul(x, a);
            ++ord;
        }
        if (ord == half) s = a;
    }
    if (s < 0) throw std::logic_error("square subgroup has no generator");
    std::vector<int> scale(q);
    for (int x = 0; x < q; ++x) scale[x] = f.mul(s, x);

    TransitivityCertificate cert;
    for (const auto& g : {translate, scale})
        if (!is_automorphism(p, g)) throw CertificateError("Paley generator is not an automorphism");
    cert.generators = {translate, scale};

    // vertex orbit of 0
    {
        std::vector<char> seen(q, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++cert.vertex_orbit_size;
            for (const auto& g : cert.generators)
                if (!seen[g[v]]) {
                    seen[g[v]] = 1;
                    stack.push_back(g[v]);
                }
        }
    }
    cert.edge_orbit_size = detail::orbit_of_pair_count(cert.generators, q, 0, least_nonzero_square(f));
    cert.nonedge_orbit_size = detail::orbit_of_pair_count(cert.generators, q, 0, least_nonsquare(f));

    const int edges = q * ((q - 1) / 2) / 2;
    if (cert.vertex_orbit_size != q || cert.edge_orbit_size != edges ||
        cert.nonedge_orbit_size != q * (q - 1) / 2 - edges)
        throw CertificateError("Paley transitivity orbits incomplete");
    return cert;
}

/// Automorphism of P_q carrying {0, v} onto the canonical deleted pair
/// ({0, least square} if v is a square, {0, least nonsquare} otherwise):
/// multiplication by d/v, a square either way. Used to identify every
/// two-vertex deletion with Z^(a) or Z^(n).
struct PairTransport {
    bool adjacent;                  // was {0,v} an edge
    std::vector<int> automorphism;  // maps {0,v} to the canonical pair
};

inline PairTransport pair_transport(const FiniteField& f, const Graph& p, int v) {
    if (v <= 0 || v >= f.order()) throw std::invalid_argument("pair_transport: bad vertex");
    const int d = f.is_square(v) ? least_nonzero_square(f) : least_nonsquare(f);
    const int ratio = f.mul(d, f.inv(v));
    PairTransport t;
    t.adjacent = f.is_square(v);
    t.automorphism.resize(f.order());
    for (int x = 0; x < f.order(); ++x) t.automorphism[x] = f.mul(ratio, x);
    if (!is_automorphism(p, t.automorphism) || t.automorphism[v] != d)
        throw CertificateError("pair transport failed verification");
    return t;
}

}  // namespace orcap

#endif  // ORCAP_PALEY_HPP
