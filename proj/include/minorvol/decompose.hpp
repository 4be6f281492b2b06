#ifndef MINORVOL_DECOMPOSE_HPP
#define MINORVOL_DECOMPOSE_HPP

#include "minorvol/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace minorvol {

/// (A1, A2) with A1 u A2 = V, no edge between A1\A2 and A2\A1, both
/// differences nonempty.  Balanced means |A1|, |A2| >= v(G)/3.
struct Separation {
    std::vector<int> a1, a2;

    int order() const;
    bool valid(const Graph& g, std::string* why = nullptr) const;
    bool balanced(const Graph& g) const;
};

enum class SeparatorMode { Exact, Heuristic };

/// Exact mode: minimum-order balanced separation by subset search (v <= 20),
/// or nullopt when none exists (complete graphs have no separation at all).
/// Heuristic mode: best balanced separation found by BFS-layer sweeps.
std::optional<Separation> balanced_separator(const Graph& g, SeparatorMode mode);

/// Order-1 balanced separation of a tree around a centroid (any size).
std::optional<Separation> tree_separator(const Graph& g);

/// Edge-covering family of vertex bags.
struct Decomposition {
    std::vector<std::vector<int>> bags;
    Rational bound = 0;      // the C in "C-bounded"
    bool certified = false;  // every recursion node passed its excess certificate

    long excess(const Graph& g) const;  // sum |B| - v(G)
    long max_bag() const;
    bool covers(const Graph& g, std::string* why = nullptr) const;
};

std::string to_json(const Decomposition& d, const Graph& g);

/**
 * Separator-profile parameters: every encountered subgraph is expected to
 * have a balanced separation of order <= c n^beta.  gamma and C follow:
 *   gamma = c ((1/3)^beta + (2/3)^beta - 1)^{-1},  C = 3 (gamma/eps)^{1/(1-beta)},
 * both evaluated as outward-rounded rational intervals.
 */
struct SeparatorParams {
    Rational beta{1, 2};
    Rational c = 1;

    RatInterval gamma_bounds(int bits = 96) const;
    RatInterval cap_bounds(const Rational& eps, int bits = 96) const;
};

using SeparatorProvider = std::function<std::optional<Separation>(const Graph&)>;

/**
 * Recursive C-bounded decomposition: a graph with at most C vertices becomes
 * one bag, larger graphs split along a balanced separation and recurse.  The
 * inductive certificate excess <= eps n - gamma n^beta is checked at every
 * node with at least C/3 vertices; a separator that exceeds its contracted
 * order, fails to exist, or breaks a certificate leaves the decomposition
 * uncertified but still returned.
 */
Decomposition eppstein_decompose(const Graph& g, const Rational& eps,
                                 const SeparatorParams& params,
                                 const SeparatorProvider& sep);

/// Axis-split decomposition of the d-cube: bags are the components of the
/// first ceil(d/2) directions and of the rest; 2^{ceil(d/2)}-bounded with
/// excess exactly 2^d.
Decomposition hypercube_decompose(int d);

/// Mapping of the vertices of one graph into another.
struct Embedding {
    std::vector<int> map;  // per source vertex

    bool injective() const;
    /// edges of `from` land on edges of `to`
    bool subgraph_into(const Graph& from, const Graph& to) const;
    /// additionally, non-edges stay non-edges (induced embedding)
    bool induced_into(const Graph& from, const Graph& to) const;
};

struct Grouping {
    Graph j;
    int ell = 1;
    Embedding embedding;  // h -> ell copies of j
};

/// Rounds a component-bounded graph into ell copies of a fixed graph J with
/// v(ell J) <= (1+eps) v(h) and v(J) <= 3 s C / eps; the embedding is induced.
Grouping group_components(const Graph& h, const Rational& eps);

struct ReduceResult {
    Graph h_prime;
    std::vector<std::pair<int, int>> f_edges;  // F, between copies of one vertex
    std::vector<int> x_vertices;               // X
    Graph j;
    int ell = 1;
    // vertex maps kept for the validators
    std::vector<int> copy_of;      // H1-vertex -> original vertex of h
    Embedding h1_into_h_prime;     // identity block of H1 inside h'
};

/**
 * Expansion of a decomposition: disjoint bag-induced subgraphs, spanning-tree
 * edges F over the copies of each vertex, and padding to ell J.  Conclusions
 * verified constructively: contracting F recovers h, deleting F leaves ell J,
 * deleting X embeds into h, |F| equals the bag excess.
 */
ReduceResult reduce_expand(const Graph& h, const Decomposition& bags,
                           const Rational& eps);

/// Bipartite expansion (V(h), W) with deg_W <= d and |W| = ceil(D/(d-1)) v(h)
/// for the degeneracy D; h is recovered by contracting each W-vertex into its
/// anchor.
Graph degenerate_bipartify(const Graph& h, int d);

/**
 * Greedy descent to a minor-minimal member of {G : v >= d, e >= d v - k d}:
 * single edge deletions, contractions and vertex deletions in lexicographic
 * order; when none applies and the connectivity is still below k, descend to
 * the side of a small-order separation that stays in the class.
 */
Graph mader_refine(const Graph& g, int d, int k);

struct MaderCheck {
    bool in_class = false;
    bool fixed_point = false;
    bool connectivity_ok = false;
    bool density_ok = false;
    bool triangles_ok = false;

    bool all() const {
        return in_class && fixed_point && connectivity_ok && density_ok && triangles_ok;
    }
};

MaderCheck mader_validate(const Graph& refined, int d, int k);

}  // namespace minorvol

#endif  // MINORVOL_DECOMPOSE_HPP
