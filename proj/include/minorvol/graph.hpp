#ifndef MINORVOL_GRAPH_HPP
#define MINORVOL_GRAPH_HPP

#include "minorvol/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minorvol {

/**
 * Finite simple graph on vertices 0..order-1 with a sorted edge list.
 * Immutable in spirit: construct once, then query.  All operations in this
 * library are pure functions of their Graph arguments, so values can be
 * shared freely across threads.
 */
class Graph {
  public:
    Graph() : order_(0) {}
    explicit Graph(int order) : order_(order), adj_(order) {
        if (order < 0) throw PreconditionError("negative order");
    }
    Graph(int order, std::vector<std::pair<int, int>> edges);

    int order() const { return order_; }
    long edge_count() const { return static_cast<long>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;

    Graph induced(const std::vector<int>& vertices) const;
    bool is_connected() const;
    std::vector<std::vector<int>> components() const;
    /// Vertex connectivity; order-1 convention: kappa(K_n) = n-1, kappa(K_1) = 0.
    int vertex_connectivity() const;

  private:
    int order_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// e(G)/v(G); throws on the null graph.
Rational density(const Graph& g);

// --- DIMACS-like text format ------------------------------------------------
// header "p <order> <edge-count>", then "e <u> <v>" lines, 0-indexed.
Graph parse_graph(const std::string& text);
std::string to_dimacs(const Graph& g);

// --- constructions -----------------------------------------------------------

Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph complete_multipartite(const std::vector<int>& parts);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph grid_graph(int rows, int cols);
Graph petersen_graph();
Graph hypercube(int d);
/// K_{2t} minus the edges of a complete subgraph on t vertices
/// (vertices 0..t-1 form the independent side).
Graph ht_graph(int t);
Graph disjoint_copies(const Graph& h, int k);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph blowup(const Graph& g, int k);
Graph blowup_w(const Graph& g, const std::vector<int>& sizes);

// --- exact invariants ---------------------------------------------------------

struct GraphInvariants {
    std::map<int, int> alpha_k;  // k -> max size of induced k-colorable subgraph
    int tau = 0;
    int chi = 0;
    int degeneracy = 0;
};

bool k_colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);
int degeneracy(const Graph& g);
/// Maximum |X| with chi(G[X]) <= k, by subset descent from the largest sizes.
int alpha_k(const Graph& g, int k);

GraphInvariants invariants(const Graph& h, int k_max, int cap = 16);

// --- models and minors ---------------------------------------------------------

struct Model {
    // branch_sets[v] = vertices of G assigned to vertex v of H
    std::vector<std::vector<int>> branch_sets;
};

/// Checks (M1) connectivity, (M2) edge cover, (M3) disjointness.
bool validate_model(const Graph& h, const Graph& g, const Model& m,
                    std::string* why = nullptr);

/// Branch-and-bound model search; H-vertices assigned in descending-degree
/// order with remaining-count and adjacency pruning.
std::optional<Model> is_minor(const Graph& h, const Graph& g, int cap = 14);

// --- isomorphism and enumeration ----------------------------------------------

bool is_isomorphic(const Graph& a, const Graph& b);
/// Vertex bijection a -> b when one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

/// All graphs up to isomorphism with 1 <= v <= max_vertices (<= 7), in a
/// deterministic order, optionally filtered by chromatic number.
std::vector<Graph> enumerate_graphs(int max_vertices,
                                    std::optional<int> chi_cap = std::nullopt);

}  // namespace minorvol

#endif  // MINORVOL_GRAPH_HPP
