#include "minorvol/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace minorvol {

namespace {
constexpr int kMaxOrder = 1 << 20;
}

Graph::Graph(int order, std::vector<std::pair<int, int>> edges) : order_(order) {
    if (order < 0) throw PreconditionError("negative order");
    if (order > kMaxOrder) throw PreconditionError("order cap exceeded");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= order) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("loop");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw PreconditionError("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(order_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), w);
}

int Graph::min_degree() const {
    if (order_ == 0) throw PreconditionError("null graph");
    int d = order_;
    for (int v = 0; v < order_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> index(order_, -1);
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_)
        if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(es));
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(order_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < order_; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out[id].push_back(u);
            for (int w : adj_[u])
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Graph::is_connected() const {
    if (order_ <= 1) return true;
    return components().size() == 1;
}

namespace {

// unit-capacity max-flow on the standard vertex-split network, enough for
// exact kappa on the small graphs this library handles
int vertex_disjoint_paths(const Graph& g, int s, int t) {
    int n = g.order();
    // node 2v = in, 2v+1 = out
    int N = 2 * n;
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = n;
        cap[2 * v + 1][2 * u] = n;
    }
    int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    for (;;) {
        std::vector<int> pred(N, -1);
        std::queue<int> q;
        q.push(src);
        pred[src] = src;
        while (!q.empty() && pred[dst] < 0) {
            int u = q.front();
            q.pop();
            for (int w = 0; w < N; ++w)
                if (pred[w] < 0 && cap[u][w] > 0) {
                    pred[w] = u;
                    q.push(w);
                }
        }
        if (pred[dst] < 0) break;
        for (int w = dst; w != src; w = pred[w]) {
            cap[pred[w]][w] -= 1;
            cap[w][pred[w]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int Graph::vertex_connectivity() const {
    int n = order_;
    if (n <= 1) return 0;
    long full = static_cast<long>(n) * (n - 1) / 2;
    if (edge_count() == full) return n - 1;
    int best = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!has_edge(u, v)) best = std::min(best, vertex_disjoint_paths(*this, u, v));
    return best;
}

Rational density(const Graph& g) {
    if (g.order() == 0) throw PreconditionError("density of null graph");
    return Rational(g.edge_count()) / g.order();
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int order = -1;
    long expected = -1;
    std::vector<std::pair<int, int>> edges;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;    // comment
        if (tag == "p") {
            if (order >= 0) fail("duplicate header");
            if (!(ls >> order >> expected) || order < 0 || expected < 0)
                fail("malformed header");
        } else if (tag == "e") {
            if (order < 0) fail("edge before header");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 0 || v < 0 || u >= order || v >= order) fail("endpoint out of range");
            if (u == v) fail("loop");
            if (u > v) std::swap(u, v);
            if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end())
                fail("duplicate edge");
            edges.emplace_back(u, v);
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    ++lineno;
    if (order < 0) fail("missing header");
    if (expected != static_cast<long>(edges.size()))
        fail("edge count mismatch: header says " + std::to_string(expected) + ", got " +
             std::to_string(edges.size()));
    return Graph(order, std::move(edges));
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph complete_bipartite(int s, int t) { return complete_multipartite({s, t}); }

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 0) throw PreconditionError("negative part size");
        n += p;
    }
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i));
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw PreconditionError("grid needs positive dims");
    auto id = [&](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> es;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, std::move(es));
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(es));
}

Graph hypercube(int d) {
    if (d < 1) throw PreconditionError("hypercube dimension >= 1");
    if (d > 20) throw PreconditionError("hypercube dimension cap exceeded");
    int n = 1 << d;
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b) {
            int w = v ^ (1 << b);
            if (v < w) es.emplace_back(v, w);
        }
    return Graph(n, std::move(es));
}

Graph ht_graph(int t) {
    if (t < 1) throw PreconditionError("t >= 1");
    int n = 2 * t;
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u < t && v < t)) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), std::move(es));
}

Graph disjoint_copies(const Graph& h, int k) {
    if (k < 1) throw PreconditionError("k >= 1");
    if (static_cast<long>(k) * h.order() > kMaxOrder)
        throw PreconditionError("order cap exceeded");
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < k; ++c)
        for (auto [u, v] : h.edges()) es.emplace_back(u + c * h.order(), v + c * h.order());
    return Graph(k * h.order(), std::move(es));
}

Graph blowup(const Graph& g, int k) {
    return blowup_w(g, std::vector<int>(g.order(), k));
}

Graph blowup_w(const Graph& g, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != g.order())
        throw PreconditionError("sizes length mismatch");
    long n = 0;
    std::vector<int> offset(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        if (sizes[v] < 0) throw PreconditionError("negative blowup size");
        offset[v] = static_cast<int>(n);
        n += sizes[v];
    }
    if (n > kMaxOrder) throw PreconditionError("order cap exceeded");
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        for (int i = 0; i < sizes[u]; ++i)
            for (int j = 0; j < sizes[v]; ++j)
                es.emplace_back(offset[u] + i, offset[v] + j);
    return Graph(static_cast<int>(n), std::move(es));
}

// --- colorability -------------------------------------------------------------

namespace {

// DSATUR-ordered backtracking k-colorability
bool color_search(const Graph& g, int k, std::vector<int>& color, int colored) {
    int n = g.order();
    if (colored == n) return true;
    // pick uncolored vertex with max saturation, then max degree
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        int sat = 0;
        unsigned long long seen = 0;
        for (int u : g.neighbors(v))
            if (color[u] >= 0 && !(seen >> color[u] & 1)) {
                seen |= 1ull << color[u];
                ++sat;
            }
        if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
            pick = v;
            best_sat = sat;
            best_deg = g.degree(v);
        }
    }
    unsigned long long used = 0;
    for (int u : g.neighbors(pick))
        if (color[u] >= 0) used |= 1ull << color[u];
    int limit = std::min<int>(k, colored + 1);  // break color symmetry
    for (int c = 0; c < limit; ++c) {
        if (used >> c & 1) continue;
        color[pick] = c;
        if (color_search(g, k, color, colored + 1)) return true;
        color[pick] = -1;
    }
    return false;
}

}  // namespace

bool k_colorable(const Graph& g, int k) {
    if (k >= g.order()) return true;
    if (k <= 0) return g.order() == 0;
    if (k == 1) return g.edge_count() == 0;
    std::vector<int> color(g.order(), -1);
    return color_search(g, k, color, 0);
}

int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1; k <= g.order(); ++k)
        if (k_colorable(g, k)) return k;
    throw InternalError("chromatic search fell through");
}

int degeneracy(const Graph& g) {
    int n = g.order();
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int round = 0; round < n; ++round) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && (v < 0 || deg[u] < deg[v])) v = u;
        best = std::max(best, deg[v]);
        gone[v] = true;
        for (int u : g.neighbors(v))
            if (!gone[u]) --deg[u];
    }
    return best;
}

namespace {

// enumerate subsets of [n] of given size, calling f(subset); f returns true to stop
bool foreach_subset(int n, int size, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> pick(size);
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == size) return f(pick);
        for (int v = start; v <= n - (size - depth); ++v) {
            pick[depth] = v;
            if (rec(v + 1, depth + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

int alpha_k(const Graph& g, int k) {
    int n = g.order();
    if (k <= 0) return 0;
    if (k_colorable(g, k)) return n;
    for (int size = n - 1; size >= 1; --size) {
        bool found = foreach_subset(n, size, [&](const std::vector<int>& sub) {
            return k_colorable(g.induced(sub), k);
        });
        if (found) return size;
    }
    return 0;
}

GraphInvariants invariants(const Graph& h, int k_max, int cap) {
    if (h.order() > cap)
        throw PreconditionError("order " + std::to_string(h.order()) +
                                " above exact-solve cap " + std::to_string(cap));
    GraphInvariants inv;
    inv.chi = chromatic_number(h);
    inv.degeneracy = degeneracy(h);
    for (int k = 1; k <= k_max; ++k)
        inv.alpha_k[k] = k >= inv.chi ? h.order() : alpha_k(h, k);
    int a1 = inv.alpha_k.count(1) ? inv.alpha_k[1] : alpha_k(h, 1);
    inv.tau = h.order() - a1;
    return inv;
}

// --- models and minors ----------------------------------------------------------

bool validate_model(const Graph& h, const Graph& g, const Model& m, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (static_cast<int>(m.branch_sets.size()) != h.order())
        return fail("branch set count mismatch");
    std::vector<bool> used(g.order(), false);
    for (int v = 0; v < h.order(); ++v) {
        const auto& bs = m.branch_sets[v];
        if (bs.empty()) return fail("empty branch set");
        for (int x : bs) {
            if (x < 0 || x >= g.order()) return fail("branch vertex out of range");
            if (used[x]) return fail("branch sets overlap (M3)");
            used[x] = true;
        }
        if (!g.induced(bs).is_connected()) return fail("branch set disconnected (M1)");
    }
    for (auto [u, v] : h.edges()) {
        bool ok = false;
        for (int x : m.branch_sets[u]) {
            for (int y : m.branch_sets[v])
                if (g.has_edge(x, y)) {
                    ok = true;
                    break;
                }
            if (ok) break;
        }
        if (!ok) return fail("edge not realized (M2)");
    }
    return true;
}

namespace {

using Mask = unsigned long long;

struct MinorSearch {
    const Graph& h;
    const Graph& g;
    int n;                       // v(G)
    std::vector<int> order;      // H-vertices, descending degree
    std::vector<Mask> assigned;  // branch set mask per H-vertex (by order index)
    std::vector<Mask> gadj;      // adjacency masks of G

    bool adjacent_masks(Mask a, Mask b) const {
        Mask reach = 0;
        for (int v = 0; v < n; ++v)
            if (a >> v & 1) reach |= gadj[v];
        return (reach & b) != 0;
    }

    // grow connected supersets of `cur` inside `allowed`, invoking f on each;
    // excluding the chosen vertex from later sibling branches makes the
    // enumeration duplicate-free
    bool grow(Mask cur, Mask frontier, Mask allowed, int max_size,
              const std::function<bool(Mask)>& f) {
        if (f(cur)) return true;
        if (__builtin_popcountll(cur) >= max_size) return false;
        Mask cand = frontier & allowed & ~cur;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            if (grow(cur | (1ull << v), frontier | gadj[v], allowed, max_size, f))
                return true;
            allowed &= ~(1ull << v);
        }
        return false;
    }

    bool assign(size_t idx, Mask used) {
        if (idx == order.size()) return true;
        int hv = order[idx];
        int remaining = static_cast<int>(order.size() - idx);
        int free = n - __builtin_popcountll(used);
        if (free < remaining) return false;
        Mask allowed = ~used & ((n == 64) ? ~0ull : ((1ull << n) - 1));
        int max_size = free - (remaining - 1);
        // adjacency requirements toward already-assigned H-neighbours
        std::vector<Mask> need;
        for (size_t j = 0; j < idx; ++j)
            if (h.has_edge(hv, order[j])) need.push_back(assigned[j]);
        Mask seeds = allowed;
        while (seeds) {
            int s = __builtin_ctzll(seeds);
            seeds &= seeds - 1;
            Mask start = 1ull << s;
            // dedupe: sets are enumerated with minimum vertex = s
            Mask allowed_s = allowed & ~((1ull << s) - 1);
            bool done = grow(start, gadj[s] | start, allowed_s, max_size, [&](Mask bs) {
                for (Mask req : need)
                    if (!adjacent_masks(bs, req)) return false;
                assigned[idx] = bs;
                return assign(idx + 1, used | bs);
            });
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<Model> is_minor(const Graph& h, const Graph& g, int cap) {
    if (g.order() > cap)
        throw PreconditionError("minor test cap exceeded: v(G) = " +
                                std::to_string(g.order()) + " > " + std::to_string(cap));
    if (h.order() == 0) return Model{};
    if (h.order() > g.order() || h.edge_count() > g.edge_count()) return std::nullopt;
    MinorSearch ms{h, g, g.order(), {}, {}, {}};
    ms.order.resize(h.order());
    std::iota(ms.order.begin(), ms.order.end(), 0);
    std::stable_sort(ms.order.begin(), ms.order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    ms.assigned.resize(h.order());
    ms.gadj.assign(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        ms.gadj[u] |= 1ull << v;
        ms.gadj[v] |= 1ull << u;
    }
    if (!ms.assign(0, 0)) return std::nullopt;
    Model m;
    m.branch_sets.resize(h.order());
    for (size_t idx = 0; idx < ms.order.size(); ++idx) {
        Mask bs = ms.assigned[idx];
        for (int v = 0; v < g.order(); ++v)
            if (bs >> v & 1) m.branch_sets[ms.order[idx]].push_back(v);
    }
    return m;
}

// --- isomorphism -----------------------------------------------------------------

namespace {

std::vector<long> refine_colors(const Graph& g) {
    int n = g.order();
    std::vector<long> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<long>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<long> s;
            s.push_back(color[v]);
            for (int u : g.neighbors(v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<long> next(n);
        long c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) break;
        color = next;
    }
    return color;
}

bool iso_backtrack(const Graph& a, const Graph& b, const std::vector<long>& ca,
                   const std::vector<long>& cb, std::vector<int>& map,
                   std::vector<bool>& used, int v) {
    int n = a.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || ca[v] != cb[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (iso_backtrack(a, b, ca, cb, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
    auto ca = refine_colors(a), cb = refine_colors(b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    std::vector<int> map(a.order(), -1);
    std::vector<bool> used(a.order(), false);
    if (!iso_backtrack(a, b, ca, cb, map, used, 0)) return std::nullopt;
    return map;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

// --- enumeration ------------------------------------------------------------------

namespace {

using EdgeMask = unsigned int;  // up to C(7,2)=21 bits

int edge_index(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    // index in lexicographic (u,v) order
    int idx = 0;
    for (int a = 0; a < u; ++a) idx += n - a - 1;
    return idx + (v - u - 1);
}

EdgeMask canonical_mask(int n, EdgeMask m) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeMask best = ~0u;
    do {
        EdgeMask pm = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (m >> edge_index(u, v, n) & 1)
                    pm |= 1u << edge_index(perm[u], perm[v], n);
        best = std::min(best, pm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_mask(int n, EdgeMask m) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (m >> edge_index(u, v, n) & 1) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

}  // namespace

std::vector<Graph> enumerate_graphs(int max_vertices, std::optional<int> chi_cap) {
    if (max_vertices < 1 || max_vertices > 7)
        throw PreconditionError("enumeration cap: 1 <= max_vertices <= 7");
    std::vector<Graph> out;
    std::vector<EdgeMask> level = {0};  // canonical masks on n vertices
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<EdgeMask> next;
        if (n == 1) {
            next = {0};
        } else {
            // extend each (n-1)-vertex canonical graph by one vertex
            std::vector<EdgeMask> seen;
            for (EdgeMask parent : level) {
                // re-embed parent edges into n-vertex indexing
                EdgeMask base = 0;
                for (int u = 0; u < n - 1; ++u)
                    for (int v = u + 1; v < n - 1; ++v)
                        if (parent >> edge_index(u, v, n - 1) & 1)
                            base |= 1u << edge_index(u, v, n);
                for (unsigned nb = 0; nb < (1u << (n - 1)); ++nb) {
                    EdgeMask m = base;
                    for (int u = 0; u < n - 1; ++u)
                        if (nb >> u & 1) m |= 1u << edge_index(u, n - 1, n);
                    seen.push_back(canonical_mask(n, m));
                }
            }
            std::sort(seen.begin(), seen.end());
            seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
            next = std::move(seen);
        }
        for (EdgeMask m : next) {
            Graph g = graph_from_mask(n, m);
            if (!chi_cap || chromatic_number(g) <= *chi_cap) out.push_back(g);
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace minorvol
