#include "minorvol/volume.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace minorvol {

std::vector<int> NModel::mu_sharp(int n) const {
    std::vector<int> mu(n, 0);
    for (const auto& [i, j] : assign) {
        if (i >= 1 && i <= n) ++mu[i - 1];
        if (j >= 1 && j <= n) ++mu[j - 1];
    }
    return mu;
}

bool validate_nmodel(const Graph& h, const NModel& m) {
    if (static_cast<int>(m.assign.size()) != h.order()) return false;
    for (const auto& [i, j] : m.assign) {
        if (i < 1) return false;
        if (j != -1 && j <= i) return false;
    }
    // same-singleton vertices pairwise non-adjacent
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v) {
            if (m.assign[u][1] != -1 || m.assign[v][1] != -1) continue;
            if (m.assign[u][0] == m.assign[v][0] && h.has_edge(u, v)) return false;
        }
    return true;
}

namespace {

bool dominates_eq(const std::vector<int>& a, const std::vector<int>& b) {
    // a >= b coordinatewise
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

struct ParetoSet {
    std::vector<std::vector<int>> vecs;
    std::vector<NModel> wits;

    bool dominated(const std::vector<int>& v) const {
        for (const auto& p : vecs)
            if (dominates_eq(v, p)) return true;
        return false;
    }

    void insert(const std::vector<int>& v, const NModel& w) {
        if (dominated(v)) return;
        size_t out = 0;
        for (size_t i = 0; i < vecs.size(); ++i) {
            if (dominates_eq(vecs[i], v)) continue;  // drop dominated member
            if (out != i) {
                vecs[out] = std::move(vecs[i]);
                wits[out] = std::move(wits[i]);
            }
            ++out;
        }
        vecs.resize(out);
        wits.resize(out);
        vecs.push_back(v);
        wits.push_back(w);
    }
};

}  // namespace

ModelSet enumerate_nmodels(const Graph& h, int n, long budget) {
    if (n < 1) throw PreconditionError("support must be >= 1");
    int hv = h.order();
    if (hv < 1) throw PreconditionError("H must be non-null");

    // H-vertices in descending-degree order: constrained choices first
    std::vector<int> order(hv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });

    ParetoSet pareto;
    NModel current;
    current.assign.assign(hv, {0, 0});
    std::vector<int> mu(n, 0);
    // singleton_holder[i] = H-vertices currently holding singleton {i+1}
    std::vector<std::vector<int>> singleton_holder(n);
    long leaves = 0;

    std::function<void(int)> rec = [&](int depth) {
        if (depth == hv) {
            if (++leaves > budget)
                throw BudgetExceeded("jumbled model enumeration budget exceeded");
            pareto.insert(mu, current);
            return;
        }
        if (depth > 0 && pareto.dominated(mu)) return;
        int v = order[depth];
        for (int i = 0; i < n; ++i) {
            // singleton {i+1}: allowed if v is non-adjacent to current holders
            bool ok = true;
            for (int u : singleton_holder[i])
                if (h.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                current.assign[v] = {i + 1, -1};
                singleton_holder[i].push_back(v);
                ++mu[i];
                rec(depth + 1);
                --mu[i];
                singleton_holder[i].pop_back();
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                current.assign[v] = {i + 1, j + 1};
                ++mu[i];
                ++mu[j];
                rec(depth + 1);
                --mu[i];
                --mu[j];
            }
    };
    rec(0);

    ModelSet ms;
    ms.target = h;
    ms.support = n;
    std::vector<int> idx(pareto.vecs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return pareto.vecs[a] < pareto.vecs[b]; });
    for (int i : idx) {
        ms.generators.push_back(pareto.vecs[i]);
        ms.witnesses.push_back(pareto.wits[i]);
    }
    return ms;
}

bool verify_certificate(const ModelSet& ms, const WeightVector& w,
                        const DualCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    Rational aw = 0;
    for (const auto& [i, v] : cert.a.entries()) {
        if (v < 0) return fail("negative dual entry");
        aw += v * w.get(i);
    }
    if (aw != cert.value) return fail("a.w != certified value");
    // both the certificate and the generators live on canonical [n]
    for (const auto& gen : ms.generators) {
        Rational s = 0;
        for (int i = 0; i < ms.support; ++i) s += cert.a.get(i + 1) * gen[i];
        if (s < 1) return fail("generator uncovered");
    }
    return true;
}

// --- vector volume ----------------------------------------------------------------

VolumeResult vol_vector(const Graph& h, const WeightVector& w, long budget) {
    VolumeResult res;
    if (w.empty()) return res;  // Vol = 0, empty certificate

    auto [vals, idx] = w.canonical();
    int n = static_cast<int>(vals.size());
    ModelSet ms = enumerate_nmodels(h, n, budget);
    int m = static_cast<int>(ms.generators.size());

    LinearProgram lp;
    lp.objective = VectorXq::Constant(m, 1);
    lp.A = MatrixXq::Zero(n, m);
    lp.rhs = VectorXq(n);
    for (int i = 0; i < n; ++i) lp.rhs[i] = vals[i];
    for (int c = 0; c < m; ++c)
        for (int i = 0; i < n; ++i) lp.A(i, c) = ms.generators[c][i];
    lp.senses.assign(n, Sense::LE);
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) throw InternalError("packing LP not optimal");
    std::string why;
    if (!verify_optimal(lp, sol, &why)) throw InternalError("packing LP certificate: " + why);

    res.value = sol.value;
    res.cert.value = sol.value;
    for (int i = 0; i < n; ++i)
        if (sol.dual[i] != 0) res.cert.a.set(idx[i], sol.dual[i]);
    for (int c = 0; c < m; ++c)
        if (sol.primal[c] != 0) {
            res.coefficients.push_back(sol.primal[c]);
            // witness on original indices
            NModel nm = ms.witnesses[c];
            for (auto& pair : nm.assign) {
                int a = idx[pair[0] - 1];
                int b = pair[1] == -1 ? -1 : idx[pair[1] - 1];
                if (b != -1 && a > b) std::swap(a, b);
                pair = {a, b};
            }
            res.nmodels.push_back(std::move(nm));
        }
    // dual feasibility against every generator, on canonical indices
    DualCertificate canon;
    canon.value = sol.value;
    for (int i = 0; i < n; ++i)
        if (sol.dual[i] != 0) canon.a.set(i + 1, sol.dual[i]);
    WeightVector wc;
    for (int i = 0; i < n; ++i) wc.set(i + 1, vals[i]);
    if (!verify_certificate(ms, wc, canon, &why))
        throw InternalError("volume certificate: " + why);
    return res;
}

// --- graph volume by column generation ---------------------------------------------

namespace {

using Mask = unsigned long long;

// all connected vertex subsets of g as bitmasks, sizes 1..max_size
std::vector<Mask> connected_subsets(const Graph& g, int max_size, long budget) {
    int n = g.order();
    if (n > 62) throw PreconditionError("host too large for subset enumeration");
    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    std::vector<Mask> out;
    std::function<void(Mask, Mask, Mask)> grow = [&](Mask cur, Mask frontier, Mask allowed) {
        out.push_back(cur);
        if (static_cast<long>(out.size()) > budget)
            throw BudgetExceeded("connected subset budget exceeded");
        if (__builtin_popcountll(cur) >= max_size) return;
        Mask cand = frontier & allowed & ~cur;
        while (cand) {
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            grow(cur | (1ull << v), frontier | adj[v], allowed);
            allowed &= ~(1ull << v);
        }
    };
    Mask all = (n >= 62) ? ~0ull : (1ull << n) - 1;
    for (int s = 0; s < n; ++s) {
        Mask above = all & ~((1ull << (s + 1)) - 1);
        grow(1ull << s, adj[s] | (1ull << s), above | (1ull << s));
    }
    return out;
}

bool is_complete_multipartite(const Graph& g) {
    // non-adjacency must be transitive
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                if (g.has_edge(u, w) != g.has_edge(v, w)) return false;
            }
        }
    return true;
}

struct PricingOracle {
    const Graph& h;
    const Graph& g;
    std::vector<Mask> sets;       // candidate branch sets
    std::vector<Mask> set_reach;  // union of neighborhoods, for (M2)
    std::vector<int> order;       // H-vertices, descending degree

    PricingOracle(const Graph& h_, const Graph& g_, long budget) : h(h_), g(g_) {
        int cap = is_complete_multipartite(g) ? std::min(2, g.order()) : g.order();
        sets = connected_subsets(g, cap, budget);
        std::vector<Mask> adj(g.order(), 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1ull << v;
            adj[v] |= 1ull << u;
        }
        set_reach.resize(sets.size());
        for (size_t s = 0; s < sets.size(); ++s) {
            Mask r = 0;
            Mask m = sets[s];
            while (m) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                r |= adj[v];
            }
            set_reach[s] = r;
        }
        order.resize(h.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
    }

    struct Result {
        Rational best = 0;
        bool found = false;
        std::vector<std::vector<Mask>> cheap;  // models with value < cutoff
    };

    /// Exact minimum of sum_v a(mu(v)) over all jumbled models of h in g,
    /// plus up to `keep` models cheaper than `cutoff`.
    Result price(const std::vector<Rational>& a, const Rational& cutoff, size_t keep) const {
        std::vector<Rational> set_cost(sets.size(), Rational(0));
        for (size_t s = 0; s < sets.size(); ++s) {
            Mask m = sets[s];
            while (m) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                set_cost[s] += a[v];
            }
        }
        std::vector<int> by_cost(sets.size());
        std::iota(by_cost.begin(), by_cost.end(), 0);
        std::stable_sort(by_cost.begin(), by_cost.end(),
                         [&](int x, int y) { return set_cost[x] < set_cost[y]; });
        Rational min_cost = set_cost[by_cost[0]];

        Result res;
        std::vector<Mask> chosen(order.size());
        std::vector<Rational> partial(order.size() + 1, Rational(0));
        std::function<void(size_t)> rec = [&](size_t depth) {
            if (depth == order.size()) {
                if (!res.found || partial[depth] < res.best) {
                    res.found = true;
                    res.best = partial[depth];
                }
                if (partial[depth] < cutoff && res.cheap.size() < keep)
                    res.cheap.push_back(chosen);
                return;
            }
            int hv = order[depth];
            for (int sidx : by_cost) {
                Rational next = partial[depth] + set_cost[sidx];
                Rational lb = next + min_cost * static_cast<int>(order.size() - depth - 1);
                // sets are sorted by cost, so once the bound fails it stays failed
                bool improving = !res.found || lb < res.best;
                bool collecting = res.cheap.size() < keep && lb < cutoff;
                if (!improving && !collecting) break;
                bool ok = true;
                for (size_t j = 0; j < depth && ok; ++j)
                    if (h.has_edge(hv, order[j]))
                        ok = (set_reach[sidx] & chosen[j]) != 0;
                if (!ok) continue;
                chosen[depth] = sets[sidx];
                partial[depth + 1] = next;
                rec(depth + 1);
            }
        };
        rec(0);
        return res;
    }

    Model to_model(const std::vector<Mask>& chosen) const {
        Model m;
        m.branch_sets.resize(h.order());
        for (size_t d = 0; d < order.size(); ++d) {
            Mask bs = chosen[d];
            while (bs) {
                int v = __builtin_ctzll(bs);
                bs &= bs - 1;
                m.branch_sets[order[d]].push_back(v);
            }
        }
        return m;
    }
};

std::vector<int> model_mu_sharp(const Model& m, int n) {
    std::vector<int> mu(n, 0);
    for (const auto& bs : m.branch_sets)
        for (int v : bs) ++mu[v];
    return mu;
}

}  // namespace

VolumeResult vol_weighted(const Graph& h, const Graph& g, const WeightVector& w,
                          long budget) {
    if (h.order() < 1) throw PreconditionError("H must be non-null");
    VolumeResult res;
    if (g.order() == 0) return res;
    if (!w.empty() && w.max_index() > g.order())
        throw PreconditionError("weight index beyond host order");
    int n = g.order();
    std::vector<Rational> cap(n, Rational(0));
    for (int v = 0; v < n; ++v) cap[v] = w.get(v + 1);

    PricingOracle oracle(h, g, budget);

    std::vector<Model> columns;
    std::vector<std::vector<int>> col_mu;
    LpSolution sol;
    std::vector<Rational> duals(n, Rational(0));
    long rounds = 0;
    for (;;) {
        if (++rounds > 100000) throw InternalError("column generation failed to converge");
        auto priced = oracle.price(duals, Rational(1), 24);
        if (!priced.found) {
            // no jumbled model of h in g at all: Vol = 0 with the zero dual
            res.value = 0;
            res.cert.value = 0;
            return res;
        }
        if (priced.best >= 1) {
            if (columns.empty())
                throw InternalError("zero duals priced a nonzero model cost");
            break;
        }
        size_t before = columns.size();
        for (const auto& chosen : priced.cheap) {
            Model m = oracle.to_model(chosen);
            auto mu = model_mu_sharp(m, n);
            if (std::find(col_mu.begin(), col_mu.end(), mu) == col_mu.end()) {
                col_mu.push_back(mu);
                columns.push_back(std::move(m));
            }
        }
        if (columns.size() == before)
            throw InternalError("column generation stalled");

        LinearProgram lp;
        int mcols = static_cast<int>(columns.size());
        lp.objective = VectorXq::Constant(mcols, 1);
        lp.A = MatrixXq::Zero(n, mcols);
        lp.rhs = VectorXq(n);
        for (int v = 0; v < n; ++v) lp.rhs[v] = cap[v];
        for (int c = 0; c < mcols; ++c)
            for (int v = 0; v < n; ++v) lp.A(v, c) = col_mu[c][v];
        lp.senses.assign(n, Sense::LE);
        sol = solve(lp);
        if (sol.status != LpStatus::Optimal) throw InternalError("packing LP not optimal");
        std::string why;
        if (!verify_optimal(lp, sol, &why))
            throw InternalError("packing LP certificate: " + why);
        for (int v = 0; v < n; ++v) duals[v] = sol.dual[v];
    }

    // the terminal pricing pass proves a.mu# >= 1 for EVERY jumbled model
    auto proof = oracle.price(duals, Rational(0), 0);
    if (!proof.found || proof.best < 1)
        throw InternalError("final dual certificate not feasible");
    res.value = sol.value;
    res.cert.value = sol.value;
    Rational aw = 0;
    for (int v = 0; v < n; ++v) {
        if (duals[v] < 0) throw InternalError("negative dual");
        if (duals[v] != 0) res.cert.a.set(v + 1, duals[v]);
        aw += duals[v] * cap[v];
    }
    if (aw != res.value) throw InternalError("certificate value mismatch");
    for (size_t c = 0; c < columns.size(); ++c)
        if (sol.primal[static_cast<int>(c)] != 0) {
            res.coefficients.push_back(sol.primal[static_cast<int>(c)]);
            res.gmodels.push_back(columns[c]);
        }
    return res;
}

VolumeResult vol_graph(const Graph& h, const Graph& g, long budget) {
    WeightVector ones;
    for (int v = 0; v < g.order(); ++v) ones.set(v + 1, 1);
    return vol_weighted(h, g, ones, budget);
}

Rational bipartite_vol_bound(int s, int t, const Graph& g) {
    if (s < t || t < 1) throw PreconditionError("need s >= t >= 1");
    if (g.order() == 0) throw PreconditionError("null host");
    Rational a = Rational(g.order()) / (s + t);
    Rational b = Rational(g.min_degree()) / t;
    return std::min(a, b);
}

Model blowup_pack(const Graph& h, const Graph& g, int k, int ell) {
    if (k < 1 || ell < 1) throw PreconditionError("k, ell >= 1");
    VolumeResult res = vol_graph(h, g);
    long achievable = 0;
    std::vector<long> copies(res.coefficients.size());
    for (size_t i = 0; i < res.coefficients.size(); ++i) {
        copies[i] = static_cast<long>(floor_rat(res.coefficients[i] * k));
        achievable += copies[i];
    }
    if (achievable < ell)
        throw PreconditionError("floored packing yields only " +
                                std::to_string(achievable) + " of " +
                                std::to_string(ell) + " copies");

    // blowup vertex (u, slot) = u*k + slot, matching blowup(g, k)'s layout
    std::vector<int> next_free(g.order(), 0);
    Model out;
    out.branch_sets.resize(static_cast<size_t>(ell) * h.order());
    int copy = 0;
    for (size_t i = 0; i < res.gmodels.size() && copy < ell; ++i) {
        for (long c = 0; c < copies[i] && copy < ell; ++c, ++copy) {
            for (int v = 0; v < h.order(); ++v) {
                std::vector<int>& bs = out.branch_sets[copy * h.order() + v];
                for (int u : res.gmodels[i].branch_sets[v]) {
                    if (next_free[u] >= k) throw InternalError("blowup capacity overflow");
                    bs.push_back(u * k + next_free[u]++);
                }
            }
        }
    }
    return out;
}

}  // namespace minorvol
