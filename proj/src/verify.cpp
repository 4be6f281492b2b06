#include "minorvol/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace minorvol {

namespace {

using CaseFn = std::function<SuiteCase()>;

// deterministic output regardless of job count: inputs are generated up
// front, results land in their slot
std::vector<SuiteCase> run_cases(std::vector<CaseFn> fns, int jobs) {
    std::vector<SuiteCase> out(fns.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < fns.size(); ++i) out[i] = fns[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= fns.size()) return;
            out[i] = fns[i]();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

SuiteCase make_case(const std::string& name, bool pass, const std::string& detail = "") {
    return {name, pass, detail};
}

SuiteCase guarded(const std::string& name, const std::function<SuiteCase()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return make_case(name, false, std::string("exception: ") + e.what());
    }
}

Rational rnd_rat(std::mt19937& rng, int num_range, int den_range) {
    return Rational(1 + static_cast<int>(rng() % num_range),
                    1 + static_cast<int>(rng() % den_range));
}

Graph random_graph(std::mt19937& rng, int min_n, int max_n, int percent_edge) {
    int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent_edge) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph ensure_min_degree_one(const Graph& g, std::mt19937& rng) {
    std::vector<std::pair<int, int>> es = g.edges();
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 0) continue;
        int u = static_cast<int>(rng() % g.order());
        if (u == v) u = (u + 1) % g.order();
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(g.order(), std::move(es));
}

Graph random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back(static_cast<int>(rng() % v), v);
    return Graph(n, std::move(es));
}

// --- individual suites ---------------------------------------------------------------

SuiteResult suite_duality(const SuiteOptions& opt) {
    SuiteResult res{"duality", opt.seed, {}};
    std::mt19937 rng(opt.seed);
    std::vector<Graph> hs = {complete_graph(3), complete_graph(4), cycle_graph(5),
                             path_graph(4), complete_bipartite(2, 2)};
    std::vector<CaseFn> fns;
    for (int t = 0; t < opt.cases; ++t) {
        const Graph h = hs[t % hs.size()];
        if (t % 4 == 3) {
            Graph g = random_graph(rng, 3, 6, 60);
            fns.push_back([t, h, g] {
                return guarded("graph-dual-" + std::to_string(t), [&] {
                    VolumeResult r = vol_graph(h, g);  // verifies its certificate
                    Rational aw = 0;
                    for (const auto& [i, v] : r.cert.a.entries()) aw += v;
                    return make_case("graph-dual-" + std::to_string(t),
                                     aw == r.value && r.cert.value == r.value,
                                     "Vol=" + rational_str(r.value));
                });
            });
        } else {
            WeightVector w;
            int sup = 2 + static_cast<int>(rng() % 4);
            for (int i = 1; i <= sup; ++i)
                if (rng() % 5) w.set(i, rnd_rat(rng, 8, 4));
            fns.push_back([t, h, w] {
                return guarded("vector-dual-" + std::to_string(t), [&] {
                    if (w.empty())
                        return make_case("vector-dual-" + std::to_string(t), true, "zero");
                    VolumeResult r = vol_vector(h, w);
                    auto [vals, idx] = w.canonical();
                    ModelSet ms =
                        enumerate_nmodels(h, static_cast<int>(vals.size()), 1000000);
                    DualCertificate canon;
                    canon.value = r.value;
                    for (size_t i = 0; i < idx.size(); ++i)
                        if (r.cert.a.get(idx[i]) != 0)
                            canon.a.set(static_cast<int>(i) + 1, r.cert.a.get(idx[i]));
                    WeightVector wc;
                    for (size_t i = 0; i < vals.size(); ++i)
                        wc.set(static_cast<int>(i) + 1, vals[i]);
                    std::string why;
                    bool ok = verify_certificate(ms, wc, canon, &why);
                    return make_case("vector-dual-" + std::to_string(t), ok, why);
                });
            });
        }
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteResult suite_superadditivity(const SuiteOptions& opt) {
    SuiteResult res{"superadditivity", opt.seed, {}};
    std::mt19937 rng(opt.seed);
    std::vector<Graph> hs = {complete_graph(3), complete_graph(4), cycle_graph(5)};
    std::vector<CaseFn> fns;
    for (int t = 0; t < opt.cases; ++t) {
        const Graph h = hs[t % hs.size()];
        WeightVector w1, w2;
        int sup = 2 + static_cast<int>(rng() % 3);
        for (int i = 1; i <= sup; ++i) {
            if (rng() % 4) w1.set(i, rnd_rat(rng, 6, 4));
            if (rng() % 4) w2.set(i, rnd_rat(rng, 6, 4));
        }
        Rational q = rnd_rat(rng, 5, 3);
        fns.push_back([t, h, w1, w2, q] {
            return guarded("superadd-" + std::to_string(t), [&] {
                if (w1.empty() || w2.empty())
                    return make_case("superadd-" + std::to_string(t), true, "zero");
                Rational v1 = vol_vector(h, w1).value;
                Rational v2 = vol_vector(h, w2).value;
                Rational vs = vol_vector(h, w1 + w2).value;
                bool super = vs >= v1 + v2;
                bool scale = vol_vector(h, w1.scaled(q)).value == q * v1;
                return make_case("superadd-" + std::to_string(t), super && scale,
                                 rational_str(vs) + " >= " + rational_str(v1 + v2));
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteResult suite_fourcolor(const SuiteOptions& opt) {
    SuiteResult res{"fourcolor", opt.seed, {}};
    std::vector<Graph> graphs = enumerate_graphs(opt.max_vertices, 4);
    std::vector<CaseFn> fns;
    int idx = 0;
    for (const Graph& h : graphs) {
        if (h.order() < 2) continue;
        int id = idx++;
        fns.push_back([id, h, &opt] {
            std::string name = "fourcolor-" + std::to_string(id) + "-v" +
                               std::to_string(h.order());
            return guarded(name, [&] {
                GraphInvariants inv = invariants(h, 1);
                Rational closed = std::max(Rational(h.order()) / 2, Rational(inv.tau));
                // upper: the restricted sup never exceeds the closed form
                Rational last = 0;
                for (int n = 2; n <= opt.support; ++n) {
                    SupportBound sb = cf_support_bound(h, n, std::max(6, opt.support));
                    if (sb.report.kind != BoundKind::Exact)
                        return make_case(name, false, "irrational support bound");
                    if (sb.report.value > closed)
                        return make_case(name, false,
                                         "support bound " + rational_str(sb.report.value) +
                                             " exceeds " + rational_str(closed));
                    if (sb.report.value < last)
                        return make_case(name, false, "monotonicity violated");
                    last = sb.report.value;
                }
                // reach: the witness-support bound together with c_T comes within
                // 1/10 of the closed form
                BoundReport ct = c_T(h);
                int n0 = 2;
                if (ct.witness_index && *ct.witness_index >= 2)
                    n0 = std::min(*ct.witness_index, std::min(4, opt.support));
                Rational reach =
                    std::max(cf_support_bound(h, std::max(2, n0)).report.value, ct.value);
                if (reach < closed - Rational(1, 10))
                    return make_case(name, false,
                                     "reach " + rational_str(reach) + " misses " +
                                         rational_str(closed));
                return make_case(name, true,
                                 "closed " + rational_str(closed) + ", reach " +
                                     rational_str(reach));
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteResult suite_twothirds(const SuiteOptions& opt) {
    SuiteResult res{"twothirds", opt.seed, {}};
    std::vector<CaseFn> fns;
    int idx = 0;
    for (const Graph& h : enumerate_graphs(opt.max_vertices)) {
        if (h.order() < 2) continue;
        BoundReport ct = c_T(h);
        if (3 * ct.value <= 2 * h.order()) continue;
        int id = idx++;
        fns.push_back([id, h, ct] {
            std::string name = "twothirds-" + std::to_string(id);
            return guarded(name, [&] {
                // the density system at c = c_T / v must hold, which certifies
                // c_f <= c_T; together with c_f >= c_T this pins the closed form
                DensityInequalities di =
                    verify_density_inequalities(h, ct.value / h.order());
                if (!di.all_hold) return make_case(name, false, "density system violated");
                auto cf = cf_closed_form(h);
                if (!cf || cf->value != ct.value)
                    return make_case(name, false, "closed form mismatch");
                Rational sb = cf_support_bound(h, 3).report.value;
                if (sb > ct.value)
                    return make_case(name, false, "support bound exceeds c_T");
                return make_case(name, true, "c_T = " + rational_str(ct.value));
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteCase sandwich_one(const std::string& name, const Graph& h, int support) {
    return guarded(name, [&] {
        SupportBound sb = cf_support_bound(h, support);
        if (sb.report.kind != BoundKind::Exact)
            return make_case(name, false, "irrational support bound");
        Rational value = sb.report.value;
        // witness with Vol < 1, close to the restricted sup
        WeightVector w;
        if (sb.attained && sb.maximizer) {
            w = *sb.maximizer;
        } else {
            // recession direction: big weight on the zero coordinate, budget
            // on the best positive one
            int zero_idx = -1;
            for (int i = 1; i <= support; ++i)
                if (sb.dual_vertex.get(i) == 0) zero_idx = i;
            if (zero_idx < 0) return make_case(name, false, "no recession coordinate");
            Rational best = 0;
            int best_i = -1;
            for (const auto& [i, a] : sb.dual_vertex.entries())
                if (a > 0 && (best_i < 0 || Rational(1) / a > best)) {
                    best = Rational(1) / a;
                    best_i = i;
                }
            w.set(zero_idx, 8);
            w.set(best_i, best);
        }
        w = w.scaled(Rational(999, 1000));
        // keep |x| within the brute-force minor cap
        if (floor_rat(w.total()) > 12) w = w.scaled(Rational(12) / w.total());
        Rational slack = value - w.density();
        WeightVector x = round_weights(h, w);  // checks Vol < 1 twice
        Rational dx = x.support_size() >= 1 && x.total() > 0 ? x.density() : Rational(0);
        if (dx < w.density() - 2)
            return make_case(name, false, "rounded density dropped below d(w) - 2");
        if (x.total() != Rational(floor_rat(w.total())))
            return make_case(name, false, "|x| != floor |w|");
        if (dx < value - 2 - slack)
            return make_case(name, false, "sandwich slack accounting failed");
        std::vector<int> parts;
        for (const auto& [i, v] : x.entries())
            parts.push_back(static_cast<int>(floor_rat(v)));
        std::sort(parts.rbegin(), parts.rend());
        if (!parts.empty()) {
            Graph host = complete_multipartite(parts);
            if (host.order() >= h.order() && is_minor(h, host).has_value())
                return make_case(name, false, "rounded multipartite graph has an H minor");
            long n_host = host.order();
            if (n_host >= 2) {
                BoundReport gamma = gamma_search(
                    h, static_cast<int>(std::min<long>(12, std::max<long>(2, n_host))));
                if (gamma.value < dx)
                    return make_case(name, false, "gamma search below d(x)");
            }
        }
        return make_case(name, true, "value " + rational_str(value));
    });
}

SuiteResult suite_sandwich(const SuiteOptions& opt) {
    SuiteResult res{"sandwich", opt.seed, {}};
    std::vector<CaseFn> fns;
    int idx = 0;
    for (const Graph& h : enumerate_graphs(opt.max_vertices)) {
        if (h.order() < 2 || h.edge_count() == 0) continue;
        int id = idx++;
        int support = std::min(3, opt.support);
        fns.push_back(
            [id, h, support] { return sandwich_one("sandwich-" + std::to_string(id), h, support); });
        // deletion continuity rides along on the same graph family
        fns.push_back([id, h, support] {
            std::string name = "deletion-" + std::to_string(id);
            return guarded(name, [&] {
                auto cf = cf_closed_form(h);
                for (int v = 0; v < h.order() && h.order() >= 3; ++v) {
                    std::vector<int> keep;
                    for (int u = 0; u < h.order(); ++u)
                        if (u != v) keep.push_back(u);
                    auto sub = cf_closed_form(h.induced(keep));
                    if (!sub) continue;
                    if (cf && cf->value > sub->value + 1)
                        return make_case(name, false, "closed-form continuity violated");
                    Rational sb = cf_support_bound(h, support).report.value;
                    if (sb > sub->value + 1)
                        return make_case(name, false, "support bound continuity violated");
                }
                return make_case(name, true);
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteResult suite_bipartite_vol(const SuiteOptions& opt) {
    SuiteResult res{"bipartite-vol", opt.seed, {}};
    std::mt19937 rng(opt.seed);
    const std::vector<std::pair<int, int>> sts = {{1, 1}, {2, 1}, {2, 2}, {3, 2}};
    std::vector<CaseFn> fns;
    for (int t = 0; t < opt.cases; ++t) {
        Graph g = ensure_min_degree_one(
            random_graph(rng, 2, 8, 25 + static_cast<int>(rng() % 60)), rng);
        auto [s, tt] = sts[t % sts.size()];
        fns.push_back([t, g, s = s, tt = tt] {
            std::string name = "bipartite-" + std::to_string(t) + "-K" +
                               std::to_string(s) + std::to_string(tt);
            return guarded(name, [&] {
                Rational bound = bipartite_vol_bound(s, tt, g);
                Rational vol = vol_graph(complete_bipartite(s, tt), g).value;
                return make_case(name, vol >= bound,
                                 "Vol " + rational_str(vol) + " vs " + rational_str(bound));
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteResult suite_rounding(const SuiteOptions& opt) {
    SuiteResult res{"rounding", opt.seed, {}};
    std::mt19937 rng(opt.seed);
    struct Target {
        Graph h;
        bool dense;  // require d(w) >= 2 (impossible for K_3, whose c_f is 2)
    };
    std::vector<Target> targets = {{complete_graph(3), false},
                                   {complete_graph(4), true},
                                   {cycle_graph(5), true}};
    std::vector<CaseFn> fns;
    for (int t = 0; t < opt.cases; ++t) {
        const Target& tgt = targets[t % targets.size()];
        // sample a weight vector in the precondition region
        WeightVector w;
        if (!tgt.dense) {
            int sup = 2 + static_cast<int>(rng() % 5);
            for (int i = 1; i <= sup; ++i) w.set(i, rnd_rat(rng, 9, 3));
        } else {
            // near the recession direction of the restricted sup (both K_4 and
            // C_5 have recession value 3): d(w) stays above 2 after rescaling,
            // and |w| < 15 keeps the rounded multipartite host inside the
            // brute-force minor cap
            int big = 8 + static_cast<int>(rng() % 4);
            w.set(1, big);
            w.set(2, 3);
            if (rng() % 2) w.set(3, Rational(1, 3 + static_cast<int>(rng() % 3)));
        }
        fns.push_back([t, tgt, w] {
            std::string name = "rounding-" + std::to_string(t);
            return guarded(name, [&] {
                WeightVector ww = w;
                Rational vol = vol_vector(tgt.h, ww).value;
                if (vol >= 1) ww = ww.scaled(Rational(999, 1000) / vol);
                Rational dw = ww.density();
                if (tgt.dense && dw < 2)
                    return make_case(name, false, "sampler left the d >= 2 region");
                Rational volw = vol_vector(tgt.h, ww).value;
                if (volw >= 1) return make_case(name, false, "sampler left Vol < 1");
                WeightVector x = round_weights(tgt.h, ww);
                if (x.total() != Rational(floor_rat(ww.total())))
                    return make_case(name, false, "|x| != floor|w|");
                if (tgt.dense && x.total() < 4)
                    return make_case(name, false, "|x| >= 4 failed");
                if (!x.empty() && vol_vector(tgt.h, x).value >= 1)
                    return make_case(name, false, "Vol(x) >= 1");
                Rational dx = x.empty() ? Rational(0) : x.density();
                if (dx < dw - 2) return make_case(name, false, "d(x) < d(w) - 2");
                std::vector<int> parts;
                for (const auto& [i, v] : x.entries())
                    parts.push_back(static_cast<int>(floor_rat(v)));
                if (!parts.empty()) {
                    Graph host = complete_multipartite(parts);
                    if (host.order() >= tgt.h.order() &&
                        is_minor(tgt.h, host).has_value())
                        return make_case(name, false, "H embeds as a minor after rounding");
                }
                return make_case(name, true, "d(w)=" + rational_str(dw));
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteResult suite_normbound(const SuiteOptions& opt) {
    SuiteResult res{"normbound", opt.seed, {}};
    std::mt19937 rng(opt.seed);
    std::vector<CaseFn> fns;
    int produced = 0;
    for (int trial = 0; trial < 4 * opt.cases && produced < opt.cases; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        Rational b(static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3));
        Rational a = std::max(Rational(1 + k * b * b / 4), Rational(2 * b + 1));
        if (a * a < k * b * b || 4 * a < 4 + k * b * b) continue;
        WeightVector w;
        int sup = 1 + static_cast<int>(rng() % 6);
        for (int i = 1; i <= sup; ++i)
            w.set(i, Rational(static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 4)));
        if (w.empty()) continue;
        Rational head = 0;
        for (int i = 1; i <= k; ++i) head += w.get(i);
        Rational lhs = a * w.total() - b * head;
        if (lhs > 1) w = w.scaled(Rational(1) / lhs);
        int id = produced++;
        fns.push_back([id, a, b, k, w] {
            std::string name = "normbound-" + std::to_string(id);
            return guarded(name, [&] {
                NormBoundCheck c = normbound_check(a, b, k, w);
                if (!c.preconditions_hold) return make_case(name, true, "outside region");
                return make_case(name, c.conclusion_holds,
                                 rational_str(c.norm) + " <= " + rational_str(c.total));
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteResult suite_decompositions(const SuiteOptions& opt) {
    SuiteResult res{"decompositions", opt.seed, {}};
    std::mt19937 rng(opt.seed);
    std::vector<CaseFn> fns;
    for (int d = 1; d <= 8; ++d) {
        fns.push_back([d] {
            std::string name = "hypercube-" + std::to_string(d);
            return guarded(name, [&] {
                Graph q = hypercube(d);
                Decomposition dec = hypercube_decompose(d);
                bool ok = dec.covers(q) && dec.excess(q) == (1L << d) &&
                          Rational(dec.max_bag()) <= Rational(1L << ((d + 1) / 2)) &&
                          q.edge_count() == static_cast<long>(d) * (1L << (d - 1));
                return make_case(name, ok, "excess " + std::to_string(dec.excess(q)));
            });
        });
    }
    auto pipeline = [](const std::string& name, const Graph& g, const Rational& eps,
                       const SeparatorParams& params, const SeparatorProvider& sep) {
        return guarded(name, [&] {
            Decomposition dec = eppstein_decompose(g, eps, params, sep);
            std::string why;
            if (!dec.covers(g, &why)) return make_case(name, false, "coverage: " + why);
            if (Rational(dec.max_bag()) > dec.bound)
                return make_case(name, false, "bag above bound");
            if (!dec.certified) return make_case(name, false, "uncertified node");
            if (Rational(dec.excess(g)) > eps * Rational(g.order()))
                return make_case(name, false, "excess above eps n");
            ReduceResult r = reduce_expand(g, dec, eps);  // validates internally
            std::set<std::pair<int, int>> f(r.f_edges.begin(), r.f_edges.end());
            std::vector<std::pair<int, int>> rest;
            for (auto e : r.h_prime.edges())
                if (!f.count(e)) rest.push_back(e);
            Graph without(r.h_prime.order(), rest);
            Graph ellj = disjoint_copies(r.j, r.ell);
            if (without.edges() != ellj.edges())
                return make_case(name, false, "H' minus F is not ell J");
            return make_case(name, true,
                             "bags " + std::to_string(dec.bags.size()) + ", excess " +
                                 std::to_string(dec.excess(g)));
        });
    };
    SeparatorParams tree_params;  // beta 1/2, c 1
    std::vector<int> tree_sizes = {40, 90, 150, 200};
    for (size_t i = 0; i < tree_sizes.size(); ++i) {
        Graph t = i == 0 ? path_graph(tree_sizes[i]) : random_tree(tree_sizes[i], rng);
        std::string name = "tree-" + std::to_string(tree_sizes[i]);
        fns.push_back([name, t, tree_params, pipeline] {
            return pipeline(name, t, Rational(1, 2), tree_params,
                            [](const Graph& g) { return tree_separator(g); });
        });
    }
    SeparatorParams grid_params;
    grid_params.c = 2;
    for (int side : {8, 10, 12, 14}) {
        Graph g = grid_graph(side, side);
        std::string name = "grid-" + std::to_string(side);
        fns.push_back([name, g, grid_params, pipeline] {
            return pipeline(name, g, Rational(1), grid_params, [](const Graph& gg) {
                return balanced_separator(gg, SeparatorMode::Heuristic);
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

SuiteResult suite_mader(const SuiteOptions& opt) {
    SuiteResult res{"mader", opt.seed, {}};
    std::mt19937 rng(opt.seed);
    const std::vector<std::pair<int, int>> dks = {{2, 1}, {3, 1}, {4, 2}};
    std::vector<CaseFn> fns;
    int count = std::max(1, opt.cases / 4);
    for (int t = 0; t < count; ++t) {
        auto [d, k] = dks[t % dks.size()];
        // fix the edge count at >= d*v so the density precondition holds
        int n = std::max(2 * d + 1, 7) + static_cast<int>(rng() % 4);
        long max_e = static_cast<long>(n) * (n - 1) / 2;
        long want = static_cast<long>(d) * n +
                    static_cast<long>(rng() % (max_e - static_cast<long>(d) * n + 1));
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(want);
        Graph g(n, all);
        fns.push_back([t, g, d = d, k = k] {
            std::string name = "mader-" + std::to_string(t) + "-d" + std::to_string(d) +
                               "k" + std::to_string(k);
            return guarded(name, [&] {
                Graph r = mader_refine(g, d, k);
                MaderCheck c = mader_validate(r, d, k);
                std::ostringstream det;
                det << "v=" << r.order() << " e=" << r.edge_count();
                return make_case(name, c.all(), det.str());
            });
        });
    }
    res.cases = run_cases(std::move(fns), opt.jobs);
    return res;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"duality",   "superadditivity", "fourcolor",  "twothirds",
            "sandwich",  "bipartite-vol",   "rounding",   "normbound",
            "decompositions", "mader"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "duality") return suite_duality(opt);
    if (name == "superadditivity") return suite_superadditivity(opt);
    if (name == "fourcolor") return suite_fourcolor(opt);
    if (name == "twothirds") return suite_twothirds(opt);
    if (name == "sandwich") return suite_sandwich(opt);
    if (name == "bipartite-vol") return suite_bipartite_vol(opt);
    if (name == "rounding") return suite_rounding(opt);
    if (name == "normbound") return suite_normbound(opt);
    if (name == "decompositions") return suite_decompositions(opt);
    if (name == "mader") return suite_mader(opt);
    throw PreconditionError("unknown suite '" + name + "'");
}

std::string to_json(const SuiteResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["cases"] = r.cases.size();
    j["failures"] = r.failures();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        arr.push_back(jc);
    }
    j["results"] = arr;
    return j.dump();
}

std::string to_tsv(const SuiteResult& r) {
    std::ostringstream out;
    out << "suite\tseed\tname\tpass\tdetail\n";
    for (const auto& c : r.cases)
        out << r.suite << "\t" << r.seed << "\t" << c.name << "\t"
            << (c.pass ? "1" : "0") << "\t" << c.detail << "\n";
    return out.str();
}

}  // namespace minorvol
