#include "minorvol/extremal.hpp"

#include "minorvol/lp.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace minorvol {

namespace {

const char* kind_str(BoundKind k) {
    switch (k) {
        case BoundKind::Exact: return "exact";
        case BoundKind::Lower: return "lower";
        case BoundKind::Upper: return "upper";
    }
    return "?";
}

}  // namespace

std::string to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["quantity"] = r.quantity;
    j["value"] = rational_str(r.value);
    j["kind"] = kind_str(r.kind);
    j["provenance"] = r.provenance;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    if (r.witness_weights) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::object();
        for (const auto& [i, v] : r.witness_weights->entries())
            entries[std::to_string(i)] = rational_str(v);
        w["weights"] = entries;
    }
    if (r.witness_partition) w["partition"] = *r.witness_partition;
    if (r.witness_index) w["index"] = *r.witness_index;
    if (!r.note.empty()) w["note"] = r.note;
    j["witness"] = w;
    return j.dump();
}

BoundReport naive_lower(const Graph& h, int cap) {
    if (h.order() < 2) throw PreconditionError("c_f needs v(H) >= 2");
    GraphInvariants inv = invariants(h, 1, cap);
    BoundReport r;
    r.quantity = "c_f";
    r.kind = BoundKind::Lower;
    Rational half = Rational(h.order()) / 2;
    r.value = std::max(half, Rational(inv.tau));
    r.provenance = "max(v/2, tau) from K_{v-1} and K_{tau-1,n}";
    r.witness_index = inv.tau >= half ? 0 : -1;
    return r;
}

BoundReport c_T(const Graph& h, int cap) {
    if (h.order() < 2) throw PreconditionError("c_T needs v(H) >= 2");
    GraphInvariants inv = invariants(h, chromatic_number(h), cap);
    int v = h.order();
    BoundReport r;
    r.quantity = "c_T";
    r.kind = BoundKind::Exact;
    r.provenance = "sup of tau and the Turan terms (i-1)/i (v - alpha_i/2)";
    // priority on ties: tau, then terms by ascending i, then the v/2 limit
    r.value = inv.tau;
    r.witness_index = 0;
    for (int i = 2; i <= inv.chi; ++i) {
        Rational term = Rational(i - 1, i) * (Rational(v) - Rational(inv.alpha_k[i]) / 2);
        if (term > r.value) {
            r.value = term;
            r.witness_index = i;
        }
    }
    Rational half = Rational(v) / 2;
    if (half > r.value) {
        r.value = half;
        r.witness_index = -1;
        r.note = "limit i->infinity";
    }
    return r;
}

// --- restricted support bound -------------------------------------------------------

namespace {

// c0 + c1 * B for a surd B (radicand shared with B)
Surd surd_affine(const Rational& c0, const Rational& c1, const Surd& b) {
    return Surd(c0 + c1 * b.a, c1 * b.b, b.r);
}

struct SliceCandidate {
    Surd value;
    bool attained = true;
    std::vector<int> pattern;  // support indices (0-based) when attained
    Surd A, B;                 // stationary parameters when attained
};

}  // namespace

SupportBound cf_support_bound(const Graph& h, int n, int support_cap, long budget) {
    if (h.order() < 2) throw PreconditionError("c_f needs v(H) >= 2");
    if (n < 2) throw PreconditionError("support bound needs n >= 2");
    if (n > support_cap) throw PreconditionError("dual-enumeration cap exceeded");

    ModelSet ms = enumerate_nmodels(h, n, budget);
    int m = static_cast<int>(ms.generators.size());
    MatrixXq A(m, n);
    VectorXq b = VectorXq::Constant(m, 1);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) A(r, c) = ms.generators[r][c];
    std::vector<VectorXq> verts = polytope_vertices(A, b, std::max(support_cap, n));
    if (verts.empty()) throw InternalError("dual polytope has no vertices");

    Surd best(Rational(0));
    bool best_attained = true;
    int best_vertex = -1;
    SliceCandidate best_cand;

    for (size_t vi = 0; vi < verts.size(); ++vi) {
        const VectorXq& a = verts[vi];
        std::vector<int> zeros, pos;
        for (int i = 0; i < n; ++i) (a[i] == 0 ? zeros : pos).push_back(i);
        if (zeros.size() >= 2)
            throw InternalError(
                "dual vertex with two zero coordinates; pair generators forbid this");

        Surd local{Rational(0)};
        bool local_attained = true;
        SliceCandidate local_cand;

        auto consider = [&](const Surd& val, bool attained, const std::vector<int>& pat,
                            const Surd& Ac, const Surd& Bc) {
            int cmp = compare(val, local);
            if (cmp > 0 || (cmp == 0 && attained && !local_attained)) {
                local = val;
                local_attained = attained;
                local_cand = {val, attained, pat, Ac, Bc};
            }
        };

        // stationary candidates on every support pattern inside the positives:
        // w = A 1_S - B a_S with kA - B s1 = 1 and kA^2 - B^2 s2 = 1, value B
        int p = static_cast<int>(pos.size());
        for (unsigned mask = 1; mask < (1u << p); ++mask) {
            int k = __builtin_popcount(mask);
            if (k < 2) continue;
            std::vector<int> S;
            Rational s1 = 0, s2 = 0;
            for (int t = 0; t < p; ++t)
                if (mask >> t & 1) {
                    S.push_back(pos[t]);
                    s1 += a[pos[t]];
                    s2 += a[pos[t]] * a[pos[t]];
                }
            Rational c2 = s1 * s1 - k * s2;
            std::vector<Surd> roots;
            if (c2 == 0) {
                roots.emplace_back(Rational(k - 1) / (2 * s1));
            } else {
                Rational disc = s1 * s1 + (k - 1) * c2;  // discriminant / 4
                if (disc < 0) continue;
                roots.push_back(Surd(-s1 / c2, Rational(1) / c2, disc));
                roots.push_back(Surd(-s1 / c2, Rational(-1) / c2, disc));
            }
            for (const Surd& B : roots) {
                if (compare(B, Surd(Rational(0))) <= 0) continue;
                Surd Ac = surd_affine(Rational(1, k), s1 / k, B);
                bool interior = true;
                for (int i : S) {
                    Surd wi(Ac.a - a[i] * B.a, Ac.b - a[i] * B.b, B.r);
                    if (compare(wi, Surd(Rational(0))) <= 0) {
                        interior = false;
                        break;
                    }
                }
                if (interior) consider(B, true, S, Ac, B);
            }
        }

        // recession value when the vertex has a zero coordinate
        if (zeros.size() == 1) {
            Rational rec = 0;
            for (int i : pos) rec = std::max(rec, Rational(1) / a[i]);
            consider(Surd(rec), false, {}, Surd(), Surd());
        }

        int cmp = compare(local, best);
        if (best_vertex < 0 || cmp > 0 ||
            (cmp == 0 && local_attained && !best_attained)) {
            best = local;
            best_attained = local_attained;
            best_vertex = static_cast<int>(vi);
            best_cand = local_cand;
        }
    }

    SupportBound out;
    out.exact_value = best;
    out.attained = best_attained;
    for (int i = 0; i < n; ++i)
        if (verts[best_vertex][i] != 0) out.dual_vertex.set(i + 1, verts[best_vertex][i]);

    out.report.quantity = "c_f^(" + std::to_string(n) + ")";
    out.report.provenance =
        "dual-polytope vertex enumeration over jumbled-model generators, support [" +
        std::to_string(n) + "]";
    out.report.witness_weights = out.dual_vertex;
    if (best.is_rational()) {
        out.report.value = best.rational_value();
        out.report.kind = BoundKind::Exact;
        out.report.note =
            best_attained ? "attained" : "recession limit; approached, not attained";
    } else {
        // not expected for these polytopes; report a tight rational lower bound
        out.report.value = best.bounds(128).lo;
        out.report.kind = BoundKind::Lower;
        out.report.note = "irrational optimum " + best.str();
    }

    if (best_attained && best.is_rational() && best.rational_value() > 0) {
        // reconstruct the maximizing w, scaled so that Vol_H(w) = 1
        Rational B = best.rational_value();
        Rational Acoef = best_cand.A.rational_value();
        const VectorXq& a = verts[best_vertex];
        Rational p = 0;
        WeightVector w;
        for (int i : best_cand.pattern) {
            Rational wi = Acoef - B * a[i];
            p += a[i] * wi;
            w.set(i + 1, wi);
        }
        w = w.scaled(Rational(1) / p);
        VolumeResult check = vol_vector(h, w, budget);
        if (check.value != 1 || w.density() != B)
            throw InternalError("support-bound maximizer failed its exactness check");
        out.maximizer = w;
    }
    return out;
}

std::optional<BoundReport> cf_closed_form(const Graph& h, int cap) {
    if (h.order() < 2) throw PreconditionError("c_f needs v(H) >= 2");
    int chi = chromatic_number(h);
    int v = h.order();
    if (chi <= 4) {
        GraphInvariants inv = invariants(h, 1, cap);
        BoundReport r;
        r.quantity = "c_f";
        r.kind = BoundKind::Exact;
        r.value = std::max(Rational(v) / 2, Rational(inv.tau));
        r.provenance = "four-colorable exact formula max(v/2, tau)";
        return r;
    }
    BoundReport ct = c_T(h, cap);
    if (ct.value > Rational(2 * v) / 3) {
        BoundReport r = ct;
        r.quantity = "c_f";
        r.kind = BoundKind::Exact;
        r.provenance = "c_T above the two-thirds threshold, so c_f = c_T";
        return r;
    }
    return std::nullopt;
}

BoundReport alpha3_upper(const Graph& h, int cap) {
    if (h.order() < 2) throw PreconditionError("c_f needs v(H) >= 2");
    GraphInvariants inv = invariants(h, 3, cap);
    BoundReport r;
    r.quantity = "c_f";
    r.kind = BoundKind::Upper;
    r.value =
        std::max(Rational(h.order()) - Rational(inv.alpha_k[3]) / 2, Rational(inv.tau));
    r.provenance = "max(v - alpha_3/2, tau) upper bound";
    return r;
}

// --- gamma search -------------------------------------------------------------------

namespace {

void foreach_partition(int n, int max_part, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& f) {
    if (n == 0) {
        f(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        foreach_partition(n - p, p, cur, f);
        cur.pop_back();
    }
}

}  // namespace

BoundReport gamma_search(const Graph& h, int max_order, int minor_cap) {
    if (max_order < 1) throw PreconditionError("max_order >= 1");
    if (max_order > minor_cap)
        throw PreconditionError("max_order exceeds the minor-test cap");
    if (h.order() < 2) throw PreconditionError("gamma needs v(H) >= 2");
    GraphInvariants inv = invariants(h, 1);

    BoundReport r;
    r.quantity = "gamma_H";
    r.kind = BoundKind::Lower;
    r.provenance = "max density of H-minor-free complete multipartite graphs, v <= " +
                   std::to_string(max_order);
    bool found = false;
    Rational best = 0;
    std::vector<int> witness;

    for (int N = 1; N <= max_order; ++N) {
        std::vector<int> cur;
        foreach_partition(N, N, cur, [&](const std::vector<int>& parts) {
            long sq = 0;
            for (int p : parts) sq += static_cast<long>(p) * p;
            Rational dens = Rational(static_cast<long>(N) * N - sq) / (2 * N);
            if (found && dens <= best) return;
            // a graph with >= v(H) parts contains K_{v(H)}, hence H, as a minor
            if (static_cast<int>(parts.size()) >= h.order()) return;
            long edges = (static_cast<long>(N) * N - sq) / 2;
            bool minor_free;
            if (h.order() > N || h.edge_count() > edges || inv.tau > N - parts.front()) {
                minor_free = true;  // order/size/tau obstructions
            } else {
                minor_free =
                    !is_minor(h, complete_multipartite(parts), minor_cap).has_value();
            }
            if (minor_free) {
                best = dens;
                witness = parts;
                found = true;
            }
        });
    }
    if (!found) throw InternalError("gamma search found no minor-free candidate");
    r.value = best;
    r.witness_partition = witness;
    return r;
}

// --- rounding ----------------------------------------------------------------------

WeightVector round_weights(const Graph& h, const WeightVector& w, long budget) {
    if (w.empty()) throw PreconditionError("w must be nonzero");
    VolumeResult vol = vol_vector(h, w, budget);
    if (vol.value >= 1)
        throw PreconditionError("Vol_H(w) = " + rational_str(vol.value) + " >= 1");

    auto [vals, idx] = w.canonical();  // non-increasing values
    int m = static_cast<int>(vals.size());
    std::vector<Rational> a(m);
    for (int i = 0; i < m; ++i) a[i] = vol.cert.a.get(idx[i]);
    // ascending duals against descending weights never increase a.w, and the
    // generator family is permutation-invariant, so dual feasibility survives
    std::sort(a.begin(), a.end());

    std::vector<Rational> suffix(m + 1, Rational(0));
    for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + vals[i];
    WeightVector x;
    Rational ax = 0;
    for (int i = 0; i < m; ++i) {
        Rational xi = Rational(floor_rat(suffix[i])) - Rational(floor_rat(suffix[i + 1]));
        if (xi != 0) x.set(i + 1, xi);
        ax += a[i] * xi;
    }
    if (ax >= 1) throw InternalError("rounded vector escapes the dual certificate");
    if (!x.empty()) {
        VolumeResult check = vol_vector(h, x, budget);
        if (check.value >= 1) throw InternalError("rounded vector has Vol >= 1");
    }
    return x;
}

// --- matchable decomposition ---------------------------------------------------------

WeightVector EdgeDecomposition::reconstruct() const {
    WeightVector w;
    for (const auto& [i, j, c] : terms) {
        w.set(i, w.get(i) + c);
        w.set(j, w.get(j) + c);
    }
    return w;
}

EdgeDecomposition matchable_decompose(const WeightVector& w) {
    if (!w.is_matchable()) throw PreconditionError("vector is not matchable");
    EdgeDecomposition out;
    if (w.empty()) return out;
    auto [vals, idx] = w.canonical();  // non-increasing
    int m = static_cast<int>(vals.size());
    if (m == 1) throw PreconditionError("vector is not matchable");

    auto add = [&](int i, int j, const Rational& c) {
        if (c == 0) return;
        int a = idx[i], b = idx[j];
        if (a > b) std::swap(a, b);
        out.terms.emplace_back(a, b, c);
    };

    // peel the excess of the top coordinate against the tail
    Rational excess = vals[0] - vals[1];
    for (int j = m - 1; j >= 2 && excess > 0; --j) {
        Rational take = std::min(excess, vals[j]);
        add(0, j, take);
        vals[j] -= take;
        vals[0] -= take;
        excess -= take;
    }
    // pair tail entries against each other until at most one stays positive
    for (;;) {
        int big = -1, second = -1;
        for (int j = 2; j < m; ++j) {
            if (vals[j] == 0) continue;
            if (big < 0 || vals[j] > vals[big]) {
                second = big;
                big = j;
            } else if (second < 0 || vals[j] > vals[second]) {
                second = j;
            }
        }
        if (second < 0) break;
        Rational take = vals[second];
        add(big, second, take);
        vals[big] -= take;
        vals[second] = 0;
    }
    // remaining support is {0, 1, t} with vals[0] == vals[1] >= vals[t]
    int t = -1;
    for (int j = 2; j < m; ++j)
        if (vals[j] != 0) t = j;
    if (t < 0) {
        add(0, 1, vals[0]);
    } else {
        add(0, t, vals[t] / 2);
        add(1, t, vals[t] / 2);
        add(0, 1, vals[0] - vals[t] / 2);
    }
    return out;
}

WeightVector turan_witness(const Graph& h, int k, const WeightVector& z, int cap,
                           long budget) {
    if (k < 1) throw PreconditionError("k >= 1");
    if (!z.is_matchable()) throw PreconditionError("z is not matchable");
    GraphInvariants inv = invariants(h, k, cap);
    Rational need = 2 * (Rational(h.order()) - inv.alpha_k[k]);
    if (z.total() != need)
        throw PreconditionError("|z| must equal 2(v - alpha_k) = " + rational_str(need));
    WeightVector w;
    for (int i = 1; i <= k; ++i) w.set(i, Rational(inv.alpha_k[k]) / k);
    w = w + z;
    VolumeResult vol = vol_vector(h, w, budget);
    if (vol.value < 1)
        throw InternalError("Turan witness has Vol = " + rational_str(vol.value) + " < 1");
    return w;
}

std::array<Rational, 4> vectors_lemma(const std::array<Rational, 4>& y) {
    for (int i = 0; i < 4; ++i) {
        if (y[i] < 0) throw PreconditionError("y must be non-negative");
        if (i > 0 && y[i] < y[i - 1]) throw PreconditionError("y must be sorted");
    }
    if (y[0] + y[1] / 2 < 1) throw PreconditionError("y . (1,1/2,0,0) >= 1 required");
    if (y[0] + y[1] + y[2] + y[3] < 4)
        throw PreconditionError("y . (1/4,1/4,1/4,1/4) >= 1 required");

    const std::array<std::array<Rational, 4>, 4> u = {{
        {Rational(0), Rational(2), Rational(2), Rational(2)},
        {Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(4, 3)},
        {Rational(2, 5), Rational(6, 5), Rational(6, 5), Rational(6, 5)},
        {Rational(1), Rational(1), Rational(1), Rational(1)},
    }};
    // single-generator cases first, in the proof's order
    for (int g = 0; g < 4; ++g) {
        bool dom = true;
        for (int i = 0; i < 4; ++i) dom = dom && y[i] >= u[g][i];
        if (dom) {
            std::array<Rational, 4> lambda = {Rational(0), Rational(0), Rational(0),
                                              Rational(0)};
            lambda[g] = 1;
            return lambda;
        }
    }
    // general case: LP feasibility for sum lambda_g u^g <= y, sum lambda = 1
    LinearProgram lp;
    lp.objective = VectorXq::Zero(4);
    lp.A = MatrixXq::Zero(5, 4);
    lp.rhs = VectorXq(5);
    for (int i = 0; i < 4; ++i) {
        for (int g = 0; g < 4; ++g) lp.A(i, g) = u[g][i];
        lp.rhs[i] = y[i];
    }
    for (int g = 0; g < 4; ++g) lp.A(4, g) = 1;
    lp.rhs[4] = 1;
    lp.senses = {Sense::LE, Sense::LE, Sense::LE, Sense::LE, Sense::EQ};
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw InternalError("no convex combination below y; the vector lemma failed");
    return {sol.primal[0], sol.primal[1], sol.primal[2], sol.primal[3]};
}

DensityInequalities verify_density_inequalities(const Graph& h, const Rational& c,
                                                int cap) {
    if (h.order() < 2) throw PreconditionError("needs v(H) >= 2");
    int chi = chromatic_number(h);
    GraphInvariants inv = invariants(h, chi, cap);
    int v = h.order();
    auto alpha = [&](int i) {  // 0 encodes the i -> infinity limit (alpha = 1)
        return i == 0 ? Rational(1) : Rational(inv.alpha_k[i]) / v;
    };
    auto frac = [&](int i) { return i == 0 ? Rational(1) : Rational(i - 1, i); };

    DensityInequalities out;
    auto push = [&](int i, int j, const Rational& lhs, const Rational& rhs,
                    const std::string& label) {
        bool holds = lhs >= rhs;
        out.rows.push_back({i, j, lhs, rhs, holds, label});
        out.all_hold = out.all_hold && holds;
    };

    Rational a1 = alpha(1);
    push(1, 0, c, 1 - a1, "c >= 1 - alpha_1");

    std::vector<int> irange;
    for (int i = 2; i <= chi; ++i) irange.push_back(i);
    irange.push_back(0);  // limit form

    for (int i : irange) {
        Rational ai = alpha(i);
        push(i, 1, c * (4 - a1 - ai), ai * (2 - a1) + (1 - ai) * (3 - 2 * a1),
             "c(4 - alpha_1 - alpha_i) bound");
    }
    for (int i : irange)
        for (int j : irange) {
            // j <= i with 0 meaning the limit
            if (j == 0 && i != 0) continue;
            if (i != 0 && j > i) continue;
            Rational ai = alpha(i), aj = alpha(j);
            push(i, j, c * (4 - ai - aj),
                 (2 - aj) * (frac(i) * ai + frac(j) * (2 - 2 * ai)),
                 "c(4 - alpha_i - alpha_j) bound");
        }
    return out;
}

NormBoundCheck normbound_check(const Rational& a, const Rational& b, int k,
                               const WeightVector& w) {
    NormBoundCheck out;
    out.norm = w.norm();
    out.total = w.total();
    if (k < 1 || a < 0 || b < 0) return out;
    Rational head = 0;
    for (int i = 1; i <= k; ++i) head += w.get(i);
    bool pre =
        a * a >= k * b * b && 4 * a >= 4 + k * b * b && a * out.total - b * head <= 1;
    out.preconditions_hold = pre;
    out.conclusion_holds = out.norm <= out.total;
    return out;
}

}  // namespace minorvol
