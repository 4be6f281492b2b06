#ifndef MINORVOL_EXTREMAL_HPP
#define MINORVOL_EXTREMAL_HPP

#include "minorvol/graph.hpp"
#include "minorvol/volume.hpp"
#include "minorvol/weights.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace minorvol {

enum class BoundKind { Exact, Lower, Upper };

struct BoundReport {
    std::string quantity;
    Rational value = 0;
    BoundKind kind = BoundKind::Exact;
    std::string provenance;
    // optional structured witnesses
    std::optional<WeightVector> witness_weights;
    std::optional<std::vector<int>> witness_partition;
    std::optional<int> witness_index;  // argmax index; 0 = tau term, -1 = v/2 limit
    std::string note;
};

std::string to_json(const BoundReport& r);

/// max(v(H)/2, tau(H)): the immediate lower bound on the fractional extremal
/// function coming from K_{v-1} and K_{tau-1,n}.
BoundReport naive_lower(const Graph& h, int cap = 16);

/// Exact supremum of tau(H) and the Turan terms (i-1)/i * (v - alpha_i/2);
/// witness_index records the argmax (0 = tau, -1 = the v/2 limit, else i).
BoundReport c_T(const Graph& h, int cap = 16);

/**
 * Exact restricted supremum  c_f^(n)(H) = sup { d(w)/Vol_H(w) : supp(w) <= [n] },
 * computed by enumerating the vertices of the dual polytope
 * {a >= 0 : a . mu# >= 1 for all generators} and maximizing d over each
 * vertex slice {a . w <= 1}.  The per-slice maximum is found by support-pattern
 * enumeration of the stationarity system, whose value solves a rational
 * quadratic; a vertex with a zero coordinate contributes the recession value
 * max 1/a_i, approached but not attained.
 */
struct SupportBound {
    BoundReport report;
    Surd exact_value;     // always the exact optimum (rational in practice)
    bool attained = false;
    WeightVector dual_vertex;
    std::optional<WeightVector> maximizer;  // scaled so that Vol_H = 1, when attained
};

SupportBound cf_support_bound(const Graph& h, int n, int support_cap = 6,
                              long budget = 1000000);

/// Exact c_f(H) when a closed form applies: max(v/2, tau) for chi(H) <= 4,
/// or c_T(H) when c_T(H) > (2/3) v(H); absent otherwise.
std::optional<BoundReport> cf_closed_form(const Graph& h, int cap = 16);

/// Upper bound c_f(H) <= max(v(H) - alpha_3(H)/2, tau(H)).
BoundReport alpha3_upper(const Graph& h, int cap = 16);

/// Maximum density over H-minor-free complete multipartite graphs with at
/// most max_order vertices; witness_partition holds the part sizes.
BoundReport gamma_search(const Graph& h, int max_order, int minor_cap = 14);

/**
 * Integer rounding that preserves Vol < 1: sorts w non-increasingly and takes
 * x_i = floor(S_i) - floor(S_{i+1}) for the suffix sums S_i.  Requires
 * Vol_H(w) < 1 (checked by LP); the output satisfies Vol_H(x) < 1 (checked by
 * a second LP) and, when d(w) >= 2, d(x) >= d(w) - 2 and |x| = floor|w| >= 4.
 * The result lives on indices 1..m in sorted position order.
 */
WeightVector round_weights(const Graph& h, const WeightVector& w, long budget = 1000000);

struct EdgeDecomposition {
    // (i, j, coefficient) with i < j, coefficient > 0
    std::vector<std::tuple<int, int, Rational>> terms;

    WeightVector reconstruct() const;
};

/// Writes a matchable vector as a non-negative combination of edge vectors.
EdgeDecomposition matchable_decompose(const WeightVector& w);

/// w = (alpha_k(H)/k) 1_[k] + z for matchable z with |z| = 2(v - alpha_k);
/// verifies Vol_H(w) >= 1 by LP before returning.
WeightVector turan_witness(const Graph& h, int k, const WeightVector& z, int cap = 16,
                           long budget = 1000000);

/**
 * For sorted 0 <= y_1 <= ... <= y_4 with y.(1,1/2,0,0) >= 1 and mean >= 1/4,
 * finds lambda >= 0 summing to 1 with sum lambda_i u^i <= y over the four
 * fixed generators u^1..u^4.
 */
std::array<Rational, 4> vectors_lemma(const std::array<Rational, 4>& y);

struct DensityInequalities {
    struct Row {
        int i = 0, j = 0;  // 0 encodes the i -> infinity limit form
        Rational lhs, rhs;
        bool holds = false;
        std::string label;
    };
    std::vector<Row> rows;
    bool all_hold = true;
};

/// Evaluates, exactly, the local-density inequality system at the normalized
/// ratio c (so c = value / v(H)); used to cross-validate the c_T branch of
/// the closed form.
DensityInequalities verify_density_inequalities(const Graph& h, const Rational& c,
                                                int cap = 16);

struct NormBoundCheck {
    bool preconditions_hold = false;
    bool conclusion_holds = false;  // ||w|| <= |w|
    Rational norm, total;
};

/// Checks a^2 >= k b^2, 4a >= 4 + k b^2 and a|w| - b sum_{i<=k} w_i <= 1,
/// then compares ||w|| against |w| exactly.
NormBoundCheck normbound_check(const Rational& a, const Rational& b, int k,
                               const WeightVector& w);

}  // namespace minorvol

#endif  // MINORVOL_EXTREMAL_HPP
