#ifndef MINORVOL_VOLUME_HPP
#define MINORVOL_VOLUME_HPP

#include "minorvol/graph.hpp"
#include "minorvol/lp.hpp"
#include "minorvol/weights.hpp"

#include <array>
#include <optional>
#include <vector>

namespace minorvol {

/**
 * Jumbled model of H over index set [n]: every vertex of H maps to one or
 * two indices, and two vertices sharing the same singleton index must be
 * non-adjacent in H.  mu#(i) counts incidences at index i.
 */
struct NModel {
    // per H-vertex: {i, -1} for a singleton, {i, j} with i < j for a pair
    std::vector<std::array<int, 2>> assign;

    std::vector<int> mu_sharp(int n) const;
};

bool validate_nmodel(const Graph& h, const NModel& m);

/**
 * Dominance-pruned generator list of the jumbled-model polytope of H
 * restricted to support [n]: exactly the coordinatewise-minimal mu# vectors,
 * in lexicographic order, each with one witness model.
 */
struct ModelSet {
    Graph target;
    int support = 0;
    std::vector<std::vector<int>> generators;
    std::vector<NModel> witnesses;
};

ModelSet enumerate_nmodels(const Graph& h, int n, long budget = 1000000);

/// Non-negative vector with a . mu# >= 1 for every generator and
/// a . w equal to the certified packing value.
struct DualCertificate {
    WeightVector a;
    Rational value = 0;
};

struct VolumeResult {
    Rational value = 0;
    DualCertificate cert;
    // optimal basic packing: coefficient per used model
    std::vector<Rational> coefficients;
    std::vector<NModel> nmodels;   // set for vol_vector
    std::vector<Model> gmodels;    // set for vol_graph / vol_weighted
};

/// H-volume of a weight vector: packing LP over the ModelSet on the support
/// of w (weights canonically sorted non-increasing; certificate reported on
/// the original indices).
VolumeResult vol_vector(const Graph& h, const WeightVector& w, long budget = 1000000);

/// H-volume of a graph: packing LP over jumbled models in g, solved by
/// column generation; the pricing oracle's final pass proves the certificate
/// against every model, not just the generated columns.
VolumeResult vol_graph(const Graph& h, const Graph& g, long budget = 1000000);

/// Weighted variant; w is indexed by vertex+1.  vol_weighted(h, g, 1) equals
/// vol_graph(h, g), and the value scales linearly in w.
VolumeResult vol_weighted(const Graph& h, const Graph& g, const WeightVector& w,
                          long budget = 1000000);

/// min(v(G)/(s+t), delta(G)/t): the provable lower bound on Vol_{K_{s,t}}(G).
Rational bipartite_vol_bound(int s, int t, const Graph& g);

/// Floors an optimal basic fractional packing of h in g into a concrete model
/// of ell disjoint copies of h inside the k-blowup of g (branch sets of size
/// <= v(g)).  Throws with the achievable ell' if ell is too large.
Model blowup_pack(const Graph& h, const Graph& g, int k, int ell);

/// Exact check of a certificate against a ModelSet.
bool verify_certificate(const ModelSet& ms, const WeightVector& w,
                        const DualCertificate& cert, std::string* why = nullptr);

}  // namespace minorvol

#endif  // MINORVOL_VOLUME_HPP
