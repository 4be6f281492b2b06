#include "minorvol/lp.hpp"

#include <algorithm>

namespace minorvol {

namespace {

/**
 * Dense tableau simplex over exact rationals in the canonical form
 *     maximize c.x  s.t.  A x <= b, x >= 0.
 * Bland's rule: entering = smallest-index column with negative reduced cost,
 * leaving = smallest basic variable among the minimum-ratio rows.
 */
class CanonicalSimplex {
  public:
    CanonicalSimplex(const MatrixXq& A, const VectorXq& b, const VectorXq& c)
        : m_(static_cast<int>(A.rows())), n_(static_cast<int>(A.cols())) {
        neg_row_.assign(m_, false);
        n_art_ = 0;
        for (int i = 0; i < m_; ++i)
            if (b[i] < 0) {
                neg_row_[i] = true;
                ++n_art_;
            }
        cols_ = n_ + m_ + n_art_;
        T_.assign(m_ + 1, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.assign(m_, 0);
        int art = n_ + m_;
        for (int i = 0; i < m_; ++i) {
            Rational s = neg_row_[i] ? Rational(-1) : Rational(1);
            for (int j = 0; j < n_; ++j) T_[i][j] = s * A(i, j);
            T_[i][n_ + i] = s;
            T_[i][cols_] = s * b[i];
            if (neg_row_[i]) {
                T_[i][art] = 1;
                basis_[i] = art;
                ++art;
            } else {
                basis_[i] = n_ + i;
            }
        }
        cost_.assign(cols_, Rational(0));
        for (int j = 0; j < n_; ++j) cost_[j] = c[j];
        active_cols_ = cols_;
    }

    LpStatus run() {
        if (n_art_ > 0) {
            // phase 1: maximize -(sum of artificials)
            std::vector<Rational> c1(cols_, Rational(0));
            for (int j = n_ + m_; j < cols_; ++j) c1[j] = -1;
            set_objective(c1);
            pivot_loop(/*allow_unbounded=*/false);
            if (T_[m_][cols_] != 0) return LpStatus::Infeasible;
            purge_artificials();
        }
        set_objective(cost_);
        bool bounded = pivot_loop(/*allow_unbounded=*/true);
        return bounded ? LpStatus::Optimal : LpStatus::Unbounded;
    }

    Rational objective_value() const { return T_[m_][cols_]; }

    VectorXq primal() const {
        VectorXq x = VectorXq::Zero(n_);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = T_[i][cols_];
        return x;
    }

    /// y_i = objective-row entry under slack column i.  Internal row negation
    /// flips the slack column together with the row, so no sign fix is needed.
    VectorXq dual() const {
        VectorXq y = VectorXq::Zero(m_);
        for (int i = 0; i < m_; ++i) y[i] = T_[m_][n_ + i];
        return y;
    }

  private:
    // objective row: T[m][j] = z_j - c_j for the given cost vector
    void set_objective(const std::vector<Rational>& c) {
        for (int j = 0; j < cols_; ++j) T_[m_][j] = -c[j];
        T_[m_][cols_] = 0;
        for (int i = 0; i < m_; ++i) {
            const Rational& cb = c[basis_[i]];
            if (cb == 0) continue;
            for (int j = 0; j <= cols_; ++j)
                if (T_[i][j] != 0) T_[m_][j] += cb * T_[i][j];
        }
    }

    void pivot(int r, int s) {
        Rational inv = Rational(1) / T_[r][s];
        for (int j = 0; j <= cols_; ++j)
            if (T_[r][j] != 0) T_[r][j] *= inv;
        for (int i = 0; i <= m_; ++i) {
            if (i == r) continue;
            Rational f = T_[i][s];
            if (f == 0) continue;
            for (int j = 0; j <= cols_; ++j)
                if (T_[r][j] != 0) T_[i][j] -= f * T_[r][j];
            T_[i][s] = 0;
        }
        basis_[r] = s;
    }

    bool pivot_loop(bool allow_unbounded) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < active_cols_; ++j)
                if (T_[m_][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < m_; ++i) {
                if (T_[i][enter] <= 0) continue;
                Rational ratio = T_[i][cols_] / T_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) {
                if (allow_unbounded) return false;
                throw InternalError("phase-1 LP unbounded");
            }
            pivot(leave, enter);
        }
    }

    // after phase 1: pivot artificial variables out of the basis.  Every row
    // owns a +-1 slack column, so rows are independent and a pivot always
    // exists among the non-artificial columns.
    void purge_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_ + m_) continue;
            int s = -1;
            for (int j = 0; j < n_ + m_; ++j)
                if (T_[i][j] != 0) {
                    s = j;
                    break;
                }
            if (s < 0) throw InternalError("unpivotable artificial row");
            pivot(i, s);
        }
        active_cols_ = n_ + m_;
    }

    int m_, n_, n_art_, cols_;
    int active_cols_ = 0;
    std::vector<std::vector<Rational>> T_;
    std::vector<int> basis_;
    std::vector<bool> neg_row_;
    std::vector<Rational> cost_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    int m = lp.rows(), n = lp.cols();
    if (static_cast<int>(lp.senses.size()) != m || lp.rhs.size() != m ||
        lp.objective.size() != n ||
        (!lp.nonneg.empty() && static_cast<int>(lp.nonneg.size()) != n))
        throw PreconditionError("LP dimension mismatch");
    auto nonneg = [&](int j) { return lp.nonneg.empty() ? true : static_cast<bool>(lp.nonneg[j]); };

    // canonicalize: free vars split, GE rows negated, EQ rows doubled
    std::vector<int> var_col(n), var_neg_col(n, -1);
    int nc = 0;
    for (int j = 0; j < n; ++j) {
        var_col[j] = nc++;
        if (!nonneg(j)) var_neg_col[j] = nc++;
    }
    struct RowMap {
        int orig;
        bool negated;
    };
    std::vector<RowMap> rows;
    for (int i = 0; i < m; ++i) {
        switch (lp.senses[i]) {
            case Sense::LE: rows.push_back({i, false}); break;
            case Sense::GE: rows.push_back({i, true}); break;
            case Sense::EQ:
                rows.push_back({i, false});
                rows.push_back({i, true});
                break;
        }
    }
    int mc = static_cast<int>(rows.size());
    MatrixXq A = MatrixXq::Zero(mc, nc);
    VectorXq b(mc), c = VectorXq::Zero(nc);
    for (int r = 0; r < mc; ++r) {
        Rational s = rows[r].negated ? Rational(-1) : Rational(1);
        for (int j = 0; j < n; ++j) {
            Rational a = s * lp.A(rows[r].orig, j);
            A(r, var_col[j]) = a;
            if (var_neg_col[j] >= 0) A(r, var_neg_col[j]) = -a;
        }
        b[r] = s * lp.rhs[rows[r].orig];
    }
    Rational sign = lp.maximize ? 1 : -1;
    for (int j = 0; j < n; ++j) {
        c[var_col[j]] = sign * lp.objective[j];
        if (var_neg_col[j] >= 0) c[var_neg_col[j]] = -sign * lp.objective[j];
    }

    CanonicalSimplex simplex(A, b, c);
    LpSolution sol;
    sol.status = simplex.run();
    if (sol.status != LpStatus::Optimal) return sol;
    VectorXq xc = simplex.primal();
    VectorXq yc = simplex.dual();
    sol.primal = VectorXq::Zero(n);
    for (int j = 0; j < n; ++j) {
        sol.primal[j] = xc[var_col[j]];
        if (var_neg_col[j] >= 0) sol.primal[j] -= xc[var_neg_col[j]];
    }
    sol.dual = VectorXq::Zero(m);
    for (int r = 0; r < mc; ++r) {
        Rational y = yc[r];
        sol.dual[rows[r].orig] += rows[r].negated ? -y : y;
    }
    if (!lp.maximize) sol.dual = -sol.dual;
    sol.value = 0;
    for (int j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.primal[j];
    return sol;
}

bool verify_optimal(const LinearProgram& lp, const LpSolution& sol, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (sol.status != LpStatus::Optimal) return fail("status not optimal");
    int m = lp.rows(), n = lp.cols();
    auto nonneg = [&](int j) { return lp.nonneg.empty() ? true : static_cast<bool>(lp.nonneg[j]); };
    for (int j = 0; j < n; ++j)
        if (nonneg(j) && sol.primal[j] < 0) return fail("primal negativity");
    for (int i = 0; i < m; ++i) {
        Rational ax = 0;
        for (int j = 0; j < n; ++j) ax += lp.A(i, j) * sol.primal[j];
        if (lp.senses[i] == Sense::LE && ax > lp.rhs[i]) return fail("primal LE violated");
        if (lp.senses[i] == Sense::GE && ax < lp.rhs[i]) return fail("primal GE violated");
        if (lp.senses[i] == Sense::EQ && ax != lp.rhs[i]) return fail("primal EQ violated");
    }
    Rational s = lp.maximize ? 1 : -1;
    for (int i = 0; i < m; ++i) {
        Rational y = s * sol.dual[i];
        if (lp.senses[i] == Sense::LE && y < 0) return fail("dual sign LE");
        if (lp.senses[i] == Sense::GE && y > 0) return fail("dual sign GE");
    }
    for (int j = 0; j < n; ++j) {
        Rational aty = 0;
        for (int i = 0; i < m; ++i) aty += lp.A(i, j) * sol.dual[i];
        Rational slack = s * (aty - lp.objective[j]);
        if (nonneg(j)) {
            if (slack < 0) return fail("dual feasibility");
        } else if (slack != 0) {
            return fail("dual equality on free var");
        }
    }
    Rational cx = 0, by = 0;
    for (int j = 0; j < n; ++j) cx += lp.objective[j] * sol.primal[j];
    for (int i = 0; i < m; ++i) by += lp.rhs[i] * sol.dual[i];
    if (cx != by) return fail("objective gap");
    if (cx != sol.value) return fail("reported value mismatch");
    return true;
}

// --- exact Gaussian elimination ----------------------------------------------

int rank_of(MatrixXq m) {
    int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        m.row(p).swap(m.row(r));
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            m.row(i) -= (m(i, c) / m(r, c)) * m.row(r);
        }
        ++r;
    }
    return r;
}

std::vector<Rational> solve_square(MatrixXq m, std::vector<Rational> rhs) {
    int n = static_cast<int>(m.rows());
    if (m.cols() != n || static_cast<int>(rhs.size()) != n)
        throw PreconditionError("solve_square shape");
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return {};
        m.row(p).swap(m.row(c));
        std::swap(rhs[p], rhs[c]);
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            m.row(i) -= f * m.row(c);
            rhs[i] -= f * rhs[c];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / m(i, i);
    return x;
}

// --- double description -------------------------------------------------------

namespace {

struct Ray {
    VectorXq v;                   // homogeneous coordinates, primitive integer
    std::vector<uint64_t> tight;  // bitmask over all halfspaces
};

void normalize_ray(VectorXq& v) {
    Integer l = 1;
    for (int i = 0; i < v.size(); ++i) l = lcm(l, denominator(Rational(v[i])));
    Integer g = 0;
    for (int i = 0; i < v.size(); ++i) {
        v[i] *= Rational(l);
        g = gcd(g, numerator(Rational(v[i])));
    }
    if (g > 1)
        for (int i = 0; i < v.size(); ++i) v[i] /= Rational(g);
}

bool subset_of(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if ((a[i] & ~b[i]) != 0) return false;
    return true;
}

}  // namespace

std::vector<VectorXq> polytope_vertices(const MatrixXq& A, const VectorXq& b, int dim_cap) {
    int d = static_cast<int>(A.cols());
    int m = static_cast<int>(A.rows());
    if (d > dim_cap)
        throw PreconditionError("vertex enumeration dimension cap exceeded");
    int dim = d + 1;  // homogenizing coordinate s last
    int n_half = dim + m;
    int words = (n_half + 63) / 64;

    // halfspace list: coordinate facets first, then A_j x - b_j s >= 0
    std::vector<VectorXq> halves;
    for (int i = 0; i < dim; ++i) {
        VectorXq h = VectorXq::Zero(dim);
        h[i] = 1;
        halves.push_back(h);
    }
    for (int j = 0; j < m; ++j) {
        VectorXq h(dim);
        for (int c = 0; c < d; ++c) h[c] = A(j, c);
        h[d] = -b[j];
        halves.push_back(h);
    }

    auto tight_set = [&](const VectorXq& v, int upto) {
        std::vector<uint64_t> t(words, 0);
        for (int i = 0; i < upto; ++i) {
            Rational dp = 0;
            for (int c = 0; c < dim; ++c) dp += halves[i][c] * v[c];
            if (dp == 0) t[i / 64] |= 1ull << (i % 64);
        }
        return t;
    };

    // seed: the nonnegative orthant
    std::vector<Ray> rays;
    for (int i = 0; i < dim; ++i) {
        Ray r;
        r.v = VectorXq::Zero(dim);
        r.v[i] = 1;
        r.tight = tight_set(r.v, dim);
        rays.push_back(std::move(r));
    }

    for (int hidx = dim; hidx < n_half; ++hidx) {
        const VectorXq& h = halves[hidx];
        std::vector<Rational> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = 0;
            for (int c = 0; c < dim; ++c) val[i] += h[c] * rays[i].v[c];
        }
        bool any_neg = false;
        for (const auto& v : val) any_neg |= v < 0;
        if (!any_neg) {
            for (size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) rays[i].tight[hidx / 64] |= 1ull << (hidx % 64);
            continue;
        }
        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i)
            if (val[i] >= 0) {
                Ray r = rays[i];
                if (val[i] == 0) r.tight[hidx / 64] |= 1ull << (hidx % 64);
                next.push_back(std::move(r));
            }
        for (size_t i = 0; i < rays.size(); ++i) {
            if (val[i] <= 0) continue;
            for (size_t j = 0; j < rays.size(); ++j) {
                if (val[j] >= 0) continue;
                // adjacency: no third ray's tight set contains the intersection
                std::vector<uint64_t> common(words);
                for (int w = 0; w < words; ++w)
                    common[w] = rays[i].tight[w] & rays[j].tight[w];
                bool adjacent = true;
                for (size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == i || k == j) continue;
                    if (subset_of(common, rays[k].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray r;
                r.v = val[i] * rays[j].v - val[j] * rays[i].v;
                normalize_ray(r.v);
                r.tight = tight_set(r.v, hidx + 1);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    std::vector<VectorXq> verts;
    for (const auto& r : rays) {
        if (r.v[d] == 0) continue;
        VectorXq x(d);
        for (int c = 0; c < d; ++c) x[c] = Rational(r.v[c]) / r.v[d];
        verts.push_back(std::move(x));
    }
    std::sort(verts.begin(), verts.end(), [](const VectorXq& a, const VectorXq& b) {
        for (int i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    verts.erase(std::unique(verts.begin(), verts.end(),
                            [](const VectorXq& a, const VectorXq& b) { return a == b; }),
                verts.end());
    return verts;
}

}  // namespace minorvol
