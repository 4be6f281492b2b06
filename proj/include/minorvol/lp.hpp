#ifndef MINORVOL_LP_HPP
#define MINORVOL_LP_HPP

#include "minorvol/rational.hpp"

#include <vector>

namespace minorvol {

enum class Sense { LE, GE, EQ };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/**
 * General-form linear program.  Solved exactly; Bland's rule guarantees
 * termination and makes the pivot sequence (hence the reported optimum
 * vertex) deterministic.
 *
 * Dual conventions, for a reported optimal solution:
 *   value == objective . primal == rhs . dual,
 *   LE rows have dual >= 0, GE rows dual <= 0, EQ rows free   (maximize)
 *   (signs flip when maximize == false), and A^T dual >= objective on
 *   non-negative variables with equality on free ones.
 */
struct LinearProgram {
    bool maximize = true;
    VectorXq objective;
    MatrixXq A;
    VectorXq rhs;
    std::vector<Sense> senses;
    std::vector<bool> nonneg;  // per variable; false = free

    int rows() const { return static_cast<int>(A.rows()); }
    int cols() const { return static_cast<int>(A.cols()); }
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value = 0;
    VectorXq primal;
    VectorXq dual;
};

LpSolution solve(const LinearProgram& lp);

/// Exact check of primal feasibility, dual feasibility and strong duality.
bool verify_optimal(const LinearProgram& lp, const LpSolution& sol,
                    std::string* why = nullptr);

/// All vertices of {x >= 0 : A x >= b}, deduplicated, lexicographically sorted.
/// Incremental double description on the homogenization cone.
std::vector<VectorXq> polytope_vertices(const MatrixXq& A, const VectorXq& b,
                                        int dim_cap = 8);

/// Gaussian elimination helpers over exact rationals.
int rank_of(MatrixXq m);
/// Solves M x = rhs for square full-rank M; empty result if singular.
std::vector<Rational> solve_square(MatrixXq m, std::vector<Rational> rhs);

}  // namespace minorvol

#endif  // MINORVOL_LP_HPP
