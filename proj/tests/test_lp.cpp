#include "doctest.h"

#include "minorvol/graph.hpp"
#include "minorvol/lp.hpp"

#include <functional>
#include <random>

using namespace minorvol;

namespace {

LinearProgram make_lp(bool maximize, const std::vector<Rational>& c,
                      const std::vector<std::vector<Rational>>& a,
                      const std::vector<Rational>& b, const std::vector<Sense>& s,
                      std::vector<bool> nonneg = {}) {
    LinearProgram lp;
    lp.maximize = maximize;
    int m = static_cast<int>(a.size()), n = static_cast<int>(c.size());
    lp.objective = VectorXq(n);
    for (int j = 0; j < n; ++j) lp.objective[j] = c[j];
    lp.A = MatrixXq::Zero(m, n);
    lp.rhs = VectorXq(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) lp.A(i, j) = a[i][j];
        lp.rhs[i] = b[i];
    }
    lp.senses = s;
    lp.nonneg = std::move(nonneg);
    return lp;
}

// brute-force oracle: enumerate all vertices by tight subsets and take the best
// objective over them (valid when the optimum is attained at a vertex)
Rational brute_max_over_vertices(const MatrixXq& A, const VectorXq& b, const VectorXq& c) {
    // feasible region {x >= 0 : Ax <= b}; pass -A, -b into the >=-form enumerator
    auto verts = polytope_vertices(-A, -b);
    REQUIRE(!verts.empty());
    Rational best = 0;
    bool first = true;
    for (const auto& v : verts) {
        Rational val = 0;
        for (int j = 0; j < c.size(); ++j) val += c[j] * v[j];
        if (first || val > best) best = val;
        first = false;
    }
    return best;
}

}  // namespace

TEST_CASE("simplex basics") {
    // maximize x s.t. x <= 1
    auto lp = make_lp(true, {1}, {{1}}, {1}, {Sense::LE});
    auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 1);
    CHECK(verify_optimal(lp, sol));

    // infeasible: -x <= -1, x <= 0
    auto lp2 = make_lp(true, {1}, {{-1}, {1}}, {-1, 0}, {Sense::LE, Sense::LE});
    CHECK(solve(lp2).status == LpStatus::Infeasible);

    // unbounded
    auto lp3 = make_lp(true, {1}, {{-1}}, {0}, {Sense::LE});
    CHECK(solve(lp3).status == LpStatus::Unbounded);
}

TEST_CASE("fractional matching LP of K_3 is 3/2") {
    // variables = edges of K_3; per-vertex constraints sum <= 1
    auto lp = make_lp(true, {1, 1, 1},
                      {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, {1, 1, 1},
                      {Sense::LE, Sense::LE, Sense::LE});
    auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == Rational(3, 2));
    CHECK(verify_optimal(lp, sol));
    CHECK(brute_max_over_vertices(lp.A, lp.rhs, lp.objective) == Rational(3, 2));
}

TEST_CASE("general senses, free variables, minimize") {
    // minimize x + y s.t. x + 2y >= 4, x - y = 1, x,y >= 0
    auto lp = make_lp(false, {1, 1}, {{1, 2}, {1, -1}}, {4, 1}, {Sense::GE, Sense::EQ});
    auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.primal[0] == Rational(2));
    CHECK(sol.primal[1] == Rational(1));
    CHECK(sol.value == Rational(3));
    CHECK(verify_optimal(lp, sol));

    // free variable: maximize -x s.t. x >= -5 (x free) -> value 5
    auto lp2 = make_lp(true, {-1}, {{1}}, {-5}, {Sense::GE}, {false});
    auto sol2 = solve(lp2);
    REQUIRE(sol2.status == LpStatus::Optimal);
    CHECK(sol2.value == 5);
    CHECK(verify_optimal(lp2, sol2));
}

TEST_CASE("determinism") {
    auto lp = make_lp(true, {3, 5, 4}, {{2, 3, 0}, {0, 2, 5}, {3, 2, 4}}, {8, 10, 15},
                      {Sense::LE, Sense::LE, Sense::LE});
    auto a = solve(lp), b = solve(lp);
    CHECK(a.value == b.value);
    CHECK(a.primal == b.primal);
    CHECK(a.dual == b.dual);
    CHECK(verify_optimal(lp, a));
}

TEST_CASE("random LPs: simplex optimum matches vertex-enumeration oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int m = 2 + static_cast<int>(rng() % 4);
        MatrixXq A(m, n);
        VectorXq b(m), c(n);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j)
                A(i, j) = Rational(1 + static_cast<int>(rng() % 7)) / (1 + static_cast<int>(rng() % 3));
            b[i] = Rational(1 + static_cast<int>(rng() % 9)) / (1 + static_cast<int>(rng() % 3));
        }
        for (int j = 0; j < n; ++j) c[j] = Rational(static_cast<int>(rng() % 5));
        LinearProgram lp;
        lp.objective = c;
        lp.A = A;
        lp.rhs = b;
        lp.senses.assign(m, Sense::LE);
        auto sol = solve(lp);
        REQUIRE(sol.status == LpStatus::Optimal);  // b >= 0, bounded by construction?
        if (sol.status == LpStatus::Optimal) {
            CHECK(verify_optimal(lp, sol));
            CHECK(sol.value == brute_max_over_vertices(A, b, c));
        }
    }
}

TEST_CASE("polytope vertex enumeration") {
    // {a >= 0 : 2a1 + 2a2 >= 1} -> vertices (1/2,0), (0,1/2)
    MatrixXq A(1, 2);
    A << 2, 2;
    VectorXq b(1);
    b << 1;
    auto v = polytope_vertices(A, b);
    REQUIRE(v.size() == 2);
    CHECK(v[0][0] == 0);
    CHECK(v[0][1] == Rational(1, 2));
    CHECK(v[1][0] == Rational(1, 2));
    CHECK(v[1][1] == 0);

    // {a >= 0 : a1 >= 1} in dim 1 -> {(1)}
    MatrixXq A1(1, 1);
    A1 << 1;
    VectorXq b1(1);
    b1 << 1;
    auto v1 = polytope_vertices(A1, b1);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0][0] == 1);

    // dual polytope of K_4 models on [2]: {3a1 + 3a2 >= 1}
    MatrixXq A2(1, 2);
    A2 << 3, 3;
    VectorXq b2(1);
    b2 << 1;
    auto v2 = polytope_vertices(A2, b2);
    REQUIRE(v2.size() == 2);
    CHECK(v2[0][1] == Rational(1, 3));
    CHECK(v2[1][0] == Rational(1, 3));

    CHECK_THROWS_AS(polytope_vertices(MatrixXq::Zero(1, 9), VectorXq::Zero(1)),
                    PreconditionError);
}

namespace {

// independent tight-subset oracle for {x >= 0 : Ax >= b}
std::vector<VectorXq> vertices_bruteforce(const MatrixXq& A, const VectorXq& b) {
    int d = static_cast<int>(A.cols());
    int m = static_cast<int>(A.rows());
    int total = m + d;
    std::vector<VectorXq> found;
    std::vector<int> pick;
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == d) {
            MatrixXq M(d, d);
            std::vector<Rational> rhs(d);
            for (int r = 0; r < d; ++r) {
                if (pick[r] < m) {
                    for (int cidx = 0; cidx < d; ++cidx) M(r, cidx) = A(pick[r], cidx);
                    rhs[r] = b[pick[r]];
                } else {
                    for (int cidx = 0; cidx < d; ++cidx) M(r, cidx) = 0;
                    M(r, pick[r] - m) = 1;
                    rhs[r] = 0;
                }
            }
            auto x = solve_square(M, rhs);
            if (!x.empty()) {
                bool feas = true;
                for (int j = 0; j < d && feas; ++j) feas = x[j] >= 0;
                for (int i = 0; i < m && feas; ++i) {
                    Rational ax = 0;
                    for (int j = 0; j < d; ++j) ax += A(i, j) * x[j];
                    feas = ax >= b[i];
                }
                if (feas) {
                    VectorXq v(d);
                    for (int j = 0; j < d; ++j) v[j] = x[j];
                    found.push_back(v);
                }
            }
            return;
        }
        for (int c = start; c < total; ++c) {
            pick.push_back(c);
            rec(c + 1, depth + 1);
            pick.pop_back();
        }
    };
    rec(0, 0);
    std::sort(found.begin(), found.end(), [](const VectorXq& a, const VectorXq& c) {
        for (int i = 0; i < a.size(); ++i)
            if (a[i] != c[i]) return a[i] < c[i];
        return false;
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const VectorXq& a, const VectorXq& c) { return a == c; }),
                found.end());
    return found;
}

}  // namespace

TEST_CASE("double description agrees with tight-subset oracle on random systems") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 5);
        MatrixXq A(m, d);
        VectorXq b(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < d; ++j) A(i, j) = static_cast<int>(rng() % 5);
            b[i] = 1 + static_cast<int>(rng() % 3);
        }
        auto dd = polytope_vertices(A, b);
        auto bf = vertices_bruteforce(A, b);
        REQUIRE(dd.size() == bf.size());
        for (size_t i = 0; i < dd.size(); ++i) CHECK(dd[i] == bf[i]);
    }
}
