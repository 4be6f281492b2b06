#ifndef MINORVOL_RATIONAL_HPP
#define MINORVOL_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <stdexcept>
#include <string>

namespace minorvol {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(what) {}
};
class BudgetExceeded : public Error {
  public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};
class PreconditionError : public Error {
  public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};
class InternalError : public Error {
  public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

inline std::string rational_str(const Rational& q) {
    return q.str();
}

/// Parses "num", "num/den" or decimal-free signed integers into a Rational.
inline Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        throw ParseError("bad rational: '" + text + "'");
    }
}

inline Integer floor_rat(const Rational& q) {
    Integer num = numerator(q), den = denominator(q);
    Integer d = num / den;
    if (num < 0 && d * den != num) d -= 1;
    return d;
}

inline Integer ceil_rat(const Rational& q) { return -floor_rat(-q); }

// ---------------------------------------------------------------------------
// Closed rational intervals with outward rounding, used to evaluate the
// irrational quantities gamma * n^beta and 3*(gamma/eps)^(1/(1-beta))
// exactly enough to decide certificate inequalities.
// ---------------------------------------------------------------------------

struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw InternalError("interval bounds out of order");
    }
    explicit RatInterval(const Rational& x) : lo(x), hi(x) {}

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}
inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return {lo, hi};
}
inline RatInterval inverse(const RatInterval& a) {
    if (a.contains_zero()) throw InternalError("interval inverse through zero");
    return {Rational(1) / a.hi, Rational(1) / a.lo};
}
inline RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    return a * inverse(b);
}

/// Bounds on x^(1/q) for x > 0, q >= 1, by bisection; exact hits collapse.
RatInterval root_bounds(const Rational& x, unsigned q, int bits);

/// Bounds on x^e for x > 0 and rational exponent e.
RatInterval pow_bounds(const Rational& x, const Rational& e, int bits);

/// Monotone extension of pow_bounds to interval bases (x > 0 required).
RatInterval pow_bounds(const RatInterval& x, const Rational& e, int bits);

// ---------------------------------------------------------------------------
// Quadratic surds a + b*sqrt(r).  The stationary values of the weighted
// density d(w) on a dual-vertex slice satisfy rational quadratics, so exact
// comparison of these is all cf_support_bound needs.
// ---------------------------------------------------------------------------

struct Surd {
    Rational a, b, r;  // value = a + b*sqrt(r), r >= 0

    Surd() : a(0), b(0), r(0) {}
    explicit Surd(Rational v) : a(std::move(v)), b(0), r(0) {}
    Surd(Rational a_, Rational b_, Rational r_);

    bool is_rational() const { return b == 0; }
    /// Exact rational value; throws unless is_rational().
    Rational rational_value() const;
    /// Rational bounds enclosing the value.
    RatInterval bounds(int bits) const;
    std::string str() const;
};

/// Exact three-way comparison: -1, 0, +1.
int compare(const Surd& x, const Surd& y);

inline bool operator<(const Surd& x, const Surd& y) { return compare(x, y) < 0; }
inline bool operator==(const Surd& x, const Surd& y) { return compare(x, y) == 0; }
inline bool operator<=(const Surd& x, const Surd& y) { return compare(x, y) <= 0; }

}  // namespace minorvol

#endif  // MINORVOL_RATIONAL_HPP
