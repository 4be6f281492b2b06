#include "minorvol/rational.hpp"

namespace minorvol {

namespace {

// exact integer q-th root when n is a perfect power
std::optional<Integer> exact_iroot(const Integer& n, unsigned q) {
    Integer r;
    int exact = mpz_root(r.backend().data(), n.backend().data(), q);
    if (exact) return r;
    return std::nullopt;
}

}  // namespace

RatInterval root_bounds(const Rational& x, unsigned q, int bits) {
    if (x <= 0) throw PreconditionError("root_bounds requires x > 0");
    if (q == 1) return RatInterval(x);
    if (auto rn = exact_iroot(numerator(x), q))
        if (auto rd = exact_iroot(denominator(x), q))
            return RatInterval(Rational(*rn) / Rational(*rd));
    Rational lo = x < 1 ? x : Rational(1);
    Rational hi = x < 1 ? Rational(1) : x;
    auto powq = [&](const Rational& v) {
        Rational p = 1;
        for (unsigned i = 0; i < q; ++i) p *= v;
        return p;
    };
    for (int i = 0; i < bits; ++i) {
        Rational mid = (lo + hi) / 2;
        Rational mq = powq(mid);
        if (mq == x) return RatInterval(mid);
        if (mq < x) lo = mid; else hi = mid;
    }
    return {lo, hi};
}

RatInterval pow_bounds(const Rational& x, const Rational& e, int bits) {
    if (x <= 0) throw PreconditionError("pow_bounds requires x > 0");
    if (e == 0) return RatInterval(Rational(1));
    Integer p = numerator(e), q = denominator(e);
    bool neg = p < 0;
    if (neg) p = -p;
    Rational base = 1;
    // integer power, then q-th root
    Integer k = p;
    Rational acc = x;
    while (k > 0) {
        if ((k & 1) != 0) base *= acc;
        acc *= acc;
        k >>= 1;
    }
    RatInterval rb = root_bounds(base, static_cast<unsigned>(q), bits);
    if (neg) rb = inverse(rb);
    return rb;
}

RatInterval pow_bounds(const RatInterval& x, const Rational& e, int bits) {
    RatInterval a = pow_bounds(x.lo, e, bits);
    RatInterval b = pow_bounds(x.hi, e, bits);
    // x^e is monotone in x for fixed e
    Rational lo = std::min(a.lo, b.lo);
    Rational hi = std::max(a.hi, b.hi);
    return {lo, hi};
}

Surd::Surd(Rational a_, Rational b_, Rational r_)
    : a(std::move(a_)), b(std::move(b_)), r(std::move(r_)) {
    if (r < 0) throw PreconditionError("negative radicand");
    if (r == 0) b = 0;
    if (b == 0) r = 0;
    if (b != 0) {
        // collapse perfect squares so is_rational() is meaningful
        Integer rn = numerator(r), rd = denominator(r);
        Integer sn = sqrt(rn), sd = sqrt(rd);
        if (sn * sn == rn && sd * sd == rd) {
            a += b * Rational(sn) / Rational(sd);
            b = 0;
            r = 0;
        }
    }
}

Rational Surd::rational_value() const {
    if (!is_rational()) throw PreconditionError("surd is irrational: " + str());
    return a;
}

RatInterval Surd::bounds(int bits) const {
    if (b == 0) return RatInterval(a);
    RatInterval root = root_bounds(r, 2, bits);
    return RatInterval(a) + RatInterval(b) * root;
}

std::string Surd::str() const {
    if (b == 0) return rational_str(a);
    return rational_str(a) + " + " + rational_str(b) + "*sqrt(" + rational_str(r) + ")";
}

namespace {

// sign of q*sqrt(r) - t, all rational, r >= 0
int sign_radical_minus_rational(const Rational& q, const Rational& r, const Rational& t) {
    int sq = (q == 0 || r == 0) ? 0 : (q > 0 ? 1 : -1);
    int st = t == 0 ? 0 : (t > 0 ? 1 : -1);
    if (sq == 0) return -st;
    if (sq > 0 && st <= 0) return 1;
    if (sq < 0 && st >= 0) return -1;
    // same strict sign: compare squares, orient by that sign
    Rational lhs = q * q * r, rhs = t * t;
    if (lhs == rhs) return 0;
    int mag = lhs > rhs ? 1 : -1;
    return sq > 0 ? mag : -mag;
}

}  // namespace

int compare(const Surd& x, const Surd& y) {
    // sign of d + b1*sqrt(r1) - b2*sqrt(r2), d = x.a - y.a
    Rational d = x.a - y.a;
    if (x.b == 0 && y.b == 0) return d == 0 ? 0 : (d > 0 ? 1 : -1);
    if (y.b == 0) return sign_radical_minus_rational(x.b, x.r, -d);
    if (x.b == 0) return -sign_radical_minus_rational(y.b, y.r, d);
    // both radicals present: S = b1*sqrt(r1) - b2*sqrt(r2), want sign(S + d)
    // First get sign of U := S - (-d) via squaring case analysis on S vs -d.
    // We compute sign(S) then resolve S vs -d by one more squaring.
    // sign(S):
    int s_sign;
    {
        int s1 = x.b > 0 ? 1 : -1;
        int s2 = y.b > 0 ? 1 : -1;
        if (s1 > 0 && s2 < 0) s_sign = 1;
        else if (s1 < 0 && s2 > 0) s_sign = -1;
        else {
            Rational l = x.b * x.b * x.r, rr = y.b * y.b * y.r;
            if (l == rr) s_sign = 0;
            else s_sign = ((l > rr) == (s1 > 0)) ? 1 : -1;
        }
    }
    Rational t = -d;  // compare S vs t
    int st = t == 0 ? 0 : (t > 0 ? 1 : -1);
    if (s_sign == 0) return -st;
    if (s_sign > 0 && st <= 0) return 1;
    if (s_sign < 0 && st >= 0) return -1;
    // S and t share a strict sign; square once:
    // S^2 = b1^2 r1 + b2^2 r2 - 2 b1 b2 sqrt(r1 r2); compare S^2 vs t^2 exactly,
    // then orient by the common sign.
    Rational c = x.b * x.b * x.r + y.b * y.b * y.r - t * t;
    // sign(S^2 - t^2) = sign(c - 2 b1 b2 sqrt(r1 r2))
    int m = -sign_radical_minus_rational(2 * x.b * y.b, x.r * y.r, c);
    if (m == 0) return 0;
    return s_sign > 0 ? m : -m;
}

}  // namespace minorvol
