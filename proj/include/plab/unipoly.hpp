#ifndef PLAB_UNIPOLY_HPP
#define PLAB_UNIPOLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "plab/errors.hpp"
#include "plab/rational.hpp"

namespace plab {

// Dense univariate polynomial over an exact coefficient ring F.
// Coefficients are stored lowest-degree first; the representation is always
// normalized (no trailing zero coefficients). degree() of the zero polynomial
// is the sentinel -1.
template <class F>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit UniPoly(F constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }

    static UniPoly zero() { return UniPoly(); }
    // c * x^k
    static UniPoly monomial(F coeff, std::size_t k) {
        if (coeff.is_zero()) return UniPoly();
        std::vector<F> v;
        v.reserve(k + 1);
        for (std::size_t i = 0; i < k; ++i) v.push_back(zero_like(coeff));
        v.push_back(std::move(coeff));
        return UniPoly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == one_like(c_[0]); }

    const F& operator[](std::size_t i) const { return c_[i]; }
    const F& lc() const { return c_.back(); }
    const std::vector<F>& coeffs() const { return c_; }

    F coeff(std::size_t i) const {
        if (i < c_.size()) return c_[i];
        return c_.empty() ? F() : zero_like(c_[0]);
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size())
                r[i] = a.c_[i];
            else
                r[i] = b.c_[i];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<F> r(a.c_);
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scaled(const F& s) const {
        if (s.is_zero()) return UniPoly();
        std::vector<F> r(c_);
        for (auto& x : r) x = x * s;
        return UniPoly(std::move(r));
    }

    // multiply by x^k
    UniPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<F> r;
        r.reserve(c_.size() + k);
        for (std::size_t i = 0; i < k; ++i) r.push_back(zero_like(c_[0]));
        r.insert(r.end(), c_.begin(), c_.end());
        return UniPoly(std::move(r));
    }

    // Horner evaluation into any ring T that supports T*T, T+T and construction
    // of the coefficients via `lift`.
    template <class T, class Lift>
    T eval(const T& x, Lift lift) const {
        if (is_zero()) return zero_like(x);
        T acc = lift(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + lift(c_[i]);
        return acc;
    }
    F eval(const F& x) const {
        return eval<F>(x, [](const F& c) { return c; });
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F>
UniPoly<F> zero_like(const UniPoly<F>&) {
    return UniPoly<F>();
}
// One of the coefficient ring, as a constant polynomial. Needs a nonzero sample
// to know the coefficient context.
template <class F>
UniPoly<F> one_like(const UniPoly<F>& p) {
    if (p.is_zero()) throw MathError("one_like(UniPoly) needs a nonzero sample");
    return UniPoly<F>(one_like(p.lc()));
}

template <class F>
UniPoly<F> derivative(const UniPoly<F>& p) {
    if (p.degree() <= 0) return UniPoly<F>();
    std::vector<F> r;
    r.reserve(p.degree());
    for (long i = 1; i <= p.degree(); ++i) {
        F k = zero_like(p.lc());
        F one = one_like(p.lc());
        for (long j = 0; j < i; ++j) k += one;  // i as a ring element
        r.push_back(p[static_cast<std::size_t>(i)] * k);
    }
    return UniPoly<F>(std::move(r));
}

template <class F>
UniPoly<F> pow(const UniPoly<F>& p, unsigned long e) {
    if (e == 0) return one_like(p);
    UniPoly<F> r = p, base = p;
    // exponentiation by squaring on e-1 remaining multiplications
    --e;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Quotient/remainder; requires lc(b) invertible in F (field coefficients, or a
// monic divisor over any ring when `inv_lc` is supplied as one).
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly<F>(), a};
    const F inv_lc = inverse(b.lc());
    std::vector<F> rem(a.coeffs());
    const long db = b.degree();
    std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), zero_like(a.lc()));
    for (long i = a.degree(); i >= db; --i) {
        F q = rem[static_cast<std::size_t>(i)] * inv_lc;
        if (q.is_zero()) continue;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    return {UniPoly<F>(std::move(quot)), UniPoly<F>(std::move(rem))};
}

// Division by a monic divisor over any coefficient ring.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod_monic(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (!(b.lc() == one_like(b.lc()))) throw MathError("divmod_monic: divisor not monic");
    if (a.degree() < b.degree()) return {UniPoly<F>(), a};
    std::vector<F> rem(a.coeffs());
    const long db = b.degree();
    std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), zero_like(a.lc()));
    for (long i = a.degree(); i >= db; --i) {
        F q = rem[static_cast<std::size_t>(i)];
        if (q.is_zero()) continue;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    return {UniPoly<F>(std::move(quot)), UniPoly<F>(std::move(rem))};
}

// Exact division over a ring; throws if a remainder is left.
template <class F>
UniPoly<F> exact_div(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return UniPoly<F>();
    if (b.is_constant()) {
        std::vector<F> r(a.coeffs());
        for (auto& x : r) x = exact_div(x, b.lc());
        return UniPoly<F>(std::move(r));
    }
    // general case: synthetic division with exact coefficient division
    std::vector<F> rem(a.coeffs());
    const long db = b.degree();
    if (a.degree() < db) throw MathError("inexact polynomial division");
    std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), zero_like(a.lc()));
    for (long i = a.degree(); i >= db; --i) {
        F top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        F q = exact_div(top, b.lc());
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    if (!UniPoly<F>(std::move(rem)).is_zero()) throw MathError("inexact polynomial division");
    return UniPoly<F>(std::move(quot));
}

template <class F>
UniPoly<F> monic(const UniPoly<F>& p) {
    if (p.is_zero()) return p;
    return p.scaled(inverse(p.lc()));
}

// Monic gcd over field coefficients; gcd(0,0) = 0.
template <class F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class F>
struct XGcd {
    UniPoly<F> g, u, v;
};

template <class F>
XGcd<F> poly_xgcd(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (a.is_zero() && b.is_zero()) return {UniPoly<F>(), UniPoly<F>(), UniPoly<F>()};
    const F one = one_like(a.is_zero() ? b.lc() : a.lc());
    UniPoly<F> r0 = a, r1 = b;
    UniPoly<F> u0(one), u1, v0, v1(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<F> u2 = u0 - q * u1;
        UniPoly<F> v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    F s = inverse(r0.lc());
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

// Yun squarefree decomposition over a field of characteristic zero.
// Returns [(g_1, 1), (g_2, 2), ...] with p = lc * prod g_i^i, parts monic,
// squarefree and pairwise coprime; parts with g_i = 1 are omitted.
template <class F>
std::vector<std::pair<UniPoly<F>, long>> squarefree_decompose(const UniPoly<F>& p) {
    if (p.is_zero()) throw MathError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<UniPoly<F>, long>> out;
    if (p.degree() == 0) return out;
    UniPoly<F> P = monic(p);
    UniPoly<F> dP = derivative(P);
    UniPoly<F> g = poly_gcd(P, dP);
    if (g.is_constant()) {
        out.emplace_back(P, 1);
        return out;
    }
    UniPoly<F> w = exact_div(P, g);          // product of squarefree parts
    UniPoly<F> y = exact_div(dP, g);
    UniPoly<F> zz = y - derivative(w);
    long m = 1;
    while (!w.is_constant()) {
        UniPoly<F> gi = poly_gcd(w, zz);
        if (gi.degree() > 0) out.emplace_back(gi, m);
        w = exact_div(w, gi);
        y = exact_div(zz, gi);
        zz = y - derivative(w);
        ++m;
    }
    return out;
}

namespace detail {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, ring coefficients.
template <class F>
UniPoly<F> prem(const UniPoly<F>& a, const UniPoly<F>& b) {
    long da = a.degree(), db = b.degree();
    if (da < db) return a;
    std::vector<F> rem(a.coeffs());
    const F& lb = b.lc();
    for (long i = da; i >= db; --i) {
        // scale the live part by lc(b), then eliminate the top term; after
        // deg a - deg b + 1 rounds this is exactly lc(b)^(delta+1) * a mod b
        F top = rem[static_cast<std::size_t>(i)];
        for (long j = 0; j < i; ++j) rem[static_cast<std::size_t>(j)] = rem[static_cast<std::size_t>(j)] * lb;
        if (!top.is_zero()) {
            for (long j = 0; j < db; ++j)
                rem[static_cast<std::size_t>(i - db + j)] -= top * b[static_cast<std::size_t>(j)];
        }
        rem[static_cast<std::size_t>(i)] = zero_like(lb);
    }
    return UniPoly<F>{std::move(rem)};
}

}  // namespace detail

// Resultant under the convention Res(p,q) = lc(q)^deg(p) * prod p(beta_j) over
// the roots of q, i.e. (-1)^(deg p * deg q) times the Sylvester determinant of
// (p, q). Computed by the subresultant PRS, so only ring operations and exact
// division are required of F.
template <class F>
F resultant(const UniPoly<F>& p, const UniPoly<F>& q) {
    if (p.is_zero() || q.is_zero()) throw MathError("resultant of the zero polynomial");
    const F one = one_like(p.lc());
    bool negate = (p.degree() & 1) && (q.degree() & 1);  // convention factor

    UniPoly<F> A = p, B = q;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        // the Sylvester swap sign cancels against the convention factor
        negate = false;
    }
    if (B.degree() == 0) {
        F r = pow(B.lc(), static_cast<unsigned long>(A.degree()));
        return negate ? -r : r;
    }

    bool neg = false;  // sign accumulated by the PRS itself
    F g = one, h = one;
    while (true) {
        long da = A.degree(), db = B.degree();
        long delta = da - db;
        if ((da & 1) && (db & 1)) neg = !neg;
        UniPoly<F> R = detail::prem(A, B);
        A = std::move(B);
        F divisor = g * pow(h, static_cast<unsigned long>(delta));
        if (R.is_zero()) {
            B = UniPoly<F>();
        } else {
            B = exact_div(R, UniPoly<F>(divisor));
        }
        g = A.lc();
        if (delta > 0) h = exact_div(pow(g, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
        if (B.is_zero()) {
            if (A.degree() > 0) return zero_like(one);  // common factor
            break;
        }
        if (B.degree() == 0) {
            // one more h-update with the constant "remainder"
            long dA = A.degree();
            F hf = exact_div(pow(B.lc(), static_cast<unsigned long>(dA)), pow(h, static_cast<unsigned long>(dA - 1)));
            F r = hf;
            if (neg) r = -r;
            if (negate) r = -r;
            return r;
        }
    }
    // A is a nonzero constant: resultant of earlier pair ended degenerate;
    // at this point deg A == 0 means original q divided p evenly to a constant
    F r = pow(A.lc(), 0ul);
    (void)r;
    throw MathError("resultant: unreachable PRS state");
}

// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p), n = deg p >= 1.
template <class F>
F discriminant(const UniPoly<F>& p) {
    long n = p.degree();
    if (n < 1) throw MathError("discriminant requires degree >= 1");
    if (n == 1) return one_like(p.lc());
    F r = resultant(p, derivative(p));
    r = exact_div(r, p.lc());
    if (((n * (n - 1)) / 2) & 1) r = -r;
    return r;
}

using PolyQ = UniPoly<Rational>;

}  // namespace plab

#endif
