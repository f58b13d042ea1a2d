#include "plab/fppoly.hpp"

#include <algorithm>
#include <cstring>

#include "plab/errors.hpp"

namespace plab::fp {

long deg(const Vec& a) { return static_cast<long>(a.size()) - 1; }

void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const Vec& a) { return a.empty(); }

Vec add(const Zp& K, const Vec& a, const Vec& b) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = K.add(x, y);
    }
    trim(r);
    return r;
}

Vec sub(const Zp& K, const Vec& a, const Vec& b) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = K.sub(x, y);
    }
    trim(r);
    return r;
}

Vec scale(const Zp& K, const Vec& a, u64 s) {
    Vec r(a);
    for (auto& x : r) x = K.mul(x, s);
    trim(r);
    return r;
}

Vec mul(const Zp& K, const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

std::pair<Vec, Vec> divmod(const Zp& K, const Vec& a, const Vec& b) {
    if (b.empty()) throw DivisionByZero("mod-p polynomial division by zero");
    if (deg(a) < deg(b)) return {{}, a};
    Vec rem(a);
    long db = deg(b);
    u64 inv_lb = K.inv(b.back());
    Vec quot(static_cast<std::size_t>(deg(a) - db + 1), 0);
    for (long i = deg(a); i >= db; --i) {
        u64 top = rem[static_cast<std::size_t>(i)];
        if (!top) continue;
        u64 q = K.mul(top, inv_lb);
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(i - db + j);
            rem[idx] = K.sub(rem[idx], K.mul(q, b[static_cast<std::size_t>(j)]));
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    trim(rem);
    trim(quot);
    return {quot, rem};
}

Vec rem(const Zp& K, const Vec& a, const Vec& b) { return divmod(K, a, b).second; }

Vec monic(const Zp& K, const Vec& a) {
    if (a.empty() || a.back() == 1) return a;
    return scale(K, a, K.inv(a.back()));
}

Vec gcd(const Zp& K, Vec a, Vec b) {
    while (!b.empty()) {
        Vec r = rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(K, a);
}

Vec derivative(const Zp& K, const Vec& a) {
    if (a.size() <= 1) return {};
    Vec r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = K.mul(a[i], i % K.p);
    trim(r);
    return r;
}

u64 eval(const Zp& K, const Vec& a, u64 x) {
    u64 acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a[i]);
    return acc;
}

Vec pow_mod(const Zp& K, Vec base, const Int& e, const Vec& f) {
    Vec r{1};
    base = rem(K, base, f);
    long nbits = static_cast<long>(mpz_sizeinbase(e.raw(), 2));
    if (e.is_zero()) return r;
    for (long i = nbits - 1; i >= 0; --i) {
        r = rem(K, mul(K, r, r), f);
        if (mpz_tstbit(e.raw(), static_cast<mp_bitcnt_t>(i))) r = rem(K, mul(K, r, base), f);
    }
    return r;
}

Vec pow_x_mod(const Zp& K, const Int& e, const Vec& f) { return pow_mod(K, Vec{0, 1}, e, f); }

// ---------------------------------------------------------------------------
// NTT

static bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, ++s;
    Zp K{n};
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = K.pow(a % n, d);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = K.mul(x, x);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

static u64 primitive_root(u64 p) {
    u64 phi = p - 1;
    std::vector<u64> fac;
    u64 m = phi;
    for (u64 q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            fac.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) fac.push_back(m);
    Zp K{p};
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : fac) {
            if (K.pow(g, phi / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
}

std::vector<NttPrime> ntt_primes(std::size_t count, int min_log2cap) {
    std::vector<NttPrime> out;
    // p = c * 2^min_log2cap + 1 descending below 2^62 keeps CRT products dense
    u64 step = 1ull << min_log2cap;
    u64 c = ((1ull << 62) - 1) / step;
    for (; out.size() < count && c > 0; --c) {
        u64 p = c * step + 1;
        if (!is_prime_u64(p)) continue;
        int cap = 0;
        u64 m = p - 1;
        while (!(m & 1)) m >>= 1, ++cap;
        out.push_back(NttPrime{p, primitive_root(p), cap});
    }
    if (out.size() < count) throw MathError("not enough NTT primes");
    return out;
}

void ntt(const NttPrime& P, std::vector<u64>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw MathError("ntt size must be a power of two");
    Zp K{P.p};
    int lg = 0;
    while ((1ull << lg) < n) ++lg;
    if (lg > P.log2cap) throw MathError("ntt size exceeds prime capability");

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 1; len < lg + 1 && (1u << len) <= n; ++len) {
        std::size_t half = 1ull << (len - 1), full = 1ull << len;
        u64 w = K.pow(P.root, (P.p - 1) >> len);
        if (inverse) w = K.inv(w);
        // Shoup precomputation for the stride's twiddles
        static thread_local std::vector<u64> tw, twq;
        tw.resize(half);
        twq.resize(half);
        tw[0] = 1;
        for (std::size_t i = 1; i < half; ++i) tw[i] = K.mul(tw[i - 1], w);
        for (std::size_t i = 0; i < half; ++i)
            twq[i] = static_cast<u64>(((u128)tw[i] << 64) / P.p);
        for (std::size_t s = 0; s < n; s += full) {
            for (std::size_t i = 0; i < half; ++i) {
                u64 u = a[s + i], v = a[s + i + half];
                // Shoup modular multiplication v * tw[i]
                u64 q = static_cast<u64>(((u128)v * twq[i]) >> 64);
                u64 t = v * tw[i] - q * P.p;
                if (t >= P.p) t -= P.p;
                a[s + i] = K.add(u, t);
                a[s + i + half] = K.sub(u, t);
            }
        }
    }
    if (inverse) {
        u64 ninv = K.inv(n % P.p);
        for (auto& x : a) x = K.mul(x, ninv);
    }
}

Vec mul_ntt(const NttPrime& P, const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t need = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < need) n <<= 1;
    std::vector<u64> fa(a.begin(), a.end()), fb(b.begin(), b.end());
    fa.resize(n, 0);
    fb.resize(n, 0);
    ntt(P, fa, false);
    ntt(P, fb, false);
    Zp K{P.p};
    for (std::size_t i = 0; i < n; ++i) fa[i] = K.mul(fa[i], fb[i]);
    ntt(P, fa, true);
    fa.resize(need);
    trim(fa);
    return fa;
}

// ---------------------------------------------------------------------------
// factorization mod p

namespace {

// deterministic generator, reproducible runs
struct SplitRng {
    u64 s;
    u64 next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

// equal-degree splitting of a product of irreducibles of degree d (p odd)
void edf(const Zp& K, const Vec& f, long d, std::vector<Vec>& out, SplitRng& rng) {
    long n = deg(f);
    if (n == static_cast<long>(d)) {
        out.push_back(monic(K, f));
        return;
    }
    // e = (p^d - 1) / 2
    Int e = pow(Int(static_cast<long>(K.p)), static_cast<unsigned long>(d));
    e -= Int(1);
    e = exact_div(e, Int(2));
    while (true) {
        Vec a(static_cast<std::size_t>(n), 0);
        for (auto& x : a) x = rng.next() % K.p;
        trim(a);
        if (deg(a) < 1) continue;
        Vec g = gcd(K, a, f);
        if (deg(g) > 0 && deg(g) < n) {
            edf(K, g, d, out, rng);
            edf(K, divmod(K, f, g).first, d, out, rng);
            return;
        }
        Vec b = pow_mod(K, a, e, f);
        if (b.empty()) continue;
        b[0] = K.sub(b[0], 1);
        trim(b);
        g = gcd(K, b, f);
        if (deg(g) > 0 && deg(g) < n) {
            edf(K, g, d, out, rng);
            edf(K, divmod(K, f, g).first, d, out, rng);
            return;
        }
    }
}

}  // namespace

PartialFactorsP factor_mod_p(const Zp& K, const Vec& f_in, long maxdeg) {
    PartialFactorsP res;
    res.cofactor = Vec{1};
    if (deg(f_in) < 1) {
        return res;
    }
    if (maxdeg < 0) maxdeg = deg(f_in);
    Vec f = monic(K, f_in);

    // squarefree split mod p: char p can produce p-th power parts, but the
    // callers guarantee squarefree inputs (prime chosen so the reduction stays
    // squarefree); still, handle multiplicities by repeated gcd peeling.
    std::vector<std::pair<Vec, long>> sqf;  // (squarefree part, multiplicity)
    long mult = 1;
    while (deg(f) > 0) {
        Vec fp = derivative(K, f);
        if (is_zero(fp)) throw MathError("factor_mod_p: p-th power input");
        Vec g = gcd(K, f, fp);
        Vec part = divmod(K, f, g).first;  // product of distinct irreducibles of f
        if (deg(part) > 0) sqf.emplace_back(part, mult);
        // strip one copy of each distinct factor, multiplicity bookkeeping below
        f = g;
        ++mult;
        // simple peeling: factors of multiplicity m appear in `part` for m rounds
    }
    // consolidate: the peeling above lists each irreducible once per
    // multiplicity level; convert to (factor, multiplicity) after splitting.
    std::vector<std::pair<Vec, long>> found;  // accumulated with multiplicity 1 entries
    SplitRng rng{0x9e3779b97f4a7c15ull ^ (static_cast<u64>(deg(f_in)) << 32) ^ K.p};
    for (auto& [part, level] : sqf) {
        (void)level;
        // distinct-degree split of `part`
        Vec h{0, 1};  // x
        Vec rest = part;
        for (long d = 1; d <= deg(rest) && d <= maxdeg; ++d) {
            if (deg(rest) < 2 * d) {
                // rest itself is irreducible of degree deg(rest)
                break;
            }
            h = pow_mod(K, h, Int(static_cast<long>(K.p)), rest);
            Vec hx = h;
            if (hx.size() < 2) hx.resize(2, 0);
            hx[1] = K.sub(hx[1], 1);
            trim(hx);
            Vec g = gcd(K, hx, rest);
            if (deg(g) > 0) {
                std::vector<Vec> pieces;
                edf(K, g, d, pieces, rng);
                for (auto& q : pieces) found.emplace_back(q, 0);
                rest = divmod(K, rest, g).first;
                h = rem(K, h, rest);
            }
        }
        if (deg(rest) > 0) {
            if (deg(rest) <= maxdeg)
                found.emplace_back(monic(K, rest), 0);
            else
                res.cofactor = mul(K, res.cofactor, rest);  // multiplicity handled below
        }
    }
    // recover multiplicities by trial division of the original polynomial
    for (auto& [g, m] : found) {
        Vec cur = f_in;
        long k = 0;
        while (true) {
            auto [q, r] = divmod(K, cur, g);
            if (!is_zero(r)) break;
            cur = q;
            ++k;
        }
        m = k;
    }
    // cofactor multiplicity: divide out all found factors from f_in
    Vec co = monic(K, f_in);
    for (auto& [g, m] : found) {
        for (long i = 0; i < m; ++i) co = divmod(K, co, g).first;
    }
    res.cofactor = co;
    // dedupe identical factors found twice through different sqf levels
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (i + 1 < found.size() && found[i].first == found[i + 1].first) continue;
        if (found[i].second > 0) res.factors.push_back(found[i]);
    }
    return res;
}

}  // namespace plab::fp
