#include "plab/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "plab/errors.hpp"
#include "plab/fppoly.hpp"

namespace plab {

namespace {

using IVec = std::vector<Int>;  // integer poly, lowest first, trimmed

void itrim(IVec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

long ideg(const IVec& a) { return static_cast<long>(a.size()) - 1; }

IVec imul(const IVec& a, const IVec& b) {
    if (a.empty() || b.empty()) return {};
    IVec r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].raw(), a[i].raw(), b[j].raw());
    }
    itrim(r);
    return r;
}

// exact division test over Z; returns empty optional when it does not divide
bool idivmod_exact(const IVec& a, const IVec& b, IVec& quot) {
    if (b.empty()) return false;
    if (a.empty()) {
        quot.clear();
        return true;
    }
    if (ideg(a) < ideg(b)) return false;
    IVec rem(a);
    long db = ideg(b);
    quot.assign(static_cast<std::size_t>(ideg(a) - db + 1), Int(0));
    for (long i = ideg(a); i >= db; --i) {
        Int& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        Int q, r;
        mpz_tdiv_qr(q.raw(), r.raw(), top.raw(), b.back().raw());
        if (!r.is_zero()) return false;
        for (long j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(i - db + j)].raw(), q.raw(),
                       b[static_cast<std::size_t>(j)].raw());
        quot[static_cast<std::size_t>(i - db)] = std::move(q);
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    itrim(quot);
    return true;
}

Int icontent(const IVec& a) {
    Int g(0);
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

IVec iscale_div(const IVec& a, const Int& d) {
    IVec r(a);
    for (auto& c : r) c = exact_div(c, d);
    return r;
}

Int inorm2_sq(const IVec& a) {
    Int s(0);
    for (const auto& c : a) s += c * c;
    return s;
}

// ---- arithmetic mod m (m = p^k) on integer polys, coefficients in [0, m) ----

IVec mreduce(IVec a, const Int& m) {
    for (auto& c : a) mpz_fdiv_r(c.raw(), c.raw(), m.raw());
    itrim(a);
    return a;
}

IVec madd(const IVec& a, const IVec& b, const Int& m) {
    IVec r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return mreduce(std::move(r), m);
}

IVec msub(const IVec& a, const IVec& b, const Int& m) {
    IVec r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return mreduce(std::move(r), m);
}

IVec mmul(const IVec& a, const IVec& b, const Int& m) { return mreduce(imul(a, b), m); }

// divmod by a monic divisor, coefficients mod m
std::pair<IVec, IVec> mdivmod_monic(const IVec& a, const IVec& b, const Int& m) {
    if (ideg(a) < ideg(b)) return {{}, a};
    IVec rem(a);
    long db = ideg(b);
    IVec quot(static_cast<std::size_t>(ideg(a) - db + 1), Int(0));
    for (long i = ideg(a); i >= db; --i) {
        Int q = rem[static_cast<std::size_t>(i)];
        mpz_fdiv_r(q.raw(), q.raw(), m.raw());
        if (q.is_zero()) continue;
        for (long j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(i - db + j)].raw(), q.raw(),
                       b[static_cast<std::size_t>(j)].raw());
        quot[static_cast<std::size_t>(i - db)] = std::move(q);
        rem[static_cast<std::size_t>(i)] = Int(0);
    }
    return {mreduce(std::move(quot), m), mreduce(std::move(rem), m)};
}

IVec balanced(IVec a, const Int& m) {
    Int h;
    mpz_fdiv_q_ui(h.raw(), m.raw(), 2);
    for (auto& c : a) {
        mpz_fdiv_r(c.raw(), c.raw(), m.raw());
        if (c > h) c -= m;
    }
    itrim(a);
    return a;
}

// ---- quadratic Hensel lifting (all factors monic; f monic) ----

// lift f = g*h (mod m) with s*g + t*h = 1 (mod p0-part) to modulus m2 = m*m
struct Pair {
    IVec g, h, s, t;
};

Pair hensel_step(const IVec& f, Pair gh, const Int& m) {
    Int m2 = m * m;
    IVec e = msub(f, imul(gh.g, gh.h), m2);
    auto [q, r] = mdivmod_monic(mmul(gh.s, e, m2), gh.h, m2);
    IVec gstar = madd(madd(gh.g, mmul(gh.t, e, m2), m2), mmul(q, gh.g, m2), m2);
    IVec hstar = madd(gh.h, r, m2);
    IVec b = msub(madd(mmul(gh.s, gstar, m2), mmul(gh.t, hstar, m2), m2), IVec{Int(1)}, m2);
    auto [c, d] = mdivmod_monic(mmul(gh.s, b, m2), hstar, m2);
    IVec sstar = msub(gh.s, d, m2);
    IVec tstar = msub(msub(gh.t, mmul(gh.t, b, m2), m2), mmul(c, gstar, m2), m2);
    return {gstar, hstar, sstar, tstar};
}

// lift the list of pairwise-coprime monic factors of monic f from mod p to mod
// p^(2^j) >= bound; returns the lifted factors and the final modulus
void hensel_tree(const IVec& f, std::vector<IVec>& factors, std::size_t lo, std::size_t hi,
                 const fp::Zp& K, const Int& p, const Int& target, std::vector<IVec>& out) {
    if (hi - lo == 1) {
        out.push_back(f);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    // g = prod of left half mod p, h = prod of right half mod p
    fp::Vec gp{1}, hp{1};
    auto to_fp = [&](const IVec& a) {
        fp::Vec v(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            Int c = a[i];
            mpz_fdiv_r_ui(c.raw(), c.raw(), static_cast<unsigned long>(K.p));
            v[i] = static_cast<fp::u64>(c.to_long());
        }
        fp::trim(v);
        return v;
    };
    for (std::size_t i = lo; i < mid; ++i) gp = fp::mul(K, gp, to_fp(factors[i]));
    for (std::size_t i = mid; i < hi; ++i) hp = fp::mul(K, hp, to_fp(factors[i]));
    // Bezout mod p via extended Euclid
    fp::Vec r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
    while (!fp::is_zero(r1)) {
        auto [q, r] = fp::divmod(K, r0, r1);
        r0 = r1;
        r1 = r;
        auto upd = [&](fp::Vec& a0, fp::Vec& a1) {
            fp::Vec a2 = fp::sub(K, a0, fp::mul(K, q, a1));
            a0 = a1;
            a1 = a2;
        };
        upd(s0, s1);
        upd(t0, t1);
    }
    // r0 = gcd = constant (factors coprime); scale Bezout to make it 1
    fp::u64 inv = K.inv(r0.empty() ? 1 : r0[0]);
    s0 = fp::scale(K, s0, inv);
    t0 = fp::scale(K, t0, inv);
    auto from_fp = [](const fp::Vec& v) {
        IVec a(v.size(), Int(0));
        for (std::size_t i = 0; i < v.size(); ++i) a[i] = Int(static_cast<long>(v[i]));
        return a;
    };
    Pair gh{from_fp(gp), from_fp(hp), from_fp(s0), from_fp(t0)};
    Int m(static_cast<long>(K.p));
    while (m < target) {
        gh = hensel_step(f, gh, m);
        m *= m;
    }
    hensel_tree(gh.g, factors, lo, mid, K, p, target, out);
    hensel_tree(gh.h, factors, mid, hi, K, p, target, out);
}

// ---- Zassenhaus on a primitive squarefree integer polynomial ----

// Factors的 positive-lc primitive irreducible integer factors of G (squarefree,
// primitive, deg >= 1). maxdeg < 0: complete factorization; otherwise only
// factors of degree <= maxdeg are extracted and `rest` keeps the cofactor.
void zassenhaus(IVec G, long maxdeg, std::vector<IVec>& out, IVec& rest) {
    rest = IVec{Int(1)};
    if (ideg(G) == 1) {
        if (maxdeg < 0 || maxdeg >= 1)
            out.push_back(G);
        else
            rest = G;
        return;
    }
    const bool bounded = maxdeg >= 0;
    long cap = bounded ? maxdeg : ideg(G);
    if (cap >= ideg(G)) cap = ideg(G);

    // monicize: Gm(x) = L^(n-1) G(x/L), L = |lc|; factors map back by x -> L x
    Int L = G.back();
    bool neg_lc = L.sign() < 0;
    if (neg_lc)
        for (auto& c : G) c = -c;
    L = G.back();
    long n = ideg(G);
    // Gm(x) = L^(n-1) G(x/L): coefficient i picks up L^(n-1-i), lc becomes 1
    IVec Gm(G);
    {
        Int pw(1);
        for (long i = n - 1; i >= 0; --i) {
            Gm[static_cast<std::size_t>(i)] *= pw;
            pw *= L;
        }
        Gm[static_cast<std::size_t>(n)] = Int(1);
    }

    // prime selection: smallest p >= 3 with lc(G) nonzero mod p and the
    // reduction of Gm squarefree (equivalently p does not divide lc * disc)
    Int pz(3);
    fp::Zp K{3};
    fp::Vec gm_p;
    while (true) {
        K.p = static_cast<fp::u64>(pz.to_long());
        bool ok = true;
        {
            Int lr = L;
            mpz_fdiv_r(lr.raw(), lr.raw(), pz.raw());
            if (lr.is_zero()) ok = false;
        }
        if (ok) {
            gm_p.assign(Gm.size(), 0);
            for (std::size_t i = 0; i < Gm.size(); ++i) {
                Int c = Gm[i];
                mpz_fdiv_r(c.raw(), c.raw(), pz.raw());
                gm_p[i] = static_cast<fp::u64>(c.to_long());
            }
            fp::trim(gm_p);
            if (fp::deg(gm_p) != n) ok = false;
            if (ok) {
                fp::Vec g = fp::gcd(K, gm_p, fp::derivative(K, gm_p));
                if (fp::deg(g) != 0) ok = false;
            }
        }
        if (ok) break;
        mpz_nextprime(pz.raw(), pz.raw());
        if (!pz.fits_slong() || pz.to_long() > (1l << 40))
            throw MathError("factor: no suitable prime found");
    }

    // factor mod p completely
    auto fac = fp::factor_mod_p(K, gm_p, -1);
    std::vector<fp::Vec> mods;
    for (auto& [g, m] : fac.factors) {
        if (m != 1) throw MathError("factor: prime selection failed squarefreeness");
        mods.push_back(fp::monic(K, g));
    }
    if (mods.size() == 1) {
        if (!bounded || n <= maxdeg)
            out.push_back(G);
        else
            rest = G;
        return;
    }

    // lifting bound: factors of degree <= cap of the monic Gm obey
    // |coeff| <= 2^cap * ||Gm||_2; lift to p^(2^j) > 2 * bound
    Int b2 = inorm2_sq(Gm);
    Int bound(1);
    mpz_sqrt(bound.raw(), b2.raw());
    bound += Int(1);
    for (long i = 0; i < cap + 2; ++i) bound *= Int(2);
    Int target = bound * Int(2);

    std::vector<IVec> lifted;
    {
        std::vector<IVec> seed;
        for (auto& mv : mods) {
            IVec a(mv.size(), Int(0));
            for (std::size_t i = 0; i < mv.size(); ++i) a[i] = Int(static_cast<long>(mv[i]));
            seed.push_back(std::move(a));
        }
        Int m(static_cast<long>(K.p));
        while (m < target) m *= m;
        IVec gm_mod = mreduce(Gm, m);
        hensel_tree(gm_mod, seed, 0, seed.size(), K, pz, target, lifted);
    }
    Int modulus(static_cast<long>(K.p));
    while (modulus < target) modulus *= modulus;

    // subset recombination, ascending total degree then lexicographic on indices
    std::vector<int> alive(lifted.size(), 1);
    IVec current = Gm;  // remaining monic part (of Gm)
    std::vector<IVec> found_monic;

    auto try_subsets = [&]() {
        // enumerate subsets of alive indices by ascending degree sum
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (alive[i]) idx.push_back(i);
        long alive_deg = 0;
        for (auto i : idx) alive_deg += ideg(lifted[i]);
        for (long dsum = 1; dsum <= std::min(cap, alive_deg); ++dsum) {
            // combinations via recursion
            std::vector<std::size_t> chosen;
            std::function<bool(std::size_t, long)> rec = [&](std::size_t start, long remaining) -> bool {
                if (remaining == 0) {
                    // candidate product
                    IVec cand{Int(1)};
                    for (auto i : chosen) cand = mmul(cand, lifted[i], modulus);
                    cand = balanced(std::move(cand), modulus);
                    IVec q;
                    if (idivmod_exact(current, cand, q)) {
                        found_monic.push_back(cand);
                        for (auto i : chosen) alive[i] = 0;
                        current = q;
                        return true;
                    }
                    return false;
                }
                for (std::size_t k = start; k < idx.size(); ++k) {
                    if (!alive[idx[k]]) continue;
                    long dk = ideg(lifted[idx[k]]);
                    if (dk > remaining) continue;
                    chosen.push_back(idx[k]);
                    if (rec(k + 1, remaining - dk)) {
                        // restart enumeration entirely after a hit
                        chosen.pop_back();
                        return true;
                    }
                    chosen.pop_back();
                }
                return false;
            };
            if (rec(0, dsum)) return true;  // found one; caller restarts
        }
        return false;
    };
    while (try_subsets()) {
        // keep extracting until no subset of degree <= cap divides
    }
    if (!bounded && ideg(current) > 0) {
        // remainder is irreducible (no subset up to its half degree divided)
        found_monic.push_back(current);
        current = IVec{Int(1)};
    }

    // map the monic factors of Gm back to primitive factors of G
    for (auto& h : found_monic) {
        IVec f(h);
        Int pw(1);
        for (std::size_t i = f.size() - 1; i-- > 0;) {
            pw *= L;
            f[i] *= pw;
        }
        Int c = icontent(f);
        if (f.back().sign() < 0) c = -c;
        out.push_back(iscale_div(f, c));
    }
    if (ideg(current) > 0) {
        IVec f(current);
        Int pw(1);
        for (std::size_t i = f.size() - 1; i-- > 0;) {
            pw *= L;
            f[i] *= pw;
        }
        Int c = icontent(f);
        if (f.back().sign() < 0) c = -c;
        rest = iscale_div(f, c);
    }
}

PolyQ ivec_to_polyq(const IVec& a) {
    std::vector<Rational> c;
    c.reserve(a.size());
    for (const auto& x : a) c.emplace_back(x, Int(1));
    return PolyQ(std::move(c));
}

// clear denominators: returns primitive positive-lc integer poly
IVec polyq_to_ivec_primitive(const PolyQ& p) {
    Int den(1);
    for (const auto& c : p.coeffs()) {
        Int d = c.denominator();
        den = exact_div(den * d, gcd(den, d));
    }
    IVec a;
    a.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rational s = c * Rational(den);
        a.push_back(s.numerator());
    }
    Int cont = icontent(a);
    if (a.back().sign() < 0) cont = -cont;
    return iscale_div(a, cont);
}

}  // namespace

FactorList factor_rationals(const PolyQ& p) {
    if (p.is_zero()) throw MathError("factorization of the zero polynomial");
    FactorList out;
    out.unit = p.lc();
    if (p.degree() == 0) return out;

    std::map<long, std::vector<IVec>> grouped;
    for (auto& [part, mult] : squarefree_decompose(p)) {
        IVec g = polyq_to_ivec_primitive(part);
        std::vector<IVec> irr;
        IVec rest;
        zassenhaus(g, -1, irr, rest);
        for (auto& f : irr) grouped[mult].push_back(std::move(f));
    }
    for (auto& [mult, polys] : grouped)
        for (auto& f : polys) out.factors.emplace_back(monic(ivec_to_polyq(f)), mult);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (long i = 0; i <= a.first.degree(); ++i) {
            const auto& x = a.first[static_cast<std::size_t>(i)];
            const auto& y = b.first[static_cast<std::size_t>(i)];
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

BoundedFactors factor_up_to_degree(const PolyQ& p, long maxdeg) {
    if (p.is_zero()) throw MathError("factorization of the zero polynomial");
    BoundedFactors out;
    out.unit = p.lc();
    out.remainder = p.is_zero() ? PolyQ() : one_like(p);
    if (p.degree() == 0) return out;

    PolyQ rem_acc = one_like(p);
    for (auto& [part, mult] : squarefree_decompose(p)) {
        IVec g = polyq_to_ivec_primitive(part);
        std::vector<IVec> irr;
        IVec rest;
        zassenhaus(g, maxdeg, irr, rest);
        for (auto& f : irr) out.factors.emplace_back(monic(ivec_to_polyq(f)), mult);
        if (ideg(rest) > 0) rem_acc *= pow(monic(ivec_to_polyq(rest)), static_cast<unsigned long>(mult));
    }
    out.remainder = rem_acc;
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (long i = 0; i <= a.first.degree(); ++i) {
            const auto& x = a.first[static_cast<std::size_t>(i)];
            const auto& y = b.first[static_cast<std::size_t>(i)];
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

}  // namespace plab
