#ifndef PLAB_FPPOLY_HPP
#define PLAB_FPPOLY_HPP

#include <cstdint>
#include <vector>

#include "plab/rational.hpp"

// Machine-word arithmetic mod word-size primes: dense F_p[x], NTT-backed
// multiplication for transform-friendly primes, distinct/equal-degree
// factorization. Backs the Zassenhaus mod-p stage, the CRT construction of
// large dynatomic polynomials, and the modular witness-candidate harvest.
namespace plab::fp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Zp {
    u64 p;
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % p); }
    u64 neg(u64 a) const { return a ? p - a : 0; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }  // p prime
};

using Vec = std::vector<u64>;  // coefficients, lowest first, trimmed

long deg(const Vec& a);
void trim(Vec& a);
bool is_zero(const Vec& a);
Vec add(const Zp& K, const Vec& a, const Vec& b);
Vec sub(const Zp& K, const Vec& a, const Vec& b);
Vec scale(const Zp& K, const Vec& a, u64 s);
Vec mul(const Zp& K, const Vec& a, const Vec& b);  // schoolbook
Vec mul_ntt_aware(const Zp& K, const Vec& a, const Vec& b);
// divides by b (any lc); returns {q, r}
std::pair<Vec, Vec> divmod(const Zp& K, const Vec& a, const Vec& b);
Vec rem(const Zp& K, const Vec& a, const Vec& b);
Vec gcd(const Zp& K, Vec a, Vec b);  // monic
Vec monic(const Zp& K, const Vec& a);
Vec derivative(const Zp& K, const Vec& a);
u64 eval(const Zp& K, const Vec& a, u64 x);
// x^e mod f, e given as a GMP integer (huge exponents in equal-degree splitting)
Vec pow_x_mod(const Zp& K, const Int& e, const Vec& f);
Vec pow_mod(const Zp& K, Vec base, const Int& e, const Vec& f);

// NTT support. Primes are found deterministically: descending from 2^62 with
// the requested 2-adicity of p-1 and smallest primitive root.
struct NttPrime {
    u64 p;
    u64 root;     // primitive root
    int log2cap;  // transforms up to length 2^log2cap
};
std::vector<NttPrime> ntt_primes(std::size_t count, int min_log2cap);

// in-place NTT of size 2^k (length of a); dir=false for inverse
void ntt(const NttPrime& P, std::vector<u64>& a, bool inverse);
Vec mul_ntt(const NttPrime& P, const Vec& a, const Vec& b);

// Factorization mod p. Returns monic irreducible factors with multiplicity,
// only those of degree <= maxdeg (maxdeg < 0 means all), plus the product of
// the remaining factors as `cofactor` (monic; 1 when fully factored).
struct PartialFactorsP {
    std::vector<std::pair<Vec, long>> factors;
    Vec cofactor;
};
PartialFactorsP factor_mod_p(const Zp& K, const Vec& f, long maxdeg);

}  // namespace plab::fp

#endif
