#ifndef PLAB_RATIONAL_HPP
#define PLAB_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "plab/errors.hpp"

namespace plab {

// Arbitrary-precision integer, thin RAII wrapper over mpz_t.
class Int {
  public:
    Int() { mpz_init(v_); }
    Int(long n) { mpz_init_set_si(v_, n); }  // NOLINT: implicit by design
    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw MathError("bad integer literal: " + s);
        }
    }
    ~Int() { mpz_clear(v_); }

    Int& operator=(const Int& o) {
        mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_, 1) == 0; }
    int sign() const { return mpz_sgn(v_); }
    std::size_t bits() const { return mpz_sizeinbase(v_, 2); }
    bool fits_slong() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const { return mpz_get_si(v_); }

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        mpz_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        mpz_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        mpz_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Int operator-(const Int& a) {
        Int r;
        mpz_neg(r.v_, a.v_);
        return r;
    }
    Int& operator+=(const Int& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) >= 0; }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, std::size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

  private:
    mpz_t v_;
};

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.raw(), a.raw(), b.raw());
    return r;
}

inline Int exact_div(const Int& a, const Int& b) {
    if (b.is_zero()) throw DivisionByZero();
    Int q, r;
    mpz_tdiv_qr(q.raw(), r.raw(), a.raw(), b.raw());
    if (!r.is_zero()) throw MathError("inexact integer division");
    return q;
}

inline Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.raw(), a.raw(), e);
    return r;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.raw(), a.raw());
    return r;
}

// Exact rational number. Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
// mpq canonical form enforces exactly this.
class Rational {
  public:
    Rational() { mpq_init(v_); }
    Rational(long n) {  // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero();
        mpq_init(v_);
        mpq_set_si(v_, num, den);
        mpq_canonicalize(v_);
    }
    Rational(const Int& num, const Int& den) {
        if (den.is_zero()) throw DivisionByZero();
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    explicit Rational(const Int& n) {
        mpq_init(v_);
        mpz_set(mpq_numref(v_), n.raw());
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    ~Rational() { mpq_clear(v_); }

    Rational& operator=(const Rational& o) {
        mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_ui(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    Int numerator() const {
        Int r;
        mpz_set(r.raw(), mpq_numref(v_));
        return r;
    }
    Int denominator() const {
        Int r;
        mpz_set(r.raw(), mpq_denref(v_));
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        Rational r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a) {
        Rational r;
        mpq_neg(r.v_, a.v_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    // "a/b" for non-integers, "a" otherwise
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

  private:
    mpq_t v_;
};

inline Rational inverse(const Rational& a) {
    if (a.is_zero()) throw DivisionByZero();
    return Rational(1) / a;
}

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

inline Rational pow(const Rational& a, unsigned long e) {
    Rational r(1), base(a);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const Int& a);
inline std::ostream& operator<<(std::ostream& os, const Rational& a);

// zero_like/one_like: runtime-context constant construction. Fields whose
// constants need context (NFElement) overload these; plain numeric types ignore
// the sample.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Int zero_like(const Int&) { return Int(0); }
inline Int one_like(const Int&) { return Int(1); }

}  // namespace plab

#include <ostream>

namespace plab {
inline std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.str(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }
}  // namespace plab

#endif
