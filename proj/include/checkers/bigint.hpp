#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <utility>

namespace checkers {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// value * 2^e2 as a double; stays finite far beyond the range of plain casts.
double ldexp_big(const BigInt& value, long long e2);

BigInt binomial(unsigned long n, unsigned long k);

// sign as -1/0/+1
int sgn(const BigInt& v);

// compare |a| with |b|: -1/0/+1, no temporaries
int cmp_abs(const BigInt& a, const BigInt& b);

// Element of Z[i]; the exact value domain of the unnormalized path sum
// when m*eps = 1 (all path weights are powers of -i).
struct GaussianInt {
    BigInt re;
    BigInt im;

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long long r, long long i) : re(r), im(i) {}

    bool operator==(const GaussianInt&) const = default;
    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    // multiply by -i: (re, im) -> (im, -re)
    GaussianInt times_minus_i() const { return GaussianInt(im, -re); }

    bool is_zero() const { return re == 0 && im == 0; }
    std::string str() const;  // "a", "bi", or "a+bi" / "a-bi"
};

GaussianInt operator+(GaussianInt a, const GaussianInt& b);

}  // namespace checkers
