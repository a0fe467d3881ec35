#include "checkers/bigint.hpp"

#include <cmath>
#include <limits>

namespace checkers {

double ldexp_big(const BigInt& value, long long e2) {
    if (value == 0) return 0.0;
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, value.backend().data());
    const long long e = e2 + exp;
    if (e > 1100) {
        return mant > 0 ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
    }
    if (e < -1100) return mant > 0 ? 0.0 : -0.0;
    return std::ldexp(mant, static_cast<int>(e));
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

int sgn(const BigInt& v) { return mpz_sgn(v.backend().data()); }

int cmp_abs(const BigInt& a, const BigInt& b) {
    const int c = mpz_cmpabs(a.backend().data(), b.backend().data());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string GaussianInt::str() const {
    if (im == 0) return re.str();
    std::string s;
    if (re != 0) s = re.str();
    if (im > 0 && re != 0) s += "+";
    if (im == -1) {
        s += "-";
    } else if (im != 1) {
        s += im.str();
    }
    s += "i";
    return s;
}

GaussianInt operator+(GaussianInt a, const GaussianInt& b) {
    a += b;
    return a;
}

}  // namespace checkers
