#pragma once

#include <vector>

#include "partlab/bigint.hpp"

namespace partlab {

/* Dense univariate polynomials over Int. This is the exact-division layer
 * behind the Gaussian binomial and multinomial coefficients: quotients of
 * Pochhammer products are computed by long division and a nonzero remainder
 * is reported as an error instead of being truncated away. */
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Int> coeffs);

    static UPoly zero();
    static UPoly one();
    // c * X^e
    static UPoly term(Int c, int e);

    bool isZero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int e) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly operator*(const UPoly& o) const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }

    // Exact quotient; throws std::domain_error if the remainder is nonzero
    // or the divisor's leading coefficient does not divide exactly.
    UPoly exactDivide(const UPoly& divisor) const;

private:
    void normalize();
    std::vector<Int> coeffs_; // coeffs_[e] is the coefficient of X^e
};

// (X; X)_n = prod_{i=1..n} (1 - X^i).
UPoly qFactorialPoly(int n);

// (-X; X)_n = prod_{i=1..n} (1 + X^i).
UPoly negPochhammerPoly(int n);

// X -> X^stride.
UPoly inflatePoly(const UPoly& p, int stride);

// Gaussian binomial [n, k]_X; zero unless n >= k >= 0.
const UPoly& qBinomialPoly(int n, int k);

// [N; n_1,...,n_m]_X; parts must be nonnegative and sum to N.
UPoly qMultinomialPoly(int N, const std::vector<int>& parts);

} // namespace partlab
