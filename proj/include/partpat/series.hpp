#ifndef PARTPAT_SERIES_HPP
#define PARTPAT_SERIES_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "partpat/errors.hpp"
#include "partpat/size_set.hpp"

namespace partpat {

// A power series with exact rational coefficients, truncated after x^order.
// Arithmetic never changes the truncation order implicitly: binary
// operations require both operands to have the same order and throw
// std::invalid_argument otherwise; use truncated() to lower it explicitly.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);

    // Pads or rejects: coeffs.size() must be at most order+1.  Incoming
    // fractions are canonicalized, so mpq_class(2, 4) is accepted.
    TruncatedSeries(int order, std::vector<mpq_class> coeffs);

    static TruncatedSeries constant(int order, const mpq_class& value);
    static TruncatedSeries monomial(int order, int degree, const mpq_class& value);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& coeff(int i) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-() const;

    TruncatedSeries scaled(const mpq_class& factor) const;
    TruncatedSeries pow(int exponent) const;

    // exp of a series with zero constant term, through the recurrence
    // n*g_n = sum_{k=1..n} k*f_k*g_{n-k} coming from (exp f)' = f'*exp f.
    TruncatedSeries exp() const;

    // Substitution of `inner` (which must have zero constant term) into this
    // series, by Horner evaluation with truncating products.
    TruncatedSeries compose(const TruncatedSeries& inner) const;

    TruncatedSeries truncated(int lower_order) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    void require_same_order(const TruncatedSeries& rhs) const;

    std::vector<mpq_class> coeffs_;   // index i holds [x^i]
};

// Sum of x^i/i! over the sizes i in `sizes` that are at most `order`.
TruncatedSeries egf_for_sizes(const SizeSet& sizes, int order);

// The truncated exponential sum_{i=0..m} x^i/i!, as a series of the given
// order.
TruncatedSeries partial_exp(int m, int order);

// Reads counts off an exponential generating function: n! * [x^n].  Throws
// IntegrityError at the first n where that product is not an integer.
std::vector<mpz_class> egf_counts(const TruncatedSeries& series);

} // namespace partpat

#endif
