#ifndef PARTPAT_PRECURSIVE_HPP
#define PARTPAT_PRECURSIVE_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "partpat/errors.hpp"

namespace partpat {

// Dense polynomial with integer coefficients, stored in ascending degree
// order with the trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(int i) const;

    mpz_class eval(const mpz_class& x) const;

    std::string to_string(const std::string& var = "n") const;

    bool operator==(const IntPoly&) const = default;

private:
    std::vector<mpz_class> coeffs_;
};

// A linear recurrence sum_{i=0..k} P_i(n) * a_{n+i} = 0 with polynomial
// coefficients, required to hold for every n >= 0.  Normal form: the
// coefficient content is 1, trailing zero polynomials are trimmed, and the
// leading polynomial has a positive leading coefficient.
class PRecurrence {
public:
    explicit PRecurrence(std::vector<IntPoly> polynomials);

    int order() const { return static_cast<int>(polynomials_.size()) - 1; }
    int degree() const;   // max over the coefficient polynomials
    const std::vector<IntPoly>& polynomials() const { return polynomials_; }

    std::string to_string() const;

    bool operator==(const PRecurrence&) const = default;

private:
    std::vector<IntPoly> polynomials_;
};

struct GuessReport {
    std::size_t sequence_length = 0;
    int max_order = 0;
    int max_degree = 0;
    bool found = false;
    std::optional<PRecurrence> recurrence;
    int cell_order = -1;       // the (order, degree) cell that produced the hit
    int cell_degree = -1;
    int kernel_dimension = 0;  // of that cell's linear system
    int held_out_terms = 3;
};

// Searches cells (k, d) for k = 0..max_order, d = 0..max_degree in
// lexicographic order, fitting a homogeneous linear system over the exact
// rationals on all but the last three terms and validating candidates on the
// equations touching those held-out terms.  Requires
// terms.size() >= (max_order+1)*(max_degree+1) + max_order + 3; throws
// std::invalid_argument naming the requirement otherwise.
GuessReport guess(const std::vector<mpz_class>& terms, int max_order, int max_degree);

// Index of the first n at which the recurrence fails on the terms, if any.
// A window too short to check anything (terms.size() <= order) passes
// vacuously.
std::optional<std::size_t> first_violation(const PRecurrence& rec,
                                           const std::vector<mpz_class>& terms);

bool verify(const PRecurrence& rec, const std::vector<mpz_class>& terms);

// Extends the seed to `length` terms by solving for a_{n+k}.  The seed must
// hold at least order() terms.  Throws SingularIndexError when the leading
// polynomial vanishes at a needed index and IntegrityError when a step does
// not divide exactly.
std::vector<mpz_class> extend(const PRecurrence& rec, std::vector<mpz_class> seed,
                              std::size_t length);

namespace detail {

// Basis of the right kernel of the matrix, from the reduced row echelon
// form; one vector per free column, in column order.
std::vector<std::vector<mpq_class>> rational_nullspace(std::vector<std::vector<mpq_class>> rows,
                                                       std::size_t columns);

} // namespace detail

} // namespace partpat

#endif
