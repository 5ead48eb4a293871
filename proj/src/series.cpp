#include "partpat/series.hpp"

#include <stdexcept>

namespace partpat {

namespace {

mpq_class inverse_factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    mpq_class q(1, f);
    q.canonicalize();
    return q;
}

} // namespace

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, mpq_class(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<mpq_class> coeffs) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    if (coeffs.size() > static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("more coefficients than the order admits");
    coeffs_ = std::move(coeffs);
    coeffs_.resize(static_cast<std::size_t>(order) + 1, mpq_class(0));
    for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::constant(int order, const mpq_class& value) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    s.coeffs_[0].canonicalize();
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, const mpq_class& value) {
    if (degree < 0 || degree > order)
        throw std::invalid_argument("monomial degree outside the truncation order");
    TruncatedSeries s(order);
    s.coeffs_[static_cast<std::size_t>(degree)] = value;
    s.coeffs_[static_cast<std::size_t>(degree)].canonicalize();
    return s;
}

const mpq_class& TruncatedSeries::coeff(int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(i)];
}

void TruncatedSeries::require_same_order(const TruncatedSeries& rhs) const {
    if (order() != rhs.order())
        throw std::invalid_argument("series orders differ: " + std::to_string(order()) +
                                    " vs " + std::to_string(rhs.order()));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    require_same_order(rhs);
    TruncatedSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    require_same_order(rhs);
    TruncatedSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    require_same_order(rhs);
    TruncatedSeries out(order());
    const int N = order();
    for (int i = 0; i <= N; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (rhs.coeffs_[static_cast<std::size_t>(j)] == 0) continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * rhs.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const mpq_class& factor) const {
    mpq_class f = factor;
    f.canonicalize();
    TruncatedSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * f;
    return out;
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("series exponent must be >= 0");
    TruncatedSeries result = constant(order(), 1);
    for (int i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (coeffs_[0] != 0)
        throw std::domain_error("exp requires a zero constant term");
    const int N = order();
    TruncatedSeries out(N);
    out.coeffs_[0] = 1;
    for (int n = 1; n <= N; ++n) {
        mpq_class acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += k * coeffs_[static_cast<std::size_t>(k)] *
                   out.coeffs_[static_cast<std::size_t>(n - k)];
        out.coeffs_[static_cast<std::size_t>(n)] = acc / n;
    }
    return out;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    require_same_order(inner);
    if (inner.coeffs_[0] != 0)
        throw std::domain_error("composition requires a zero inner constant term");
    const int N = order();
    TruncatedSeries result = constant(N, coeffs_[static_cast<std::size_t>(N)]);
    for (int i = N - 1; i >= 0; --i) {
        result = result * inner;
        result.coeffs_[0] += coeffs_[static_cast<std::size_t>(i)];
    }
    return result;
}

TruncatedSeries TruncatedSeries::truncated(int lower_order) const {
    if (lower_order < 0 || lower_order > order())
        throw std::invalid_argument("truncation order out of range");
    std::vector<mpq_class> head(coeffs_.begin(), coeffs_.begin() + lower_order + 1);
    return TruncatedSeries(lower_order, std::move(head));
}

TruncatedSeries egf_for_sizes(const SizeSet& sizes, int order) {
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(order) + 1, mpq_class(0));
    for (int i = 1; i <= order; ++i)
        if (sizes.contains(i)) coeffs[static_cast<std::size_t>(i)] = inverse_factorial(i);
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries partial_exp(int m, int order) {
    if (m < 0) throw std::invalid_argument("partial_exp: m must be >= 0");
    std::vector<mpq_class> coeffs;
    int top = std::min(m, order);
    coeffs.reserve(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) coeffs.push_back(inverse_factorial(i));
    return TruncatedSeries(order, std::move(coeffs));
}

std::vector<mpz_class> egf_counts(const TruncatedSeries& series) {
    std::vector<mpz_class> counts;
    counts.reserve(static_cast<std::size_t>(series.order()) + 1);
    mpz_class fact = 1;
    for (int n = 0; n <= series.order(); ++n) {
        if (n > 0) fact *= n;
        mpq_class scaled = series.coeff(n) * fact;
        if (scaled.get_den() != 1)
            throw IntegrityError("coefficient " + std::to_string(n) +
                                     " times " + std::to_string(n) + "! is not an integer",
                                 n);
        counts.push_back(scaled.get_num());
    }
    return counts;
}

} // namespace partpat
