#include "partpat/precursive.hpp"

#include <algorithm>
#include <sstream>

namespace partpat {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0 || mag != 1) out << mag.get_str();
        if (d > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

PRecurrence::PRecurrence(std::vector<IntPoly> polynomials) : polynomials_(std::move(polynomials)) {
    while (!polynomials_.empty() && polynomials_.back().is_zero()) polynomials_.pop_back();
    if (polynomials_.empty())
        throw std::invalid_argument("recurrence needs a nonzero coefficient polynomial");
    // content 1, positive leading coefficient of the leading polynomial
    mpz_class content = 0;
    for (const auto& p : polynomials_)
        for (const auto& c : p.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    bool negate = polynomials_.back().coeffs().back() < 0;
    if (content != 1 || negate) {
        if (negate) content = -content;
        std::vector<IntPoly> scaled;
        scaled.reserve(polynomials_.size());
        for (const auto& p : polynomials_) {
            std::vector<mpz_class> c(p.coeffs());
            for (auto& v : c) v /= content;
            scaled.emplace_back(std::move(c));
        }
        polynomials_ = std::move(scaled);
    }
}

int PRecurrence::degree() const {
    int d = 0;
    for (const auto& p : polynomials_) d = std::max(d, p.degree());
    return d;
}

std::string PRecurrence::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < polynomials_.size(); ++i) {
        const IntPoly& p = polynomials_[i];
        if (p.is_zero()) continue;
        if (out.tellp() > 0) out << " + ";
        if (p.degree() == 0 && p.coeff(0) == 1) {
            out << "a(n" << (i ? "+" + std::to_string(i) : "") << ")";
        } else {
            out << "(" << p.to_string() << ")*a(n" << (i ? "+" + std::to_string(i) : "") << ")";
        }
    }
    out << " = 0";
    return out.str();
}

namespace detail {

std::vector<std::vector<mpq_class>> rational_nullspace(std::vector<std::vector<mpq_class>> rows,
                                                       std::size_t columns) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < columns && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        mpq_class inv = rows[r][col];
        for (std::size_t j = col; j < columns; ++j) rows[r][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            mpq_class f = rows[i][col];
            for (std::size_t j = col; j < columns; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<char> is_pivot(columns, 0);
    for (std::size_t c : pivot_cols) is_pivot[c] = 1;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t free_col = 0; free_col < columns; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<mpq_class> v(columns, mpq_class(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -rows[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

namespace {

// Clears denominators and builds the coefficient polynomials for a cell of
// shape (order k, degree d); layout of v is i*(d+1)+j for coefficient j of
// P_i.
PRecurrence recurrence_from_vector(const std::vector<mpq_class>& v, int k, int d) {
    mpz_class common = 1;
    for (const auto& q : v) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q.get_den_mpz_t());
    std::vector<IntPoly> polys;
    polys.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        std::vector<mpz_class> coeffs;
        coeffs.reserve(static_cast<std::size_t>(d) + 1);
        for (int j = 0; j <= d; ++j) {
            const mpq_class& q = v[static_cast<std::size_t>(i * (d + 1) + j)];
            coeffs.push_back(mpz_class(q.get_num() * (common / q.get_den())));
        }
        polys.emplace_back(std::move(coeffs));
    }
    return PRecurrence(std::move(polys));
}

bool holds_at(const PRecurrence& rec, const std::vector<mpz_class>& terms, std::size_t n) {
    mpz_class acc = 0;
    const auto& polys = rec.polynomials();
    for (std::size_t i = 0; i < polys.size(); ++i)
        acc += polys[i].eval(static_cast<long>(n)) * terms[n + i];
    return acc == 0;
}

std::vector<std::size_t> support_of(const std::vector<mpq_class>& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

} // namespace

GuessReport guess(const std::vector<mpz_class>& terms, int max_order, int max_degree) {
    if (max_order < 0 || max_degree < 0)
        throw std::invalid_argument("guess: bounds must be >= 0");
    GuessReport report;
    report.sequence_length = terms.size();
    report.max_order = max_order;
    report.max_degree = max_degree;
    const std::size_t required =
        static_cast<std::size_t>(max_order + 1) * static_cast<std::size_t>(max_degree + 1) +
        static_cast<std::size_t>(max_order) + 3;
    if (terms.size() < required)
        throw std::invalid_argument("guess: need at least " + std::to_string(required) +
                                    " terms for these bounds, got " +
                                    std::to_string(terms.size()));

    for (int k = 0; k <= max_order; ++k) {
        // equations with n past fit_rows touch the last three terms and are
        // reserved for validation
        const std::size_t fit_rows = terms.size() - 3 - static_cast<std::size_t>(k);
        for (int d = 0; d <= max_degree; ++d) {
            const std::size_t columns =
                static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(d + 1);
            std::vector<std::vector<mpq_class>> rows;
            rows.reserve(fit_rows);
            for (std::size_t n = 0; n < fit_rows; ++n) {
                std::vector<mpq_class> row;
                row.reserve(columns);
                mpz_class npow = 1;
                std::vector<mpz_class> powers;
                powers.reserve(static_cast<std::size_t>(d) + 1);
                for (int j = 0; j <= d; ++j) {
                    powers.push_back(npow);
                    npow *= static_cast<long>(n);
                }
                for (int i = 0; i <= k; ++i)
                    for (int j = 0; j <= d; ++j)
                        row.emplace_back(terms[n + static_cast<std::size_t>(i)] *
                                         powers[static_cast<std::size_t>(j)]);
                rows.push_back(std::move(row));
            }
            auto basis = detail::rational_nullspace(std::move(rows), columns);
            if (basis.empty()) continue;

            std::vector<std::size_t> order(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return support_of(basis[a]) < support_of(basis[b]);
            });
            for (std::size_t idx : order) {
                PRecurrence candidate = recurrence_from_vector(basis[idx], k, d);
                bool ok = true;
                for (std::size_t n = fit_rows; n < fit_rows + 3; ++n) {
                    if (n + static_cast<std::size_t>(k) >= terms.size() || !holds_at(candidate, terms, n)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    report.found = true;
                    report.recurrence = std::move(candidate);
                    report.cell_order = k;
                    report.cell_degree = d;
                    report.kernel_dimension = static_cast<int>(basis.size());
                    return report;
                }
            }
        }
    }
    return report;
}

std::optional<std::size_t> first_violation(const PRecurrence& rec,
                                           const std::vector<mpz_class>& terms) {
    const std::size_t k = static_cast<std::size_t>(rec.order());
    if (terms.size() <= k) return std::nullopt;
    for (std::size_t n = 0; n + k < terms.size(); ++n)
        if (!holds_at(rec, terms, n)) return n;
    return std::nullopt;
}

bool verify(const PRecurrence& rec, const std::vector<mpz_class>& terms) {
    return !first_violation(rec, terms).has_value();
}

std::vector<mpz_class> extend(const PRecurrence& rec, std::vector<mpz_class> seed,
                              std::size_t length) {
    const std::size_t k = static_cast<std::size_t>(rec.order());
    if (seed.size() < k)
        throw std::invalid_argument("extend: seed must hold at least " + std::to_string(k) +
                                    " terms");
    const auto& polys = rec.polynomials();
    while (seed.size() < length) {
        const std::size_t n = seed.size() - k;   // index in the recurrence
        mpz_class lead = polys[k].eval(static_cast<long>(n));
        if (lead == 0)
            throw SingularIndexError("leading polynomial vanishes at n = " + std::to_string(n),
                                     static_cast<long>(n));
        mpz_class acc = 0;
        for (std::size_t i = 0; i < k; ++i)
            acc += polys[i].eval(static_cast<long>(n)) * seed[n + i];
        acc = -acc;
        mpz_class quotient, remainder;
        mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), acc.get_mpz_t(),
                    lead.get_mpz_t());
        if (remainder != 0)
            throw IntegrityError("recurrence step at n = " + std::to_string(n) +
                                     " does not divide exactly",
                                 static_cast<long>(n));
        seed.push_back(std::move(quotient));
    }
    return seed;
}

} // namespace partpat
