#include "qchart/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qchart {

namespace {

void check_same_shape(const SparseOperator& a, const SparseOperator& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("operator shapes differ");
}

}  // namespace

SparseOperator::SparseOperator(std::size_t rows, std::size_t cols, std::string label)
    : rows_(rows), cols_(cols), columns_(cols), label_(std::move(label)) {}

SparseOperator SparseOperator::identity(std::size_t dim, std::string label) {
    SparseOperator out(dim, dim, std::move(label));
    for (std::size_t i = 0; i < dim; ++i) out.add_entry(i, i, 1.0);
    return out;
}

SparseOperator SparseOperator::diagonal(std::vector<Complex> d, std::string label) {
    SparseOperator out(d.size(), d.size(), std::move(label));
    for (std::size_t i = 0; i < d.size(); ++i) out.add_entry(i, i, d[i]);
    return out;
}

const std::vector<SparseOperator::Entry>& SparseOperator::column(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("column out of range");
    return columns_[c];
}

void SparseOperator::add_entry(std::size_t row, std::size_t col, Complex v) {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("entry out of range");
    if (v == Complex{0.0, 0.0}) return;
    auto& column = columns_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != column.end() && it->row == row) {
        it->coef += v;
        if (it->coef == Complex{0.0, 0.0}) column.erase(it);
    } else {
        column.insert(it, Entry{row, v});
    }
}

std::vector<Complex> SparseOperator::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Complex> out(rows_, Complex{0.0, 0.0});
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == Complex{0.0, 0.0}) continue;
        for (const auto& e : columns_[c]) out[e.row] += e.coef * v[c];
    }
    return out;
}

std::size_t SparseOperator::entry_count() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
}

Complex SparseOperator::entry(std::size_t row, std::size_t col) const {
    for (const auto& e : column(col))
        if (e.row == row) return e.coef;
    return {0.0, 0.0};
}

bool SparseOperator::same_entries(const SparseOperator& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t c = 0; c < cols_; ++c) {
        const auto& a = columns_[c];
        const auto& b = other.columns_[c];
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].row != b[i].row || a[i].coef != b[i].coef) return false;
    }
    return true;
}

SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("inner dimensions differ");
    SparseOperator out(a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::map<std::size_t, Complex> acc;
        for (const auto& eb : b.column(c))
            for (const auto& ea : a.column(eb.row)) acc[ea.row] += ea.coef * eb.coef;
        for (const auto& [row, v] : acc) out.add_entry(row, c, v);
    }
    return out;
}

SparseOperator add(const SparseOperator& a, const SparseOperator& b, Complex wa, Complex wb) {
    check_same_shape(a, b);
    SparseOperator out(a.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (const auto& e : a.column(c)) out.add_entry(e.row, c, wa * e.coef);
        for (const auto& e : b.column(c)) out.add_entry(e.row, c, wb * e.coef);
    }
    return out;
}

SparseOperator scale(const SparseOperator& a, Complex w) {
    SparseOperator out(a.rows(), a.cols(), a.label());
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (const auto& e : a.column(c)) out.add_entry(e.row, c, w * e.coef);
    return out;
}

SparseOperator adjoint(const SparseOperator& a) {
    SparseOperator out(a.cols(), a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (const auto& e : a.column(c)) out.add_entry(c, e.row, std::conj(e.coef));
    return out;
}

double relation_residual(const SparseOperator& lhs, const SparseOperator& rhs,
                         std::span<const std::size_t> domain) {
    check_same_shape(lhs, rhs);
    if (domain.empty()) throw std::invalid_argument("empty residual domain");
    double worst = 0.0;
    for (std::size_t c : domain) {
        if (c >= lhs.cols()) throw std::out_of_range("domain column out of range");
        std::map<std::size_t, Complex> diff;
        double rhs_sq = 0.0;
        for (const auto& e : lhs.column(c)) diff[e.row] += e.coef;
        for (const auto& e : rhs.column(c)) {
            diff[e.row] -= e.coef;
            rhs_sq += std::norm(e.coef);
        }
        double diff_sq = 0.0;
        for (const auto& [row, v] : diff) diff_sq += std::norm(v);
        worst = std::max(worst, std::sqrt(diff_sq) / std::max(1.0, std::sqrt(rhs_sq)));
    }
    return worst;
}

double entrywise_residual(const SparseOperator& a, const SparseOperator& b,
                          std::span<const std::size_t> domain) {
    check_same_shape(a, b);
    if (domain.empty()) throw std::invalid_argument("empty residual domain");
    double worst = 0.0;
    for (std::size_t c : domain) {
        if (c >= a.cols()) throw std::out_of_range("domain column out of range");
        std::map<std::size_t, std::pair<Complex, Complex>> merged;
        for (const auto& e : a.column(c)) merged[e.row].first = e.coef;
        for (const auto& e : b.column(c)) merged[e.row].second = e.coef;
        for (const auto& [row, pair] : merged) {
            const double den = std::max({1.0, std::abs(pair.first), std::abs(pair.second)});
            worst = std::max(worst, std::abs(pair.first - pair.second) / den);
        }
    }
    return worst;
}

}  // namespace qchart
