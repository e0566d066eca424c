#ifndef QCHART_SPARSE_HPP
#define QCHART_SPARSE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qchart {

using Complex = std::complex<double>;

/// Column-ordered sparse matrix over complex doubles.  Columns hold their
/// entries sorted by row; exact zeros are never stored.  All the operators in
/// this project are (sums of) weighted shifts, so columns stay tiny.
class SparseOperator {
public:
    struct Entry {
        std::size_t row;
        Complex coef;
    };

    SparseOperator() = default;
    SparseOperator(std::size_t rows, std::size_t cols, std::string label = {});

    static SparseOperator identity(std::size_t dim, std::string label = "1");
    static SparseOperator diagonal(std::vector<Complex> d, std::string label = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    const std::vector<Entry>& column(std::size_t c) const;
    /// Accumulates into (row, col); dropping the entry again requires the sum
    /// to be exactly zero.
    void add_entry(std::size_t row, std::size_t col, Complex v);

    std::vector<Complex> apply(std::span<const Complex> v) const;
    std::size_t entry_count() const;
    Complex entry(std::size_t row, std::size_t col) const;  // 0 when absent

    /// Structure and values equal bit for bit.
    bool same_entries(const SparseOperator& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
    std::string label_;
};

SparseOperator compose(const SparseOperator& a, const SparseOperator& b);  // a after b
SparseOperator add(const SparseOperator& a, const SparseOperator& b,
                   Complex wa = 1.0, Complex wb = 1.0);
SparseOperator scale(const SparseOperator& a, Complex w);
SparseOperator adjoint(const SparseOperator& a);

/// max over the given columns of |(lhs - rhs) col| / max(1, |rhs col|)
/// (Euclidean column norms).  Throws on shape mismatch or an empty domain:
/// a vacuous maximum would silently pass.
double relation_residual(const SparseOperator& lhs, const SparseOperator& rhs,
                         std::span<const std::size_t> domain);

/// max over entries present in either side, restricted to the given columns,
/// of |a - b| / max(1, |a|, |b|).
double entrywise_residual(const SparseOperator& a, const SparseOperator& b,
                          std::span<const std::size_t> domain);

}  // namespace qchart

#endif
