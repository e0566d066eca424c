#include "qchart/disc_ops.hpp"

#include <cmath>
#include <string>

namespace qchart {

double ladder_up_coef(double q, int m) { return std::sqrt(1.0 - pow_int(q, 2 * (m + 1))); }
double ladder_down_coef(double q, int m) { return std::sqrt(1.0 - pow_int(q, 2 * m)); }

namespace {

int pick_dim(const ChartParams& p, int dim) { return dim > 0 ? dim : p.n_max; }

}  // namespace

SparseOperator build_shift(const ChartParams& p, int dim) {
    const int d = pick_dim(p, dim);
    SparseOperator out(d, d, "s");
    for (int n = 0; n + 1 < d; ++n)
        out.add_entry(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n), 1.0);
    return out;
}

SparseOperator build_shift_adjoint(const ChartParams& p, int dim) {
    const int d = pick_dim(p, dim);
    SparseOperator out(d, d, "sstar");
    for (int n = 1; n < d; ++n)
        out.add_entry(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n), 1.0);
    return out;
}

SparseOperator build_projector(int n, const ChartParams& p, int dim) {
    const int d = pick_dim(p, dim);
    SparseOperator out(d, d, "delta(q," + std::to_string(n) + ")");
    if (n >= 0 && n < d)
        out.add_entry(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 1.0);
    return out;
}

SparseOperator build_shift_word(int k, const ChartParams& p, int dim) {
    const int d = pick_dim(p, dim);
    SparseOperator word = SparseOperator::identity(static_cast<std::size_t>(d));
    const SparseOperator step = k >= 0 ? build_shift(p, d) : build_shift_adjoint(p, d);
    for (int i = 0; i < std::abs(k); ++i) word = compose(step, word);
    word.set_label(k >= 0 ? "s^" + std::to_string(k) : "sstar^" + std::to_string(-k));
    return word;
}

SparseOperator build_z_irreducible(const ChartParams& p, int dim) {
    const int d = pick_dim(p, dim);
    SparseOperator out(d, d, "z");
    for (int n = 0; n + 1 < d; ++n)
        out.add_entry(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n),
                      ladder_up_coef(p.q, n));
    return out;
}

SparseOperator build_zstar_irreducible(const ChartParams& p, int dim) {
    const int d = pick_dim(p, dim);
    SparseOperator out(d, d, "zstar");
    for (int n = 1; n < d; ++n)
        out.add_entry(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n),
                      ladder_down_coef(p.q, n));
    return out;
}

SparseOperator build_y_irreducible(const ChartParams& p, int dim) {
    return build_y_power_irreducible(1, p, dim);
}

SparseOperator build_y_power_irreducible(int w, const ChartParams& p, int dim) {
    const int d = pick_dim(p, dim);
    std::vector<Complex> diag(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) diag[static_cast<std::size_t>(n)] = pow_int(p.q, w * n);
    return SparseOperator::diagonal(std::move(diag), "y^" + std::to_string(w));
}

SparseOperator build_z(const ChartParams& p) {
    SparseOperator out(p.disc_dim(), p.disc_dim(), "z");
    for (int n = 0; n < p.n_max; ++n)
        for (int k = 0; k + 1 < p.k_max; ++k)
            out.add_entry(disc_flat(n, k + 1, p), disc_flat(n, k, p), ladder_up_coef(p.q, k));
    return out;
}

SparseOperator build_zstar(const ChartParams& p) {
    SparseOperator out(p.disc_dim(), p.disc_dim(), "zstar");
    for (int n = 0; n < p.n_max; ++n)
        for (int k = 1; k < p.k_max; ++k)
            out.add_entry(disc_flat(n, k - 1, p), disc_flat(n, k, p), ladder_down_coef(p.q, k));
    return out;
}

SparseOperator build_y(const ChartParams& p) { return build_y_power(1, p); }

SparseOperator build_y_power(int w, const ChartParams& p) {
    std::vector<Complex> diag(static_cast<std::size_t>(p.disc_dim()));
    for (int n = 0; n < p.n_max; ++n)
        for (int k = 0; k < p.k_max; ++k) diag[disc_flat(n, k, p)] = pow_int(p.q, w * k);
    return SparseOperator::diagonal(std::move(diag), "y^" + std::to_string(w));
}

SparseOperator build_z_op(const ChartParams& p) {
    const double s = std::pow(p.q, -p.alpha / 2.0);
    SparseOperator out(p.disc_dim(), p.disc_dim(), "z_op");
    for (int n = 1; n < p.n_max; ++n)
        for (int k = 0; k < p.k_max; ++k)
            out.add_entry(disc_flat(n - 1, k, p), disc_flat(n, k, p),
                          s * ladder_down_coef(p.q, n));
    return out;
}

SparseOperator build_zstar_op(const ChartParams& p) {
    const double s = std::pow(p.q, p.alpha / 2.0);
    SparseOperator out(p.disc_dim(), p.disc_dim(), "zstar_op");
    for (int n = 0; n + 1 < p.n_max; ++n)
        for (int k = 0; k < p.k_max; ++k)
            out.add_entry(disc_flat(n + 1, k, p), disc_flat(n, k, p),
                          s * ladder_up_coef(p.q, n));
    return out;
}

SparseOperator build_y_op(const ChartParams& p) {
    std::vector<Complex> diag(static_cast<std::size_t>(p.disc_dim()));
    for (int n = 0; n < p.n_max; ++n)
        for (int k = 0; k < p.k_max; ++k) diag[disc_flat(n, k, p)] = pow_int(p.q, n);
    return SparseOperator::diagonal(std::move(diag), "y_op");
}

SparseOperator build_zeta_op(const ChartParams& p) {
    SparseOperator out(p.disc_dim(), p.disc_dim(), "zeta_op");
    for (int n = 1; n < p.n_max; ++n)
        for (int k = 0; k < p.k_max; ++k)
            out.add_entry(disc_flat(n - 1, k, p), disc_flat(n, k, p),
                          ladder_down_coef(p.q, n));
    return out;
}

SparseOperator build_zetastar_op(const ChartParams& p) {
    SparseOperator out(p.disc_dim(), p.disc_dim(), "zetastar_op");
    for (int n = 0; n + 1 < p.n_max; ++n)
        for (int k = 0; k < p.k_max; ++k)
            out.add_entry(disc_flat(n + 1, k, p), disc_flat(n, k, p),
                          ladder_up_coef(p.q, n));
    return out;
}

}  // namespace qchart
