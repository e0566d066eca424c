#include "qchart/qcalc.hpp"

#include <cmath>
#include <stdexcept>

#include "qchart/disc_ops.hpp"
#include "qchart/su2_ops.hpp"

namespace qchart {

SpectralFunction nabla_q2(const SpectralFunction& f, const ChartParams& p) {
    if (!f.is_c1())
        throw std::invalid_argument("difference quotient at 0 needs a C1 input");
    SpectralFunction out;
    const int count = std::max(0, f.size() - 2);
    out.samples.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) {
        const Complex num = f.samples[static_cast<std::size_t>(m)] -
                            f.samples[static_cast<std::size_t>(m + 2)];
        const double den = pow_int(p.q, m) - pow_int(p.q, m + 2);
        out.samples.push_back(num / den);
    }
    out.value_at_zero = *f.derivative_at_zero;
    return out;
}

namespace {

struct CommutatorSpaces {
    SparseOperator z;      // left multiplication by z on the given space
    SparseOperator zstar;  // left multiplication by z*
    SparseOperator yinv2;  // the diagonal y^{-2}, formed symbolically
};

CommutatorSpaces spaces_for(std::size_t dim, const ChartParams& p) {
    if (dim == static_cast<std::size_t>(p.disc_dim()))
        return {build_z(p), build_zstar(p), build_y_power(-2, p)};
    if (dim == static_cast<std::size_t>(p.chart_dim())) {
        const SparseOperator id = SparseOperator::identity(
            static_cast<std::size_t>(p.circle_dim()), "1");
        return {tensor_with_circle(build_z(p), id, p),
                tensor_with_circle(build_zstar(p), id, p),
                tensor_with_circle(build_y_power(-2, p), id, p)};
    }
    const int d = static_cast<int>(dim);
    return {build_z_irreducible(p, d), build_zstar_irreducible(p, d),
            build_y_power_irreducible(-2, p, d)};
}

SparseOperator twisted_commutator(const SparseOperator& f, bool holomorphic,
                                  const ChartParams& p) {
    if (f.rows() != f.cols())
        throw std::invalid_argument("derivative of a non-square matrix");
    const CommutatorSpaces s = spaces_for(f.cols(), p);
    const SparseOperator& a = holomorphic ? s.zstar : s.z;
    const SparseOperator bracket = add(compose(a, f), compose(f, a), 1.0, -1.0);
    const double c = (holomorphic ? 1.0 : -1.0) / (1.0 - p.q * p.q);
    return scale(compose(s.yinv2, bracket), c);
}

}  // namespace

SparseOperator ddz_commutator(const SparseOperator& f, const ChartParams& p) {
    return twisted_commutator(f, true, p);
}

SparseOperator ddzbar_commutator(const SparseOperator& f, const ChartParams& p) {
    return twisted_commutator(f, false, p);
}

SparseOperator ddz_from_multiplications(const ChartParams& p) {
    const SparseOperator diff = add(build_zstar(p), build_zstar_op(p), 1.0, -1.0);
    return scale(compose(build_y_power(-2, p), diff), 1.0 / (1.0 - p.q * p.q));
}

SparseOperator ddzbar_from_multiplications(const ChartParams& p) {
    const SparseOperator diff = add(build_z(p), build_z_op(p), 1.0, -1.0);
    return scale(compose(build_y_power(-2, p), diff), -1.0 / (1.0 - p.q * p.q));
}

SparseOperator ddz_closed_form(const ChartParams& p) {
    const std::size_t dim = static_cast<std::size_t>(p.disc_dim());
    SparseOperator out(dim, dim, "ddz");
    const double c = 1.0 / (1.0 - p.q * p.q);
    for (int n = 0; n < p.n_max; ++n) {
        for (int k = 0; k < p.k_max; ++k) {
            const std::size_t col = static_cast<std::size_t>(disc_flat(n, k, p));
            if (k > 0)
                out.add_entry(static_cast<std::size_t>(disc_flat(n, k - 1, p)), col,
                              c * pow_int(p.q, 2 - 2 * k) * ladder_down_coef(p.q, k));
            if (n + 1 < p.n_max)
                out.add_entry(static_cast<std::size_t>(disc_flat(n + 1, k, p)), col,
                              -c * pow_int(p.q, -2 * k) * std::pow(p.q, p.alpha / 2.0) *
                                  ladder_up_coef(p.q, n));
        }
    }
    return out;
}

SparseOperator ddzbar_closed_form(const ChartParams& p) {
    const std::size_t dim = static_cast<std::size_t>(p.disc_dim());
    SparseOperator out(dim, dim, "ddzbar");
    const double c = 1.0 / (1.0 - p.q * p.q);
    for (int n = 0; n < p.n_max; ++n) {
        for (int k = 0; k < p.k_max; ++k) {
            const std::size_t col = static_cast<std::size_t>(disc_flat(n, k, p));
            if (k + 1 < p.k_max)
                out.add_entry(static_cast<std::size_t>(disc_flat(n, k + 1, p)), col,
                              -c * pow_int(p.q, -2 * k - 2) * ladder_up_coef(p.q, k));
            if (n > 0)
                out.add_entry(static_cast<std::size_t>(disc_flat(n - 1, k, p)), col,
                              c * pow_int(p.q, -2 * k) * std::pow(p.q, -p.alpha / 2.0) *
                                  ladder_down_coef(p.q, n));
        }
    }
    return out;
}

SparseOperator ddz_closed_form_chart(const ChartParams& p) {
    return tensor_with_circle(
        ddz_closed_form(p),
        SparseOperator::identity(static_cast<std::size_t>(p.circle_dim()), "1"), p);
}

SparseOperator ddzbar_closed_form_chart(const ChartParams& p) {
    return tensor_with_circle(
        ddzbar_closed_form(p),
        SparseOperator::identity(static_cast<std::size_t>(p.circle_dim()), "1"), p);
}

std::vector<EtaTerm> ddz_eta(EtaIndex idx, const ChartParams& p) {
    // ddz eta(n,k) = q^{-2(n+k)}/(1-q^2) (q^2 sqrt(1-q^{2(n+k)}) eta(n,k-1)
    //                 - q^{alpha/2} sqrt(1-q^{2(n+1)}) eta(n+1,k-1))
    const double c = pow_int(p.q, -2 * (idx.n + idx.k)) / (1.0 - p.q * p.q);
    std::vector<EtaTerm> out;
    if (idx.n + idx.k > 0)
        out.push_back({{idx.n, idx.k - 1},
                       c * p.q * p.q * ladder_down_coef(p.q, idx.n + idx.k)});
    out.push_back({{idx.n + 1, idx.k - 1},
                   -c * std::pow(p.q, p.alpha / 2.0) * ladder_up_coef(p.q, idx.n)});
    return out;
}

std::vector<EtaTerm> ddzbar_eta(EtaIndex idx, const ChartParams& p) {
    const double c = pow_int(p.q, -2 * (idx.n + idx.k)) / (1.0 - p.q * p.q);
    std::vector<EtaTerm> out;
    out.push_back({{idx.n, idx.k + 1},
                   -c * pow_int(p.q, -2) * ladder_up_coef(p.q, idx.n + idx.k)});
    if (idx.n > 0)
        out.push_back({{idx.n - 1, idx.k + 1},
                       c * std::pow(p.q, -p.alpha / 2.0) * ladder_down_coef(p.q, idx.n)});
    return out;
}

MonomialTerm ddz_monomial(int n, int k, const ChartParams& p) {
    if (n == 0) return {0.0, 0, k};
    const double coef =
        pow_int(p.q, -2 * (n - 1)) * (1.0 - pow_int(p.q, 2 * n)) / (1.0 - p.q * p.q);
    return {coef, n - 1, k};
}

MonomialTerm ddzbar_monomial(int n, int k, const ChartParams& p) {
    if (k == 0) return {0.0, n, 0};
    const double coef =
        pow_int(p.q, -2 * n) * (1.0 - pow_int(p.q, 2 * k)) / (1.0 - p.q * p.q);
    return {coef, n, k - 1};
}

SparseOperator sigma_conjugate(const SparseOperator& f, double w, const ChartParams& p) {
    if (f.rows() != f.cols())
        throw std::invalid_argument("conjugation of a non-square matrix");
    const std::size_t dim = f.cols();
    std::vector<Complex> left, right;
    left.reserve(dim);
    right.reserve(dim);
    auto push = [&](int exponent) {
        left.push_back(std::pow(p.q, -w * exponent));
        right.push_back(std::pow(p.q, w * exponent));
    };
    if (dim == static_cast<std::size_t>(p.disc_dim())) {
        for (std::size_t j = 0; j < dim; ++j) push(disc_unflat(j, p).second);
    } else if (dim == static_cast<std::size_t>(p.chart_dim())) {
        for (std::size_t j = 0; j < dim; ++j) push(chart_unflat(j, p).k);
    } else {
        for (std::size_t j = 0; j < dim; ++j) push(static_cast<int>(j));
    }
    return compose(SparseOperator::diagonal(left, "y^-w"),
                   compose(f, SparseOperator::diagonal(right, "y^w")));
}

}  // namespace qchart
