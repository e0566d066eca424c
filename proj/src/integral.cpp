#include "qchart/integral.hpp"

#include <cmath>
#include <stdexcept>

#include "qchart/disc_ops.hpp"

namespace qchart {

namespace {

double tail_estimate(double sup, int start, double weight, const ChartParams& p) {
    // Geometric tail of sup * (1-q) * sum_{m >= start} q^(weight m).
    return sup * (1.0 - p.q) * std::pow(p.q, weight * start) /
           (1.0 - std::pow(p.q, weight));
}

}  // namespace

IntegralResult integral_alpha(const DiscElement& a, const ChartParams& p) {
    const SpectralFunction* g0 = a.band(0);
    if (!g0) return {Complex{0.0, 0.0}, 0.0, 0};  // shifted bands have no trace
    const int used = std::min(p.terms, g0->size());
    Complex sum{0.0, 0.0};
    for (int m = 0; m < used; ++m)
        sum += g0->samples[static_cast<std::size_t>(m)] * std::pow(p.q, p.alpha * m);
    return {(1.0 - p.q) * sum, tail_estimate(g0->sup_norm(), used, p.alpha, p), used};
}

IntegralResult integral_alpha_matrix(const SparseOperator& m, const ChartParams& p) {
    if (m.rows() != m.cols()) throw std::invalid_argument("integral needs a square matrix");
    const int dim = static_cast<int>(m.cols());
    const int used = std::min(p.terms, dim);
    Complex sum{0.0, 0.0};
    double sup = 0.0;
    for (int j = 0; j < dim; ++j) {
        const Complex d = m.entry(static_cast<std::size_t>(j), static_cast<std::size_t>(j));
        sup = std::max(sup, std::abs(d));
        if (j < used) sum += d * std::pow(p.q, p.alpha * j);
    }
    return {(1.0 - p.q) * sum, tail_estimate(sup, used, p.alpha, p), used};
}

IntegralResult jackson_integral(const SpectralFunction& f, double weight,
                                const ChartParams& p) {
    // sum f(q^m) (q^m)^weight q^m (1-q): the q-integral of f(x) x^weight dx.
    const int used = std::min(p.terms, f.size());
    Complex sum{0.0, 0.0};
    for (int m = 0; m < used; ++m)
        sum += f.samples[static_cast<std::size_t>(m)] * std::pow(p.q, (weight + 1.0) * m);
    return {(1.0 - p.q) * sum, tail_estimate(f.sup_norm(), used, weight + 1.0, p), used};
}

DiscElement sigma_alpha(const DiscElement& a, int sign, const ChartParams& p) {
    DiscElement out;
    for (const auto& [m, f] : a.bands())
        out.set_band(m, scale(f, std::pow(p.q, -sign * p.alpha * m)));
    return out;
}

Complex inner_product(const DiscElement& f, const DiscElement& g, const ChartParams& p) {
    return integral_alpha(normal_form_product(star(f), g, p), p).value;
}

TraceCheck verify_twisted_trace(const DiscElement& g, const DiscElement& h,
                                const ChartParams& p) {
    const IntegralResult lhs = integral_alpha(normal_form_product(g, h, p), p);
    const IntegralResult rhs =
        integral_alpha(normal_form_product(sigma_alpha(h, +1, p), g, p), p);
    return {lhs.value, rhs.value, lhs.tail_bound + rhs.tail_bound};
}

double TraceCheck::residual() const {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

namespace {

SparseOperator op_of(Generator x, const ChartParams& p) {
    switch (x) {
        case Generator::Z: return build_z_op(p);
        case Generator::Zstar: return build_zstar_op(p);
        case Generator::Y: return build_y_op(p);
        default: throw std::invalid_argument("adjoint check covers z, zstar, y only");
    }
}

}  // namespace

double verify_op_adjoint_matrix(Generator x, const ChartParams& p) {
    // adjoint(x_op) equals the op realization of sigma^{-alpha}(x*): the twist
    // contributes q^{-alpha} for z, q^{+alpha} for zstar, nothing for y.
    SparseOperator lhs = adjoint(op_of(x, p));
    SparseOperator rhs = [&] {
        switch (x) {
            case Generator::Z: return scale(build_zstar_op(p), std::pow(p.q, -p.alpha));
            case Generator::Zstar: return scale(build_z_op(p), std::pow(p.q, p.alpha));
            default: return build_y_op(p);
        }
    }();
    std::vector<std::size_t> cols(p.disc_dim());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return entrywise_residual(lhs, rhs, cols);
}

double verify_op_adjoint_symbolic(Generator x, const ChartParams& p, int grid) {
    const DiscElement xe = encode_generator(x, p);
    const DiscElement xadj = sigma_alpha(star(xe), -1, p);
    std::vector<DiscElement> basis;
    for (int n = 0; n < grid; ++n)
        for (int k = -std::min(n, grid); k < grid; ++k)
            basis.push_back(eta_element({n, k}, p));
    double worst = 0.0;
    for (const DiscElement& f : basis) {
        for (const DiscElement& g : basis) {
            const Complex lhs = inner_product(normal_form_product(f, xe, p), g, p);
            const Complex rhs = inner_product(f, normal_form_product(g, xadj, p), p);
            worst = std::max(worst, std::abs(lhs - rhs) /
                                        std::max({1.0, std::abs(lhs), std::abs(rhs)}));
        }
    }
    return worst;
}

}  // namespace qchart
