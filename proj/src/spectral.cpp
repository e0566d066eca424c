#include "qchart/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qchart {

Complex SpectralFunction::at(int m) const {
    if (m < 0 || m >= size()) throw std::out_of_range("spectral sample out of range");
    return samples[static_cast<std::size_t>(m)];
}

double SpectralFunction::sup_norm() const {
    double s = 0.0;
    for (const auto& v : samples) s = std::max(s, std::abs(v));
    return s;
}

bool SpectralFunction::is_zero() const {
    if (value_at_zero != Complex{0.0, 0.0}) return false;
    return std::all_of(samples.begin(), samples.end(),
                       [](const Complex& v) { return v == Complex{0.0, 0.0}; });
}

SpectralFunction SpectralFunction::precompose_shift(int j, double q) const {
    if (j < 0) throw std::invalid_argument("shift must be nonnegative");
    SpectralFunction out;
    if (size() > j)
        out.samples.assign(samples.begin() + j, samples.end());
    out.value_at_zero = value_at_zero;
    if (derivative_at_zero) out.derivative_at_zero = pow_int(q, j) * *derivative_at_zero;
    return out;
}

SpectralFunction SpectralFunction::constant(Complex c, int count) {
    SpectralFunction f;
    f.samples.assign(static_cast<std::size_t>(std::max(count, 0)), c);
    f.value_at_zero = c;
    f.derivative_at_zero = Complex{0.0, 0.0};
    return f;
}

SpectralFunction SpectralFunction::point_mass(int m, int count) {
    SpectralFunction f;
    f.samples.assign(static_cast<std::size_t>(std::max(count, 0)), Complex{0.0, 0.0});
    if (m >= 0 && m < count) f.samples[static_cast<std::size_t>(m)] = 1.0;
    f.value_at_zero = 0.0;
    f.derivative_at_zero = Complex{0.0, 0.0};  // vanishes near the accumulation point
    return f;
}

SpectralFunction SpectralFunction::from_function(const std::function<Complex(double)>& f,
                                                 int count, double q) {
    SpectralFunction out;
    out.samples.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int m = 0; m < count; ++m) out.samples.push_back(f(pow_int(q, m)));
    return out;
}

SpectralFunction conj(const SpectralFunction& f) {
    SpectralFunction out = f;
    for (auto& v : out.samples) v = std::conj(v);
    out.value_at_zero = std::conj(f.value_at_zero);
    if (f.derivative_at_zero) out.derivative_at_zero = std::conj(*f.derivative_at_zero);
    return out;
}

SpectralFunction add(const SpectralFunction& f, const SpectralFunction& g,
                     Complex wf, Complex wg) {
    SpectralFunction out;
    const int n = std::min(f.size(), g.size());
    out.samples.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m)
        out.samples.push_back(wf * f.samples[static_cast<std::size_t>(m)] +
                              wg * g.samples[static_cast<std::size_t>(m)]);
    out.value_at_zero = wf * f.value_at_zero + wg * g.value_at_zero;
    if (f.derivative_at_zero && g.derivative_at_zero)
        out.derivative_at_zero = wf * *f.derivative_at_zero + wg * *g.derivative_at_zero;
    return out;
}

SpectralFunction multiply(const SpectralFunction& f, const SpectralFunction& g) {
    SpectralFunction out;
    const int n = std::min(f.size(), g.size());
    out.samples.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m)
        out.samples.push_back(f.samples[static_cast<std::size_t>(m)] *
                              g.samples[static_cast<std::size_t>(m)]);
    out.value_at_zero = f.value_at_zero * g.value_at_zero;
    if (f.derivative_at_zero && g.derivative_at_zero)
        out.derivative_at_zero =
            *f.derivative_at_zero * g.value_at_zero + f.value_at_zero * *g.derivative_at_zero;
    return out;
}

SpectralFunction scale(const SpectralFunction& f, Complex w) {
    SpectralFunction out = f;
    for (auto& v : out.samples) v *= w;
    out.value_at_zero *= w;
    if (out.derivative_at_zero) *out.derivative_at_zero *= w;
    return out;
}

Complex spectral_eval(const SpectralFunction& f, double point, const ChartParams& p) {
    if (point == 0.0) return f.value_at_zero;
    if (point < 0.0) throw std::domain_error("spectrum points are nonnegative");
    const double m_real = std::log(point) / std::log(p.q);
    const double m_round = std::round(m_real);
    if (std::abs(m_real - m_round) > p.tol * std::max(1.0, std::abs(m_real)))
        throw std::domain_error("point is not on the sampled spectrum");
    const int m = static_cast<int>(m_round);
    if (m < 0) throw std::domain_error("point exceeds the spectrum maximum 1");
    if (m >= f.size()) throw std::domain_error("point below the sampled range");
    return f.samples[static_cast<std::size_t>(m)];
}

}  // namespace qchart
