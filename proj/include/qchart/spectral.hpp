#ifndef QCHART_SPECTRAL_HPP
#define QCHART_SPECTRAL_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "qchart/params.hpp"

namespace qchart {

using Complex = std::complex<double>;

/// A function on the spectrum {q^m : m >= 0} u {0}, stored as the samples
/// f(q^m) for m < size() together with the value at the accumulation point 0.
/// derivative_at_zero is present exactly when the function is known to be
/// differentiable at 0; operations propagate it when both inputs carry it.
struct SpectralFunction {
    std::vector<Complex> samples;  // samples[m] = f(q^m)
    Complex value_at_zero{0.0, 0.0};
    std::optional<Complex> derivative_at_zero;

    int size() const { return static_cast<int>(samples.size()); }
    bool is_c1() const { return derivative_at_zero.has_value(); }
    Complex at(int m) const;  // bounds-checked; throws std::out_of_range
    double sup_norm() const;  // max sampled magnitude
    bool is_zero() const;     // all samples and the value at 0 exactly zero

    /// Samples of x -> f(q^j x); the value at 0 is unchanged, a derivative
    /// picks up q^j.  Requires j >= 0.
    SpectralFunction precompose_shift(int j, double q) const;

    static SpectralFunction constant(Complex c, int count);
    static SpectralFunction point_mass(int m, int count);  // indicator of q^m
    static SpectralFunction from_function(const std::function<Complex(double)>& f,
                                          int count, double q);
};

SpectralFunction conj(const SpectralFunction& f);
SpectralFunction add(const SpectralFunction& f, const SpectralFunction& g,
                     Complex wf = 1.0, Complex wg = 1.0);
SpectralFunction multiply(const SpectralFunction& f, const SpectralFunction& g);
SpectralFunction scale(const SpectralFunction& f, Complex w);

/// Evaluate at a spectrum point.  0 maps to value_at_zero; otherwise the
/// point must sit on some q^m within relative tolerance p.tol on the log
/// scale, with m inside the sampled range.
Complex spectral_eval(const SpectralFunction& f, double point, const ChartParams& p);

}  // namespace qchart

#endif
