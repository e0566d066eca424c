#ifndef QCHART_INTEGRAL_HPP
#define QCHART_INTEGRAL_HPP

#include "qchart/element.hpp"
#include "qchart/params.hpp"
#include "qchart/sparse.hpp"
#include "qchart/spectral.hpp"

namespace qchart {

struct IntegralResult {
    Complex value{0.0, 0.0};
    double tail_bound = 0.0;  // sup|g_0| (1-q) q^(alpha T) / (1 - q^alpha)
    int terms_used = 0;
};

/// Weighted-trace integral (1-q) sum_m g_0(q^m) q^(alpha m) over the band-0
/// coefficient; every shifted band traces to zero exactly.  The series stops
/// at min(p.terms, available samples).
IntegralResult integral_alpha(const DiscElement& a, const ChartParams& p);

/// Same functional evaluated on a ladder matrix: (1-q) sum_n M[n][n] q^(alpha n).
IntegralResult integral_alpha_matrix(const SparseOperator& m, const ChartParams& p);

/// Jackson q-integral of f(y) y^w over [0, 1]:
/// (1-q) sum_m f(q^m) (q^m)^w q^m.  With w = alpha - 1 this is an
/// independent arithmetic route to the same series as integral_alpha.
IntegralResult jackson_integral(const SpectralFunction& f, double w, const ChartParams& p);

/// Modular scaling: band m picks up q^(-sign * alpha * m) for every m.
/// sign = +1 gives the automorphism that makes the integral a twisted trace,
/// sign = -1 its inverse.
DiscElement sigma_alpha(const DiscElement& a, int sign, const ChartParams& p);

/// <f, g> = integral of star(f) g against the weight.
Complex inner_product(const DiscElement& f, const DiscElement& g, const ChartParams& p);

struct TraceCheck {
    Complex lhs{0.0, 0.0};  // integral of g h
    Complex rhs{0.0, 0.0};  // integral of sigma_alpha(h) g
    double tail_bound = 0.0;
    double residual() const;
};

/// Twisted trace property of the integral.
TraceCheck verify_twisted_trace(const DiscElement& g, const DiscElement& h,
                                const ChartParams& p);

/// Adjoints of the right multiplications: the matrix adjoint of x_op equals
/// the op of sigma_alpha^{-1}(x*).  For Z this reads adjoint(z_op) =
/// q^(-alpha) zstar_op.  Returns the worst entrywise residual.
double verify_op_adjoint_matrix(Generator x, const ChartParams& p);

/// Same statement through the symbolic layer: <f x, g> = <f, g sigma^{-1}(x*)>
/// over a grid of basis elements, max |lhs - rhs| / max(1, |lhs|, |rhs|).
double verify_op_adjoint_symbolic(Generator x, const ChartParams& p, int grid);

}  // namespace qchart

#endif
