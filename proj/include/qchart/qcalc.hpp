#ifndef QCHART_QCALC_HPP
#define QCHART_QCALC_HPP

#include <vector>

#include "qchart/params.hpp"
#include "qchart/sparse.hpp"
#include "qchart/spectral.hpp"

namespace qchart {

/// q^2-difference quotient x -> (f(x) - f(q^2 x)) / (x - q^2 x) on the
/// sample grid; sample m uses samples m and m+2, so the result is two
/// samples shorter.  The value at 0 is the derivative there and requires f
/// to carry one.  The denominator reuses the grid points q^m - q^{m+2}
/// built from the same powers as the samples, so f(x) = x maps to the
/// constant 1 exactly.
SpectralFunction nabla_q2(const SpectralFunction& f, const ChartParams& p);

/// Holomorphic and antiholomorphic q-derivatives of an algebra element given
/// as a matrix, via the twisted commutators
///   ddz(f)    =  (1-q^2)^{-1} y^{-2} (z* f - f z*)
///   ddzbar(f) = -(1-q^2)^{-1} y^{-2} (z f - f z)
/// The space is read off f's dimension: the disc window, the full chart
/// (circle factor untouched), or a ladder of that size.  y^{-2} is the
/// symbolic diagonal, not a matrix inverse.
SparseOperator ddz_commutator(const SparseOperator& f, const ChartParams& p);
SparseOperator ddzbar_commutator(const SparseOperator& f, const ChartParams& p);

/// The derivatives as operators on the window basis, assembled from the
/// left and right multiplication matrices: ddz = (1-q^2)^{-1} y^{-2}
/// (zstar - zstar_op) and ddzbar = -(1-q^2)^{-1} y^{-2} (z - z_op), where
/// the op matrices realize multiplication on the right.
SparseOperator ddz_from_multiplications(const ChartParams& p);
SparseOperator ddzbar_from_multiplications(const ChartParams& p);

/// The same derivatives as operators on the window basis, in closed form:
///   ddz    e(n,k) =  q^{-2k} (1-q^2)^{-1} (q^2 sqrt(1-q^{2k}) e(n,k-1)
///                      - q^{alpha/2} sqrt(1-q^{2(n+1)}) e(n+1,k))
///   ddzbar e(n,k) = -q^{-2k} (1-q^2)^{-1} (q^{-2} sqrt(1-q^{2(k+1)}) e(n,k+1)
///                      - q^{-alpha/2} sqrt(1-q^{2n}) e(n-1,k))
SparseOperator ddz_closed_form(const ChartParams& p);
SparseOperator ddzbar_closed_form(const ChartParams& p);

// Chart versions: the circle factor is untouched.
SparseOperator ddz_closed_form_chart(const ChartParams& p);
SparseOperator ddzbar_closed_form_chart(const ChartParams& p);

/// Closed-form coefficients in the (band, point) labelling.
struct EtaTerm {
    EtaIndex idx;
    Complex coef;
};
std::vector<EtaTerm> ddz_eta(EtaIndex idx, const ChartParams& p);
std::vector<EtaTerm> ddzbar_eta(EtaIndex idx, const ChartParams& p);

/// Derivatives of z^n (z*)^k: a single monomial with one exponent lowered.
///   ddz:    q^{-2(n-1)} (1-q^{2n}) / (1-q^2) z^{n-1} (z*)^k
///   ddzbar: q^{-2n}     (1-q^{2k}) / (1-q^2) z^n     (z*)^{k-1}
struct MonomialTerm {
    double coef = 0.0;
    int n = 0;
    int k = 0;
};
MonomialTerm ddz_monomial(int n, int k, const ChartParams& p);
MonomialTerm ddzbar_monomial(int n, int k, const ChartParams& p);

/// Conjugation sigma_w(f) = y^{-w} f y^{w} as matrices (diagonals formed
/// symbolically).  w = 2 is the Leibniz twist: ddz(fg) = ddz(f) g +
/// sigma_2(f) ddz(g).
SparseOperator sigma_conjugate(const SparseOperator& f, double w, const ChartParams& p);

}  // namespace qchart

#endif
