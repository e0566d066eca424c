#ifndef QCHART_ELEMENT_HPP
#define QCHART_ELEMENT_HPP

#include <map>
#include <vector>

#include "qchart/params.hpp"
#include "qchart/sparse.hpp"
#include "qchart/spectral.hpp"

namespace qchart {

/// Normal form of a disc-algebra element: a finite sum over integer bands,
///   band m >= 0:  s^m g_m(y)        (coefficient on the right)
///   band m <  0:  g_m(y) (s*)^|m|   (coefficient on the left)
/// These orientations keep every pull-through evaluating g at q^j with
/// j >= 0; the other orientations would need points outside the spectrum.
class DiscElement {
public:
    DiscElement() = default;

    const std::map<int, SpectralFunction>& bands() const { return bands_; }
    const SpectralFunction* band(int m) const;  // nullptr when absent
    void set_band(int m, SpectralFunction f);   // drops exactly-zero functions
    bool is_zero() const { return bands_.empty(); }

    /// True when every band coefficient carries a derivative at 0.
    bool is_c1() const;

private:
    std::map<int, SpectralFunction> bands_;
};

enum class Generator { One, S, Sstar, Z, Zstar, Y, Y2 };

DiscElement encode_generator(Generator g, const ChartParams& p);
DiscElement encode_delta(int n, const ChartParams& p);  // point mass at q^n, band 0

DiscElement add(const DiscElement& a, const DiscElement& b,
                Complex wa = 1.0, Complex wb = 1.0);
DiscElement star(const DiscElement& a);

/// Product in normal form.  Band pairs combine by pulling coefficients
/// through the shifts, and a positive band meeting a negative one first
/// multiplies the coefficients, then contracts s^a . (s*)^b, which truncates
/// the first min(a,b) samples to zero (the shift defect).  Throws
/// std::runtime_error when a band function runs out of samples.
DiscElement normal_form_product(const DiscElement& a, const DiscElement& b,
                                const ChartParams& p);

/// z^n (z*)^k as an element, built by repeated products.
DiscElement monomial_element(int n, int k, const ChartParams& p);

/// The normalized basis element with label (n, band k):
/// q^(-alpha n/2) (1-q)^(-1/2) times band k applied to the point mass at q^n.
/// For k < -n the underlying operator is zero and the zero element returns.
DiscElement eta_element(EtaIndex idx, const ChartParams& p);

/// Matrix of the element on the ladder e_0..e_{dim-1} (dim = 0 uses
/// p.sample_count()).  Throws when a band lacks the samples to fill dim
/// columns.
SparseOperator to_matrix(const DiscElement& a, const ChartParams& p, int dim = 0);

/// Coefficients of the element over the normalized basis: coefficient at
/// label (n', band m) is sqrt(1-q) q^(alpha n'/2) g_m(q^(n' + min(m, 0))).
std::map<EtaIndex, Complex> basis_expand(const DiscElement& a, const ChartParams& p);

/// Rebuild an element from expansion coefficients (inverse of basis_expand
/// on its image).
DiscElement from_expansion(const std::map<EtaIndex, Complex>& coef, const ChartParams& p);

}  // namespace qchart

#endif
