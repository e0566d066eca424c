#ifndef QCHART_PARAMS_HPP
#define QCHART_PARAMS_HPP

#include <cstddef>
#include <vector>

namespace qchart {

/// Truncation parameters for the chart model: a disc window of n_max x k_max
/// modes tensored with circle modes l in [-l_max, l_max].
///
/// q is the deformation parameter, 0 < q < 1.  alpha > 0 selects the weight
/// y^alpha used by the integral and the twisted structures built on it.
struct ChartParams {
    double q = 0.5;
    double alpha = 1.0;
    int n_max = 16;
    int k_max = 16;
    int l_max = 4;
    double tol = 1e-12;
    int terms = 64;  // series length for the weighted-trace integral
    int m_max = 0;   // spectral sample count; 0 = derive from the window

    // Sample count for spectral functions.  Every product of two window
    // elements shifts evaluation points by at most max(n_max, k_max), so the
    // default leaves that much headroom plus a small margin.
    int sample_count() const;

    void validate() const;  // throws std::invalid_argument on a bad field

    int irreducible_dim() const { return n_max; }
    int disc_dim() const { return n_max * k_max; }
    int circle_dim() const { return 2 * l_max + 1; }
    int chart_dim() const { return disc_dim() * circle_dim(); }
};

/// Position in the product basis e(n,k,l) = e(n,k) (x) b(l).
struct BasisIndex {
    int n = 0;
    int k = 0;
    int l = 0;
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Label of a window basis vector in its (band, point) form: band k acting on
/// the spectral point q^n.  Admissible labels have k >= -n.
struct EtaIndex {
    int n = 0;
    int k = 0;
    friend bool operator==(const EtaIndex&, const EtaIndex&) = default;
    friend bool operator<(const EtaIndex& a, const EtaIndex& b) {
        return a.n != b.n ? a.n < b.n : a.k < b.k;
    }
};

// Flat layouts.  Row-major over (n, k), circle index offset by +l_max.
inline std::size_t disc_flat(int n, int k, const ChartParams& p) {
    return static_cast<std::size_t>(n) * p.k_max + k;
}
inline std::size_t circle_flat(int l, const ChartParams& p) {
    return static_cast<std::size_t>(l + p.l_max);
}
inline std::size_t chart_flat(int n, int k, int l, const ChartParams& p) {
    return disc_flat(n, k, p) * p.circle_dim() + circle_flat(l, p);
}
std::pair<int, int> disc_unflat(std::size_t idx, const ChartParams& p);
BasisIndex chart_unflat(std::size_t idx, const ChartParams& p);

/// All (n, k) disc labels in row-major order.
std::vector<std::pair<int, int>> enumerate_disc_basis(const ChartParams& p);

/// Relabel between the (band, point) picture and the rectangular one:
/// band index k at point q^n corresponds to e(n, n + k).
std::pair<int, int> eta_to_e(EtaIndex idx);  // throws for k < -n (zero vector, no label)
EtaIndex e_to_eta(int n, int k);

/// Per-axis reach of an operator word: how far it can move n, k, and l.
struct ShiftBudget {
    int dn = 0;
    int dk = 0;
    int dl = 0;
};

/// Indices whose images under every word within the budget stay inside the
/// window, so truncated matrices act exactly there.  Empty when the budget
/// exceeds the window.
std::vector<BasisIndex> interior_domain(const ShiftBudget& b, const ChartParams& p);

// Flat-column versions for the three spaces.
std::vector<std::size_t> interior_columns_irreducible(int d, int dim);
std::vector<std::size_t> interior_columns_disc(int dn, int dk, const ChartParams& p);
std::vector<std::size_t> interior_columns_chart(const ShiftBudget& b, const ChartParams& p);

/// q^m for integer m (m may be negative), by repeated multiplication.
/// Used everywhere a coefficient needs q to an integer power so that equal
/// parameters give bitwise-equal coefficients.
double pow_int(double q, int m);

}  // namespace qchart

#endif
