#ifndef QCHART_DISC_OPS_HPP
#define QCHART_DISC_OPS_HPP

#include "qchart/params.hpp"
#include "qchart/sparse.hpp"

namespace qchart {

// ---------------------------------------------------------------------------
// Operators on the half-infinite ladder e_0, e_1, ... (dimension dim; pass
// dim = 0 to use p.n_max).  This is the irreducible picture of the disc
// algebra: the generator satisfies  z* z - q^2 z z* = (1 - q^2) 1.
// ---------------------------------------------------------------------------

SparseOperator build_shift(const ChartParams& p, int dim = 0);          // s: e_n -> e_{n+1}
SparseOperator build_shift_adjoint(const ChartParams& p, int dim = 0);  // s*: e_n -> e_{n-1}
SparseOperator build_projector(int n, const ChartParams& p, int dim = 0);  // onto e_n

/// s^k for k >= 0, (s*)^{|k|} for k < 0, by repeated composition.  The two
/// half-words do not cancel: s s* is 1 minus the rank-one defect at e_0.
SparseOperator build_shift_word(int k, const ChartParams& p, int dim = 0);

SparseOperator build_z_irreducible(const ChartParams& p, int dim = 0);      // e_n -> sqrt(1-q^(2(n+1))) e_{n+1}
SparseOperator build_zstar_irreducible(const ChartParams& p, int dim = 0);  // e_n -> sqrt(1-q^(2n)) e_{n-1}
SparseOperator build_y_irreducible(const ChartParams& p, int dim = 0);      // diag q^n

/// diag q^(w n); w = 2 gives y^2, w = -2 the inverse square used by the
/// derivative formulas (formed symbolically, never by inverting a matrix).
SparseOperator build_y_power_irreducible(int w, const ChartParams& p, int dim = 0);

// ---------------------------------------------------------------------------
// Operators on the disc window basis e(n,k), flat index n*k_max + k.
// Left multiplications move k and leave n fixed; the right-multiplication
// (opposite) operators move n and leave k fixed, and the two families
// commute entrywise.
// ---------------------------------------------------------------------------

SparseOperator build_z(const ChartParams& p);      // e(n,k) -> sqrt(1-q^(2(k+1))) e(n,k+1)
SparseOperator build_zstar(const ChartParams& p);  // e(n,k) -> sqrt(1-q^(2k)) e(n,k-1)
SparseOperator build_y(const ChartParams& p);      // diag q^k
SparseOperator build_y_power(int w, const ChartParams& p);  // diag q^(w k)

SparseOperator build_z_op(const ChartParams& p);      // e(n,k) -> q^(-a/2) sqrt(1-q^(2n)) e(n-1,k)
SparseOperator build_zstar_op(const ChartParams& p);  // e(n,k) -> q^(a/2) sqrt(1-q^(2(n+1))) e(n+1,k)
SparseOperator build_y_op(const ChartParams& p);      // diag q^n

/// Rescaled right multiplications zeta = q^(a/2) z_op, zeta* = q^(-a/2)
/// zstar_op; the rescaling makes the pair a *-pair satisfying the mirrored
/// disc relation  zeta zeta* - q^2 zeta* zeta = (1 - q^2) 1.
SparseOperator build_zeta_op(const ChartParams& p);      // e(n,k) -> sqrt(1-q^(2n)) e(n-1,k)
SparseOperator build_zetastar_op(const ChartParams& p);  // e(n,k) -> sqrt(1-q^(2(n+1))) e(n+1,k)

// Shared coefficient helpers; the block-equality audits compare matrices bit
// for bit, so every builder must draw from the same expressions.
double ladder_up_coef(double q, int m);    // sqrt(1 - q^(2(m+1)))
double ladder_down_coef(double q, int m);  // sqrt(1 - q^(2m))

}  // namespace qchart

#endif
