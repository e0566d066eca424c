#ifndef QCHART_SU2_OPS_HPP
#define QCHART_SU2_OPS_HPP

#include <vector>

#include "qchart/params.hpp"
#include "qchart/report.hpp"
#include "qchart/sparse.hpp"

namespace qchart {

// Circle factor: Fourier modes b_l, l in [-l_max, l_max], flat l + l_max.
SparseOperator build_u(const ChartParams& p);      // b_l -> b_{l+1}
SparseOperator build_ustar(const ChartParams& p);  // b_l -> b_{l-1}
SparseOperator build_dt(const ChartParams& p);     // d/dt: b_l -> i l b_l

/// Kronecker product acting on e(n,k,l) = e(n,k) (x) b(l).
SparseOperator tensor_with_circle(const SparseOperator& disc_part,
                                  const SparseOperator& circle_part,
                                  const ChartParams& p);

/// A chart operator kept together with its tensor factors.
struct ProductOperator {
    SparseOperator disc_part;
    SparseOperator circle_part;
    SparseOperator full;
};

// Generators of the q-deformed SU(2) function algebra on the chart,
//   c = y (x) u,  d = z (x) 1,
// and of the commuting right-multiplication copy,
//   c_op = y_op (x) u*,  d_op = zeta_op (x) 1.
ProductOperator build_c(const ChartParams& p);     // e(n,k,l) -> q^k e(n,k,l+1)
ProductOperator build_d(const ChartParams& p);     // e(n,k,l) -> sqrt(1-q^(2(k+1))) e(n,k+1,l)
ProductOperator build_c_op(const ChartParams& p);  // e(n,k,l) -> q^n e(n,k,l-1)
ProductOperator build_d_op(const ChartParams& p);  // e(n,k,l) -> sqrt(1-q^(2n)) e(n-1,k,l)

/// Residuals of the five defining relations for (c, d), the five mirrored
/// relations for (c_op, d_op), and the sixteen cross commutators between the
/// two families.  Throws std::invalid_argument when the window is too small
/// for the shift budget (2 in n, 2 in k, 2 in l).
std::vector<RelationRecord> verify_su2_relations(const ChartParams& p);

enum class BlockAxis { N, K };

/// Split an operator that leaves the given axis fixed into its diagonal
/// blocks: axis N yields n_max blocks on the (k, l) grid, axis K yields
/// k_max blocks on the (n, l) grid.  Throws std::invalid_argument when some
/// entry moves the axis.
std::vector<SparseOperator> block_decompose(const SparseOperator& op, BlockAxis axis,
                                            const ChartParams& p);

// Single-block references on a ladder (dimension lad_dim) tensor the circle:
// what every block of c/d (axis N) and of c_op/d_op (axis K) must equal.
SparseOperator build_c_ladder_block(const ChartParams& p, int lad_dim);     // (m,j) -> q^m (m,j+1)
SparseOperator build_d_ladder_block(const ChartParams& p, int lad_dim);     // (m,j) -> sqrt(1-q^(2(m+1))) (m+1,j)
SparseOperator build_c_op_ladder_block(const ChartParams& p, int lad_dim);  // (m,j) -> q^m (m,j-1)
SparseOperator build_d_op_ladder_block(const ChartParams& p, int lad_dim);  // (m,j) -> sqrt(1-q^(2m)) (m-1,j)

}  // namespace qchart

#endif
