#include "qchart/su2_ops.hpp"

#include <stdexcept>

#include "qchart/disc_ops.hpp"

namespace qchart {

SparseOperator build_u(const ChartParams& p) {
    const int d = p.circle_dim();
    SparseOperator out(d, d, "u");
    for (int i = 0; i + 1 < d; ++i)
        out.add_entry(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i), 1.0);
    return out;
}

SparseOperator build_ustar(const ChartParams& p) {
    const int d = p.circle_dim();
    SparseOperator out(d, d, "ustar");
    for (int i = 1; i < d; ++i)
        out.add_entry(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), 1.0);
    return out;
}

SparseOperator build_dt(const ChartParams& p) {
    const int d = p.circle_dim();
    SparseOperator out(d, d, "dt");
    for (int l = -p.l_max; l <= p.l_max; ++l)
        out.add_entry(circle_flat(l, p), circle_flat(l, p), Complex{0.0, static_cast<double>(l)});
    return out;
}

SparseOperator tensor_with_circle(const SparseOperator& disc_part,
                                  const SparseOperator& circle_part, const ChartParams& p) {
    if (disc_part.rows() != static_cast<std::size_t>(p.disc_dim()) ||
        disc_part.cols() != static_cast<std::size_t>(p.disc_dim()) ||
        circle_part.rows() != static_cast<std::size_t>(p.circle_dim()) ||
        circle_part.cols() != static_cast<std::size_t>(p.circle_dim()))
        throw std::invalid_argument("tensor factors must match the window dimensions");
    const std::size_t per = static_cast<std::size_t>(p.circle_dim());
    SparseOperator out(p.chart_dim(), p.chart_dim());
    for (std::size_t dc = 0; dc < disc_part.cols(); ++dc)
        for (const auto& de : disc_part.column(dc))
            for (std::size_t cc = 0; cc < per; ++cc)
                for (const auto& ce : circle_part.column(cc))
                    out.add_entry(de.row * per + ce.row, dc * per + cc, de.coef * ce.coef);
    return out;
}

ProductOperator build_c(const ChartParams& p) {
    ProductOperator op{build_y(p), build_u(p), {}};
    op.full = tensor_with_circle(op.disc_part, op.circle_part, p);
    op.full.set_label("c");
    return op;
}

ProductOperator build_d(const ChartParams& p) {
    ProductOperator op{build_z(p), SparseOperator::identity(p.circle_dim()), {}};
    op.full = tensor_with_circle(op.disc_part, op.circle_part, p);
    op.full.set_label("d");
    return op;
}

ProductOperator build_c_op(const ChartParams& p) {
    ProductOperator op{build_y_op(p), build_ustar(p), {}};
    op.full = tensor_with_circle(op.disc_part, op.circle_part, p);
    op.full.set_label("c_op");
    return op;
}

ProductOperator build_d_op(const ChartParams& p) {
    ProductOperator op{build_zeta_op(p), SparseOperator::identity(p.circle_dim()), {}};
    op.full = tensor_with_circle(op.disc_part, op.circle_part, p);
    op.full.set_label("d_op");
    return op;
}

std::vector<RelationRecord> verify_su2_relations(const ChartParams& p) {
    const ShiftBudget budget{2, 2, 2};
    const auto domain = interior_columns_chart(budget, p);
    if (domain.empty())
        throw std::invalid_argument(
            "window too small for the relation shift budget (2 in n, 2 in k, 2 in l)");

    const double q = p.q, q2 = q * q;
    const SparseOperator one = SparseOperator::identity(p.chart_dim());
    const SparseOperator c = build_c(p).full, d = build_d(p).full;
    const SparseOperator cs = adjoint(c), ds = adjoint(d);
    const SparseOperator C = build_c_op(p).full, D = build_d_op(p).full;
    const SparseOperator Cs = adjoint(C), Ds = adjoint(D);

    std::vector<RelationRecord> out;
    auto rec = [&](const char* tag, const char* stmt, const SparseOperator& lhs,
                   const SparseOperator& rhs) {
        out.push_back(RelationRecord::make(tag, stmt, domain.size(),
                                           relation_residual(lhs, rhs, domain), p.tol));
    };

    rec("su2/cd-twist", "c d = q d c", compose(c, d), scale(compose(d, c), q));
    rec("su2/csd-twist", "c* d = q d c*", compose(cs, d), scale(compose(d, cs), q));
    rec("su2/c-normal", "c c* = c* c", compose(c, cs), compose(cs, c));
    rec("su2/sphere", "d* d + q^2 c c* = 1", add(compose(ds, d), compose(c, cs), 1.0, q2), one);
    rec("su2/sphere-flip", "d d* + c c* = 1", add(compose(d, ds), compose(c, cs)), one);

    // The mirrored family reverses every product.
    rec("su2/op-cd-twist", "d_op c_op = q c_op d_op", compose(D, C), scale(compose(C, D), q));
    rec("su2/op-csd-twist", "d_op c_op* = q c_op* d_op", compose(D, Cs), scale(compose(Cs, D), q));
    rec("su2/op-c-normal", "c_op c_op* = c_op* c_op", compose(C, Cs), compose(Cs, C));
    rec("su2/op-sphere", "d_op d_op* + q^2 c_op* c_op = 1",
        add(compose(D, Ds), compose(Cs, C), 1.0, q2), one);
    rec("su2/op-sphere-flip", "d_op* d_op + c_op* c_op = 1",
        add(compose(Ds, D), compose(Cs, C)), one);

    const SparseOperator zero(p.chart_dim(), p.chart_dim());
    const std::pair<const char*, const SparseOperator*> lefts[] = {
        {"c", &c}, {"d", &d}, {"c*", &cs}, {"d*", &ds}};
    const std::pair<const char*, const SparseOperator*> rights[] = {
        {"c_op", &C}, {"d_op", &D}, {"c_op*", &Cs}, {"d_op*", &Ds}};
    for (const auto& [ln, lo] : lefts)
        for (const auto& [rn, ro] : rights) {
            const std::string stmt = std::string("[") + ln + ", " + rn + "] = 0";
            out.push_back(RelationRecord::make(
                "su2/cross-commute", stmt, domain.size(),
                relation_residual(add(compose(*lo, *ro), compose(*ro, *lo), 1.0, -1.0), zero,
                                  domain),
                p.tol));
        }
    return out;
}

std::vector<SparseOperator> block_decompose(const SparseOperator& op, BlockAxis axis,
                                            const ChartParams& p) {
    if (op.rows() != static_cast<std::size_t>(p.chart_dim()) ||
        op.cols() != static_cast<std::size_t>(p.chart_dim()))
        throw std::invalid_argument("block decomposition expects a chart operator");
    const int per = p.circle_dim();
    const int blocks = axis == BlockAxis::N ? p.n_max : p.k_max;
    const int inner = axis == BlockAxis::N ? p.k_max : p.n_max;
    std::vector<SparseOperator> out;
    out.reserve(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b)
        out.emplace_back(static_cast<std::size_t>(inner * per),
                         static_cast<std::size_t>(inner * per));
    for (std::size_t col = 0; col < op.cols(); ++col) {
        const BasisIndex ci = chart_unflat(col, p);
        for (const auto& e : op.column(col)) {
            const BasisIndex ri = chart_unflat(e.row, p);
            const int cb = axis == BlockAxis::N ? ci.n : ci.k;
            const int rb = axis == BlockAxis::N ? ri.n : ri.k;
            if (cb != rb)
                throw std::invalid_argument("operator moves the block axis");
            const int cin = axis == BlockAxis::N ? ci.k : ci.n;
            const int rin = axis == BlockAxis::N ? ri.k : ri.n;
            out[static_cast<std::size_t>(cb)].add_entry(
                static_cast<std::size_t>(rin * per) + circle_flat(ri.l, p),
                static_cast<std::size_t>(cin * per) + circle_flat(ci.l, p), e.coef);
        }
    }
    return out;
}

namespace {

// (m, j) on a ladder of height lad_dim tensor the circle; flat m*per + (j+l_max).
SparseOperator ladder_block(const ChartParams& p, int lad_dim, bool move_circle, int dl,
                            bool move_ladder, int dm, bool use_up_coef) {
    const int per = p.circle_dim();
    SparseOperator out(static_cast<std::size_t>(lad_dim * per),
                       static_cast<std::size_t>(lad_dim * per));
    for (int m = 0; m < lad_dim; ++m) {
        const int mt = move_ladder ? m + dm : m;
        if (mt < 0 || mt >= lad_dim) continue;
        const double coef = move_ladder
                                ? (use_up_coef ? ladder_up_coef(p.q, m) : ladder_down_coef(p.q, m))
                                : pow_int(p.q, m);
        for (int j = -p.l_max; j <= p.l_max; ++j) {
            const int jt = move_circle ? j + dl : j;
            if (jt < -p.l_max || jt > p.l_max) continue;
            out.add_entry(static_cast<std::size_t>(mt * per) + circle_flat(jt, p),
                          static_cast<std::size_t>(m * per) + circle_flat(j, p), coef);
        }
    }
    return out;
}

}  // namespace

SparseOperator build_c_ladder_block(const ChartParams& p, int lad_dim) {
    return ladder_block(p, lad_dim, true, +1, false, 0, false);
}
SparseOperator build_d_ladder_block(const ChartParams& p, int lad_dim) {
    return ladder_block(p, lad_dim, false, 0, true, +1, true);
}
SparseOperator build_c_op_ladder_block(const ChartParams& p, int lad_dim) {
    return ladder_block(p, lad_dim, true, -1, false, 0, false);
}
SparseOperator build_d_op_ladder_block(const ChartParams& p, int lad_dim) {
    return ladder_block(p, lad_dim, false, 0, true, -1, false);
}

}  // namespace qchart
