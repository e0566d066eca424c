#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "qchart/params.hpp"
#include "qchart/sparse.hpp"
#include "qchart/su2_ops.hpp"

using namespace qchart;

namespace {

ChartParams desk() {
    ChartParams p;
    p.q = 0.5;
    p.alpha = 1.0;
    p.n_max = 6;
    p.k_max = 6;
    p.l_max = 2;
    return p;
}

constexpr double kUp0 = 0.86602540378443865;  // sqrt(1 - q^2) at q = 1/2

}  // namespace

TEST_CASE("circle operators") {
    const ChartParams p = desk();  // modes l in [-2, 2], flat l + 2
    const SparseOperator u = build_u(p);
    CHECK(u.entry(circle_flat(0, p), circle_flat(-1, p)) == Complex{1.0, 0.0});
    CHECK(u.column(circle_flat(2, p)).empty());

    const SparseOperator us = build_ustar(p);
    CHECK(us.entry(circle_flat(-2, p), circle_flat(-1, p)) == Complex{1.0, 0.0});
    CHECK(us.column(circle_flat(-2, p)).empty());

    const SparseOperator dt = build_dt(p);
    CHECK(dt.entry(circle_flat(-2, p), circle_flat(-2, p)) == Complex{0.0, -2.0});
    CHECK(dt.entry(circle_flat(1, p), circle_flat(1, p)) == Complex{0.0, 1.0});
    CHECK(dt.entry(circle_flat(0, p), circle_flat(0, p)) == Complex{0.0, 0.0});
}

TEST_CASE("tensor product respects the flat layout") {
    const ChartParams p = desk();
    SparseOperator a(static_cast<std::size_t>(p.disc_dim()),
                     static_cast<std::size_t>(p.disc_dim()));
    a.add_entry(disc_flat(1, 2, p), disc_flat(3, 4, p), Complex{2.0, 0.0});
    SparseOperator b(static_cast<std::size_t>(p.circle_dim()),
                     static_cast<std::size_t>(p.circle_dim()));
    b.add_entry(circle_flat(1, p), circle_flat(-1, p), Complex{0.0, 3.0});

    const SparseOperator t = tensor_with_circle(a, b, p);
    CHECK(t.rows() == static_cast<std::size_t>(p.chart_dim()));
    CHECK(t.entry(chart_flat(1, 2, 1, p), chart_flat(3, 4, -1, p)) == Complex{0.0, 6.0});
    CHECK(t.entry_count() == 1);

    const SparseOperator wrong(3, 3);
    CHECK_THROWS_AS(tensor_with_circle(wrong, b, p), std::invalid_argument);
}

TEST_CASE("generator actions on the chart basis") {
    const ChartParams p = desk();

    // c: e(n,k,l) -> q^k e(n,k,l+1)
    const ProductOperator c = build_c(p);
    CHECK(c.full.entry(chart_flat(1, 3, 1, p), chart_flat(1, 3, 0, p)) ==
          Complex{0.125, 0.0});
    CHECK(c.full.column(chart_flat(1, 3, 2, p)).empty());  // top circle mode

    // d: e(n,k,l) -> sqrt(1-q^(2(k+1))) e(n,k+1,l)
    const ProductOperator d = build_d(p);
    CHECK(d.full.entry(chart_flat(2, 1, -1, p), chart_flat(2, 0, -1, p)).real() ==
          doctest::Approx(kUp0).epsilon(1e-15));

    // c_op: e(n,k,l) -> q^n e(n,k,l-1)
    const ProductOperator co = build_c_op(p);
    CHECK(co.full.entry(chart_flat(2, 0, 0, p), chart_flat(2, 0, 1, p)) ==
          Complex{0.25, 0.0});

    // d_op: e(n,k,l) -> sqrt(1-q^(2n)) e(n-1,k,l)
    const ProductOperator dop = build_d_op(p);
    CHECK(dop.full.entry(chart_flat(0, 4, 2, p), chart_flat(1, 4, 2, p)).real() ==
          doctest::Approx(kUp0).epsilon(1e-15));
    CHECK(dop.full.column(chart_flat(0, 1, 0, p)).empty());
}

TEST_CASE("relation records: all pass at the desk scale") {
    const ChartParams p = desk();
    const auto records = verify_su2_relations(p);
    REQUIRE(records.size() == 26);  // 5 + 5 + 16
    for (const auto& r : records) {
        INFO(r.tag, ": ", r.statement, " residual ", r.residual);
        CHECK(r.pass);
        CHECK(r.residual < 1e-13);
        CHECK(r.domain_size > 0);
    }
}

TEST_CASE("relation audit refuses a window smaller than its shift budget") {
    ChartParams p = desk();
    p.l_max = 1;  // budget needs l in [-(l_max-2), l_max-2]: empty
    CHECK_THROWS_AS(verify_su2_relations(p), std::invalid_argument);
}

TEST_CASE("block decomposition extracts identical ladder blocks") {
    const ChartParams p = desk();

    const auto c_blocks = block_decompose(build_c(p).full, BlockAxis::N, p);
    REQUIRE(c_blocks.size() == static_cast<std::size_t>(p.n_max));
    const SparseOperator c_ref = build_c_ladder_block(p, p.k_max);
    for (const auto& b : c_blocks) CHECK(b.same_entries(c_ref));

    const auto d_blocks = block_decompose(build_d(p).full, BlockAxis::N, p);
    const SparseOperator d_ref = build_d_ladder_block(p, p.k_max);
    for (const auto& b : d_blocks) CHECK(b.same_entries(d_ref));

    const auto co_blocks = block_decompose(build_c_op(p).full, BlockAxis::K, p);
    REQUIRE(co_blocks.size() == static_cast<std::size_t>(p.k_max));
    const SparseOperator co_ref = build_c_op_ladder_block(p, p.n_max);
    for (const auto& b : co_blocks) CHECK(b.same_entries(co_ref));

    const auto dop_blocks = block_decompose(build_d_op(p).full, BlockAxis::K, p);
    const SparseOperator dop_ref = build_d_op_ladder_block(p, p.n_max);
    for (const auto& b : dop_blocks) CHECK(b.same_entries(dop_ref));

    // d moves k, so it has no fixed-k block structure.
    CHECK_THROWS_AS(block_decompose(build_d(p).full, BlockAxis::K, p),
                    std::invalid_argument);
}
