#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "qchart/disc_ops.hpp"
#include "qchart/params.hpp"
#include "qchart/sparse.hpp"

using namespace qchart;

// Hand-computed actions at q = 1/2, alpha = 1:
//   sqrt(1 - q^2)        = 0.86602540378443865
//   sqrt(1 - q^4)        = 0.96824583655185426
//   q^(-1/2) sqrt(1-q^2) = 1.2247448713915890
//   q^(+1/2) sqrt(1-q^2) = 0.61237243569579452
namespace {

constexpr double kUp0 = 0.86602540378443865;    // sqrt(3)/2
constexpr double kUp1 = 0.96824583655185426;    // sqrt(15)/4
constexpr double kZOp10 = 1.2247448713915890;   // sqrt(3/2)
constexpr double kZsOp0 = 0.61237243569579452;  // sqrt(3/8)

ChartParams desk() {
    ChartParams p;
    p.q = 0.5;
    p.alpha = 1.0;
    p.n_max = 6;
    p.k_max = 6;
    return p;
}

}  // namespace

TEST_CASE("ladder coefficients match the frozen values") {
    CHECK(ladder_up_coef(0.5, 0) == doctest::Approx(kUp0).epsilon(1e-15));
    CHECK(ladder_up_coef(0.5, 1) == doctest::Approx(kUp1).epsilon(1e-15));
    CHECK(ladder_down_coef(0.5, 1) == doctest::Approx(kUp0).epsilon(1e-15));
    CHECK(ladder_down_coef(0.5, 0) == 0.0);
    // The two helpers sample the same expression at shifted arguments.
    CHECK(ladder_up_coef(0.5, 3) == ladder_down_coef(0.5, 4));
}

TEST_CASE("ladder operators: shifts, projector, generator") {
    const ChartParams p = desk();
    const SparseOperator s = build_shift(p);
    CHECK(s.entry(1, 0) == Complex{1.0, 0.0});
    CHECK(s.entry(5, 4) == Complex{1.0, 0.0});
    CHECK(s.column(5).empty());  // truncated at the top

    const SparseOperator sa = build_shift_adjoint(p);
    CHECK(sa.entry(0, 1) == Complex{1.0, 0.0});
    CHECK(sa.column(0).empty());

    CHECK(build_projector(2, p).entry(2, 2) == Complex{1.0, 0.0});
    CHECK(build_projector(2, p).entry_count() == 1);

    const SparseOperator w = build_shift_word(3, p);
    CHECK(w.entry(3, 0) == Complex{1.0, 0.0});
    CHECK(build_shift_word(-2, p).entry(0, 2) == Complex{1.0, 0.0});
    CHECK(build_shift_word(0, p).same_entries(SparseOperator::identity(6)));

    const SparseOperator z = build_z_irreducible(p);
    CHECK(z.entry(1, 0).real() == doctest::Approx(kUp0).epsilon(1e-15));
    CHECK(z.entry(2, 1).real() == doctest::Approx(kUp1).epsilon(1e-15));
    const SparseOperator zs = build_zstar_irreducible(p);
    CHECK(zs.entry(0, 1).real() == doctest::Approx(kUp0).epsilon(1e-15));
    CHECK(zs.column(0).empty());  // annihilates the bottom state

    CHECK(build_y_irreducible(p).entry(3, 3) == Complex{0.125, 0.0});
    CHECK(build_y_power_irreducible(-2, p).entry(2, 2) == Complex{16.0, 0.0});

    CHECK(build_shift(p, 9).cols() == 9);  // explicit dimension override
}

TEST_CASE("window operators: left multiplications move k") {
    const ChartParams p = desk();
    const SparseOperator z = build_z(p);
    // z e(n,k) = sqrt(1-q^(2(k+1))) e(n,k+1), any n.
    for (int n : {0, 3}) {
        CHECK(z.entry(disc_flat(n, 1, p), disc_flat(n, 0, p)).real() ==
              doctest::Approx(kUp0).epsilon(1e-15));
        CHECK(z.entry(disc_flat(n, 2, p), disc_flat(n, 1, p)).real() ==
              doctest::Approx(kUp1).epsilon(1e-15));
    }
    CHECK(z.column(disc_flat(2, 5, p)).empty());  // top of the k window

    const SparseOperator zs = build_zstar(p);
    CHECK(zs.entry(disc_flat(4, 0, p), disc_flat(4, 1, p)).real() ==
          doctest::Approx(kUp0).epsilon(1e-15));
    CHECK(zs.column(disc_flat(4, 0, p)).empty());

    CHECK(build_y(p).entry(disc_flat(1, 3, p), disc_flat(1, 3, p)) ==
          Complex{0.125, 0.0});
    CHECK(build_y_power(2, p).entry(disc_flat(0, 2, p), disc_flat(0, 2, p)) ==
          Complex{0.0625, 0.0});
}

TEST_CASE("window operators: right multiplications move n and carry the weight") {
    const ChartParams p = desk();
    const SparseOperator zo = build_z_op(p);
    // z_op e(n,k) = q^(-alpha/2) sqrt(1-q^(2n)) e(n-1,k).
    CHECK(zo.entry(disc_flat(0, 2, p), disc_flat(1, 2, p)).real() ==
          doctest::Approx(kZOp10).epsilon(1e-15));
    CHECK(zo.column(disc_flat(0, 3, p)).empty());

    const SparseOperator zso = build_zstar_op(p);
    CHECK(zso.entry(disc_flat(1, 2, p), disc_flat(0, 2, p)).real() ==
          doctest::Approx(kZsOp0).epsilon(1e-15));

    CHECK(build_y_op(p).entry(disc_flat(2, 5, p), disc_flat(2, 5, p)) ==
          Complex{0.25, 0.0});

    // The rescaled pair drops the weight: zeta_op = q^(alpha/2) z_op.
    const SparseOperator zeta = build_zeta_op(p);
    CHECK(zeta.entry(disc_flat(0, 2, p), disc_flat(1, 2, p)).real() ==
          doctest::Approx(kUp0).epsilon(1e-15));
    const SparseOperator zetas = build_zetastar_op(p);
    CHECK(zetas.entry(disc_flat(1, 2, p), disc_flat(0, 2, p)).real() ==
          doctest::Approx(kUp0).epsilon(1e-15));
}

TEST_CASE("defining relation holds on the interior in both pictures") {
    const ChartParams p = desk();
    const double c = 1.0 - p.q * p.q;

    const SparseOperator z = build_z_irreducible(p);
    const SparseOperator zs = build_zstar_irreducible(p);
    const SparseOperator one6 = SparseOperator::identity(6);
    CHECK(relation_residual(add(compose(zs, z), compose(z, zs), 1.0, -p.q * p.q),
                            scale(one6, c), interior_columns_irreducible(1, 6)) <
          1e-15);

    const SparseOperator zw = build_z(p);
    const SparseOperator zsw = build_zstar(p);
    const SparseOperator one = SparseOperator::identity(36);
    CHECK(relation_residual(add(compose(zsw, zw), compose(zw, zsw), 1.0, -p.q * p.q),
                            scale(one, c), interior_columns_disc(0, 1, p)) < 1e-15);

    // Mirrored relation for the rescaled right multiplications.
    const SparseOperator zeta = build_zeta_op(p);
    const SparseOperator zetas = build_zetastar_op(p);
    CHECK(relation_residual(
              add(compose(zeta, zetas), compose(zetas, zeta), 1.0, -p.q * p.q),
              scale(one, c), interior_columns_disc(1, 0, p)) < 1e-15);
}

TEST_CASE("polar form: generator = shift times spectral coefficient, bitwise") {
    const ChartParams p = desk();
    std::vector<Complex> d;
    for (int n = 0; n < 6; ++n) d.push_back(ladder_up_coef(p.q, n));
    const SparseOperator root = SparseOperator::diagonal(d);
    CHECK(compose(build_shift(p), root).same_entries(build_z_irreducible(p)));
    CHECK(compose(root, build_shift_adjoint(p)).same_entries(build_zstar_irreducible(p)));
}

TEST_CASE("left and right multiplications commute entrywise") {
    const ChartParams p = desk();
    const std::vector<SparseOperator> lefts = {build_z(p), build_zstar(p), build_y(p)};
    const std::vector<SparseOperator> rights = {build_z_op(p), build_zstar_op(p),
                                                build_y_op(p)};
    const auto inner = interior_columns_disc(1, 1, p);
    const SparseOperator zero(36, 36);
    for (const auto& a : lefts)
        for (const auto& b : rights)
            CHECK(relation_residual(add(compose(a, b), compose(b, a), 1.0, -1.0), zero,
                                    inner) < 1e-15);
}
