#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qchart/disc_ops.hpp"
#include "qchart/element.hpp"
#include "qchart/integral.hpp"
#include "qchart/params.hpp"

using namespace qchart;

// Frozen integrals at q = 1/2 (geometric series (1-q)/(1-q^alpha) and
// variants):
//   alpha = 1/2:  integral 1       = 1/(2 - sqrt(2))  = 1.7071067811865475
//   alpha = 1:    integral 1       = 1
//   alpha = 2:    integral 1       = 2/3               = 0.66666666666666663
//   alpha = 1:    integral z zstar = 3/7, integral zstar z = 6/7
//   raw pairing of the band-1 point column at n = 2: (1-q) q^2 = 0.125
namespace {

constexpr double kIntOneHalf = 1.7071067811865475;
constexpr double kIntTwo = 0.66666666666666663;

ChartParams desk(double alpha = 1.0) {
    ChartParams p;
    p.q = 0.5;
    p.alpha = alpha;
    p.n_max = 6;
    p.k_max = 6;
    p.l_max = 2;
    return p;
}

// Long spectral window so series truncation sits far below the tolerances.
ChartParams deep(double alpha = 1.0) {
    ChartParams p = desk(alpha);
    p.m_max = 160;
    p.terms = 128;
    return p;
}

}  // namespace

TEST_CASE("the weight integrates constants to the frozen values") {
    const double expected[3][2] = {
        {0.5, kIntOneHalf}, {1.0, 1.0}, {2.0, kIntTwo}};
    for (const auto& [alpha, want] : expected) {
        const ChartParams p = deep(alpha);
        const DiscElement one = encode_generator(Generator::One, p);
        const IntegralResult r = integral_alpha(one, p);
        CHECK(r.terms_used == 128);
        CHECK(r.tail_bound < 1e-18);
        CHECK(std::abs(r.value - Complex{want, 0.0}) < r.tail_bound + 1e-12);
    }
}

TEST_CASE("every shifted band integrates to exactly zero") {
    const ChartParams p = desk();
    CHECK(integral_alpha(encode_generator(Generator::Z, p), p).value ==
          Complex{0.0, 0.0});
    CHECK(integral_alpha(monomial_element(2, 1, p), p).value == Complex{0.0, 0.0});
    const DiscElement zpzs = add(encode_generator(Generator::Z, p),
                                 encode_generator(Generator::Zstar, p));
    CHECK(integral_alpha(zpzs, p).value == Complex{0.0, 0.0});

    // ... while a genuine band-0 component survives.
    const DiscElement zzs = normal_form_product(
        encode_generator(Generator::Z, p), encode_generator(Generator::Zstar, p), p);
    CHECK(std::abs(integral_alpha(zzs, p).value) > 0.1);
}

TEST_CASE("the q-integral route reproduces the weighted trace") {
    for (const double alpha : {0.5, 1.0, 2.0}) {
        const ChartParams p = deep(alpha);
        const SpectralFunction f = SpectralFunction::from_function(
            [](double x) { return Complex{x / (1.0 + x * x), 0.0}; },
            p.sample_count(), p.q);
        DiscElement a;
        a.set_band(0, f);
        const IntegralResult lhs = integral_alpha(a, p);
        const IntegralResult rhs = jackson_integral(f, alpha - 1.0, p);
        CHECK(std::abs(lhs.value - rhs.value) < 1e-15);
        CHECK(lhs.terms_used == rhs.terms_used);
    }
}

TEST_CASE("modular scaling acts per band and inverts exactly") {
    const ChartParams p = desk();
    const DiscElement z = encode_generator(Generator::Z, p);
    const DiscElement sz = sigma_alpha(z, +1, p);
    const SpectralFunction* g = sz.band(1);
    REQUIRE(g != nullptr);
    for (int m = 0; m < g->size(); ++m)
        CHECK(g->at(m) == 2.0 * z.band(1)->at(m));  // q^(-1) at alpha = 1

    // Band 0 is a fixed point.
    const DiscElement y = encode_generator(Generator::Y, p);
    CHECK(sigma_alpha(y, +1, p).band(0)->samples == y.band(0)->samples);

    // sign = -1 undoes sign = +1 bitwise on the dyadic grid.
    const DiscElement back = sigma_alpha(sz, -1, p);
    CHECK(back.band(1)->samples == z.band(1)->samples);
}

TEST_CASE("the integral is a twisted trace, not a plain one") {
    const ChartParams p = deep();
    const DiscElement z = encode_generator(Generator::Z, p);
    const DiscElement zstar = encode_generator(Generator::Zstar, p);
    const DiscElement y = encode_generator(Generator::Y, p);

    const DiscElement pairs[][2] = {
        {normal_form_product(z, y, p), zstar},
        {monomial_element(2, 0, p), monomial_element(0, 2, p)},
        {normal_form_product(z, zstar, p), y},
        {eta_element({2, 1}, p), eta_element({2, -1}, p)},
    };
    for (const auto& gh : pairs) {
        const TraceCheck c = verify_twisted_trace(gh[0], gh[1], p);
        CHECK(c.residual() < c.tail_bound + 1e-12);
    }

    // Without the twist the trace property genuinely fails: the two
    // orderings of z and zstar integrate to different frozen values.
    const Complex zzs = integral_alpha(normal_form_product(z, zstar, p), p).value;
    const Complex zsz = integral_alpha(normal_form_product(zstar, z, p), p).value;
    CHECK(std::abs(zzs - Complex{3.0 / 7.0, 0.0}) < 1e-12);
    CHECK(std::abs(zsz - Complex{6.0 / 7.0, 0.0}) < 1e-12);
    CHECK(std::abs(zzs - zsz) > 0.3);
}

TEST_CASE("right multiplications are adjoint to their twisted partners") {
    for (const double alpha : {0.5, 1.0, 2.0}) {
        const ChartParams p = desk(alpha);
        CHECK(verify_op_adjoint_matrix(Generator::Z, p) < 1e-14);
        CHECK(verify_op_adjoint_matrix(Generator::Zstar, p) < 1e-14);
        CHECK(verify_op_adjoint_matrix(Generator::Y, p) < 1e-14);
    }
    const ChartParams p = deep();
    CHECK(verify_op_adjoint_symbolic(Generator::Z, p, 3) < 1e-12);
    CHECK(verify_op_adjoint_symbolic(Generator::Y, p, 3) < 1e-12);
}

TEST_CASE("normalized basis elements pair orthonormally") {
    const ChartParams p = deep();
    std::vector<EtaIndex> labels;
    for (int n = 0; n < 4; ++n)
        for (int k = -std::min(n, 2); k <= 2; ++k) labels.push_back({n, k});

    for (const EtaIndex& a : labels) {
        for (const EtaIndex& b : labels) {
            const Complex g =
                inner_product(eta_element(a, p), eta_element(b, p), p);
            const Complex want = (a == b) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            CHECK(std::abs(g - want) < 1e-12);
        }
    }

    // Unnormalized pairing: the shifted point column at n = 2 has squared
    // length (1-q) q^(alpha n) = 0.125.
    const DiscElement raw = normal_form_product(
        encode_generator(Generator::S, p), encode_delta(2, p), p);
    CHECK(std::abs(inner_product(raw, raw, p) - Complex{0.125, 0.0}) < 1e-15);

    // Matrix route to the same number.
    const SparseOperator m = to_matrix(raw, p, 8);
    const IntegralResult tr = integral_alpha_matrix(compose(adjoint(m), m), p);
    CHECK(std::abs(tr.value - Complex{0.125, 0.0}) < 1e-15);
}

TEST_CASE("the matrix functional sums the weighted diagonal") {
    const ChartParams p = desk();
    const int dim = 8;
    std::vector<Complex> d;
    Complex manual{0.0, 0.0};
    for (int n = 0; n < dim; ++n) {
        d.push_back(Complex{1.0 / (n + 1.0), 0.0});
        manual += (1.0 - p.q) * d.back() * pow_int(p.q, n);
    }
    const IntegralResult r =
        integral_alpha_matrix(SparseOperator::diagonal(d, "d"), p);
    CHECK(std::abs(r.value - manual) < 1e-15);
    CHECK(r.terms_used == dim);

    SparseOperator rect(3, 4, "rect");
    CHECK_THROWS_AS(integral_alpha_matrix(rect, p), std::invalid_argument);
}

TEST_CASE("the reported tail bound tracks the truncation error") {
    ChartParams p8 = deep();
    p8.terms = 8;
    ChartParams p64 = deep();
    p64.terms = 64;
    const DiscElement one = encode_generator(Generator::One, p8);
    const IntegralResult r8 = integral_alpha(one, p8);
    const IntegralResult r64 = integral_alpha(one, p64);
    CHECK(r8.tail_bound > r64.tail_bound);
    CHECK(r64.tail_bound > 0.0);
    // At alpha = 1 the geometric tail bound is sharp.
    CHECK(std::abs(r8.value - Complex{1.0, 0.0}) <= r8.tail_bound + 1e-15);
    CHECK(std::abs(r8.value - Complex{1.0, 0.0}) > 0.5 * r8.tail_bound);
}
