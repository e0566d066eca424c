#include "qchart/audit.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "qchart/disc_ops.hpp"
#include "qchart/element.hpp"
#include "qchart/integral.hpp"
#include "qchart/qcalc.hpp"
#include "qchart/su2_ops.hpp"

namespace qchart {

namespace {

std::vector<std::size_t> range_cols(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t j = lo; j < hi; ++j) out.push_back(j);
    return out;
}

std::vector<std::size_t> all_cols(const SparseOperator& m) {
    return range_cols(0, m.cols());
}

// Deterministic across standard libraries: mt19937 words mapped to [-1, 1).
double uniform_pm1(std::mt19937& rng) {
    return 2.0 * ((rng() >> 5) * 0x1p-27) - 1.0;
}

Complex random_complex(std::mt19937& rng) {
    const double re = uniform_pm1(rng);
    return {re, uniform_pm1(rng)};
}

SpectralFunction random_function(std::mt19937& rng, int count) {
    SpectralFunction f;
    f.samples.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) f.samples.push_back(random_complex(rng));
    f.value_at_zero = random_complex(rng);
    f.derivative_at_zero = random_complex(rng);
    return f;
}

DiscElement random_element(std::mt19937& rng, const ChartParams& p, int band_reach) {
    DiscElement out;
    for (int m = -band_reach; m <= band_reach; ++m)
        out.set_band(m, random_function(rng, p.sample_count()));
    return out;
}

double map_residual(const std::map<EtaIndex, Complex>& a,
                    const std::map<EtaIndex, Complex>& b) {
    double worst = 0.0;
    auto probe = [&](const std::map<EtaIndex, Complex>& lhs,
                     const std::map<EtaIndex, Complex>& rhs) {
        for (const auto& [idx, va] : lhs) {
            const auto it = rhs.find(idx);
            const Complex vb = it == rhs.end() ? Complex{0.0, 0.0} : it->second;
            worst = std::max(worst, std::abs(va - vb) /
                                        std::max({1.0, std::abs(va), std::abs(vb)}));
        }
    };
    probe(a, b);
    probe(b, a);
    return worst;
}

void irreducible_relations(const ChartParams& p, std::vector<RelationRecord>& out) {
    const int dim = p.irreducible_dim();
    const SparseOperator z = build_z_irreducible(p);
    const SparseOperator zs = build_zstar_irreducible(p);
    const SparseOperator y = build_y_irreducible(p);
    const SparseOperator one = SparseOperator::identity(static_cast<std::size_t>(dim));
    const std::vector<std::size_t> inner = interior_columns_irreducible(1, dim);
    const double q2 = p.q * p.q;

    auto rec = [&](const std::string& tag, const std::string& stmt,
                   const SparseOperator& lhs, const SparseOperator& rhs,
                   const std::vector<std::size_t>& dom) {
        out.push_back(RelationRecord::make(tag, stmt, dom.size(),
                                           relation_residual(lhs, rhs, dom), p.tol));
    };

    rec("irr/defining", "zstar z - q^2 z zstar = (1-q^2) 1",
        add(compose(zs, z), compose(z, zs), 1.0, -q2), scale(one, 1.0 - q2), inner);
    rec("irr/y-z-twist", "y z = q z y", compose(y, z), scale(compose(z, y), p.q), inner);
    rec("irr/zstar-y-twist", "zstar y = q y zstar", compose(zs, y),
        scale(compose(y, zs), p.q), inner);
    rec("irr/sphere", "z zstar = 1 - y^2", compose(z, zs),
        add(one, compose(y, y), 1.0, -1.0), inner);
    rec("irr/zstar-z", "zstar z = 1 - q^2 y^2", compose(zs, z),
        add(one, compose(y, y), 1.0, -q2), inner);

    // Polar decompositions hold bit for bit: both sides draw their
    // coefficients from the same expressions.
    const SparseOperator root = [&] {
        std::vector<Complex> d;
        for (int n = 0; n < dim; ++n) d.push_back(ladder_up_coef(p.q, n));
        return SparseOperator::diagonal(std::move(d), "sqrt(1-q^2 y^2)");
    }();
    const bool polar = compose(build_shift(p), root).same_entries(z);
    out.push_back(RelationRecord::make("irr/polar", "z = s sqrt(1-q^2 y^2), bit for bit",
                                       static_cast<std::size_t>(dim), polar ? 0.0 : 1.0,
                                       0.0));
    const bool polar_star = compose(root, build_shift_adjoint(p)).same_entries(zs);
    out.push_back(RelationRecord::make("irr/polar-star",
                                       "zstar = sqrt(1-q^2 y^2) s*, bit for bit",
                                       static_cast<std::size_t>(dim),
                                       polar_star ? 0.0 : 1.0, 0.0));

    const SparseOperator s = build_shift(p);
    const SparseOperator sa = build_shift_adjoint(p);
    rec("irr/shift-defect", "s s* = 1 - (projector onto e_0)", compose(s, sa),
        add(one, build_projector(0, p), 1.0, -1.0), all_cols(one));
    rec("irr/shift-isometry", "s* s = 1", compose(sa, s), one, inner);
    rec("irr/word-isometry", "s*^2 s^2 = 1",
        compose(build_shift_word(-2, p), build_shift_word(2, p)), one,
        interior_columns_irreducible(2, dim));
    rec("irr/word-defect", "s^2 s*^2 = 1 - (projectors onto e_0, e_1)",
        compose(build_shift_word(2, p), build_shift_word(-2, p)),
        add(add(one, build_projector(0, p), 1.0, -1.0), build_projector(1, p), 1.0, -1.0),
        all_cols(one));
}

void disc_relations(const ChartParams& p, std::vector<RelationRecord>& out) {
    const SparseOperator z = build_z(p);
    const SparseOperator zs = build_zstar(p);
    const SparseOperator y = build_y(p);
    const SparseOperator zo = build_zeta_op(p);
    const SparseOperator zso = build_zetastar_op(p);
    const SparseOperator one = SparseOperator::identity(static_cast<std::size_t>(p.disc_dim()));
    const double q2 = p.q * p.q;

    auto rec = [&](const std::string& tag, const std::string& stmt,
                   const SparseOperator& lhs, const SparseOperator& rhs,
                   const std::vector<std::size_t>& dom) {
        out.push_back(RelationRecord::make(tag, stmt, dom.size(),
                                           relation_residual(lhs, rhs, dom), p.tol));
    };

    rec("disc/defining", "zstar z - q^2 z zstar = (1-q^2) 1",
        add(compose(zs, z), compose(z, zs), 1.0, -q2), scale(one, 1.0 - q2),
        interior_columns_disc(0, 1, p));
    rec("disc/op-defining", "zeta_op zeta_op* - q^2 zeta_op* zeta_op = (1-q^2) 1",
        add(compose(zo, zso), compose(zso, zo), 1.0, -q2), scale(one, 1.0 - q2),
        interior_columns_disc(1, 0, p));
    rec("disc/op-y-identity", "1 - zeta_op* zeta_op = y_op^2",
        add(one, compose(zso, zo), 1.0, -1.0),
        compose(build_y_op(p), build_y_op(p)), interior_columns_disc(1, 0, p));

    const std::vector<std::pair<std::string, SparseOperator>> left = {
        {"z", z}, {"zstar", zs}, {"y", y}};
    const std::vector<std::pair<std::string, SparseOperator>> right = {
        {"z_op", build_z_op(p)}, {"zstar_op", build_zstar_op(p)}, {"y_op", build_y_op(p)}};
    const std::vector<std::size_t> inner = interior_columns_disc(1, 1, p);
    const SparseOperator zero(one.rows(), one.cols());
    for (const auto& [la, a] : left)
        for (const auto& [lb, b] : right)
            rec("disc/commute-" + la + "-" + lb, "[" + la + ", " + lb + "] = 0",
                add(compose(a, b), compose(b, a), 1.0, -1.0), zero, inner);
}

void circle_relations(const ChartParams& p, std::vector<RelationRecord>& out) {
    const SparseOperator u = build_u(p);
    const SparseOperator us = build_ustar(p);
    const SparseOperator dt = build_dt(p);
    const SparseOperator one =
        SparseOperator::identity(static_cast<std::size_t>(p.circle_dim()));
    const std::size_t dim = one.cols();

    out.push_back(RelationRecord::make(
        "circle/unitary", "u* u = 1 away from the top mode", dim - 1,
        relation_residual(compose(us, u), one, range_cols(0, dim - 1)), p.tol));
    out.push_back(RelationRecord::make(
        "circle/counitary", "u u* = 1 away from the bottom mode", dim - 1,
        relation_residual(compose(u, us), one, range_cols(1, dim)), p.tol));
    out.push_back(RelationRecord::make(
        "circle/derivation", "[d/dt, u] = i u", dim,
        relation_residual(add(compose(dt, u), compose(u, dt), 1.0, -1.0),
                          scale(u, Complex{0.0, 1.0}), range_cols(0, dim)),
        p.tol));
}

void block_relations(const ChartParams& p, std::vector<RelationRecord>& out) {
    struct Case {
        std::string tag;
        std::string stmt;
        SparseOperator full;
        BlockAxis axis;
        SparseOperator ref;
    };
    const std::vector<Case> cases = {
        {"block/c", "every fixed-n block of c equals the ladder block, bit for bit",
         build_c(p).full, BlockAxis::N, build_c_ladder_block(p, p.k_max)},
        {"block/d", "every fixed-n block of d equals the ladder block, bit for bit",
         build_d(p).full, BlockAxis::N, build_d_ladder_block(p, p.k_max)},
        {"block/c_op", "every fixed-k block of c_op equals the ladder block, bit for bit",
         build_c_op(p).full, BlockAxis::K, build_c_op_ladder_block(p, p.n_max)},
        {"block/d_op", "every fixed-k block of d_op equals the ladder block, bit for bit",
         build_d_op(p).full, BlockAxis::K, build_d_op_ladder_block(p, p.n_max)},
    };
    for (const Case& c : cases) {
        const std::vector<SparseOperator> blocks = block_decompose(c.full, c.axis, p);
        bool ok = !blocks.empty();
        for (const SparseOperator& b : blocks) ok = ok && b.same_entries(c.ref);
        out.push_back(
            RelationRecord::make(c.tag, c.stmt, blocks.size(), ok ? 0.0 : 1.0, 0.0));
    }
}

void qcalc_relations(const ChartParams& p, std::vector<RelationRecord>& out) {
    const std::vector<std::size_t> inner_k1 = interior_columns_disc(0, 1, p);
    const std::vector<std::size_t> inner_k2 = interior_columns_disc(0, 2, p);

    auto rec = [&](const std::string& tag, const std::string& stmt,
                   const SparseOperator& lhs, const SparseOperator& rhs,
                   const std::vector<std::size_t>& dom, double threshold) {
        out.push_back(RelationRecord::make(tag, stmt, dom.size(),
                                           relation_residual(lhs, rhs, dom), threshold));
    };

    const SparseOperator one = SparseOperator::identity(static_cast<std::size_t>(p.disc_dim()));
    rec("qcalc/ddz-z", "ddz z = 1", ddz_commutator(build_z(p), p), one, inner_k1, p.tol);
    rec("qcalc/ddzbar-zstar", "ddzbar zstar = 1", ddzbar_commutator(build_zstar(p), p),
        one, inner_k1, p.tol);
    rec("qcalc/ddz-y2", "ddz y^2 = -zstar", ddz_commutator(build_y_power(2, p), p),
        scale(build_zstar(p), -1.0), inner_k1, p.tol);
    // The bar direction picks up q^-2: the y^-2 in the twisted commutator
    // sits at the raised row index.
    rec("qcalc/ddzbar-y2", "ddzbar y^2 = -q^-2 z",
        ddzbar_commutator(build_y_power(2, p), p),
        scale(build_z(p), -1.0 / (p.q * p.q)), inner_k1, p.tol);

    out.push_back(RelationRecord::make(
        "qcalc/closed-vs-mult",
        "closed-form ddz equals the multiplication-assembled route",
        interior_columns_disc(1, 1, p).size(),
        entrywise_residual(ddz_closed_form(p), ddz_from_multiplications(p),
                           interior_columns_disc(1, 1, p)),
        p.tol));
    out.push_back(RelationRecord::make(
        "qcalc/closed-vs-mult-bar",
        "closed-form ddzbar equals the multiplication-assembled route",
        interior_columns_disc(1, 1, p).size(),
        entrywise_residual(ddzbar_closed_form(p), ddzbar_from_multiplications(p),
                           interior_columns_disc(1, 1, p)),
        p.tol));

    // Spectral rule on a function of y^2 vanishing at 0; the vanishing keeps
    // the q^(-2k) amplification from meeting any catastrophic cancellation.
    {
        const int count = p.sample_count();
        SpectralFunction f;  // f(x) = x / (1 + x)
        for (int m = 0; m < count; ++m) {
            const double x = pow_int(p.q, m);
            f.samples.push_back(x / (1.0 + x));
        }
        f.value_at_zero = 0.0;
        f.derivative_at_zero = 1.0;
        const SpectralFunction nf = nabla_q2(f, p);

        std::vector<Complex> fy2, nfy2;
        for (int k = 0; k < p.k_max; ++k) fy2.push_back(f.at(2 * k));
        for (int k = 0; k < p.k_max; ++k)
            nfy2.push_back(2 * k < nf.size() ? nf.at(2 * k) : Complex{0.0, 0.0});
        const SparseOperator G = [&] {
            SparseOperator m(static_cast<std::size_t>(p.disc_dim()),
                             static_cast<std::size_t>(p.disc_dim()), "f(y^2)");
            for (int n = 0; n < p.n_max; ++n)
                for (int k = 0; k < p.k_max; ++k)
                    m.add_entry(disc_flat(n, k, p), disc_flat(n, k, p),
                                fy2[static_cast<std::size_t>(k)]);
            return m;
        }();
        const SparseOperator NG = [&] {
            SparseOperator m(static_cast<std::size_t>(p.disc_dim()),
                             static_cast<std::size_t>(p.disc_dim()), "nabla f(y^2)");
            for (int n = 0; n < p.n_max; ++n)
                for (int k = 0; k < p.k_max; ++k)
                    m.add_entry(disc_flat(n, k, p), disc_flat(n, k, p),
                                nfy2[static_cast<std::size_t>(k)]);
            return m;
        }();
        rec("qcalc/spectral-rule", "ddz f(y^2) = -(nabla f)(y^2) zstar",
            ddz_commutator(G, p), scale(compose(NG, build_zstar(p)), -1.0), inner_k1,
            p.tol);
        rec("qcalc/spectral-rule-bar", "ddzbar f(y^2) = -q^-2 z (nabla f)(y^2)",
            ddzbar_commutator(G, p),
            scale(compose(build_z(p), NG), -1.0 / (p.q * p.q)), inner_k1, p.tol);
    }

    // Twisted Leibniz rule on pairs whose band coefficients vanish at 0.
    {
        const SparseOperator f = compose(build_y_power(2, p), build_z(p));  // y^2 z
        const SparseOperator g = build_zstar(p);
        const SparseOperator lhs = ddz_commutator(compose(f, g), p);
        const SparseOperator rhs =
            add(compose(ddz_commutator(f, p), g),
                compose(sigma_conjugate(f, 2.0, p), ddz_commutator(g, p)));
        rec("qcalc/leibniz", "ddz(f g) = ddz(f) g + sigma_2(f) ddz(g), f = y^2 z, g = zstar",
            lhs, rhs, inner_k2, p.tol);
    }
    {
        const SparseOperator f = build_zstar(p);
        const SparseOperator g = compose(build_y_power(2, p), build_z(p));
        const SparseOperator lhs = ddzbar_commutator(compose(f, g), p);
        const SparseOperator rhs =
            add(compose(ddzbar_commutator(f, p), g),
                compose(sigma_conjugate(f, 2.0, p), ddzbar_commutator(g, p)));
        rec("qcalc/leibniz-bar",
            "ddzbar(f g) = ddzbar(f) g + sigma_2(f) ddzbar(g), f = zstar, g = y^2 z",
            lhs, rhs, inner_k2, p.tol);
    }

    // Star compatibility in its twisted form.
    {
        const SparseOperator f = compose(build_y_power(2, p), build_z(p));
        const SparseOperator lhs = ddzbar_commutator(adjoint(f), p);
        const SparseOperator rhs = sigma_conjugate(adjoint(ddz_commutator(f, p)), 2.0, p);
        rec("qcalc/star-twist", "ddzbar(f*) = sigma_2((ddz f)*), f = y^2 z", lhs, rhs,
            inner_k2, p.tol);
    }

    rec("qcalc/chart-ddz", "ddz acts through the disc factor on the chart",
        ddz_commutator(tensor_with_circle(
                           build_z(p),
                           SparseOperator::identity(
                               static_cast<std::size_t>(p.circle_dim())),
                           p),
                       p),
        SparseOperator::identity(static_cast<std::size_t>(p.chart_dim())),
        interior_columns_chart({0, 1, 0}, p), p.tol);

    // Difference quotient of the identity: exactly one at every sample.
    {
        SpectralFunction id;
        for (int m = 0; m < p.sample_count(); ++m) id.samples.push_back(pow_int(p.q, m));
        id.value_at_zero = 0.0;
        id.derivative_at_zero = 1.0;
        const SpectralFunction n = nabla_q2(id, p);
        double worst = 0.0;
        for (int m = 0; m < n.size(); ++m)
            worst = std::max(worst, std::abs(n.at(m) - Complex{1.0, 0.0}));
        worst = std::max(worst, std::abs(n.value_at_zero - Complex{1.0, 0.0}));
        out.push_back(RelationRecord::make(
            "qcalc/nabla-identity", "the difference quotient of y is exactly 1",
            static_cast<std::size_t>(n.size()) + 1, worst, 0.0));
    }

    // Monomial rule against the basis-coefficient route (cancellation-free).
    {
        const std::vector<std::pair<int, int>> monos = {{1, 0}, {0, 1}, {2, 0},
                                                        {1, 1}, {2, 1}, {3, 2}};
        double worst = 0.0;
        std::size_t entries = 0;
        for (const auto& [n, k] : monos) {
            const auto coef = basis_expand(monomial_element(n, k, p), p);
            std::map<EtaIndex, Complex> pushed;
            for (const auto& [idx, c] : coef)
                for (const EtaTerm& t : ddz_eta(idx, p))
                    if (t.idx.k >= -t.idx.n) pushed[t.idx] += c * t.coef;
            // The two sources feeding one label cancel down from q^(-2n'); past
            // n' = 5 the cancellation exhausts double precision, so the
            // comparison stops there.
            std::erase_if(pushed, [](const auto& kv) { return kv.first.n > 5; });
            const MonomialTerm mt = ddz_monomial(n, k, p);
            std::map<EtaIndex, Complex> direct;
            if (mt.coef != 0.0)
                for (const auto& [idx, c] :
                     basis_expand(monomial_element(mt.n, mt.k, p), p))
                    if (idx.n <= 5) direct[idx] = mt.coef * c;
            worst = std::max(worst, map_residual(pushed, direct));
            entries += pushed.size();
        }
        out.push_back(RelationRecord::make(
            "qcalc/monomial-ddz",
            "ddz z^n zstar^k = q^(-2(n-1)) (1-q^(2n))/(1-q^2) z^(n-1) zstar^k, via "
            "leading basis coefficients",
            entries, worst, p.tol));
    }
    {
        const std::vector<std::pair<int, int>> monos = {{0, 1}, {1, 1}, {0, 2},
                                                        {2, 1}, {1, 2}, {2, 3}};
        double worst = 0.0;
        std::size_t entries = 0;
        for (const auto& [n, k] : monos) {
            const auto coef = basis_expand(monomial_element(n, k, p), p);
            std::map<EtaIndex, Complex> pushed;
            for (const auto& [idx, c] : coef)
                for (const EtaTerm& t : ddzbar_eta(idx, p))
                    if (t.idx.k >= -t.idx.n) pushed[t.idx] += c * t.coef;
            std::erase_if(pushed, [](const auto& kv) { return kv.first.n > 5; });
            const MonomialTerm mt = ddzbar_monomial(n, k, p);
            std::map<EtaIndex, Complex> direct;
            if (mt.coef != 0.0)
                for (const auto& [idx, c] :
                     basis_expand(monomial_element(mt.n, mt.k, p), p))
                    if (idx.n <= 5) direct[idx] = mt.coef * c;
            worst = std::max(worst, map_residual(pushed, direct));
            entries += pushed.size();
        }
        out.push_back(RelationRecord::make(
            "qcalc/monomial-ddzbar",
            "ddzbar z^n zstar^k = q^(-2n) (1-q^(2k))/(1-q^2) z^n zstar^(k-1), via "
            "leading basis coefficients",
            entries, worst, p.tol));
    }

    // Closed form against the same coefficients in the (band, point) labels.
    {
        double worst = 0.0;
        std::size_t checked = 0;
        const SparseOperator M = ddz_closed_form(p);
        for (int n = 1; n + 1 < p.n_max; ++n) {
            for (int k = 1; k + 1 < p.k_max; ++k) {
                const std::size_t col = disc_flat(n, k, p);
                for (const EtaTerm& t : ddz_eta(e_to_eta(n, k), p)) {
                    const auto [rn, rk] = eta_to_e(t.idx);
                    if (rn >= p.n_max || rk >= p.k_max || rk < 0) continue;
                    const Complex got = M.entry(disc_flat(rn, rk, p), col);
                    worst = std::max(worst,
                                     std::abs(got - t.coef) /
                                         std::max({1.0, std::abs(got), std::abs(t.coef)}));
                    ++checked;
                }
            }
        }
        out.push_back(RelationRecord::make(
            "qcalc/eta-vs-closed",
            "the (band, point) coefficients of ddz match the closed-form matrix",
            checked, worst, p.tol));
    }
}

void symbolic_relations(const ChartParams& p, std::vector<RelationRecord>& out) {
    std::mt19937 rng(0x5eed1234u);

    // Orthonormality of the normalized basis elements.
    {
        std::vector<EtaIndex> grid;
        for (int n = 0; n < 6; ++n)
            for (int k = -std::min(n, 3); k < 4; ++k) grid.push_back({n, k});
        double worst = 0.0;
        for (const EtaIndex& a : grid) {
            for (const EtaIndex& b : grid) {
                const Complex g =
                    inner_product(eta_element(a, p), eta_element(b, p), p);
                const Complex want = a == b ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                worst = std::max(worst, std::abs(g - want));
            }
        }
        out.push_back(RelationRecord::make("sym/gram",
                                           "the normalized basis is orthonormal",
                                           grid.size() * grid.size(), worst, p.tol));
    }

    // The unnormalized pairing: <band j at q^n, band l at q^m> =
    // (1-q) q^(alpha n) when (n,j) = (m,l), else 0.
    {
        double worst = 0.0;
        std::size_t count = 0;
        for (int n = 0; n < 5; ++n) {
            for (int j = -std::min(n, 2); j < 3; ++j) {
                for (int m = 0; m < 5; ++m) {
                    for (int l = -std::min(m, 2); l < 3; ++l) {
                        DiscElement a, b;
                        a.set_band(j, SpectralFunction::point_mass(
                                          j >= 0 ? n : n + j, p.sample_count()));
                        b.set_band(l, SpectralFunction::point_mass(
                                          l >= 0 ? m : m + l, p.sample_count()));
                        const Complex g = inner_product(a, b, p);
                        const Complex want = (n == m && j == l)
                                                 ? Complex{(1.0 - p.q) *
                                                               std::pow(p.q, p.alpha * n),
                                                           0.0}
                                                 : Complex{0.0, 0.0};
                        worst = std::max(worst,
                                         std::abs(g - want) /
                                             std::max({1.0, std::abs(g), std::abs(want)}));
                        ++count;
                    }
                }
            }
        }
        out.push_back(RelationRecord::make(
            "sym/gram-raw", "shifted point masses pair to (1-q) q^(alpha n)", count,
            worst, p.tol));
    }

    // Product then matrix equals matrix then product, away from the edges.
    {
        const int reach = 2;
        const int dim = p.sample_count() - 2 * reach;
        double worst = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            const DiscElement f = random_element(rng, p, reach);
            const DiscElement g = random_element(rng, p, reach);
            const SparseOperator lhs = to_matrix(normal_form_product(f, g, p), p, dim);
            const SparseOperator rhs =
                compose(to_matrix(f, p, dim), to_matrix(g, p, dim));
            worst = std::max(
                worst, entrywise_residual(
                           lhs, rhs,
                           range_cols(2 * reach, static_cast<std::size_t>(dim) -
                                                     2 * reach)));
        }
        out.push_back(RelationRecord::make(
            "sym/product-matrix",
            "the normal-form product matches the matrix product on interior columns",
            6, worst, p.tol));
    }

    // star is an involution (bitwise) and an anti-homomorphism.
    {
        const DiscElement f = random_element(rng, p, 2);
        const DiscElement g = random_element(rng, p, 2);
        const int dim = p.sample_count() - 4;
        const bool invol =
            to_matrix(star(star(f)), p, dim).same_entries(to_matrix(f, p, dim));
        out.push_back(RelationRecord::make("sym/star-involution",
                                           "star(star(f)) = f, bit for bit", 1,
                                           invol ? 0.0 : 1.0, 0.0));
        const SparseOperator lhs = to_matrix(star(normal_form_product(f, g, p)), p, dim);
        const SparseOperator rhs =
            to_matrix(normal_form_product(star(g), star(f), p), p, dim);
        out.push_back(RelationRecord::make(
            "sym/star-product", "star(f g) = star(g) star(f)", 1,
            entrywise_residual(lhs, rhs,
                               range_cols(4, static_cast<std::size_t>(dim) - 4)),
            p.tol));
    }

    // star as matrix adjoint: the normal form of star(f) is the adjoint matrix.
    {
        const DiscElement f = random_element(rng, p, 2);
        const int dim = p.sample_count() - 4;
        const SparseOperator lhs = to_matrix(star(f), p, dim);
        const SparseOperator rhs = adjoint(to_matrix(f, p, dim));
        out.push_back(RelationRecord::make(
            "sym/star-adjoint", "to_matrix(star(f)) = to_matrix(f)*", 1,
            entrywise_residual(lhs, rhs,
                               range_cols(2, static_cast<std::size_t>(dim) - 2)),
            p.tol));
    }

    // Expansion coefficients of the normalized basis elements.
    {
        double worst = 0.0;
        std::size_t count = 0;
        for (int n = 0; n < 6; ++n) {
            for (int k = -std::min(n, 3); k < 4; ++k) {
                const auto coef = basis_expand(eta_element({n, k}, p), p);
                for (const auto& [idx, c] : coef) {
                    const Complex want =
                        idx == EtaIndex{n, k} ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                    worst = std::max(worst, std::abs(c - want));
                    ++count;
                }
            }
        }
        out.push_back(RelationRecord::make(
            "sym/eta-coef", "each normalized basis element expands to one unit coefficient",
            count, worst, p.tol));
    }

    // Coefficients -> element -> coefficients round trip.
    {
        std::map<EtaIndex, Complex> coef;
        for (int n = 0; n < 10; ++n)
            for (int k = -std::min(n, 4); k < 5; ++k)
                coef[{n, k}] = random_complex(rng);
        const auto back = basis_expand(from_expansion(coef, p), p);
        out.push_back(RelationRecord::make("sym/roundtrip",
                                           "expansion inverts reconstruction",
                                           coef.size(), map_residual(coef, back), p.tol));
    }
}

void integration_relations(const ChartParams& p, std::vector<RelationRecord>& out) {
    std::mt19937 rng(0xab5eedu);

    {
        const IntegralResult r = integral_alpha(encode_generator(Generator::One, p), p);
        const double want = (1.0 - p.q) / (1.0 - std::pow(p.q, p.alpha));
        out.push_back(RelationRecord::make(
            "int/normalization", "integral of 1 = (1-q)/(1-q^alpha)", 1,
            std::abs(r.value - want), r.tail_bound + p.tol));
    }

    {
        DiscElement f;
        f.set_band(1, random_function(rng, p.sample_count()));
        f.set_band(-2, random_function(rng, p.sample_count()));
        const IntegralResult r = integral_alpha(f, p);
        out.push_back(RelationRecord::make(
            "int/shift-vanish", "shifted bands integrate to zero exactly", 2,
            std::abs(r.value), 0.0));
    }

    {
        SpectralFunction f = random_function(rng, p.sample_count());
        DiscElement e;
        e.set_band(0, f);
        const IntegralResult a = integral_alpha(e, p);
        const IntegralResult b = jackson_integral(f, p.alpha - 1.0, p);
        out.push_back(RelationRecord::make(
            "int/jackson-agree",
            "the weighted trace equals the q-integral against y^(alpha-1)", 1,
            std::abs(a.value - b.value) /
                std::max({1.0, std::abs(a.value), std::abs(b.value)}),
            p.tol));
    }

    {
        double worst = 0.0;
        double tail = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const DiscElement g = random_element(rng, p, 2);
            const DiscElement h = random_element(rng, p, 2);
            const TraceCheck t = verify_twisted_trace(g, h, p);
            worst = std::max(worst, t.residual());
            tail = std::max(tail, t.tail_bound);
        }
        out.push_back(RelationRecord::make(
            "int/twisted-trace", "integral of g h = integral of sigma_alpha(h) g", 5,
            worst, p.tol + tail));
    }

    {
        const DiscElement f = random_element(rng, p, 2);
        const DiscElement back = sigma_alpha(sigma_alpha(f, +1, p), -1, p);
        double worst = 0.0;
        for (const auto& [m, fn] : f.bands()) {
            const SpectralFunction* g = back.band(m);
            for (int j = 0; j < fn.size(); ++j) {
                const Complex a = fn.at(j);
                const Complex b = g ? g->at(j) : Complex{0.0, 0.0};
                worst = std::max(worst,
                                 std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
            }
        }
        out.push_back(RelationRecord::make(
            "int/sigma-inverse", "the modular scaling composes with its inverse to 1", 1,
            worst, p.tol));
    }

    out.push_back(RelationRecord::make(
        "int/op-adjoint-z", "adjoint(z_op) = q^(-alpha) zstar_op",
        static_cast<std::size_t>(p.disc_dim()), verify_op_adjoint_matrix(Generator::Z, p),
        p.tol));
    out.push_back(RelationRecord::make(
        "int/op-adjoint-zstar", "adjoint(zstar_op) = q^(alpha) z_op",
        static_cast<std::size_t>(p.disc_dim()),
        verify_op_adjoint_matrix(Generator::Zstar, p), p.tol));
    out.push_back(RelationRecord::make(
        "int/op-adjoint-y", "adjoint(y_op) = y_op", static_cast<std::size_t>(p.disc_dim()),
        verify_op_adjoint_matrix(Generator::Y, p), p.tol));
    out.push_back(RelationRecord::make(
        "int/op-adjoint-symbolic", "<f x, g> = <f, g sigma^(-1)(x*)> for x = z", 81,
        verify_op_adjoint_symbolic(Generator::Z, p, 3), p.tol));
}

}  // namespace

AuditReport run_full_audit(const ChartParams& p) {
    p.validate();
    AuditReport report;
    report.params = p;
    irreducible_relations(p, report.relations);
    disc_relations(p, report.relations);
    circle_relations(p, report.relations);
    for (RelationRecord& r : verify_su2_relations(p)) report.relations.push_back(r);
    block_relations(p, report.relations);
    qcalc_relations(p, report.relations);
    symbolic_relations(p, report.relations);
    integration_relations(p, report.relations);
    return report;
}

}  // namespace qchart
