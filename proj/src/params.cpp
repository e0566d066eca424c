#include "qchart/params.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qchart {

int ChartParams::sample_count() const {
    if (m_max > 0) return m_max;
    return 2 * std::max(n_max, k_max) + 4;
}

void ChartParams::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (!(q > 0.0 && q < 1.0)) fail("q must lie strictly between 0 and 1");
    if (!(alpha > 0.0)) fail("alpha must be positive");
    if (n_max < 2) fail("n_max must be at least 2");
    if (k_max < 2) fail("k_max must be at least 2");
    if (l_max < 1) fail("l_max must be at least 1");
    if (!(tol > 0.0)) fail("tol must be positive");
    if (terms < 1) fail("terms must be at least 1");
    if (m_max < 0) fail("m_max must be nonnegative");
}

std::pair<int, int> disc_unflat(std::size_t idx, const ChartParams& p) {
    return {static_cast<int>(idx) / p.k_max, static_cast<int>(idx) % p.k_max};
}

BasisIndex chart_unflat(std::size_t idx, const ChartParams& p) {
    const int per = p.circle_dim();
    const int l = static_cast<int>(idx % per) - p.l_max;
    auto [n, k] = disc_unflat(idx / per, p);
    return {n, k, l};
}

std::vector<std::pair<int, int>> enumerate_disc_basis(const ChartParams& p) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(p.n_max) * p.k_max);
    for (int n = 0; n < p.n_max; ++n)
        for (int k = 0; k < p.k_max; ++k) out.emplace_back(n, k);
    return out;
}

std::pair<int, int> eta_to_e(EtaIndex idx) {
    if (idx.k < -idx.n)
        throw std::invalid_argument("band " + std::to_string(idx.k) + " at point " +
                                    std::to_string(idx.n) +
                                    " is the zero vector, not a basis label");
    return {idx.n, idx.n + idx.k};
}

EtaIndex e_to_eta(int n, int k) { return {n, k - n}; }

std::vector<BasisIndex> interior_domain(const ShiftBudget& b, const ChartParams& p) {
    std::vector<BasisIndex> out;
    for (int n = b.dn; n < p.n_max - b.dn; ++n)
        for (int k = b.dk; k < p.k_max - b.dk; ++k)
            for (int l = -(p.l_max - b.dl); l <= p.l_max - b.dl; ++l)
                out.push_back({n, k, l});
    return out;
}

std::vector<std::size_t> interior_columns_irreducible(int d, int dim) {
    std::vector<std::size_t> out;
    for (int n = d; n < dim - d; ++n) out.push_back(static_cast<std::size_t>(n));
    return out;
}

std::vector<std::size_t> interior_columns_disc(int dn, int dk, const ChartParams& p) {
    std::vector<std::size_t> out;
    for (int n = dn; n < p.n_max - dn; ++n)
        for (int k = dk; k < p.k_max - dk; ++k) out.push_back(disc_flat(n, k, p));
    return out;
}

std::vector<std::size_t> interior_columns_chart(const ShiftBudget& b, const ChartParams& p) {
    std::vector<std::size_t> out;
    for (const auto& idx : interior_domain(b, p))
        out.push_back(chart_flat(idx.n, idx.k, idx.l, p));
    return out;
}

double pow_int(double q, int m) {
    if (m < 0) return 1.0 / pow_int(q, -m);
    double r = 1.0;
    for (int i = 0; i < m; ++i) r *= q;
    return r;
}

}  // namespace qchart
