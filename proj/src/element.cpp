#include "qchart/element.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qchart/disc_ops.hpp"

namespace qchart {

namespace {

double eta_norm(int n, const ChartParams& p) {
    // sqrt(1-q) q^(alpha n / 2): the weight of the point q^n under the
    // integral, split evenly between an element and its star.
    return std::sqrt(1.0 - p.q) * std::pow(p.q, p.alpha * n / 2.0);
}

/// Samples of x -> h(q^{-t} x) restricted to points q^j with j >= t, zero
/// below: the coefficient left behind by contracting s^t ... (s*)^t.
SpectralFunction truncate_shift(const SpectralFunction& h, int t, double q) {
    if (t == 0) return h;
    SpectralFunction out;
    out.samples.assign(static_cast<std::size_t>(h.size() + t), Complex{0.0, 0.0});
    for (int j = 0; j < h.size(); ++j)
        out.samples[static_cast<std::size_t>(j + t)] = h.samples[static_cast<std::size_t>(j)];
    out.value_at_zero = h.value_at_zero;
    if (h.derivative_at_zero) out.derivative_at_zero = pow_int(q, -t) * *h.derivative_at_zero;
    return out;
}

}  // namespace

const SpectralFunction* DiscElement::band(int m) const {
    auto it = bands_.find(m);
    return it == bands_.end() ? nullptr : &it->second;
}

void DiscElement::set_band(int m, SpectralFunction f) {
    if (f.is_zero())
        bands_.erase(m);
    else
        bands_[m] = std::move(f);
}

bool DiscElement::is_c1() const {
    return std::all_of(bands_.begin(), bands_.end(),
                       [](const auto& kv) { return kv.second.is_c1(); });
}

DiscElement encode_generator(Generator g, const ChartParams& p) {
    const int count = p.sample_count();
    DiscElement out;
    switch (g) {
        case Generator::One:
            out.set_band(0, SpectralFunction::constant(1.0, count));
            break;
        case Generator::S:
            out.set_band(1, SpectralFunction::constant(1.0, count));
            break;
        case Generator::Sstar:
            out.set_band(-1, SpectralFunction::constant(1.0, count));
            break;
        case Generator::Z:
        case Generator::Zstar: {
            // z = s sqrt(1-q^2 y^2); its star carries the same coefficient on
            // the other side of the shift.
            SpectralFunction f;
            f.samples.reserve(static_cast<std::size_t>(count));
            for (int m = 0; m < count; ++m) f.samples.push_back(ladder_up_coef(p.q, m));
            f.value_at_zero = 1.0;
            f.derivative_at_zero = Complex{0.0, 0.0};
            out.set_band(g == Generator::Z ? 1 : -1, std::move(f));
            break;
        }
        case Generator::Y: {
            SpectralFunction f;
            for (int m = 0; m < count; ++m) f.samples.push_back(pow_int(p.q, m));
            f.value_at_zero = 0.0;
            f.derivative_at_zero = 1.0;
            out.set_band(0, std::move(f));
            break;
        }
        case Generator::Y2: {
            SpectralFunction f;
            for (int m = 0; m < count; ++m) f.samples.push_back(pow_int(p.q, 2 * m));
            f.value_at_zero = 0.0;
            f.derivative_at_zero = Complex{0.0, 0.0};
            out.set_band(0, std::move(f));
            break;
        }
    }
    return out;
}

DiscElement encode_delta(int n, const ChartParams& p) {
    DiscElement out;
    out.set_band(0, SpectralFunction::point_mass(n, p.sample_count()));
    return out;
}

DiscElement add(const DiscElement& a, const DiscElement& b, Complex wa, Complex wb) {
    DiscElement out;
    for (const auto& [m, f] : a.bands()) {
        if (const SpectralFunction* g = b.band(m))
            out.set_band(m, qchart::add(f, *g, wa, wb));
        else
            out.set_band(m, scale(f, wa));
    }
    for (const auto& [m, g] : b.bands())
        if (!a.band(m)) out.set_band(m, scale(g, wb));
    return out;
}

DiscElement star(const DiscElement& a) {
    // (s^m g)* = conj(g) (s*)^m and conversely: the band flips sign and the
    // coefficient conjugates, with no pull-through in this normal form.
    DiscElement out;
    for (const auto& [m, f] : a.bands()) out.set_band(-m, conj(f));
    return out;
}

DiscElement normal_form_product(const DiscElement& a, const DiscElement& b,
                                const ChartParams& p) {
    DiscElement out;
    for (const auto& [m1, f] : a.bands()) {
        for (const auto& [m2, g] : b.bands()) {
            int band = 0;
            SpectralFunction h;
            if (m1 >= 0 && m2 >= 0) {
                band = m1 + m2;
                h = multiply(f.precompose_shift(m2, p.q), g);
            } else if (m1 >= 0 && m2 < 0) {
                const int b2 = -m2;
                const int t = std::min(m1, b2);
                band = m1 - b2;
                h = truncate_shift(multiply(f, g), t, p.q);
            } else if (m1 < 0 && m2 >= 0) {
                const int b1 = -m1;
                band = m2 - b1;
                // (s*)^{b1} s^{m2} contracts cleanly: s* s = 1.
                if (band >= 0)
                    h = multiply(f.precompose_shift(band, p.q), g);
                else
                    h = multiply(f, g.precompose_shift(-band, p.q));
            } else {
                band = m1 + m2;
                h = multiply(f, g.precompose_shift(-m1, p.q));
            }
            if (h.size() <= 0)
                throw std::runtime_error("window exhausted: band " + std::to_string(m1) +
                                         " * band " + std::to_string(m2) +
                                         " leaves no spectral samples");
            if (const SpectralFunction* prev = out.band(band))
                out.set_band(band, qchart::add(*prev, h));
            else
                out.set_band(band, std::move(h));
        }
    }
    return out;
}

DiscElement monomial_element(int n, int k, const ChartParams& p) {
    if (n < 0 || k < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
    DiscElement out = encode_generator(Generator::One, p);
    const DiscElement z = encode_generator(Generator::Z, p);
    const DiscElement zs = encode_generator(Generator::Zstar, p);
    for (int i = 0; i < n; ++i) out = normal_form_product(out, z, p);
    for (int i = 0; i < k; ++i) out = normal_form_product(out, zs, p);
    return out;
}

DiscElement eta_element(EtaIndex idx, const ChartParams& p) {
    DiscElement out;
    if (idx.n < 0) throw std::invalid_argument("point index must be nonnegative");
    if (idx.k < -idx.n) return out;  // the shifts annihilate the point mass
    const int point = idx.k >= 0 ? idx.n : idx.n + idx.k;
    const double c = std::pow(p.q, -p.alpha * idx.n / 2.0) / std::sqrt(1.0 - p.q);
    out.set_band(idx.k, scale(SpectralFunction::point_mass(point, p.sample_count()), c));
    return out;
}

SparseOperator to_matrix(const DiscElement& a, const ChartParams& p, int dim) {
    const int d = dim > 0 ? dim : p.sample_count();
    SparseOperator out(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (const auto& [m, g] : a.bands()) {
        const int need = d - std::abs(m);
        if (g.size() < need)
            throw std::runtime_error("band " + std::to_string(m) + " has " +
                                     std::to_string(g.size()) + " samples, needs " +
                                     std::to_string(need) + " for a " + std::to_string(d) +
                                     "-dim matrix");
        if (m >= 0) {
            for (int j = 0; j + m < d; ++j)
                out.add_entry(static_cast<std::size_t>(j + m), static_cast<std::size_t>(j),
                              g.samples[static_cast<std::size_t>(j)]);
        } else {
            const int b = -m;
            for (int j = b; j < d; ++j)
                out.add_entry(static_cast<std::size_t>(j - b), static_cast<std::size_t>(j),
                              g.samples[static_cast<std::size_t>(j - b)]);
        }
    }
    return out;
}

std::map<EtaIndex, Complex> basis_expand(const DiscElement& a, const ChartParams& p) {
    std::map<EtaIndex, Complex> out;
    for (const auto& [m, g] : a.bands()) {
        for (int n = std::max(0, -m);; ++n) {
            const int sample = n + std::min(m, 0);
            if (sample >= g.size()) break;
            const Complex c = eta_norm(n, p) * g.samples[static_cast<std::size_t>(sample)];
            if (c != Complex{0.0, 0.0}) out[{n, m}] = c;
        }
    }
    return out;
}

DiscElement from_expansion(const std::map<EtaIndex, Complex>& coef, const ChartParams& p) {
    std::map<int, SpectralFunction> bands;
    for (const auto& [idx, c] : coef) {
        const int sample = idx.n + std::min(idx.k, 0);
        if (sample < 0)
            throw std::invalid_argument("coefficient at an inadmissible label");
        SpectralFunction& f = bands[idx.k];
        if (f.size() <= sample) f.samples.resize(static_cast<std::size_t>(sample) + 1);
        f.samples[static_cast<std::size_t>(sample)] = c / eta_norm(idx.n, p);
    }
    DiscElement out;
    for (auto& [m, f] : bands) out.set_band(m, std::move(f));
    return out;
}

}  // namespace qchart
