#include "qchart/export_ops.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "qchart/disc_ops.hpp"
#include "qchart/qcalc.hpp"
#include "qchart/su2_ops.hpp"

namespace qchart {

const std::vector<CatalogEntry>& operator_catalog() {
    static const std::vector<CatalogEntry> catalog = {
        {"z", "disc", "e(n,k) -> sqrt(1-q^(2(k+1))) e(n,k+1)"},
        {"zstar", "disc", "e(n,k) -> sqrt(1-q^(2k)) e(n,k-1)"},
        {"y", "disc", "e(n,k) -> q^k e(n,k)"},
        {"z_op", "disc", "e(n,k) -> q^(-alpha/2) sqrt(1-q^(2n)) e(n-1,k)"},
        {"zstar_op", "disc", "e(n,k) -> q^(alpha/2) sqrt(1-q^(2(n+1))) e(n+1,k)"},
        {"y_op", "disc", "e(n,k) -> q^n e(n,k)"},
        {"zeta_op", "disc", "e(n,k) -> sqrt(1-q^(2n)) e(n-1,k)"},
        {"zetastar_op", "disc", "e(n,k) -> sqrt(1-q^(2(n+1))) e(n+1,k)"},
        {"ddz", "disc",
         "e(n,k) -> q^(-2k)/(1-q^2) (q^2 sqrt(1-q^(2k)) e(n,k-1)"
         " - q^(alpha/2) sqrt(1-q^(2(n+1))) e(n+1,k))"},
        {"ddzbar", "disc",
         "e(n,k) -> -q^(-2k)/(1-q^2) (q^(-2) sqrt(1-q^(2(k+1))) e(n,k+1)"
         " - q^(-alpha/2) sqrt(1-q^(2n)) e(n-1,k))"},
        {"c", "chart", "e(n,k,l) -> q^k e(n,k,l+1)"},
        {"d", "chart", "e(n,k,l) -> sqrt(1-q^(2(k+1))) e(n,k+1,l)"},
        {"c_op", "chart", "e(n,k,l) -> q^n e(n,k,l-1)"},
        {"d_op", "chart", "e(n,k,l) -> sqrt(1-q^(2n)) e(n-1,k,l)"},
        {"dt", "circle", "b(l) -> i l b(l)"},
        {"u", "circle", "b(l) -> b(l+1)"},
    };
    return catalog;
}

bool catalog_has(const std::string& name) {
    const auto& c = operator_catalog();
    return std::any_of(c.begin(), c.end(),
                       [&](const CatalogEntry& e) { return e.name == name; });
}

SparseOperator build_catalog_operator(const std::string& name, const ChartParams& p) {
    if (name == "z") return build_z(p);
    if (name == "zstar") return build_zstar(p);
    if (name == "y") return build_y(p);
    if (name == "z_op") return build_z_op(p);
    if (name == "zstar_op") return build_zstar_op(p);
    if (name == "y_op") return build_y_op(p);
    if (name == "zeta_op") return build_zeta_op(p);
    if (name == "zetastar_op") return build_zetastar_op(p);
    if (name == "ddz") return ddz_closed_form(p);
    if (name == "ddzbar") return ddzbar_closed_form(p);
    if (name == "c") return build_c(p).full;
    if (name == "d") return build_d(p).full;
    if (name == "c_op") return build_c_op(p).full;
    if (name == "d_op") return build_d_op(p).full;
    if (name == "dt") return build_dt(p);
    if (name == "u") return build_u(p);
    throw std::invalid_argument("unknown operator '" + name + "'");
}

namespace {

void append_fmt(std::string& out, const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    out += buf;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : operator_catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown operator '" + name + "'");
}

}  // namespace

std::string export_operator(const std::string& name, const ChartParams& p) {
    const CatalogEntry& entry = catalog_entry(name);
    const SparseOperator m = build_catalog_operator(name, p);
    std::string out;
    out += "# operator: " + entry.name + "\n";
    append_fmt(out, "# q=%.17g alpha=%.17g n_max=%d k_max=%d l_max=%d\n", p.q, p.alpha,
               p.n_max, p.k_max, p.l_max);
    if (entry.space == "disc")
        append_fmt(out, "# basis: e(n,k), flat index n*k_max + k, dim %zu\n", m.cols());
    else if (entry.space == "chart")
        append_fmt(out,
                   "# basis: e(n,k,l), flat index (n*k_max + k)*(2*l_max+1) + l + "
                   "l_max, dim %zu\n",
                   m.cols());
    else if (entry.space == "circle")
        append_fmt(out, "# basis: b(l), flat index l + l_max, dim %zu\n", m.cols());
    else
        append_fmt(out, "# basis: e(n), dim %zu\n", m.cols());
    out += "# action: " + entry.action + "\n";
    out += "# columns: row,col,re,im\n";
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const SparseOperator::Entry& e : m.column(c))
            append_fmt(out, "%zu,%zu,%.17g,%.17g\n", e.row, c, e.coef.real(),
                       e.coef.imag());
    return out;
}

}  // namespace qchart
