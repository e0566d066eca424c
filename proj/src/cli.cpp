#include "qchart/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "qchart/audit.hpp"
#include "qchart/export_ops.hpp"
#include "qchart/integral.hpp"
#include "qchart/parse.hpp"

namespace qchart {

namespace {

int deliver(const std::string& text, const std::string& path, std::ostream& out,
            std::ostream& err) {
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "cannot open '" << path << "' for writing\n";
        return 2;
    }
    f << text;
    f.flush();
    if (!f.good()) {
        err << "write to '" << path << "' failed\n";
        return 2;
    }
    return 0;
}

std::string integral_text(const IntegralResult& r) {
    char buf[160];
    std::string text;
    std::snprintf(buf, sizeof(buf), "value: %.17g %.17g\n", r.value.real(),
                  r.value.imag());
    text += buf;
    std::snprintf(buf, sizeof(buf), "tail_bound: %.17g\n", r.tail_bound);
    text += buf;
    std::snprintf(buf, sizeof(buf), "terms_used: %d\n", r.terms_used);
    text += buf;
    return text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite chart model of the quantum disc and quantum SU(2): "
                 "identity audits, operator export, weighted integrals"};
    app.name("qchart");
    app.require_subcommand(1);

    ChartParams p;
    std::string out_path;
    std::string op_name;
    std::string element_text;

    CLI::App* audit_cmd =
        app.add_subcommand("audit", "check every modelled identity and report residuals");
    CLI::App* export_cmd =
        app.add_subcommand("export", "print a catalog operator as row,col,re,im lines");
    CLI::App* integral_cmd =
        app.add_subcommand("integral", "integrate an element given in the element grammar");

    for (CLI::App* cmd : {audit_cmd, export_cmd, integral_cmd}) {
        cmd->add_option("--q", p.q, "deformation parameter, in (0,1)")
            ->capture_default_str();
        cmd->add_option("--alpha", p.alpha, "weight exponent of the integral, > 0")
            ->capture_default_str();
        cmd->add_option("--nmax", p.n_max, "window modes in the n direction")
            ->capture_default_str();
        cmd->add_option("--kmax", p.k_max, "window modes in the k direction")
            ->capture_default_str();
        cmd->add_option("--lmax", p.l_max, "circle modes run over [-lmax, lmax]")
            ->capture_default_str();
        cmd->add_option("--tol", p.tol, "residual threshold for the audits")
            ->capture_default_str();
        cmd->add_option("--terms", p.terms, "series length for the integral")
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    }
    export_cmd->add_option("name", op_name, "catalog operator name")->required();
    integral_cmd->add_option("element", element_text, "element expression")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        p.validate();
        if (*audit_cmd) {
            const AuditReport report = run_full_audit(p);
            const int rc = deliver(report.to_text(), out_path, out, err);
            return rc != 0 ? rc : (report.all_pass() ? 0 : 1);
        }
        if (*export_cmd) {
            if (!catalog_has(op_name)) {
                err << "unknown operator '" << op_name << "'; catalog:";
                for (const CatalogEntry& e : operator_catalog()) err << ' ' << e.name;
                err << '\n';
                return 2;
            }
            return deliver(export_operator(op_name, p), out_path, out, err);
        }
        const DiscElement e = parse_element(element_text, p);
        return deliver(integral_text(integral_alpha(e, p)), out_path, out, err);
    } catch (const std::exception& ex) {
        err << ex.what() << '\n';
        return 2;
    }
}

}  // namespace qchart
