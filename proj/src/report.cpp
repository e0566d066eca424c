#include "qchart/report.hpp"

#include <algorithm>
#include <cstdio>

namespace qchart {

RelationRecord RelationRecord::make(std::string tag, std::string statement,
                                    std::size_t domain_size, double residual,
                                    double threshold) {
    RelationRecord r;
    r.tag = std::move(tag);
    r.statement = std::move(statement);
    r.domain_size = domain_size;
    r.residual = residual;
    r.threshold = threshold;
    r.pass = residual <= threshold;
    return r;
}

bool AuditReport::all_pass() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const RelationRecord& r) { return r.pass; });
}

std::string AuditReport::to_text() const {
    std::string out;
    char line[512];
    std::snprintf(line, sizeof(line),
                  "params: q=%.17g alpha=%.17g n_max=%d k_max=%d l_max=%d tol=%.17g terms=%d\n",
                  params.q, params.alpha, params.n_max, params.k_max, params.l_max,
                  params.tol, params.terms);
    out += line;
    std::size_t tag_width = 0;
    for (const auto& r : relations) tag_width = std::max(tag_width, r.tag.size());
    for (const auto& r : relations) {
        std::snprintf(line, sizeof(line), "%s  %-*s  domain=%-5zu residual=%.3e  threshold=%.3e  %s\n",
                      r.pass ? "PASS" : "FAIL", static_cast<int>(tag_width), r.tag.c_str(),
                      r.domain_size, r.residual, r.threshold, r.statement.c_str());
        out += line;
    }
    std::size_t passed = 0;
    for (const auto& r : relations)
        if (r.pass) ++passed;
    std::snprintf(line, sizeof(line), "result: %s (%zu/%zu relations hold)\n",
                  all_pass() ? "PASS" : "FAIL", passed, relations.size());
    out += line;
    return out;
}

}  // namespace qchart
