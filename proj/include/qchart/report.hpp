#ifndef QCHART_REPORT_HPP
#define QCHART_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qchart/params.hpp"

namespace qchart {

/// One audited identity: a stable tag for tooling, the identity in plain
/// text, the number of columns (or sample points) checked, the worst
/// residual, and the threshold it was held against.
struct RelationRecord {
    std::string tag;
    std::string statement;
    std::size_t domain_size = 0;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;

    static RelationRecord make(std::string tag, std::string statement,
                               std::size_t domain_size, double residual,
                               double threshold);
};

struct AuditReport {
    ChartParams params;
    std::vector<RelationRecord> relations;

    bool all_pass() const;
    std::string to_text() const;  // deterministic, one line per relation
};

}  // namespace qchart

#endif
