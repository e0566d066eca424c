#ifndef QCHART_AUDIT_HPP
#define QCHART_AUDIT_HPP

#include "qchart/params.hpp"
#include "qchart/report.hpp"

namespace qchart {

/// Every identity the model is supposed to satisfy, checked on interior
/// domains at the pinned thresholds.  Deterministic: randomized subsets use
/// fixed seeds.
AuditReport run_full_audit(const ChartParams& p);

}  // namespace qchart

#endif
