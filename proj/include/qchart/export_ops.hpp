#ifndef QCHART_EXPORT_OPS_HPP
#define QCHART_EXPORT_OPS_HPP

#include <string>
#include <vector>

#include "qchart/params.hpp"
#include "qchart/sparse.hpp"

namespace qchart {

/// Exportable operators by name.
struct CatalogEntry {
    std::string name;
    std::string space;   // "irreducible" | "disc" | "chart" | "circle"
    std::string action;  // the defining action on a basis vector
};

const std::vector<CatalogEntry>& operator_catalog();
bool catalog_has(const std::string& name);

/// Build a catalog operator at the given parameters.
/// Throws std::invalid_argument for names outside the catalog.
SparseOperator build_catalog_operator(const std::string& name, const ChartParams& p);

/// Deterministic plain-text serialization: '#' header lines echoing the
/// parameters, the basis layout and the operator's action, then one
/// "row,col,re,im" line per entry, ordered by column then row.  Identical
/// inputs give identical bytes.
std::string export_operator(const std::string& name, const ChartParams& p);

}  // namespace qchart

#endif
