#ifndef QCHART_PARSE_HPP
#define QCHART_PARSE_HPP

#include <string>

#include "qchart/element.hpp"
#include "qchart/params.hpp"

namespace qchart {

/// Parse the small element notation used by the command line:
///
///   element := ['-'] term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ['^' uint]
///   atom    := 'one' | 's' | 'sstar' | 'z' | 'zstar' | 'y'
///            | 'delta' '(' 'q' ',' uint ')'      point mass at q^n
///            | 'eta' '(' int ',' int ')'         normalized basis element
///            | number | '(' element ')'
///
/// Example: "s^2 * delta(q,3) + 0.5 * y".  Throws std::invalid_argument with
/// a position-annotated message on bad input.
DiscElement parse_element(const std::string& text, const ChartParams& p);

}  // namespace qchart

#endif
