#pragma once

#include <string>
#include <vector>

#include "semistab/catalog.hpp"
#include "semistab/certify.hpp"

namespace semistab {

/// "n=5 s=3 k=1 a=3 t=1 Unresolved [rule] detail".
std::string format_case_row(const CaseRow& row);

/// Machine-readable verdict: outcome, pair, certificate / witness /
/// residual (see docs/output_format.md).
std::string verdict_to_json(const LogPair& pair, const Verdict& verdict, int indent = 2);
/// Multi-line human summary of a verdict.
std::string verdict_to_text(const LogPair& pair, const Verdict& verdict);

/// Certificate tree as an indented outline, one rule per line.
std::string certificate_outline(const CertificateNode& node);

std::string crosscheck_to_text(const DiscrepancyReport& report);
std::string catalog_report_to_text(const CatalogReport& report);

} // namespace semistab
