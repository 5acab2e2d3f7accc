#pragma once

#include <string>
#include <string_view>

#include "zinbiel/harness.hpp"

namespace zinbiel {

enum class ReportFormat { Json, Csv, Markdown };

/// Throws std::invalid_argument for anything but json, csv, markdown.
ReportFormat parse_report_format(std::string_view name);

/// Deterministic rendering; call Report::normalize first for canonical order.
std::string emit_report(const Report& report, ReportFormat format);

std::string emit_json(const Report& report);
/// One line per row: section,entry,pass,checks,failed,witness.
std::string emit_csv(const Report& report);
std::string emit_markdown(const Report& report);

}  // namespace zinbiel
