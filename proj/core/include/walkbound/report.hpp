#pragma once

#include <string>

#include "walkbound/campaign.hpp"

namespace walkbound {

enum class ReportFormat { json, csv, text };

const char* report_format_name(ReportFormat f);
ReportFormat report_format_from_name(const std::string& name);

// Serializes a campaign report. Deterministic: fixed key order, numeric
// values as canonical scalar strings (rationals "p/q", floats %.17g), no
// timestamps. Two runs with the same config and seed emit identical bytes.
//   json: full structure {config, instances, summary};
//   csv:  one row per (instance, source, target, bound-kind) record;
//   text: human summary, one line per instance plus totals.
// include_records=false drops per-pair rows from json (summaries stay).
std::string emit_report(const Report& report, ReportFormat format, bool include_records = true);

// Exact inverse of emit_report(json): every numeric field reconstructs
// bit-for-bit (rationals exactly, floats via round-tripping %.17g).
Report parse_report_json(const std::string& text);

}  // namespace walkbound
