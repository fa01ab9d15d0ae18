#pragma once

#include "entmono/monogamy.hpp"

#include <string>
#include <string_view>

namespace entmono {

enum class ReportFormat { jsonl, csv };

ReportFormat parse_report_format(std::string_view name);
std::string_view to_string(ReportFormat fmt);

// Shortest round-trip decimal rendering shared by every writer, so repeated
// runs with one config produce byte-identical report bodies.
std::string format_double(double v);

inline constexpr std::string_view kMonogamyCsvHeader =
    "state_id,kind,inequality,eta,k,k_prime,m,lhs,rhs,residual,conditions_met,seed";

// One record, no trailing newline. CSV rows carry exactly the columns above;
// JSON lines carry the same keys plus per_pair and, when present, the
// tightness baseline.
std::string format_report_row(const MonogamyReport& report, ReportFormat fmt);

inline constexpr std::string_view kLemmaCsvHeader =
    "inequality,exponent,mode,n_points,min_residual,argmin";

std::string format_lemma_row(const LemmaSweepRow& row, ReportFormat fmt);

}  // namespace entmono
