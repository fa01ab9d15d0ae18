#include "entmono/report_io.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace entmono {

ReportFormat parse_report_format(std::string_view name) {
  if (name == "jsonl") return ReportFormat::jsonl;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

std::string_view to_string(ReportFormat fmt) {
  return fmt == ReportFormat::jsonl ? "jsonl" : "csv";
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

namespace {

void append_kv(std::string& s, std::string_view key, std::string_view raw_value,
               bool quote = false) {
  s += '"';
  s += key;
  s += "\":";
  if (quote) s += '"';
  s += raw_value;
  if (quote) s += '"';
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_report_row(const MonogamyReport& r, ReportFormat fmt) {
  const auto& p = r.params;
  if (fmt == ReportFormat::csv) {
    std::string s;
    s += r.state_id;
    s += ',';
    s += to_string(r.kind);
    s += ',';
    s += to_string(r.inequality);
    s += ',';
    s += format_double(p.eta);
    s += ',';
    s += format_double(p.k);
    s += ',';
    s += format_double(p.k_prime);
    s += ',';
    s += std::to_string(p.m);
    s += ',';
    s += format_double(r.lhs);
    s += ',';
    s += format_double(r.rhs);
    s += ',';
    s += format_double(r.residual);
    s += ',';
    s += bool_str(r.conditions_met);
    s += ',';
    s += std::to_string(r.seed);
    return s;
  }

  std::string s = "{";
  append_kv(s, "state_id", r.state_id, true);
  s += ',';
  append_kv(s, "kind", to_string(r.kind), true);
  s += ',';
  append_kv(s, "inequality", to_string(r.inequality), true);
  s += ',';
  append_kv(s, "eta", format_double(p.eta));
  s += ',';
  append_kv(s, "k", format_double(p.k));
  s += ',';
  append_kv(s, "k_prime", format_double(p.k_prime));
  s += ',';
  append_kv(s, "m", std::to_string(p.m));
  s += ',';
  append_kv(s, "lhs", format_double(r.lhs));
  s += ',';
  append_kv(s, "rhs", format_double(r.rhs));
  s += ',';
  append_kv(s, "residual", format_double(r.residual));
  s += ',';
  append_kv(s, "conditions_met", bool_str(r.conditions_met));
  s += ',';
  append_kv(s, "seed", std::to_string(r.seed));
  s += ",\"per_pair\":[";
  for (std::size_t i = 0; i < r.per_pair.size(); ++i) {
    if (i > 0) s += ',';
    s += '[';
    s += std::to_string(r.per_pair[i].first);
    s += ',';
    s += format_double(r.per_pair[i].second);
    s += ']';
  }
  s += ']';
  if (r.rhs_baseline.has_value()) {
    s += ',';
    append_kv(s, "rhs_baseline", format_double(*r.rhs_baseline));
    s += ',';
    append_kv(s, "tighter_than_baseline", bool_str(r.tighter_than_baseline()));
  }
  s += '}';
  return s;
}

std::string format_lemma_row(const LemmaSweepRow& row, ReportFormat fmt) {
  const std::string exponent = row.exponent ? format_double(*row.exponent) : "";
  const std::string mode = row.random_sampling ? "random" : "grid";
  if (fmt == ReportFormat::csv) {
    std::string s;
    s += to_string(row.inequality);
    s += ',';
    s += exponent;
    s += ',';
    s += mode;
    s += ',';
    s += std::to_string(row.n_points);
    s += ',';
    s += format_double(row.min_residual);
    s += ',';
    // semicolon-joined so the tuple stays one CSV cell
    for (std::size_t i = 0; i < row.argmin.size(); ++i) {
      if (i > 0) s += ';';
      s += format_double(row.argmin[i]);
    }
    return s;
  }

  std::string s = "{";
  append_kv(s, "inequality", to_string(row.inequality), true);
  s += ',';
  if (row.exponent) {
    append_kv(s, "exponent", exponent);
  } else {
    s += "\"exponent\":null";
  }
  s += ',';
  append_kv(s, "mode", mode, true);
  s += ',';
  append_kv(s, "n_points", std::to_string(row.n_points));
  s += ',';
  append_kv(s, "min_residual", format_double(row.min_residual));
  s += ",\"argmin\":[";
  for (std::size_t i = 0; i < row.argmin.size(); ++i) {
    if (i > 0) s += ',';
    s += format_double(row.argmin[i]);
  }
  s += "]}";
  return s;
}

}  // namespace entmono
