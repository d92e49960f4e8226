#include "sturan/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "sturan/error.hpp"

namespace sturan {

namespace {

using ojson = nlohmann::ordered_json;

std::string g15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

ojson real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(g15(v).c_str(), nullptr);
}

ojson param_json(const ParamValue& v) {
  if (const auto* i = std::get_if<long long>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) return real(*d);
  return std::get<std::string>(v);
}

std::string param_text(const ParamValue& v) {
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return g15(*d);
  return std::get<std::string>(v);
}

ojson params_json(const ParamMap& params) {
  ojson out = ojson::object();
  for (const auto& [k, v] : params) out[k] = param_json(v);
  return out;
}

ojson formula_json(const FormulaValue& f) {
  ojson out;
  out["value"] = f.exact ? ojson(*f.exact) : real(f.value);
  out["polynomial"] = f.polynomial;
  out["validity"] = f.validity.to_string();
  out["expression"] = f.expression;
  return out;
}

ojson check_json(const TheoremCheck& c) {
  ojson out;
  out["theorem_id"] = c.theorem_id;
  out["params"] = params_json(c.params);
  out["formula_value"] = formula_json(c.formula_value);
  out["computed_value"] = c.computed_exact ? ojson(*c.computed_exact) : real(c.computed_value);
  out["witnesses_expected"] = c.witnesses_expected;
  out["witnesses_found"] = c.witnesses_found;
  out["verdict"] = c.verdict.to_string();
  out["mode"] = to_string(c.mode);
  return out;
}

ojson quantities_json(const std::vector<Quantity>& qs) {
  ojson out = ojson::array();
  for (const auto& q : qs) {
    ojson item;
    item["name"] = q.name;
    item["value"] = q.exact ? ojson(*q.exact) : real(q.value);
    out.push_back(std::move(item));
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::vector<std::string> quoted;
  for (const auto& f : fields) quoted.push_back(csv_field(f));
  return join(quoted, ',') + "\n";
}

std::string params_text(const ParamMap& params) {
  std::vector<std::string> kv;
  for (const auto& [k, v] : params) kv.push_back(k + "=" + param_text(v));
  return join(kv, ';');
}

std::string quantities_text(const std::vector<Quantity>& qs) {
  std::vector<std::string> kv;
  for (const auto& q : qs) kv.push_back(q.name + "=" + (q.exact ? std::to_string(*q.exact) : g15(q.value)));
  return join(kv, ';');
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open report for writing", path.string());
  out << text;
  if (!out.flush()) throw IoError("failed writing report", path.string());
}

}  // namespace

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw ParameterError("unknown report format '" + s + "' (expected json or csv)");
}

std::string render_check(const TheoremCheck& check) { return check_json(check).dump(2) + "\n"; }

std::string render_checks(const std::vector<TheoremCheck>& checks, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ojson arr = ojson::array();
    for (const auto& c : checks) arr.push_back(check_json(c));
    return arr.dump(2) + "\n";
  }
  std::string out = csv_row({"theorem_id", "params", "formula_value", "validity", "expression", "computed_value",
                             "witnesses_expected", "witnesses_found", "verdict", "mode"});
  for (const auto& c : checks) {
    const auto& f = c.formula_value;
    out += csv_row({c.theorem_id, params_text(c.params), f.exact ? std::to_string(*f.exact) : g15(f.value),
                    f.validity.to_string(), f.expression,
                    c.computed_exact ? std::to_string(*c.computed_exact) : g15(c.computed_value),
                    join(c.witnesses_expected, ';'), join(c.witnesses_found, ';'), c.verdict.to_string(),
                    to_string(c.mode)});
  }
  return out;
}

std::string render_comparison(const ComparisonReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ojson out;
    out["example_id"] = r.example_id;
    out["params"] = params_json(r.params);
    out["lhs"] = quantities_json(r.lhs);
    out["rhs"] = quantities_json(r.rhs);
    out["inequalities_expected"] = r.inequalities_expected;
    out["inequalities_observed"] = r.inequalities_observed;
    out["verdict"] = r.verdict.to_string();
    return out.dump(2) + "\n";
  }
  return csv_row({"example_id", "params", "lhs", "rhs", "inequalities_expected", "inequalities_observed", "verdict"}) +
         csv_row({r.example_id, params_text(r.params), quantities_text(r.lhs), quantities_text(r.rhs),
                  join(r.inequalities_expected, ';'), join(r.inequalities_observed, ';'), r.verdict.to_string()});
}

void emit_report(const std::vector<TheoremCheck>& checks, ReportFormat format, const std::filesystem::path& path) {
  write_text(render_checks(checks, format), path);
}

void emit_report(const ComparisonReport& report, ReportFormat format, const std::filesystem::path& path) {
  write_text(render_comparison(report, format), path);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sturan
