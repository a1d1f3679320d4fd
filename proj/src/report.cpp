#include "franel/report.hpp"

#include <algorithm>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace franel {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string flatten_params(const std::map<std::string, Integer>& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) {
      out += ';';
    }
    out += name;
    out += '=';
    out += value.str();
  }
  return out;
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["check_name"] = v.check_name;
  j["kind"] = check_kind_name(v.kind);
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : v.params) {
    params[name] = value.str();
  }
  j["params"] = std::move(params);
  if (v.modulus) {
    j["modulus"] = v.modulus->value().str();
  }
  j["lhs"] = v.lhs.str();
  j["rhs"] = v.rhs.str();
  if (v.modulus) {
    j["lhs_balanced"] = v.modulus->balanced(v.lhs).str();
    j["rhs_balanced"] = v.modulus->balanced(v.rhs).str();
  }
  if (v.lhs_exact) {
    j["lhs_exact"] = v.lhs_exact->str();
  }
  j["holds"] = v.holds;
  j["vacuous"] = v.vacuous;
  return j;
}

}  // namespace

std::string check_kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::identity: return "identity";
    case CheckKind::theorem: return "theorem";
    case CheckKind::lemma: return "lemma";
    case CheckKind::conjecture: return "conjecture";
  }
  return "unknown";
}

bool verdict_order(const Verdict& a, const Verdict& b) {
  if (a.check_name != b.check_name) {
    return a.check_name < b.check_name;
  }
  return a.params < b.params;
}

std::optional<ReportFormat> report_format_from_name(std::string_view name) {
  if (name == "plain") return ReportFormat::plain;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  return std::nullopt;
}

void finalize_report(ScanReport& report) {
  std::stable_sort(report.results.begin(), report.results.end(), verdict_order);
  report.counterexamples.clear();
  report.total = static_cast<long>(report.results.size());
  report.failed = 0;
  report.vacuous = 0;
  for (const Verdict& v : report.results) {
    if (!v.holds) {
      ++report.failed;
      report.counterexamples.push_back(v);
    }
    if (v.vacuous) {
      ++report.vacuous;
    }
  }
}

std::string render_json(const ScanReport& report, bool stable) {
  ordered_json j;
  j["suite"] = report.suite;
  j["tool_version"] = report.tool_version;
  j["parameter_grid"] = report.parameter_grid;
  if (!stable && !report.generated_at.empty()) {
    j["generated_at"] = report.generated_at;
  }
  ordered_json results = ordered_json::array();
  for (const Verdict& v : report.results) {
    results.push_back(verdict_to_json(v));
  }
  j["results"] = std::move(results);
  ordered_json counterexamples = ordered_json::array();
  for (const Verdict& v : report.counterexamples) {
    counterexamples.push_back(verdict_to_json(v));
  }
  j["counterexamples"] = std::move(counterexamples);
  j["summary"] = {{"total", Integer(report.total).str()},
                  {"failed", Integer(report.failed).str()},
                  {"vacuous", Integer(report.vacuous).str()}};
  j["errata_notes"] = report.errata_notes;
  if (!report.data.empty()) {
    ordered_json data = ordered_json::object();
    for (const auto& [name, values] : report.data) {
      ordered_json list = ordered_json::array();
      for (const Integer& value : values) {
        list.push_back(value.str());
      }
      data[name] = std::move(list);
    }
    j["data"] = std::move(data);
  }
  return j.dump(2) + "\n";
}

std::string render_csv(const ScanReport& report) {
  std::string out = "check_name,kind,params,modulus,lhs_residue,rhs_residue,holds,vacuous\n";
  for (const Verdict& v : report.results) {
    out += v.check_name;
    out += ',';
    out += check_kind_name(v.kind);
    out += ',';
    out += flatten_params(v.params);
    out += ',';
    if (v.modulus) {
      out += v.modulus->value().str();
    }
    out += ',';
    out += v.lhs.str();
    out += ',';
    out += v.rhs.str();
    out += ',';
    out += v.holds ? "true" : "false";
    out += ',';
    out += v.vacuous ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string render_plain(const ScanReport& report, bool stable) {
  std::ostringstream out;
  out << "suite: " << report.suite << " (v" << report.tool_version << ")\n";
  out << "grid: " << report.parameter_grid << "\n";
  if (!stable && !report.generated_at.empty()) {
    out << "generated: " << report.generated_at << "\n";
  }
  out << "checks: " << report.total << "  failed: " << report.failed
      << "  vacuous: " << report.vacuous << "\n";
  if (report.counterexamples.empty()) {
    out << "every check holds\n";
  } else {
    out << "counterexamples:\n";
    for (const Verdict& v : report.counterexamples) {
      out << "  " << v.check_name << " [" << flatten_params(v.params) << "] lhs=" << v.lhs
          << " rhs=" << v.rhs;
      if (v.modulus) {
        out << " (mod " << v.modulus->value() << ")";
      }
      out << "\n";
    }
  }
  for (const std::string& note : report.errata_notes) {
    out << "note: " << note << "\n";
  }
  for (const auto& [name, values] : report.data) {
    out << name << ":";
    for (const Integer& value : values) {
      out << ' ' << value;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_report(const ScanReport& report, ReportFormat format, bool stable) {
  switch (format) {
    case ReportFormat::plain: return render_plain(report, stable);
    case ReportFormat::json: return render_json(report, stable);
    case ReportFormat::csv: return render_csv(report);
  }
  return {};
}

int report_exit_code(const ScanReport& report) { return report.failed > 0 ? 1 : 0; }

std::string current_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace franel
