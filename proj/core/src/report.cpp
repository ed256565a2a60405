#include <sstream>

#include "json.hpp"
#include "zc/harness.hpp"

namespace zc {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_lines(const CampaignResult& r, const ReportOptions& options) {
  std::ostringstream os;
  for (const auto& v : r.violations) {
    ordered_json rec;
    rec["record"] = "violation";
    rec["graph6"] = v.graph6;
    rec["check"] = v.check;
    rec["detail"] = v.detail;
    os << rec.dump() << '\n';
  }
  for (const auto& w : r.equality_witnesses) {
    ordered_json rec;
    rec["record"] = "equality_witness";
    rec["graph6"] = w;
    os << rec.dump() << '\n';
  }
  ordered_json summary;
  summary["record"] = "summary";
  summary["corpus"] = r.corpus_description;
  summary["graphsScanned"] = r.graphs_scanned;
  summary["certified"] = r.certified();
  summary["violations"] = r.violations.size();
  summary["equalityWitnesses"] = r.equality_witnesses.size();
  ordered_json counters = ordered_json::object();
  for (const auto& [name, count] : r.counters) counters[name] = count;
  summary["counters"] = std::move(counters);
  if (options.include_elapsed) summary["elapsedSeconds"] = r.elapsed.count();
  os << summary.dump() << '\n';
  return os.str();
}

std::string csv(const CampaignResult& r) {
  std::ostringstream os;
  os << "record,graph6,check,detail\n";
  for (const auto& v : r.violations) {
    os << "violation," << csv_field(v.graph6) << ',' << csv_field(v.check) << ',' << csv_field(v.detail) << '\n';
  }
  for (const auto& w : r.equality_witnesses) os << "equality_witness," << csv_field(w) << ",,\n";
  return os.str();
}

}  // namespace

std::string emit_report(const CampaignResult& result, ReportFormat format, const ReportOptions& options) {
  return format == ReportFormat::Csv ? csv(result) : json_lines(result, options);
}

}  // namespace zc
