#include "mmods/report_io.hpp"

#include <algorithm>
#include <json.hpp>

namespace mmods {

namespace {

std::vector<const Finding*> sortedFindings(const ValidationReport& report) {
  std::vector<const Finding*> out;
  for (const auto& f : report.findings) out.push_back(&f);
  std::stable_sort(out.begin(), out.end(), [](const Finding* a, const Finding* b) {
    return std::tie(a->code, a->focus, a->triples, a->detail) < std::tie(b->code, b->focus, b->triples, b->detail);
  });
  return out;
}

}  // namespace

std::string writeReportJson(const ValidationReport& report) {
  nlohmann::ordered_json doc;
  doc["version"] = kReportFormatVersion;
  doc["source"] = report.source;
  doc["summary"] = {{"errors", report.errors()}, {"warnings", report.warnings()}, {"infos", report.infos()}};
  auto& findings = doc["findings"] = nlohmann::ordered_json::array();
  for (const Finding* f : sortedFindings(report)) {
    nlohmann::ordered_json entry;
    entry["code"] = f->code;
    entry["axiom"] = f->axiomId;
    entry["severity"] = toString(f->severity);
    entry["focus"] = f->focus.toNTriples();
    entry["detail"] = f->detail;
    findings.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string writeReportText(const ValidationReport& report) {
  std::string out;
  for (const Finding* f : sortedFindings(report)) {
    out += std::string(toString(f->severity)) + " " + f->code + " (axiom " + f->axiomId + ") " +
           f->focus.toNTriples() + ": " + f->detail + "\n";
  }
  out += (report.source.empty() ? std::string() : report.source + ": ") + std::to_string(report.errors()) +
         " error(s), " + std::to_string(report.warnings()) + " warning(s), " + std::to_string(report.infos()) +
         " info(s)\n";
  return out;
}

}  // namespace mmods
