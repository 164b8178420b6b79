#include "meancert/report.hpp"

#include <fstream>

#include <json.hpp>

namespace meancert {

std::string certification_report_json(const CertificationRun& run) {
  nlohmann::json doc;
  doc["precision_bits"] = run.precision_bits;
  doc["identity_coefficientwise"] = run.identity_ok;
  doc["derivative_tower"] = run.tower_ok;
  doc["upper_weight_factorization_exact"] = run.mu_ok;
  doc["cascade_ordering"] = run.cascade_ordering_ok;
  doc["all_passed"] = run.all_passed;

  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : run.certificates) {
    nlohmann::json rec;
    rec["id"] = c.id;
    rec["paper_ref"] = c.claim;
    rec["lower"] = c.lower;
    rec["upper"] = c.upper;
    rec["sign"] = to_string(c.sign);
    rec["precision_bits"] = c.precision_bits;
    rec["status"] = to_string(c.status);
    rec["ok"] = c.ok;
    certs.push_back(std::move(rec));
  }
  doc["certificates"] = std::move(certs);
  return doc.dump(2) + "\n";
}

void write_certification_report(const CertificationRun& run,
                                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  out << certification_report_json(run);
  if (!out) throw std::runtime_error("failed writing report file: " + path);
}

}  // namespace meancert
