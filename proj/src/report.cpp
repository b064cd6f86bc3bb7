#include "loopstab/report.hpp"

namespace loopstab {

using json = nlohmann::ordered_json;

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ModMatrix& m) { return to_json(m.entries()); }

json to_json(const Check& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

namespace {

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const Check& c : checks) out.push_back(to_json(c));
  return out;
}

}  // namespace

json to_json(const SharpboundReport& report) {
  json v = json::array();
  for (Eigen::Index i = 0; i < report.parity_vector.size(); ++i) v.push_back(report.parity_vector(i));
  return {{"schema", kReportSchema},
          {"kind", "sharpbound"},
          {"loops", report.loops},
          {"parity_vector", v},
          {"generator_count", report.generator_count},
          {"image_order", report.image_order},
          {"expected_order", report.expected_order},
          {"checks", checks_json(report.checks)},
          {"passed", report.passed()}};
}

json to_json(const ExcludedReport& report) {
  std::vector<int> loops(report.rank, 1);
  if (!loops.empty()) loops[0] = report.s1;
  return {{"schema", kReportSchema},
          {"kind", "excluded"},
          {"loops", loops},
          {"r", report.rank},
          {"s1", report.s1},
          {"candidate_count", report.candidate_count},
          {"closure_order", report.closure_order},
          {"filtered_order", report.filtered_order},
          {"gamma_s1_trials", report.gamma_s1_trials},
          {"checks", checks_json(report.checks)},
          {"passed", report.passed()}};
}

json to_json(const CertifiedStabilizer& s, const Certificate& cert) {
  json images = json::array();
  for (const Word& w : s.gamma.images()) images.push_back(to_string(w));
  json inverse_images = json::array();
  for (const Word& w : s.gamma_inverse.images()) inverse_images.push_back(to_string(w));
  return {{"schema", kReportSchema},
          {"kind", "preimage"},
          {"name", s.name},
          {"construction", to_string(s.construction)},
          {"images", images},
          {"inverse_images", inverse_images},
          {"witness", to_string(s.witness)},
          {"b_matrix", to_json(b_matrix(s.gamma))},
          {"coset_map", to_string(s.coset_map)},
          {"certificate",
           {{"two_sided_inverse", cert.two_sided_inverse},
            {"b_matrix_matches", cert.b_matrix_matches},
            {"coset_action", cert.coset_action},
            {"fixes_all_cosets", cert.fixes_all_cosets},
            {"basis_preserved", cert.basis_preserved},
            {"passed", cert.passed()}}}};
}

}  // namespace loopstab
