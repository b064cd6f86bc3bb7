#pragma once

#include "loopstab/excluded.hpp"
#include "loopstab/stabilizer.hpp"

#include "json.hpp"

namespace loopstab {

inline constexpr int kReportSchema = 1;

// Row-major nested arrays.
nlohmann::ordered_json to_json(const IntMatrix& m);
nlohmann::ordered_json to_json(const ModMatrix& m);
nlohmann::ordered_json to_json(const Check& c);
nlohmann::ordered_json to_json(const SharpboundReport& report);
nlohmann::ordered_json to_json(const ExcludedReport& report);
nlohmann::ordered_json to_json(const CertifiedStabilizer& s, const Certificate& cert);

}  // namespace loopstab
