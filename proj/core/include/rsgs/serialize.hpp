#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rsgs/functional.hpp"
#include "rsgs/profile.hpp"
#include "rsgs/solver.hpp"
#include "rsgs/symmetry.hpp"
#include "rsgs/verify.hpp"

namespace rsgs {

using json = nlohmann::ordered_json;

json to_json(const ProblemParams& p);
ProblemParams params_from_json(const json& j);

json to_json(const EnergyBreakdown& e);
EnergyBreakdown breakdown_from_json(const json& j);

json to_json(const IdentityReport& r);
IdentityReport report_from_json(const json& j);

/// profile_csv_path is recorded in the document; the samples themselves
/// live in the CSV next to it.
json to_json(const GroundState& gs, const std::string& profile_csv_path);

json to_json(const SymmetryCertificate& c);
SymmetryCertificate certificate_from_json(const json& j);

json to_json(const ScanResult& scan);
json to_json(const std::vector<BubbleRow>& rows);

/// Two-column CSV (t, w) at 17 significant digits plus a JSON sidecar
/// <path>.meta.json with the grid metadata.
void write_profile_csv(const Profile& p, const std::string& path);
Profile read_profile_csv(const std::string& path);

std::string scan_csv(const ScanResult& scan);
std::string bubble_csv(const std::vector<BubbleRow>& rows);

std::string rfc3339_utc_now();

/// Result document shared by every command: tool version, timestamp,
/// configuration echo, payload, and the identity reports of any solve the
/// command performed (never emitted without them).
json make_envelope(const std::string& command, const json& config_echo,
                   const json& payload,
                   const std::vector<IdentityReport>& reports);

}  // namespace rsgs
