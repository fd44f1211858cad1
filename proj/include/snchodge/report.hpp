#pragma once

#include "snchodge/io.hpp"
#include "snchodge/lefschetz.hpp"

#include <nlohmann/json.hpp>

namespace snchodge {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
    std::optional<int> degree;
    StarMode star_mode = StarMode::automatic;
    bool run_bundles = true;
    bool skip_degrees = false;
    bool bundle_fiber = true;
    std::optional<std::string> only_bundle;
};

// Deterministic machine-readable report of the full analysis. When the
// model fails validation in a way that makes the verdicts meaningless, the
// report carries the findings with "blocking": true and no verdicts.
nlohmann::json build_report(const InputModel& m, const ReportOptions& opt = {});

std::string render_text(const nlohmann::json& report);

nlohmann::json json_of_mat(const Mat& m);
nlohmann::json json_of_dim(const Dim& d);

}  // namespace snchodge
