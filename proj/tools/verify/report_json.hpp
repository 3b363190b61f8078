#pragma once

// JSON form of VerificationReport. Non-finite numbers are written as null
// and read back as +inf.

#include <string>

#include <json.hpp>

#include "ellhyp/verification.hpp"

namespace verify {

nlohmann::ordered_json to_json(const ellhyp::ParamPoint& point);
nlohmann::ordered_json to_json(const ellhyp::VerificationReport& report);

ellhyp::ParamPoint point_from_json(const nlohmann::json& j);
ellhyp::VerificationReport report_from_json(const nlohmann::json& j);

/// Pretty-printed, newline-terminated.
std::string dump_report(const ellhyp::VerificationReport& report);

}  // namespace verify
