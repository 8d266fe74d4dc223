#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "abwalk/core/orbit.hpp"
#include "abwalk/equidist/discrepancy.hpp"
#include "abwalk/exceptional/constructions.hpp"
#include "abwalk/exceptional/schedule.hpp"
#include "abwalk/verify/suite.hpp"
#include "abwalk/weyl/monte_carlo.hpp"
#include "abwalk/weyl/weyl_sum.hpp"

namespace abwalk {

// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// Two-space indented, newline-terminated.
std::string dump(const Json& json);

// Every document carries "schema": "abwalk.<kind>.v1". Complex numbers are
// [re, im]; schedule integers are decimal strings since they outgrow doubles.
Json orbit_json(const Orbit& orbit);
Json weyl_json(const StepSet& steps, const WeylSeries& series);
Json moment_json(const StepSet& steps, const MomentReport& report, std::optional<double> exhaustive);
Json tail_json(const StepSet& steps, const TailReport& report);
Json discrepancy_json(const StepSet& steps, const DiscrepancyProfile& profile);
Json construction_json(const StepSet& steps, const Construction& construction, const CertificateCheck& check);
Json dimension_json(const CantorSchedule& schedule);
Json suite_json(const SuiteReport& report);

// Fixed headers; doubles via format_double.
std::string orbit_csv(const Orbit& orbit);                         // n,position
std::string weyl_csv(const WeylSeries& series);                    // N,re,im,abs_over_N
std::string moment_csv(const MomentReport& report, std::optional<double> exhaustive);
std::string tail_csv(const TailReport& report);
std::string discrepancy_csv(const DiscrepancyProfile& profile);    // N,dstar
std::string construction_csv(const Construction& construction);    // one row per record
std::string dimension_csv(const CantorSchedule& schedule);         // k,n,n_tilde,log2_q,estimate,corollary_ratio
std::string suite_csv(const SuiteReport& report);

}  // namespace abwalk
