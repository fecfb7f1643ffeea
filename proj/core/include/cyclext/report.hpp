#pragma once

#include <string>

#include "cyclext/harness.hpp"

namespace cyclext {

/// Keys are sorted. elapsed_seconds is left out unless asked for, so the
/// default output is reproducible byte for byte.
std::string report_to_json(const VerificationReport& r, bool include_elapsed = false);

/// Header plus one row per graph; needs CampaignOptions::keep_rows.
std::string report_to_csv(const VerificationReport& r);

/// Short human summary.
std::string report_to_text(const VerificationReport& r);

}  // namespace cyclext
