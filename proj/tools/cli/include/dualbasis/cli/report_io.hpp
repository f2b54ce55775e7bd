#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualbasis/pairing.hpp"

namespace dualbasis::pairing {

// ADL hooks for nlohmann::json.
void to_json(nlohmann::json& j, const PairingReport& r);
void from_json(const nlohmann::json& j, PairingReport& r);

}  // namespace dualbasis::pairing

namespace dualbasis::cli {

std::string reports_to_json(const std::vector<pairing::PairingReport>& reports);
std::vector<pairing::PairingReport> reports_from_json(const std::string& text);

/// Header row followed by one line per report; same fields as JSON.
void write_reports_csv(std::ostream& os, const std::vector<pairing::PairingReport>& reports);

/// One table per branch in the tabulated layout, (m,n) | value | closed form,
/// with the extra diagnostic columns after a separator column.
void write_reports_markdown(std::ostream& os, const std::vector<pairing::PairingReport>& reports);

std::string render_verdict_markdown(const pairing::PairingReport& r);

}  // namespace dualbasis::cli
