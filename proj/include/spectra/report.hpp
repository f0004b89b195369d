#ifndef SPECTRA_REPORT_HPP
#define SPECTRA_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "spectra/bounds.hpp"
#include "spectra/decomposition.hpp"
#include "spectra/harness.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "spectra-report/1";

/// Every document starts with {"schema": ..., "kind": kind}.
Json report_header(const std::string& kind);

Json to_json(const SpectralResult& r, bool include_vector);
Json to_json(const BoundReport& b);
Json to_json(const Decomposition& dec);
Json to_json(const std::vector<CheckResult>& checks);
Json to_json(const Certificate& cert);
Json to_json(const ChainReport& chain);
Json to_json(const ScanReport& report, bool include_timing);
Json to_json(const ClimbResult& climb);

/// Two-space indented JSON with every float printed at 17 significant
/// digits (lossless round-trip); ends with a newline.
std::string dump_report(const Json& doc);

std::string csv_header();
std::string csv_row(const GraphRow& row);

}  // namespace spectra

#endif  // SPECTRA_REPORT_HPP
