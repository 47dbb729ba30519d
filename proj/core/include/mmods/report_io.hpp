#pragma once

#include <string>

#include "mmods/validator.hpp"

namespace mmods {

inline constexpr std::string_view kReportFormatVersion = "1.0";

/// `{version, source, summary:{errors, warnings, infos}, findings:[{code,
/// axiom, severity, focus, detail}]}` with findings sorted by (code, focus),
/// keys in that order, two-space indent.
std::string writeReportJson(const ValidationReport& report);

/// Human-readable report: one line per finding and a summary line.
std::string writeReportText(const ValidationReport& report);

}  // namespace mmods
