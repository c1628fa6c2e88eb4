#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace folia::cli {

using Json = nlohmann::ordered_json;

/// Exit statuses.
inline constexpr int kSuccess = 0;
inline constexpr int kVerdictFailure = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (args[0] is the program name). The report goes to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The report without its "timing" member: the part that is byte-identical
/// across runs with the same arguments and seed.
Json payload(Json report);

} // namespace folia::cli
