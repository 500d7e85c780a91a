#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mlakit/types.hpp"

namespace mlakit::cli {

namespace exit_code {
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kInputError = 2;
}  // namespace exit_code

struct Options {
  /// From --cap, else MLAKIT_CAP, else the command's default.
  std::optional<std::size_t> cap;
  std::optional<std::size_t> limit;
  unsigned jobs = 1;
};

struct CommandResult {
  int exit_code = exit_code::kHolds;
  nlohmann::json report;     // the structured form
  std::string text;          // the human-readable form
  std::vector<std::string> warnings;
};

using Path = std::filesystem::path;

CommandResult cmd_validate(const Path& path, const Options& options);
CommandResult cmd_invariants(const Path& path, const Options& options);
CommandResult cmd_isoclinic(const Path& g, const Path& h, const Options& options);
CommandResult cmd_enumerate(const Path& group, const Options& options);
/// Writes `<digest>.json` per structure plus index.json and report.json
/// into `out_dir` when given.
CommandResult cmd_classify(const Path& group, const std::optional<Path>& out_dir, const Options& options);
CommandResult cmd_stem(const std::vector<Path>& members, const Options& options);
CommandResult cmd_cover_check(const Path& extension, const Path& multiplier, bool stem, const Options& options);
/// Exit 0 when the partial table has exactly one completion (or at least one
/// with `all`), 1 when it has none or several.
CommandResult cmd_complete_star(const Path& path, bool all, const Options& options);

/// Reads MLAKIT_CAP; throws ParseError for a malformed value.
std::optional<std::size_t> cap_from_environment();

}  // namespace mlakit::cli
