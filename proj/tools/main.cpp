#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mlakit/errors.hpp"

namespace cli = mlakit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Finite multiplicative Lie algebra toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  std::size_t cap = 0;
  std::size_t limit = 0;
  unsigned jobs = 1;
  app.add_flag("--json", as_json, "Emit the structured report");
  app.add_option("--cap", cap, "Order cap (enumeration for enumerate/classify/complete-star, validation otherwise)");
  app.add_option("--limit", limit, "Show at most this many items");
  app.add_option("--jobs", jobs, "Worker threads for the star search")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string path, path2, multiplier, out_dir;
  std::vector<std::string> paths;
  bool stem = false, all = false;

  auto* validate = app.add_subcommand("validate", "Check the group and star axioms");
  validate->add_option("file", path)->required();
  auto* invariants = app.add_subcommand("invariants", "Centers, commutators and the stem flag");
  invariants->add_option("file", path)->required();
  auto* isoclinic = app.add_subcommand("isoclinic", "Decide isoclinism and print the pair");
  isoclinic->add_option("G", path)->required();
  isoclinic->add_option("H", path2)->required();
  auto* enumerate = app.add_subcommand("enumerate", "All star structures on a group");
  enumerate->add_option("group", path)->required();
  auto* classify = app.add_subcommand("classify", "Enumerate, deduplicate and partition by isoclinism");
  classify->add_option("group", path)->required();
  classify->add_option("--out", out_dir, "Directory for the catalog, index.json and report.json");
  auto* stem_cmd = app.add_subcommand("stem", "Stem of one isoclinism class");
  stem_cmd->add_option("files", paths)->required();
  auto* cover = app.add_subcommand("cover-check", "Cover or stem-cover conditions of a central extension");
  cover->add_option("extension", path)->required();
  cover->add_option("--multiplier", multiplier, "Algebra file standing for the multiplier")->required();
  cover->add_flag("--stem", stem, "Check the stem-cover condition");
  auto* complete = app.add_subcommand("complete-star", "Complete a partial star table");
  complete->add_option("file", path)->required();
  complete->add_flag("--all", all, "Accept several completions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_code::kInputError;
  }

  cli::Options options;
  options.jobs = jobs;
  if (limit > 0) options.limit = limit;
  try {
    options.cap = cap > 0 ? std::optional<std::size_t>(cap) : cli::cap_from_environment();
  } catch (const mlakit::Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return cli::exit_code::kInputError;
  }

  cli::CommandResult result;
  if (*validate) result = cli::cmd_validate(path, options);
  else if (*invariants) result = cli::cmd_invariants(path, options);
  else if (*isoclinic) result = cli::cmd_isoclinic(path, path2, options);
  else if (*enumerate) result = cli::cmd_enumerate(path, options);
  else if (*classify) result = cli::cmd_classify(path, out_dir.empty() ? std::nullopt : std::optional<cli::Path>(out_dir), options);
  else if (*stem_cmd) result = cli::cmd_stem({paths.begin(), paths.end()}, options);
  else if (*cover) result = cli::cmd_cover_check(path, multiplier, stem, options);
  else if (*complete) result = cli::cmd_complete_star(path, all, options);

  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  if (as_json)
    std::cout << result.report.dump() << "\n";
  else
    (result.exit_code == cli::exit_code::kInputError ? std::cerr : std::cout) << result.text << "\n";
  return result.exit_code;
}
