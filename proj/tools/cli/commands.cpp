#include "commands.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "mlakit/cover.hpp"
#include "mlakit/document.hpp"
#include "mlakit/enumeration.hpp"
#include "mlakit/errors.hpp"
#include "mlakit/isoclinism.hpp"
#include "mlakit/isomorphism.hpp"
#include "mlakit/structure.hpp"
#include "mlakit/validation.hpp"

namespace mlakit::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kDefaultEnumerationCap = 8;

Limits validation_limits(const Options& o) {
  Limits l;
  if (o.cap) l.validation_cap = *o.cap;
  return l;
}

SearchOptions search_options(const Options& o, CommandResult& r) {
  SearchOptions s;
  s.cap = o.cap.value_or(kDefaultEnumerationCap);
  s.workers = std::max(1u, o.jobs);
  if (s.cap > kDefaultEnumerationCap && s.cap <= kEnumerationHardCap)
    r.warnings.push_back("order cap " + std::to_string(s.cap) + " is above the default " +
                         std::to_string(kDefaultEnumerationCap) + "; the search may take a long time");
  return s;
}

json subset_json(const FiniteMLA& G, const Subset& s) {
  json labels = json::array();
  for (Elem e : s.members()) labels.push_back(G.label(e));
  return {{"members", s.members()}, {"labels", labels}};
}

std::string subset_text(const FiniteMLA& G, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.members()) {
    out += (first ? "" : ", ") + G.label(e);
    first = false;
  }
  return out + "}";
}

json violations_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations)
    out.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"message", v.message}});
  return out;
}

CommandResult error_result(int code, const std::string& kind, const std::string& message) {
  CommandResult r;
  r.exit_code = code;
  r.report = {{"error", {{"kind", kind}, {"message", message}}}};
  r.text = kind + ": " + message;
  return r;
}

// Maps library errors to exit codes; `body` fills the result on success.
CommandResult guarded(const std::function<void(CommandResult&)>& body) {
  CommandResult r;
  try {
    body(r);
  } catch (const NotOneClass& e) {
    return error_result(exit_code::kFails, e.kind(), e.what());
  } catch (const NoStemFound& e) {
    return error_result(exit_code::kFails, e.kind(), e.what());
  } catch (const GroupAxiomError& e) {
    auto out = error_result(exit_code::kInputError, e.kind(), e.what());
    out.report["error"]["violations"] = violations_json(e.report());
    return out;
  } catch (const MLAAxiomError& e) {
    auto out = error_result(exit_code::kInputError, e.kind(), e.what());
    out.report["error"]["violations"] = violations_json(e.report());
    return out;
  } catch (const Error& e) {
    return error_result(exit_code::kInputError, e.kind(), e.what());
  } catch (const std::exception& e) {
    return error_result(exit_code::kInputError, "Error", e.what());
  }
  return r;
}

json pair_json(const IsoclinismPair& p) {
  json lambda = json::array();
  for (Elem g : p.source->central.representatives) lambda.push_back({g, p.lambda_rep(g)});
  json mu = json::array();
  for (Elem g : p.source->commutator.members()) mu.push_back({g, p.mu_of(g)});
  return {{"lambda", lambda}, {"mu", mu}};
}

}  // namespace

std::optional<std::size_t> cap_from_environment() {
  const char* raw = std::getenv("MLAKIT_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw ParseError(std::string("MLAKIT_CAP must be a positive integer, got '") + raw + "'");
  return static_cast<std::size_t>(v);
}

CommandResult cmd_validate(const Path& path, const Options& options) {
  return guarded([&](CommandResult& r) {
    const AlgebraDocument doc = read_algebra_document(path);
    try {
      const FiniteMLA G = load_mla(doc, validation_limits(options));
      r.report = {{"valid", true}, {"order", G.order()}, {"digest", digest(G)}, {"violations", json::array()}};
      r.text = "valid: order " + std::to_string(G.order());
    } catch (const GroupAxiomError& e) {
      r.exit_code = exit_code::kFails;
      r.report = {{"valid", false}, {"violations", violations_json(e.report())}};
      r.text = "invalid group: " + e.report().summary();
    } catch (const MLAAxiomError& e) {
      r.exit_code = exit_code::kFails;
      r.report = {{"valid", false}, {"violations", violations_json(e.report())}};
      r.text = "invalid: " + e.report().summary();
    }
  });
}

CommandResult cmd_invariants(const Path& path, const Options& options) {
  return guarded([&](CommandResult& r) {
    const FiniteMLA G = load_mla_file(path, validation_limits(options));
    const std::vector<std::pair<std::string, Subset>> parts{
        {"center", center(G)},
        {"lie_center", lie_center(G)},
        {"ml_center", ml_center(G)},
        {"derived_subgroup", derived_subgroup(G)},
        {"star_subgroup", star_subgroup(G)},
        {"m_commutator", m_commutator_ideal(G)},
    };
    const bool stem = is_stem(G);
    r.report = {{"order", G.order()}, {"digest", digest(G)}, {"is_stem", stem}};
    std::ostringstream os;
    os << "order: " << G.order() << "\n";
    for (const auto& [name, s] : parts) {
      r.report[name] = subset_json(G, s);
      os << name << ": " << subset_text(G, s) << "\n";
    }
    os << "is_stem: " << (stem ? "true" : "false");
    r.text = os.str();
  });
}

CommandResult cmd_isoclinic(const Path& g, const Path& h, const Options& options) {
  return guarded([&](CommandResult& r) {
    const FiniteMLA G = load_mla_file(g, validation_limits(options));
    const FiniteMLA H = load_mla_file(h, validation_limits(options));
    const auto pair = are_isoclinic(G, H);
    r.report = {{"source", digest(G)}, {"target", digest(H)}, {"isoclinic", pair.has_value()}};
    if (!pair) {
      r.exit_code = exit_code::kFails;
      r.text = "not isoclinic";
      return;
    }
    r.report["pair"] = pair_json(*pair);
    std::ostringstream os;
    os << "isoclinic\nlambda (on least coset representatives):";
    for (Elem c : pair->source->central.representatives) os << " " << G.label(c) << "->" << H.label(pair->lambda_rep(c));
    os << "\nmu:";
    for (Elem m : pair->source->commutator.members()) os << " " << G.label(m) << "->" << H.label(pair->mu_of(m));
    r.text = os.str();
  });
}

CommandResult cmd_enumerate(const Path& group, const Options& options) {
  return guarded([&](CommandResult& r) {
    const GroupTable T = load_group(read_algebra_document(group));
    const auto all = enumerate_star_structures(T, search_options(options, r));
    const std::size_t shown = std::min(all.size(), options.limit.value_or(all.size()));
    json structures = json::array();
    std::ostringstream os;
    os << all.size() << " structure" << (all.size() == 1 ? "" : "s");
    for (std::size_t i = 0; i < shown; ++i) {
      structures.push_back({{"digest", digest(all[i])}, {"star", to_json(all[i])["star"]}});
      os << "\n" << i << "  " << digest(all[i]).substr(0, 16) << "  |^M| = " << m_commutator_ideal(all[i]).size()
         << "  |Z_ml| = " << ml_center(all[i]).size();
    }
    r.report = {{"count", all.size()}, {"structures", structures}};
    r.text = os.str();
  });
}

CommandResult cmd_classify(const Path& group, const std::optional<Path>& out_dir, const Options& options) {
  return guarded([&](CommandResult& r) {
    const GroupTable T = load_group(read_algebra_document(group));
    const ClassificationReport report = classify_structures(T, search_options(options, r));

    std::vector<std::size_t> class_of(report.structures.size());
    for (std::size_t c = 0; c < report.classes.size(); ++c)
      for (std::size_t m : report.classes[c].members) class_of[m] = c;

    json structures = json::array();
    json index = json::object();
    for (std::size_t i = 0; i < report.structures.size(); ++i) {
      const auto& s = report.structures[i];
      const json entry{{"digest", s.digest},
                       {"class", class_of[i]},
                       {"is_stem", s.is_stem},
                       {"center_order", s.center_order},
                       {"lie_center_order", s.lie_center_order},
                       {"ml_center_order", s.ml_center_order},
                       {"m_commutator_order", s.m_commutator_order}};
      structures.push_back(entry);
      json indexed = entry;
      indexed.erase("digest");
      indexed["file"] = s.digest + ".json";
      index[s.digest] = indexed;
    }
    json classes = json::array();
    for (const auto& c : report.classes)
      classes.push_back({{"size", c.members.size()},
                         {"members", c.members},
                         {"representative", report.structures[c.representative].digest}});
    r.report = {{"group_order", T.order()},
                {"raw_count", report.raw_count},
                {"structure_count", report.structures.size()},
                {"class_count", report.classes.size()},
                {"structures", structures},
                {"classes", classes}};

    std::ostringstream os;
    os << "structures: " << report.raw_count << " (" << report.structures.size() << " up to isomorphism), classes: "
       << report.classes.size() << "\n";
    os << "#   class  |Z|  |LZ|  |Z_ml|  |^M|  stem  digest";
    for (std::size_t i = 0; i < report.structures.size(); ++i) {
      const auto& s = report.structures[i];
      os << "\n" << i << "   " << class_of[i] << "      " << s.center_order << "    " << s.lie_center_order << "     "
         << s.ml_center_order << "       " << s.m_commutator_order << "     " << (s.is_stem ? "yes" : "no ") << "   "
         << s.digest.substr(0, 16);
    }
    r.text = os.str();

    if (out_dir) {
      std::filesystem::create_directories(*out_dir);
      for (const auto& s : report.structures) write_text_file(*out_dir / (s.digest + ".json"), canonical_text(s.algebra));
      write_text_file(*out_dir / "index.json", canonical_text(index));
      write_text_file(*out_dir / "report.json", canonical_text(r.report));
    }
  });
}

CommandResult cmd_stem(const std::vector<Path>& members, const Options& options) {
  return guarded([&](CommandResult& r) {
    if (members.empty()) throw ParseError("stem needs at least one algebra file");
    std::vector<FiniteMLA> algebras;
    for (const auto& p : members) algebras.push_back(load_mla_file(p, validation_limits(options)));
    const auto classes = partition_by_isoclinism(algebras);
    if (classes.size() != 1)
      throw NotOneClass("the inputs fall into " + std::to_string(classes.size()) + " isoclinism classes");
    const std::size_t s = find_stem_in_class(algebras);
    r.report = {{"stem", members[s].string()}, {"index", s}, {"order", algebras[s].order()}, {"digest", digest(algebras[s])}};
    r.text = members[s].string();
  });
}

CommandResult cmd_cover_check(const Path& extension, const Path& multiplier, bool stem, const Options& options) {
  return guarded([&](CommandResult& r) {
    const CentralExtension ext = load_extension(extension, validation_limits(options));
    const FiniteMLA M = load_mla_file(multiplier, validation_limits(options));
    const ExtensionCheck check = validate_extension(ext);
    if (!check.ok)
      throw InvalidExtension(check.failure + (check.witness ? " (witness " + std::to_string(*check.witness) + ")" : ""));
    const bool cover = is_cover(ext, M);
    const bool holds = stem ? is_stem_cover(ext, M) : cover;
    r.exit_code = holds ? exit_code::kHolds : exit_code::kFails;
    r.report = {{"condition", stem ? "stem_cover" : "cover"}, {"holds", holds}, {"is_cover", cover}};
    if (stem) r.report["is_stem_cover"] = holds;
    r.text = std::string(stem ? "stem cover" : "cover") + ": " + (holds ? "holds" : "fails");
  });
}

CommandResult cmd_complete_star(const Path& path, bool all, const Options& options) {
  return guarded([&](CommandResult& r) {
    const AlgebraDocument doc = read_algebra_document(path);
    const GroupTable T = load_group(doc);
    const SearchOptions s = search_options(options, r);
    if (T.order() > std::min(s.cap, kEnumerationHardCap))
      throw OrderCapExceeded("group order " + std::to_string(T.order()) + " exceeds the cap " + std::to_string(s.cap));
    if (doc.star) throw ParseError("document already carries a full star table");
    const auto completions = complete_star(T, doc.partial_star, s.workers);
    json tables = json::array();
    for (const auto& c : completions) tables.push_back(to_json(c)["star"]);
    r.report = {{"completions", completions.size()}, {"star_tables", tables}};
    if (completions.size() == 1) r.report["algebra"] = to_json(completions.front());
    if (completions.empty()) {
      r.exit_code = exit_code::kFails;
      r.text = "no completion: the prescribed values contradict the axioms";
    } else if (completions.size() > 1 && !all) {
      r.exit_code = exit_code::kFails;
      r.text = std::to_string(completions.size()) + " completions: the prescribed values do not determine the table";
    } else {
      std::ostringstream os;
      os << completions.size() << " completion" << (completions.size() == 1 ? "" : "s");
      for (const auto& c : completions) os << "\n" << canonical_text(to_json(c)["star"]);
      r.text = os.str();
    }
  });
}

}  // namespace mlakit::cli
