#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mlakit/algebra.hpp"
#include "mlakit/enumeration.hpp"
#include "mlakit/morphism.hpp"
#include "mlakit/types.hpp"

namespace mlakit {

/**
 * The algebra file format: a JSON object with `order`, `mul` (order rows of
 * order indices), `star` (same shape), and optional `labels`, `generators`
 * and `partial_star` ([i, j, k] triples meaning i * j = k). Index 0 is the
 * identity.
 */
struct AlgebraDocument {
  std::size_t order = 0;
  std::vector<Elem> mul;                  // row-major
  std::optional<std::vector<Elem>> star;  // row-major
  std::vector<std::string> labels;
  std::vector<Elem> generators;
  std::vector<StarAssignment> partial_star;
};

/// Shape checks only; throws ParseError.
AlgebraDocument parse_algebra_document(const nlohmann::json& doc);
/// Throws ParseError for unreadable files or malformed JSON.
AlgebraDocument read_algebra_document(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Builds the group part; throws GroupAxiomError, ParseError, OrderCapExceeded.
GroupTable load_group(const AlgebraDocument& doc, const Limits& limits = {});

/// Full validation of both tables. Throws ParseError (including a missing
/// star table), OrderCapExceeded, GroupAxiomError or MLAAxiomError.
FiniteMLA load_mla(const AlgebraDocument& doc, const Limits& limits = {});
FiniteMLA load_mla(const nlohmann::json& doc, const Limits& limits = {});
FiniteMLA load_mla_file(const std::filesystem::path& path, const Limits& limits = {});

/// Canonical document: sorted keys, labels included when the group has them.
nlohmann::json to_json(const FiniteMLA& algebra);
nlohmann::json to_json(const GroupTable& group);
/// Compact serialisation with sorted keys, byte-comparable across runs.
std::string canonical_text(const nlohmann::json& doc);
std::string canonical_text(const FiniteMLA& algebra);

std::string sha256_hex(std::string_view bytes);
/// SHA-256 of the canonical text.
std::string digest(const FiniteMLA& algebra);

/// {"map": [...], "source": digest, "target": digest}
nlohmann::json morphism_to_json(const Morphism& m, const FiniteMLA& source, const FiniteMLA& target);

/// Writes text followed by a newline.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mlakit
