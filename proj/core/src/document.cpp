#include "mlakit/document.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "mlakit/errors.hpp"

namespace mlakit {

using nlohmann::json;

namespace {

std::vector<Elem> read_table(const json& doc, const char* key, std::size_t n) {
  const json& rows = doc.at(key);
  if (!rows.is_array() || rows.size() != n) throw ParseError(std::string(key) + " must have `order` rows");
  std::vector<Elem> out;
  out.reserve(n * n);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != n) throw ParseError(std::string(key) + " rows must have `order` entries");
    for (const json& v : row) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(std::string(key) + " entries must be non-negative integers");
      const auto x = v.get<unsigned long long>();
      if (x >= n) throw ParseError(std::string(key) + " entry " + std::to_string(x) + " out of range");
      out.push_back(static_cast<Elem>(x));
    }
  }
  return out;
}

json table_rows(std::span<const Elem> t, std::size_t n) {
  json rows = json::array();
  for (std::size_t r = 0; r < n; ++r) rows.push_back(std::vector<Elem>(t.begin() + static_cast<long>(r * n), t.begin() + static_cast<long>((r + 1) * n)));
  return rows;
}

}  // namespace

AlgebraDocument parse_algebra_document(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    AlgebraDocument d;
    const json& order = doc.at("order");
    if (!order.is_number_integer() || order.get<long long>() <= 0) throw ParseError("order must be a positive integer");
    d.order = order.get<std::size_t>();
    d.mul = read_table(doc, "mul", d.order);
    if (doc.contains("star")) d.star = read_table(doc, "star", d.order);
    if (doc.contains("labels")) {
      d.labels = doc.at("labels").get<std::vector<std::string>>();
      if (d.labels.size() != d.order) throw ParseError("labels must have one entry per element");
    }
    if (doc.contains("generators")) {
      for (const json& g : doc.at("generators")) {
        const auto x = g.get<std::size_t>();
        if (x >= d.order) throw ParseError("generator out of range");
        d.generators.push_back(static_cast<Elem>(x));
      }
    }
    if (doc.contains("partial_star")) {
      for (const json& t : doc.at("partial_star")) {
        if (!t.is_array() || t.size() != 3) throw ParseError("partial_star entries must be [i, j, k] triples");
        StarAssignment a{t[0].get<Elem>(), t[1].get<Elem>(), t[2].get<Elem>()};
        if (a.left >= d.order || a.right >= d.order || a.value >= d.order) throw ParseError("partial_star entry out of range");
        d.partial_star.push_back(a);
      }
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra document: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

AlgebraDocument read_algebra_document(const std::filesystem::path& path) {
  return parse_algebra_document(read_json_file(path));
}

GroupTable load_group(const AlgebraDocument& doc, const Limits& limits) {
  if (doc.order > limits.validation_cap)
    throw OrderCapExceeded("order " + std::to_string(doc.order) + " exceeds the validation cap " +
                           std::to_string(limits.validation_cap));
  return GroupTable::from_table(doc.mul, doc.order, doc.labels);
}

FiniteMLA load_mla(const AlgebraDocument& doc, const Limits& limits) {
  if (!doc.star) throw ParseError("document has no star table (use complete-star for partial input)");
  return FiniteMLA::from_tables(load_group(doc, limits), *doc.star);
}

FiniteMLA load_mla(const json& doc, const Limits& limits) { return load_mla(parse_algebra_document(doc), limits); }

FiniteMLA load_mla_file(const std::filesystem::path& path, const Limits& limits) {
  return load_mla(read_algebra_document(path), limits);
}

json to_json(const GroupTable& group) {
  json doc;
  doc["order"] = group.order();
  doc["mul"] = table_rows(group.mul_table(), group.order());
  if (!group.labels().empty()) doc["labels"] = group.labels();
  return doc;
}

json to_json(const FiniteMLA& algebra) {
  json doc = to_json(algebra.group());
  doc["star"] = table_rows(algebra.star_table(), algebra.order());
  return doc;
}

std::string canonical_text(const json& doc) { return doc.dump(); }

std::string canonical_text(const FiniteMLA& algebra) { return canonical_text(to_json(algebra)); }

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 computation failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 15]);
  }
  return out;
}

std::string digest(const FiniteMLA& algebra) { return sha256_hex(canonical_text(algebra)); }

json morphism_to_json(const Morphism& m, const FiniteMLA& source, const FiniteMLA& target) {
  return json{{"map", m.map}, {"source", digest(source)}, {"target", digest(target)}};
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text << '\n';
}

}  // namespace mlakit
