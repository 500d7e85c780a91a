#include "mlakit/cover.hpp"

#include "mlakit/document.hpp"
#include "mlakit/errors.hpp"
#include "mlakit/isomorphism.hpp"
#include "mlakit/structure.hpp"

namespace mlakit {

namespace {

ExtensionCheck fail(std::string what, std::optional<Elem> witness = std::nullopt) {
  return ExtensionCheck{false, std::move(what), witness};
}

Subset image_of(const CentralExtension& ext) {
  Subset s(ext.K.order());
  for (Elem v : ext.incl.map) s.insert(v);
  return s;
}

void require_valid(const CentralExtension& ext) {
  const auto check = validate_extension(ext);
  if (!check.ok) throw InvalidExtension(check.failure);
}

}  // namespace

ExtensionCheck validate_extension(const CentralExtension& ext) {
  if (ext.incl.map.size() != ext.H.order()) return fail("incl has the wrong length");
  if (ext.proj.map.size() != ext.K.order()) return fail("proj has the wrong length");
  for (Elem v : ext.incl.map)
    if (v >= ext.K.order()) return fail("incl maps outside K");
  for (Elem v : ext.proj.map)
    if (v >= ext.G.order()) return fail("proj maps outside G");

  const Morphism incl = check_homomorphism(ext.incl.map, ext.H, ext.K);
  const Morphism proj = check_homomorphism(ext.proj.map, ext.K, ext.G);
  if (!incl.is_hom) return fail("incl is not a homomorphism", incl.witness->first);
  if (!incl.is_injective) return fail("incl is not injective");
  if (!proj.is_hom) return fail("proj is not a homomorphism", proj.witness->first);
  if (!proj.is_surjective) {
    Subset hit(ext.G.order());
    for (Elem v : proj.map) hit.insert(v);
    for (Elem g = 0; g < ext.G.order(); ++g)
      if (!hit.contains(g)) return fail("proj is not surjective", g);
  }
  const Subset image = image_of(ext);
  for (Elem k = 0; k < ext.K.order(); ++k)
    if ((proj.map[k] == 0) != image.contains(k)) return fail("image(incl) differs from ker(proj)", k);
  const Subset zk = ml_center(ext.K);
  for (Elem k : image.members())
    if (!zk.contains(k)) return fail("image(incl) is not inside the multiplicative Lie center of K", k);
  return ExtensionCheck{true, {}, std::nullopt};
}

CentralExtension make_extension(FiniteMLA H, FiniteMLA K, FiniteMLA G, std::vector<Elem> incl,
                                std::vector<Elem> proj) {
  CentralExtension ext{std::move(H), std::move(K), std::move(G), {}, {}};
  if (incl.size() != ext.H.order() || proj.size() != ext.K.order())
    throw InvalidExtension("map lengths do not match the algebra orders");
  for (Elem v : incl)
    if (v >= ext.K.order()) throw InvalidExtension("incl maps outside K");
  for (Elem v : proj)
    if (v >= ext.G.order()) throw InvalidExtension("proj maps outside G");
  ext.incl = check_homomorphism(std::move(incl), ext.H, ext.K);
  ext.proj = check_homomorphism(std::move(proj), ext.K, ext.G);
  return ext;
}

bool is_cover(const CentralExtension& ext, const FiniteMLA& multiplier) {
  require_valid(ext);
  return image_of(ext).is_subset_of(ml_center(ext.K)) && are_isomorphic(ext.H, multiplier);
}

bool is_stem_cover(const CentralExtension& ext, const FiniteMLA& multiplier) {
  return is_cover(ext, multiplier) && image_of(ext).is_subset_of(m_commutator_ideal(ext.K));
}

CentralExtension load_extension(const std::filesystem::path& path, const Limits& limits) {
  const nlohmann::json doc = read_json_file(path);
  if (!doc.is_object()) throw ParseError("extension document must be an object");
  const auto base = path.parent_path();
  auto algebra = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_string()) throw ParseError(std::string("missing path field '") + key + "'");
    FiniteMLA a = load_mla_file(base / doc[key].get<std::string>(), limits);
    if (doc.contains("digests")) {
      const auto& d = doc["digests"];
      if (d.contains(key) && d[key] != digest(a))
        throw ParseError(std::string("digest mismatch for '") + key + "'");
    }
    return a;
  };
  auto map = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(std::string("missing map field '") + key + "'");
    std::vector<Elem> out;
    for (const auto& v : doc[key]) {
      if (!v.is_number_unsigned()) throw ParseError(std::string("map '") + key + "' must hold non-negative integers");
      out.push_back(v.get<Elem>());
    }
    return out;
  };
  FiniteMLA H = algebra("H");
  FiniteMLA K = algebra("K");
  FiniteMLA G = algebra("G");
  std::vector<Elem> incl = map("incl");
  std::vector<Elem> proj = map("proj");
  try {
    return make_extension(std::move(H), std::move(K), std::move(G), std::move(incl), std::move(proj));
  } catch (const InvalidExtension& e) {
    throw ParseError(e.what());
  }
}

}  // namespace mlakit
