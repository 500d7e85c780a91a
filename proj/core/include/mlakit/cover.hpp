#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mlakit/algebra.hpp"
#include "mlakit/morphism.hpp"
#include "mlakit/types.hpp"

namespace mlakit {

/// 1 -> H -> K -> G -> 1 with inclusion and projection maps.
struct CentralExtension {
  FiniteMLA H;
  FiniteMLA K;
  FiniteMLA G;
  Morphism incl;  // H -> K
  Morphism proj;  // K -> G
};

struct ExtensionCheck {
  bool ok = false;
  std::string failure;          // which condition failed
  std::optional<Elem> witness;  // offending element, when there is one
};

/// incl injective hom, proj surjective hom, image(incl) = ker(proj),
/// image(incl) ⊆ 𝒵(K).
ExtensionCheck validate_extension(const CentralExtension& ext);

/// Builds an extension from raw maps, computing the morphism flags.
CentralExtension make_extension(FiniteMLA H, FiniteMLA K, FiniteMLA G, std::vector<Elem> incl,
                                std::vector<Elem> proj);

/// image(incl) ⊆ 𝒵(K) and H ≅ multiplier. Throws InvalidExtension.
bool is_cover(const CentralExtension& ext, const FiniteMLA& multiplier);
/// is_cover and image(incl) ⊆ ^M[K,K]. Throws InvalidExtension.
bool is_stem_cover(const CentralExtension& ext, const FiniteMLA& multiplier);

/// Reads {"H": path, "K": path, "G": path, "incl": [...], "proj": [...],
/// "digests": {"H": hex, ...}} with paths relative to the file. Digests are
/// optional; a mismatch is a ParseError.
CentralExtension load_extension(const std::filesystem::path& path, const Limits& limits = {});

}  // namespace mlakit
