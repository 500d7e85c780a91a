#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlakit/errors.hpp"
#include "mlakit/types.hpp"

namespace mlakit {

/// One failed axiom together with the elements that witness the failure.
struct Violation {
  std::string axiom;  // "identity", "latin", "associativity", "inverse", "MLA1".."MLA5", ...
  std::vector<Elem> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& axiom) const;
  std::string summary() const;
};

class GroupAxiomError : public Error {
 public:
  explicit GroupAxiomError(ValidationReport report)
      : Error("GroupAxiomError", report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class MLAAxiomError : public Error {
 public:
  explicit MLAAxiomError(ValidationReport report)
      : Error("MLAAxiomError", report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks that `mul` (row-major n*n) is a group table with identity at index 0.
/// Reports one witness per failed axiom.
ValidationReport check_group_axioms(std::span<const Elem> mul, std::size_t order);

class GroupTable;

/// Checks MLA1..MLA5 for `star` (row-major n*n) over an already valid group.
ValidationReport check_mla_axioms(const GroupTable& group, std::span<const Elem> star);

}  // namespace mlakit
