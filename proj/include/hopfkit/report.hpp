#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/linalg.hpp"

namespace hopfkit {

/// Inconsistent shapes or sidedness, detected before any axiom is evaluated.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Witness {
  std::vector<std::pair<std::string, std::string>> indices;  // (axis name, basis label)
  std::string lhs;
  std::string rhs;

  std::string describe_indices() const;
};

struct CheckResult {
  std::string name;
  std::string anchor;  // the identity being checked, in words
  bool passed = true;
  std::size_t cases = 0;
  std::optional<Witness> witness;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;
  bool empty() const { return checks_.empty(); }

  void add(CheckResult check) { checks_.push_back(std::move(check)); }
  void merge(const VerificationReport& other, const std::string& prefix = "");
  const CheckResult* find(const std::string& name) const;
  const CheckResult* first_failure() const;
  std::string summary() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

/// Refusal of an operation whose input failed a prerequisite check.
class RefusedError : public std::runtime_error {
 public:
  RefusedError(const std::string& what, VerificationReport report = {})
      : std::runtime_error(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

struct Axis {
  std::string name;
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
};

Axis index_axis(std::string name, std::size_t n);

/// An identity lhs(t) = rhs(t) to be verified for every index tuple t in the
/// product of the axes. Both sides are tensors whose legs are named by
/// leg_labels (used only to render witnesses).
struct Identity {
  std::string name;
  std::string anchor;
  std::vector<Axis> axes;
  std::vector<std::vector<std::string>> leg_labels;
  std::function<std::pair<Tensor, Tensor>(const std::vector<std::size_t>&)> sides;
};

/// Scans the tuple space with the active execution kernel and reports the
/// lexicographically first violation.
CheckResult verify_identity(const Identity& identity);

/// A predicate-only check (no tensor sides) for structural facts such as
/// invertibility; the witness carries the supplied explanation.
CheckResult make_check(std::string name, std::string anchor, bool passed, std::string detail = {});

}  // namespace hopfkit
