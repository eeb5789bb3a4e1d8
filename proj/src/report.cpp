#include "hopfkit/report.hpp"

#include <atomic>

#include "hopfkit/parallel.hpp"

namespace hopfkit {

namespace {
std::atomic<Execution> g_execution{Execution::parallel};
}

void set_execution(Execution mode) { g_execution.store(mode); }
Execution execution() { return g_execution.load(); }

std::string Witness::describe_indices() const {
  std::string out;
  for (const auto& [axis, label] : indices) {
    if (!out.empty()) out += ", ";
    out += axis + "=" + label;
  }
  return out;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::string out = subject_.empty() ? std::string("report") : subject_;
  out += passed() ? ": all checks pass" : ": FAILED";
  for (const auto& c : checks_) {
    if (c.passed) continue;
    out += "\n  " + c.name;
    if (c.witness) out += " at " + c.witness->describe_indices() + ": " + c.witness->lhs + " != " + c.witness->rhs;
  }
  return out;
}

Axis index_axis(std::string name, std::size_t n) {
  Axis a{std::move(name), {}};
  for (std::size_t i = 0; i < n; ++i) a.labels.push_back(std::to_string(i));
  return a;
}

CheckResult verify_identity(const Identity& identity) {
  std::size_t total = 1;
  for (const auto& a : identity.axes) total *= a.size();
  auto decode = [&](std::size_t flat) {
    std::vector<std::size_t> idx(identity.axes.size());
    for (std::size_t l = identity.axes.size(); l-- > 0;) {
      idx[l] = flat % identity.axes[l].size();
      flat /= identity.axes[l].size();
    }
    return idx;
  };
  auto violation = first_match(total, [&](std::size_t flat) {
    auto [lhs, rhs] = identity.sides(decode(flat));
    return !(lhs == rhs);
  });

  CheckResult result{identity.name, identity.anchor, !violation.has_value(), total, std::nullopt};
  if (violation) {
    auto idx = decode(*violation);
    auto [lhs, rhs] = identity.sides(idx);
    Witness w;
    for (std::size_t l = 0; l < idx.size(); ++l)
      w.indices.emplace_back(identity.axes[l].name, identity.axes[l].labels[idx[l]]);
    w.lhs = format_tensor(lhs, identity.leg_labels);
    w.rhs = format_tensor(rhs, identity.leg_labels);
    result.witness = std::move(w);
  }
  return result;
}

CheckResult make_check(std::string name, std::string anchor, bool passed, std::string detail) {
  CheckResult c{std::move(name), std::move(anchor), passed, 1, std::nullopt};
  if (!passed) c.witness = Witness{{}, std::move(detail), {}};
  return c;
}

}  // namespace hopfkit
