#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace tutte {

/// Outcome of one mechanical identity check. A report fails exactly when it
/// carries a witness; the witness records the first offending instance and
/// the nonzero residual (left side minus right side) in canonical text.
struct CheckReport {
  std::string check;
  bool passed = true;
  long instances = 0;
  std::vector<std::string> members;  // instances covered, for the record
  std::string witness_instance;
  std::string witness_residual;

  static CheckReport pass(std::string name, long instances,
                          std::vector<std::string> members = {}) {
    CheckReport r;
    r.check = std::move(name);
    r.passed = true;
    r.instances = instances;
    r.members = std::move(members);
    return r;
  }

  static CheckReport fail(std::string name, long instances,
                          std::string instance, std::string residual,
                          std::vector<std::string> members = {}) {
    CheckReport r;
    r.check = std::move(name);
    r.passed = false;
    r.instances = instances;
    r.members = std::move(members);
    r.witness_instance = std::move(instance);
    r.witness_residual = std::move(residual);
    return r;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["status"] = passed ? "PASS" : "FAIL";
    j["instances"] = instances;
    if (!members.empty()) j["members"] = members;
    if (!passed)
      j["witness"] = {{"instance", witness_instance},
                      {"residual", witness_residual}};
    return j;
  }

  /// One line of the report stream.
  std::string to_json_line() const { return to_json().dump(); }
};

/// Accumulates instance comparisons into a single report. The first failure
/// wins the witness slot; later instances are still counted.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) : name_(std::move(name)) {}

  void member(const std::string& label) { members_.push_back(label); }

  /// Records one instance; a nonzero residual fails the check.
  template <typename Poly>
  void require_zero(const Poly& residual, const std::string& instance) {
    ++instances_;
    if (passed_ && !residual.is_zero()) {
      passed_ = false;
      witness_instance_ = instance;
      witness_residual_ = residual.str();
    }
  }

  void require(bool ok, const std::string& instance,
               const std::string& residual) {
    ++instances_;
    if (passed_ && !ok) {
      passed_ = false;
      witness_instance_ = instance;
      witness_residual_ = residual;
    }
  }

  CheckReport finish() const {
    if (passed_) return CheckReport::pass(name_, instances_, members_);
    return CheckReport::fail(name_, instances_, witness_instance_,
                             witness_residual_, members_);
  }

 private:
  std::string name_;
  bool passed_ = true;
  long instances_ = 0;
  std::vector<std::string> members_;
  std::string witness_instance_;
  std::string witness_residual_;
};

}  // namespace tutte
