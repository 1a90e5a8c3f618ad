#pragma once

// The acceptance suite: thirteen numbered criteria, each reduced to a
// pass/fail verdict with a one-line detail.

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace msf::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

using ResultSink = std::function<void(const CriterionResult&)>;

/// Runs the selected criteria (all when empty) in order, reporting each as
/// it finishes. A criterion that throws is a failure carrying the message.
std::vector<CriterionResult> run(const std::set<int>& only = {}, const ResultSink& sink = {});

/// "PASS  3  oracle-equivalence  (1.2s)  detail".
std::string format_line(const CriterionResult& r);

}  // namespace msf::acceptance
