#pragma once

#include <functional>
#include <string>
#include <vector>

namespace autofrob {

struct CheckInfo {
  std::string name;
  std::string title;
  std::vector<std::string> tags;
};

struct CheckResult {
  std::string name;
  std::string title;
  bool passed = false;
  /// One line per finding; notes and failures alike.
  std::vector<std::string> details;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Substring matched against check names and tags; empty runs everything.
  std::string only;
  /// Test hook: validate a deliberately broken Fibonacci adder.
  bool corrupt_adder = false;
};

/// The end-to-end checks, in a fixed order.
std::vector<CheckInfo> verify_checks();

std::vector<CheckResult> run_verify(const VerifyOptions& options = {},
                                    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace autofrob
