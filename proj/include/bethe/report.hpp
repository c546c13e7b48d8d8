#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace bethe {

struct CheckResult {
  std::string name;
  std::string anchor;  // the identity being checked, in words
  bool pass = false;
  double max_abs_error = 0;
  double runtime_ms = 0;
  std::string detail;
};

struct CheckList {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void append(const CheckList& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs `body`, which returns {pass, error}; module errors become failures.
template <class Fn>
CheckResult run_check(const std::string& name, const std::string& anchor, Fn body) {
  CheckResult r;
  r.name = name;
  r.anchor = anchor;
  Stopwatch sw;
  try {
    auto [ok, err] = body();
    r.pass = ok;
    r.max_abs_error = err;
  } catch (const std::exception& e) {
    r.pass = false;
    r.max_abs_error = -1;
    r.detail = e.what();
  }
  r.runtime_ms = sw.ms();
  return r;
}

}  // namespace bethe
