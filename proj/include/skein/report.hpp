// Verification reports: identity, truncation, nonzero residuals, verdict.
#pragma once

#include "skein/scalar.hpp"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace skein {

struct Residual {
  std::string cls;    // grading class, e.g. "w=3 (1,2)"
  std::string value;  // exact scalar, rendered
};

struct VerificationReport {
  std::string identity;
  std::string parameter;
  std::vector<Residual> residuals;  // only nonzero ones
  long checked = 0;                 // number of graded components compared
  double seconds = 0;

  VerificationReport() = default;
  VerificationReport(std::string id, std::string param) : identity(std::move(id)), parameter(std::move(param)) {}
  bool verified() const { return residuals.empty(); }
  std::string verdict() const { return verified() ? "VERIFIED" : "FALSIFIED"; }
  void check(const std::string& cls, const Scalar& r) {
    ++checked;
    if (!r.is_zero()) residuals.push_back({cls, r.str()});
  }
  void fail(const std::string& cls, const std::string& what) { residuals.push_back({cls, what}); }
  // test hook for the falsification path
  void inject_error() { residuals.push_back({"injected", "1"}); }
};

enum class Format { Text, Json };
Format parse_format(const std::string& s);  // throws std::invalid_argument
std::string render(const VerificationReport& r, Format f);
std::string render(const std::vector<VerificationReport>& rs, Format f);
VerificationReport report_from_json(const std::string& text);

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace skein
