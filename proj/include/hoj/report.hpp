#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace hoj {

// Fixed-format decimal with 17 significant digits, enough to round-trip a
// double losslessly and keep reports byte-stable run to run.
std::string format_double(double v);

// Minimal streaming JSON writer with insertion-ordered keys.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value(const std::vector<double>& v);
    JsonWriter& value(const std::vector<int>& v);

    std::string str() const { return out_.str(); }

  private:
    void separate();

    std::ostringstream out_;
    std::vector<bool> needs_comma_;
    bool pending_key_ = false;
};

// One verification check: either a deterministic residual against an absolute
// threshold ("abs") or a stochastic estimate judged by z-score ("z").
struct CheckResult {
    std::string suite;
    std::string name;
    std::string comparison;  // "abs" or "z"
    double value = 0.0;      // residual, or |lhs - rhs| for stochastic checks
    double std_error = 0.0;  // 0 for deterministic checks
    double threshold = 0.0;
    bool pass = false;
    std::uint64_t n_samples = 0;
    std::string detail;
};

CheckResult abs_check(std::string suite, std::string name, double residual, double threshold,
                      std::string detail = {});
CheckResult z_check(std::string suite, std::string name, double diff, double std_error,
                    double z_threshold, std::uint64_t n_samples, std::string detail = {});

}  // namespace hoj
