#include "hoj/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace hoj {

std::string format_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::separate() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) out_ << ",";
        needs_comma_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    separate();
    out_ << "{";
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    needs_comma_.pop_back();
    out_ << "}";
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separate();
    out_ << "[";
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    needs_comma_.pop_back();
    out_ << "]";
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    separate();
    out_ << "\"" << k << "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separate();
    out_ << format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    separate();
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    separate();
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separate();
    out_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separate();
    out_ << "\"";
    for (char c : v) {
        switch (c) {
            case '"': out_ << "\\\""; break;
            case '\\': out_ << "\\\\"; break;
            case '\n': out_ << "\\n"; break;
            case '\t': out_ << "\\t"; break;
            default: out_ << c;
        }
    }
    out_ << "\"";
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(const std::vector<double>& v) {
    begin_array();
    for (double x : v) value(x);
    return end_array();
}

JsonWriter& JsonWriter::value(const std::vector<int>& v) {
    begin_array();
    for (int x : v) value(x);
    return end_array();
}

CheckResult abs_check(std::string suite, std::string name, double residual, double threshold,
                      std::string detail) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.comparison = "abs";
    r.value = residual;
    r.threshold = threshold;
    r.pass = residual <= threshold;
    r.detail = std::move(detail);
    return r;
}

CheckResult z_check(std::string suite, std::string name, double diff, double std_error,
                    double z_threshold, std::uint64_t n_samples, std::string detail) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.comparison = "z";
    r.value = diff;
    r.std_error = std_error;
    r.threshold = z_threshold;
    r.n_samples = n_samples;
    double z;
    if (diff <= 1e-12)  // rounding-level agreement
        z = 0.0;
    else if (std_error > 0.0)
        z = diff / std_error;
    else
        z = std::numeric_limits<double>::infinity();
    r.pass = z <= z_threshold;
    r.detail = std::move(detail);
    return r;
}

}  // namespace hoj
