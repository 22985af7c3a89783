#pragma once

#include "cuspgauge/tolerances.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace cuspgauge {

inline constexpr const char* kToolVersion = "1.0.0";

// Minimal JSON value for deterministic report output: object keys are kept
// sorted (std::map) and doubles are rendered with %.12g, so identical runs
// serialize byte-identically.
class JsonValue {
public:
    using Object = std::map<std::string, JsonValue>;
    using Array = std::vector<JsonValue>;

    JsonValue() : value_(nullptr) {}
    JsonValue(std::nullptr_t) : value_(nullptr) {}
    JsonValue(bool b) : value_(b) {}
    JsonValue(double d) : value_(d) {}
    JsonValue(long long i) : value_(i) {}
    JsonValue(int i) : value_(static_cast<long long>(i)) {}
    JsonValue(const char* s) : value_(std::string(s)) {}
    JsonValue(std::string s) : value_(std::move(s)) {}
    JsonValue(Object o) : value_(std::move(o)) {}
    JsonValue(Array a) : value_(std::move(a)) {}

    std::string dump(int indent = 0) const;

private:
    std::variant<std::nullptr_t, bool, long long, double, std::string, Object, Array> value_;
    void write(std::string& out, int indent, int depth) const;
};

// %.12g rendering used for every floating-point field.
std::string format_double(double v);

enum class Verdict { Certified, NotCertified, Infeasible, InvalidInput };

const char* verdict_name(Verdict v);
int verdict_exit_code(Verdict v);

// Envelope every CLI command emits: command, echoed inputs, results,
// verdict, tool version, and the tolerances in force.
struct ReportEnvelope {
    std::string command;
    JsonValue::Object inputs;
    JsonValue::Object results;
    Verdict verdict = Verdict::Certified;
};

std::string serialize_report(const ReportEnvelope& env, const Tolerances& tol);

// CSV helpers: fixed column order, %.12g cells, '\n' terminators.
std::string csv_row(const std::vector<std::string>& cells);
std::string csv_double_row(const std::vector<double>& cells);

} // namespace cuspgauge
