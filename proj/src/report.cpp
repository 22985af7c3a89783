#include "cuspgauge/report.hpp"

#include <cmath>
#include <cstdio>

namespace cuspgauge {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void pad(std::string& out, int indent, int depth) {
    if (indent > 0) {
        out += '\n';
        out.append(static_cast<std::size_t>(indent) * depth, ' ');
    }
}

} // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&value_)) {
        out += *b ? "true" : "false";
    } else if (const long long* i = std::get_if<long long>(&value_)) {
        out += std::to_string(*i);
    } else if (const double* d = std::get_if<double>(&value_)) {
        if (std::isfinite(*d))
            out += format_double(*d);
        else
            out += "null";  // JSON has no inf/nan
    } else if (const std::string* s = std::get_if<std::string>(&value_)) {
        escape_into(out, *s);
    } else if (const Object* o = std::get_if<Object>(&value_)) {
        if (o->empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, val] : *o) {
            if (!first) out += ',';
            first = false;
            pad(out, indent, depth + 1);
            escape_into(out, key);
            out += indent > 0 ? ": " : ":";
            val.write(out, indent, depth + 1);
        }
        pad(out, indent, depth);
        out += '}';
    } else if (const Array* a = std::get_if<Array>(&value_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& val : *a) {
            if (!first) out += ',';
            first = false;
            pad(out, indent, depth + 1);
            val.write(out, indent, depth + 1);
        }
        pad(out, indent, depth);
        out += ']';
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::NotCertified: return "not-certified";
        case Verdict::Infeasible: return "infeasible";
        case Verdict::InvalidInput: return "invalid-input";
    }
    return "invalid-input";
}

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::Certified: return 0;
        case Verdict::NotCertified: return 1;
        case Verdict::Infeasible: return 2;
        case Verdict::InvalidInput: return 2;
    }
    return 2;
}

std::string serialize_report(const ReportEnvelope& env, const Tolerances& tol) {
    JsonValue::Object root;
    root["command"] = env.command;
    root["inputs"] = JsonValue(env.inputs);
    root["results"] = JsonValue(env.results);
    root["verdict"] = verdict_name(env.verdict);
    root["tool_version"] = kToolVersion;
    JsonValue::Object t;
    t["geometry"] = tol.geometry;
    t["ode"] = tol.ode;
    root["tolerances"] = JsonValue(std::move(t));
    return JsonValue(std::move(root)).dump(2) + "\n";
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n") != std::string::npos) {
            out += '"';
            for (char ch : c) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
        } else {
            out += c;
        }
    }
    out += '\n';
    return out;
}

std::string csv_double_row(const std::vector<double>& cells) {
    std::vector<std::string> text;
    text.reserve(cells.size());
    for (double v : cells) text.push_back(format_double(v));
    return csv_row(text);
}

} // namespace cuspgauge
