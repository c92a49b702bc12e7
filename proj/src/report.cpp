#include "lorentz/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lorentz {

int Report::passed() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.pass; }));
}

int Report::failed() const {
    return static_cast<int>(checks.size()) - passed();
}

std::string format_number(double x) {
    if (!std::isfinite(x))
        throw std::logic_error("refusing to format a non-finite number");
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string to_json(const Report& r) {
    std::ostringstream out;
    out << "{\"suite\": \"" << json_escape(r.suite) << "\", \"seed\": "
        << r.seed << ", \"checks\": [";
    bool first = true;
    for (const auto& c : r.checks) {
        if (!first) out << ", ";
        first = false;
        out << "{\"name\": \"" << json_escape(c.name) << "\", \"status\": \""
            << (c.pass ? "pass" : "fail") << "\", \"deviation\": "
            << format_number(c.deviation) << ", \"tolerance\": "
            << format_number(c.tolerance) << ", \"paper_anchor\": \""
            << json_escape(c.anchor) << "\"";
        if (!c.note.empty())
            out << ", \"note\": \"" << json_escape(c.note) << "\"";
        out << "}";
    }
    out << "], \"summary\": {\"passed\": " << r.passed()
        << ", \"failed\": " << r.failed() << "}}";
    return out.str();
}

std::string to_text(const Report& r) {
    std::size_t width = 4;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    std::ostringstream out;
    out << "suite: " << r.suite << " (seed " << r.seed << ")\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "pass  " : "FAIL  ") << c.name;
        out << std::string(width - c.name.size() + 2, ' ');
        out << "deviation " << format_number(c.deviation) << " (tolerance "
            << format_number(c.tolerance) << ")  " << c.anchor;
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << "\n";
    }
    out << r.passed() << " passed, " << r.failed() << " failed\n";
    return out.str();
}

}  // namespace lorentz
