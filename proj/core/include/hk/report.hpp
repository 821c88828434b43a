#pragma once

#include "hk/numeric.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace hk {

struct Check {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
    std::string context;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    double elapsed_ms = 0;

    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (auto& c : checks) n += !c.pass;
        return n;
    }
};

namespace detail {
inline std::string stringify(const std::string& s) { return s; }
inline std::string stringify(const char* s) { return s; }
inline std::string stringify(bool b) { return b ? "true" : "false"; }
template <class T>
std::string stringify(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}
template <class T>
std::string stringify(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}
}  // namespace detail

template <class E, class G>
void add_check(Report& r, const std::string& name, const E& expected, const G& got,
               const std::string& context = "") {
    std::string e = detail::stringify(expected), g = detail::stringify(got);
    r.checks.push_back(Check{name, e, g, e == g, context});
}

inline void add_bool_check(Report& r, const std::string& name, bool pass,
                           const std::string& detail = "", const std::string& context = "") {
    r.checks.push_back(Check{name, "true", pass ? "true" : (detail.empty() ? "false" : detail),
                             pass, context});
}

Report merge_reports(const std::string& suite, std::vector<Report> parts);
std::string report_json(const Report& r, bool pretty = false);
std::string report_table(const Report& r);

}  // namespace hk
