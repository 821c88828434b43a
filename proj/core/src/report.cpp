#include "hk/report.hpp"

#include <algorithm>
#include <iomanip>

#include "json.hpp"

namespace hk {

Report merge_reports(const std::string& suite, std::vector<Report> parts) {
    Report out;
    out.suite = suite;
    for (auto& p : parts) {
        for (auto& c : p.checks) {
            Check cc = c;
            if (!p.suite.empty()) cc.name = p.suite + "." + cc.name;
            out.checks.push_back(std::move(cc));
        }
        out.elapsed_ms += p.elapsed_ms;
    }
    std::stable_sort(out.checks.begin(), out.checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    return out;
}

std::string report_json(const Report& r, bool pretty) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["elapsed_ms"] = r.elapsed_ms;
    j["pass"] = r.all_pass();
    j["checks"] = nlohmann::json::array();
    for (auto& c : r.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["got"] = c.got;
        jc["pass"] = c.pass;
        if (!c.context.empty()) jc["context"] = c.context;
        j["checks"].push_back(jc);
    }
    return pretty ? j.dump(2) : j.dump();
}

std::string report_table(const Report& r) {
    std::ostringstream os;
    size_t w = 4;
    for (auto& c : r.checks) w = std::max(w, c.name.size());
    os << r.suite << "  (" << r.checks.size() << " checks, " << r.failures() << " failures, "
       << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)\n";
    for (auto& c : r.checks) {
        os << "  " << (c.pass ? "[ok]   " : "[FAIL] ") << std::left << std::setw(int(w) + 2)
           << c.name << " expected=" << c.expected << " got=" << c.got;
        if (!c.context.empty()) os << "  (" << c.context << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace hk
