#include "modlie/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace modlie::report {

void CertificateReport::set_header(std::string key, std::string value) {
    header_.emplace_back(std::move(key), std::move(value));
}

void CertificateReport::add_note(std::string note) { notes_.push_back(std::move(note)); }

bool CertificateReport::add(const std::string& name, const std::string& claim,
                            const std::string& computed, const std::string& expected,
                            const std::string& witness) {
    std::string expect = expected;
    if (auto it = overrides_.find(name); it != overrides_.end()) expect = it->second;
    const bool pass = computed == expect;
    checks_.push_back({name, claim, computed, expect, witness, pass});
    return pass;
}

bool CertificateReport::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::string CertificateReport::render_text() const {
    std::ostringstream os;
    os << "certificate report (" << kSchema << ")\n";
    for (const auto& [k, v] : header_) os << k << ": " << v << "\n";
    std::size_t width = 0;
    for (const Check& c : checks_) width = std::max(width, c.name.size());
    for (const Check& c : checks_) {
        os << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
        os << std::string(width - c.name.size() + 2, ' ');
        os << "computed=" << c.computed << "  expected=" << c.expected << "\n";
        os << "       " << c.claim << "\n";
        if (!c.witness.empty()) os << "       witness: " << c.witness << "\n";
    }
    for (const std::string& n : notes_) os << "note: " << n << "\n";
    os << "verdict: " << (all_pass() ? "PASS" : "FAIL") << " (" << checks_.size() << " checks)\n";
    return os.str();
}

std::string CertificateReport::render_json() const {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["tool"] = {{"name", "modlie"}, {"version", kToolVersion}};
    nlohmann::ordered_json hdr = nlohmann::ordered_json::object();
    for (const auto& [k, v] : header_) hdr[k] = v;
    j["config"] = hdr;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks_) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["claim"] = c.claim;
        jc["computed"] = c.computed;
        jc["expected"] = c.expected;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        jc["pass"] = c.pass;
        j["checks"].push_back(std::move(jc));
    }
    j["notes"] = notes_;
    j["verdict"] = all_pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

} // namespace modlie::report
