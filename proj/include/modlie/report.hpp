#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace modlie::report {

inline constexpr const char* kSchema = "modlie-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct Check {
    std::string name;
    std::string claim;
    std::string computed;
    std::string expected;
    std::string witness;
    bool pass;
};

/// Ordered list of named checks with a deterministic rendering. A check
/// passes iff its computed string equals its expected string; the expected
/// side can be overridden per name, which the test suite uses to confirm
/// failure isolation.
class CertificateReport {
public:
    void set_header(std::string key, std::string value);
    void add_note(std::string note);

    /// Adds a check; pass = (computed == expected) after any override.
    bool add(const std::string& name, const std::string& claim, const std::string& computed,
             const std::string& expected, const std::string& witness = "");

    void set_expected_overrides(std::map<std::string, std::string> overrides) {
        overrides_ = std::move(overrides);
    }

    bool all_pass() const;
    const std::vector<Check>& checks() const { return checks_; }
    const std::vector<std::pair<std::string, std::string>>& header() const { return header_; }

    std::string render_text() const;
    std::string render_json() const;

private:
    std::vector<std::pair<std::string, std::string>> header_;
    std::vector<Check> checks_;
    std::vector<std::string> notes_;
    std::map<std::string, std::string> overrides_;
};

} // namespace modlie::report
