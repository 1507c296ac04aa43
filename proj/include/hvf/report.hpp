#ifndef HVF_REPORT_HPP
#define HVF_REPORT_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hvf
{

// One verified identity or numeric check.
struct CheckRecord {
    std::string name;
    std::string subject;
    std::optional<int> index;
    bool pass = false;
    std::optional<std::complex<double>> point;
    std::vector<double> residuals;
    // Difference polynomial for a failed exact check, or a free-form note.
    std::string detail;

    friend bool operator==(const CheckRecord &, const CheckRecord &) = default;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;
    std::vector<std::string> notes;

    std::size_t failures() const;
    bool all_passed() const { return failures() == 0; }
    void append(const Report &other);
    void append(std::vector<CheckRecord> records);

    friend bool operator==(const Report &, const Report &) = default;
};

void to_json(nlohmann::json &j, const CheckRecord &c);
void from_json(const nlohmann::json &j, CheckRecord &c);
void to_json(nlohmann::json &j, const Report &r);
void from_json(const nlohmann::json &j, Report &r);

// Per-check lines (failures always, passes when verbose) plus a summary by name.
void write_text(std::ostream &os, const Report &r, bool verbose = false);

} // namespace hvf

#endif
