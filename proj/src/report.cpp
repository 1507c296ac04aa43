#include <hvf/report.hpp>

#include <algorithm>
#include <iomanip>
#include <map>

namespace hvf
{

std::size_t Report::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckRecord &c) { return !c.pass; }));
}

void Report::append(const Report &other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void Report::append(std::vector<CheckRecord> records)
{
    for (auto &r : records) {
        checks.push_back(std::move(r));
    }
}

void to_json(nlohmann::json &j, const CheckRecord &c)
{
    j = nlohmann::json{{"name", c.name}, {"subject", c.subject}, {"pass", c.pass}};
    if (c.index) {
        j["index"] = *c.index;
    }
    if (c.point) {
        j["point"] = {c.point->real(), c.point->imag()};
    }
    if (!c.residuals.empty()) {
        j["residuals"] = c.residuals;
    }
    if (!c.detail.empty()) {
        j["detail"] = c.detail;
    }
}

void from_json(const nlohmann::json &j, CheckRecord &c)
{
    c = CheckRecord{};
    j.at("name").get_to(c.name);
    j.at("subject").get_to(c.subject);
    j.at("pass").get_to(c.pass);
    if (j.contains("index")) {
        c.index = j.at("index").get<int>();
    }
    if (j.contains("point")) {
        const auto &p = j.at("point");
        c.point = std::complex<double>(p.at(0).get<double>(), p.at(1).get<double>());
    }
    if (j.contains("residuals")) {
        j.at("residuals").get_to(c.residuals);
    }
    if (j.contains("detail")) {
        j.at("detail").get_to(c.detail);
    }
}

void to_json(nlohmann::json &j, const Report &r)
{
    j = nlohmann::json{{"suite", r.suite},
                       {"checks", r.checks},
                       {"notes", r.notes},
                       {"total", r.checks.size()},
                       {"failures", r.failures()}};
}

void from_json(const nlohmann::json &j, Report &r)
{
    r = Report{};
    j.at("suite").get_to(r.suite);
    j.at("checks").get_to(r.checks);
    if (j.contains("notes")) {
        j.at("notes").get_to(r.notes);
    }
}

void write_text(std::ostream &os, const Report &r, bool verbose)
{
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_name;
    std::vector<std::string> order;
    for (const auto &c : r.checks) {
        auto [it, inserted] = by_name.try_emplace(c.name, 0, 0);
        if (inserted) {
            order.push_back(c.name);
        }
        ++it->second.first;
        if (c.pass) {
            ++it->second.second;
        }
        if (!c.pass || verbose) {
            os << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.subject;
            if (c.index) {
                os << ", index " << *c.index;
            }
            os << "]";
            if (c.point) {
                os << " z=" << c.point->real() << (c.point->imag() < 0 ? "" : "+") << c.point->imag() << "i";
            }
            if (!c.residuals.empty()) {
                os << " max residual " << std::setprecision(3)
                   << *std::max_element(c.residuals.begin(), c.residuals.end()) << std::setprecision(6);
            }
            if (!c.detail.empty()) {
                os << " : " << c.detail;
            }
            os << '\n';
        }
    }
    os << "suite " << r.suite << '\n';
    for (const auto &name : order) {
        const auto &[total, passed] = by_name[name];
        os << "  " << std::left << std::setw(28) << name << std::right << passed << "/" << total << " passed\n";
    }
    for (const auto &note : r.notes) {
        os << "  note: " << note << '\n';
    }
    os << "total " << r.checks.size() << " checks, " << r.failures() << " failed\n";
}

} // namespace hvf
