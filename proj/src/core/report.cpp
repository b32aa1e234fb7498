/// @file report.cpp
/// @brief Text and JSON rendering of run reports.

#include "report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace mzeta {

namespace {

const char* kToolVersion = "mzeta 1.0.0";
const char* kCacheFormat = "MZETA-CACHE v1";

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string format_ms(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f ms", seconds * 1000.0);
    return buf;
}

}  // namespace

std::string tool_version() { return kToolVersion; }

bool ReportSection::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    for (const auto& e : equations)
        if (!e.passed) return false;
    return true;
}

void ReportSection::item(const std::string& label, const std::string& value) {
    items.push_back({label, value});
}

void ReportSection::check(const std::string& label, bool ok, const std::string& detail) {
    checks.push_back({label, ok, detail});
}

void ReportSection::equation(const FEReport& fe) { equations.push_back(fe); }

void ReportSection::absorb(const VerifyReport& report) {
    for (const auto& line : report.lines) checks.push_back(line);
}

RunReport::RunReport(std::string title) : title_(std::move(title)) {}

ReportSection& RunReport::section(const std::string& title) {
    sections_.push_back(ReportSection{});
    sections_.back().title = title;
    return sections_.back();
}

void RunReport::set_cache(const CacheStatus& status) {
    have_cache_ = true;
    cache_ = status;
}

void RunReport::add_timing(const std::string& name, double seconds) {
    timings_.emplace_back(name, seconds);
}

bool RunReport::passed() const {
    for (const auto& s : sections_)
        if (!s.passed()) return false;
    return true;
}

int RunReport::exit_code() const { return passed() ? 0 : 1; }

std::string RunReport::render_text() const {
    std::ostringstream out;
    out << "mzeta report: " << title_ << "\n";
    out << "version: " << kToolVersion << "\n";
    out << "cache-format: " << kCacheFormat << "\n";
    for (const auto& s : sections_) {
        out << "\n## " << s.title << "\n";
        for (const auto& it : s.items) out << it.label << ": " << it.value << "\n";
        for (const auto& c : s.checks) {
            out << (c.passed ? "[ok] " : "[FAIL] ") << c.label;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
        }
        for (const auto& e : s.equations) {
            out << "equation " << e.subject << "\n";
            out << "  weight: " << e.weight << "\n";
            out << "  degree: " << e.degree << "\n";
            out << "  l_exponent: " << e.l_exponent << "\n";
            out << "  passed: " << yesno(e.passed) << "\n";
            if (!e.witness.empty()) out << "  witness: " << e.witness << "\n";
        }
    }
    if (have_cache_) {
        out << "\n## cache\n";
        out << "file: " << (cache_.path.empty() ? "(memory only)" : cache_.path) << "\n";
        out << "present: " << yesno(cache_.file_present) << "\n";
        out << "bytes: " << cache_.file_bytes << "\n";
        out << "P entries:";
        for (int n : cache_.p_entries) out << " " << n;
        out << "\n";
        out << "Pnr entries:";
        for (const auto& [n, r] : cache_.pnr_entries) out << " (" << n << "," << r << ")";
        out << "\n";
        out << "hits: " << cache_.hits << "\n";
        out << "misses: " << cache_.misses << "\n";
    }
    out << "\nresult: " << (passed() ? "PASS" : "FAIL") << "\n";
    out << "\n# timings\n";
    for (const auto& [name, seconds] : timings_)
        out << name << ": " << format_ms(seconds) << "\n";
    return out.str();
}

std::string RunReport::render_json() const {
    nlohmann::ordered_json doc;
    doc["title"] = title_;
    doc["version"] = kToolVersion;
    doc["cache_format"] = kCacheFormat;
    doc["sections"] = nlohmann::ordered_json::array();
    for (const auto& s : sections_) {
        nlohmann::ordered_json sec;
        sec["title"] = s.title;
        sec["items"] = nlohmann::ordered_json::array();
        for (const auto& it : s.items)
            sec["items"].push_back({{"label", it.label}, {"value", it.value}});
        sec["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : s.checks)
            sec["checks"].push_back(
                {{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
        sec["equations"] = nlohmann::ordered_json::array();
        for (const auto& e : s.equations)
            sec["equations"].push_back({{"subject", e.subject},
                                        {"weight", e.weight},
                                        {"degree", e.degree},
                                        {"l_exponent", e.l_exponent},
                                        {"passed", e.passed},
                                        {"witness", e.witness}});
        doc["sections"].push_back(std::move(sec));
    }
    if (have_cache_) {
        nlohmann::ordered_json cache;
        cache["file"] = cache_.path;
        cache["present"] = cache_.file_present;
        cache["bytes"] = cache_.file_bytes;
        cache["p_entries"] = cache_.p_entries;
        cache["pnr_entries"] = nlohmann::ordered_json::array();
        for (const auto& [n, r] : cache_.pnr_entries)
            cache["pnr_entries"].push_back({n, r});
        cache["hits"] = cache_.hits;
        cache["misses"] = cache_.misses;
        doc["cache"] = std::move(cache);
    }
    doc["passed"] = passed();
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    for (const auto& [name, seconds] : timings_) timings[name] = seconds;
    doc["timings"] = std::move(timings);
    return doc.dump(2) + "\n";
}

}  // namespace mzeta
