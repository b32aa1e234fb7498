#pragma once

/// @file report.hpp
/// @brief Deterministic run reports with text and JSON rendering.
///
/// A RunReport collects the results of one front-end invocation: named
/// values (polynomial renderings, degrees, counts), pass/fail check lines
/// and structured functional-equation records, grouped into sections that
/// are emitted in insertion order.  Wall-clock timings are recorded apart
/// from the sections and rendered last — under a "# timings" header in
/// text, under the final "timings" key in JSON — so that everything before
/// them is byte-identical across runs with the same inputs and cache.

#include <string>
#include <utility>
#include <vector>

#include "universal.hpp"
#include "zeta.hpp"

namespace mzeta {

/// Name/value line of a report section; values are canonical renderings.
struct ReportItem {
    std::string label;
    std::string value;
};

/// One titled block of report output.
struct ReportSection {
    std::string title;
    std::vector<ReportItem> items;
    std::vector<CheckLine> checks;
    std::vector<FEReport> equations;

    bool passed() const;
    void item(const std::string& label, const std::string& value);
    void check(const std::string& label, bool ok, const std::string& detail = "");
    void equation(const FEReport& fe);
    /// Appends every line of a verification report as a check line.
    void absorb(const VerifyReport& report);
};

/// Full result of a run: titled sections in task order, optional cache
/// statistics, and timings.  Both renderings end with the timing block, so
/// comparing reports up to timings means dropping that final section.
class RunReport {
public:
    explicit RunReport(std::string title);

    ReportSection& section(const std::string& title);
    void set_cache(const CacheStatus& status);
    void add_timing(const std::string& name, double seconds);

    bool passed() const;
    /// 0 when every check and equation passed, 1 otherwise.
    int exit_code() const;

    std::string render_text() const;
    std::string render_json() const;

    const std::vector<ReportSection>& sections() const { return sections_; }

private:
    std::string title_;
    std::vector<ReportSection> sections_;
    bool have_cache_ = false;
    CacheStatus cache_;
    std::vector<std::pair<std::string, double>> timings_;
};

/// Version line embedded in every report.
std::string tool_version();

}  // namespace mzeta
