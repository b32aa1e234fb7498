/// @file test_capi.cpp
/// @brief Tests for the C facade: handles, status codes, report renderings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <filesystem>
#include <random>
#include <string>

#include "json.hpp"
#include "mzeta.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::mt19937_64 rng{std::random_device{}()};
        path = fs::temp_directory_path() /
               ("mzeta-capi-" + std::to_string(rng()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

struct Engine {
    mz_engine* handle;
    explicit Engine(const char* dir = nullptr) : handle(mz_engine_new(dir)) {}
    ~Engine() { mz_engine_free(handle); }
    operator mz_engine*() const { return handle; }
};

std::string take(char* text) {
    REQUIRE(text != nullptr);
    std::string out = text;
    mz_string_free(text);
    return out;
}

std::string report_text(mz_report* report) {
    char* text = nullptr;
    REQUIRE(mz_report_text(report, &text) == MZ_OK);
    return take(text);
}

std::string report_json(mz_report* report) {
    char* text = nullptr;
    REQUIRE(mz_report_json(report, &text) == MZ_OK);
    return take(text);
}

const char* kElliptic =
    "atom h1 minus bound 2\n"
    "  sym 2 = L\n"
    "expr E = 1 + h1 + L\n"
    "plus E = 1 + L\n"
    "minus E = h1\n"
    "task zeta E order 4 weight 1\n";

}  // namespace

TEST_CASE("version and engine lifecycle") {
    CHECK(std::string(mz_version()).rfind("mzeta ", 0) == 0);
    Engine engine;
    REQUIRE(engine.handle != nullptr);
    CHECK(std::string(mz_engine_last_error(engine)) == "");
    CHECK(std::string(mz_engine_last_error(nullptr)) == "null engine handle");
}

TEST_CASE("universal polynomial texts") {
    Engine engine;
    char* text = nullptr;
    REQUIRE(mz_universal_p(engine, 2, &text) == MZ_OK);
    CHECK(take(text) == "s1^2*t2 + s2*t1^2 - 2*s2*t2");

    REQUIRE(mz_universal_pnr(engine, 1, 3, &text) == MZ_OK);
    CHECK(take(text) == "s3");

    REQUIRE(mz_universal_q(engine, 1, 1, &text) == MZ_OK);
    CHECK(take(text) == "1 + s1*t + s2*t^2");
}

TEST_CASE("status codes and error strings") {
    Engine engine;
    char* text = nullptr;
    CHECK(mz_universal_p(engine, 0, &text) == MZ_ERR_USAGE);
    CHECK(text == nullptr);
    CHECK(std::string(mz_engine_last_error(engine)).find("1 <= n <= 8") !=
          std::string::npos);

    CHECK(mz_universal_p(engine, 1, &text) == MZ_OK);
    CHECK(std::string(mz_engine_last_error(engine)) == ""); // cleared on success
    mz_string_free(text);

    mz_report* report = nullptr;
    CHECK(mz_cmd_verify_abelian(engine, 0, &report) == MZ_ERR_USAGE);
    CHECK(report == nullptr);
    CHECK(std::string(mz_engine_last_error(engine)).find("1..3") != std::string::npos);

    mz_doc* doc = nullptr;
    CHECK(mz_doc_parse(engine, "atom h1 minus\n", &doc) == MZ_ERR_USAGE);
    CHECK(std::string(mz_engine_last_error(engine)).find("document line 1") !=
          std::string::npos);
    CHECK(mz_doc_parse_file(engine, "/no/such/file.mz", &doc) == MZ_ERR_IO);

    CHECK(mz_universal_p(nullptr, 2, &text) == MZ_ERR_USAGE);
    CHECK(mz_universal_p(engine, 2, nullptr) == MZ_ERR_USAGE);
}

TEST_CASE("zeta command over a document") {
    Engine engine;
    mz_doc* doc = nullptr;
    REQUIRE(mz_doc_parse(engine, kElliptic, &doc) == MZ_OK);

    mz_report* report = nullptr;
    REQUIRE(mz_cmd_zeta(engine, doc, nullptr, -1, -1, &report) == MZ_OK);
    CHECK(mz_report_passed(report) == 1);

    std::string text = report_text(report);
    CHECK(text.find("numerator: 1 + h1*T + L*T^2") != std::string::npos);
    CHECK(text.find("denominator: 1 - T - L*T + L*T^2") != std::string::npos);
    CHECK(text.find("T^0: 1") != std::string::npos);
    CHECK(text.find("equation E") != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);

    auto parsed = nlohmann::json::parse(report_json(report));
    CHECK(parsed["passed"] == true);
    REQUIRE(parsed["sections"].size() == 1);
    const auto& sec = parsed["sections"][0];
    CHECK(sec["title"] == "zeta E");
    REQUIRE(sec["equations"].size() == 1);
    const auto& eq = sec["equations"][0];
    CHECK(eq["subject"] == "E");
    CHECK(eq["weight"] == 1);
    CHECK(eq["degree"] == 0);
    CHECK(eq["l_exponent"] == 0);
    CHECK(eq["passed"] == true);
    CHECK(eq["witness"] == "");
    CHECK(parsed.contains("timings"));
    mz_report_free(report);

    // Explicit expression name and order override.
    REQUIRE(mz_cmd_zeta(engine, doc, "E", 2, -1, &report) == MZ_OK);
    std::string short_text = report_text(report);
    CHECK(short_text.find("order: 2") != std::string::npos);
    CHECK(short_text.find("T^2: ") != std::string::npos);
    CHECK(short_text.find("T^3:") == std::string::npos);
    mz_report_free(report);

    // Unknown class name.
    CHECK(mz_cmd_zeta(engine, doc, "F", -1, -1, &report) == MZ_ERR_USAGE);
    CHECK(std::string(mz_engine_last_error(engine)).find("no class named 'F'") !=
          std::string::npos);

    mz_doc_free(doc);
}

TEST_CASE("verify commands round-trip through the facade") {
    Engine engine;
    mz_report* report = nullptr;

    REQUIRE(mz_cmd_verify_curve(engine, 0, &report) == MZ_OK);
    CHECK(mz_report_passed(report) == 1);
    std::string text = report_text(report);
    CHECK(text.find("verify curve (g = 0)") != std::string::npos);
    CHECK(text.find("[ok]") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);
    mz_report_free(report);

    REQUIRE(mz_cmd_verify_abelian(engine, 1, &report) == MZ_OK);
    CHECK(mz_report_passed(report) == 1);
    auto parsed = nlohmann::json::parse(report_json(report));
    CHECK(parsed["passed"] == true);
    CHECK(parsed["cache"]["p_entries"].is_array());
    bool all_passed = true;
    for (const auto& check : parsed["sections"][0]["checks"])
        all_passed = all_passed && check["passed"].get<bool>();
    CHECK(all_passed);
    CHECK(parsed["sections"][0]["checks"].size() >= 10);
    mz_report_free(report);
}

TEST_CASE("cache commands and deterministic reports") {
    TempDir dir;
    std::string dir_text = dir.path.string();
    Engine engine(dir_text.c_str());
    mz_report* report = nullptr;

    REQUIRE(mz_cmd_cache_status(engine, &report) == MZ_OK);
    std::string empty_status = report_text(report);
    CHECK(empty_status.find("P entries: 0") != std::string::npos);
    CHECK(empty_status.find("Pnr entries: 0") != std::string::npos);
    mz_report_free(report);

    char* text = nullptr;
    REQUIRE(mz_universal_p(engine, 3, &text) == MZ_OK);
    mz_string_free(text);

    REQUIRE(mz_cmd_cache_status(engine, &report) == MZ_OK);
    std::string warm_status = report_text(report);
    CHECK(warm_status.find("P entries: 1") != std::string::npos);
    CHECK(warm_status.find("present: yes") != std::string::npos);
    mz_report_free(report);

    // Identical inputs + cache give byte-identical reports up to timings.
    mz_report* again = nullptr;
    REQUIRE(mz_cmd_cache_status(engine, &again) == MZ_OK);
    std::string repeat = report_text(again);
    mz_report_free(again);
    auto stable = [](const std::string& s) {
        return s.substr(0, s.find("# timings"));
    };
    CHECK(stable(repeat) == stable(warm_status));

    REQUIRE(mz_cmd_cache_clear(engine, &report) == MZ_OK);
    std::string cleared = report_text(report);
    CHECK(cleared.find("cleared: yes") != std::string::npos);
    CHECK(cleared.find("P entries: 0") != std::string::npos);
    CHECK(cleared.find("present: no") != std::string::npos);
    mz_report_free(report);
    CHECK(!fs::exists(dir.path / "universal.cache"));

    REQUIRE(mz_cmd_cache_warm(engine, 1, &report) == MZ_OK);
    std::string warmed = report_text(report);
    CHECK(warmed.find("warmed for dimension: 1") != std::string::npos);
    CHECK(warmed.find("present: yes") != std::string::npos);
    mz_report_free(report);
    CHECK(fs::exists(dir.path / "universal.cache"));

    CHECK(mz_cmd_cache_warm(engine, 9, &report) == MZ_ERR_USAGE);
}

TEST_CASE("failing check yields a failing report, not an error") {
    Engine engine;
    mz_doc* doc = nullptr;
    // Sym^2(h1) = 2L breaks the reflection: the leading coefficient is 2L.
    const char* skewed =
        "atom h1 minus bound 2\n"
        "  sym 2 = 2*L\n"
        "plus E = 1 + L\n"
        "minus E = h1\n"
        "task zeta E weight 1\n";
    REQUIRE(mz_doc_parse(engine, skewed, &doc) == MZ_OK);
    mz_report* report = nullptr;
    REQUIRE(mz_cmd_zeta(engine, doc, nullptr, -1, -1, &report) == MZ_OK);
    CHECK(mz_report_passed(report) == 0);
    std::string text = report_text(report);
    CHECK(text.find("passed: no") != std::string::npos);
    CHECK(text.find("witness: ") != std::string::npos);
    CHECK(text.find("result: FAIL") != std::string::npos);
    mz_report_free(report);
    mz_doc_free(doc);
}
