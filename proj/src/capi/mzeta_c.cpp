/// @file mzeta_c.cpp
/// @brief C facade over the computation core: opaque handles, status codes,
///        per-engine error strings.

#include "mzeta.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "core/commands.hpp"
#include "core/errors.hpp"

struct mz_engine {
    mzeta::UniversalEngine engine;
    std::string last_error;

    mz_engine() = default;
    explicit mz_engine(std::string dir) : engine(std::move(dir)) {}
};

struct mz_doc {
    mzeta::MotiveDocument doc;
};

struct mz_report {
    mzeta::RunReport report;

    explicit mz_report(mzeta::RunReport r) : report(std::move(r)) {}
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs fn under the engine's error channel, mapping exceptions to codes.
template <typename Fn>
mz_status guarded(mz_engine* engine, Fn&& fn) {
    if (!engine) return MZ_ERR_USAGE;
    engine->last_error.clear();
    try {
        return fn();
    } catch (const mzeta::usage_error& e) {
        engine->last_error = e.what();
        return MZ_ERR_USAGE;
    } catch (const mzeta::domain_error& e) {
        engine->last_error = e.what();
        return MZ_ERR_DOMAIN;
    } catch (const mzeta::io_error& e) {
        engine->last_error = e.what();
        return MZ_ERR_IO;
    } catch (const std::exception& e) {
        engine->last_error = e.what();
        return MZ_ERR_INTERNAL;
    } catch (...) {
        engine->last_error = "unknown failure";
        return MZ_ERR_INTERNAL;
    }
}

mz_status deliver_text(mz_engine* engine, std::string text, char** out_text) {
    *out_text = dup_string(text);
    if (*out_text) return MZ_OK;
    engine->last_error = "out of memory";
    return MZ_ERR_INTERNAL;
}

mz_status deliver_report(mz_engine* engine, mzeta::RunReport report,
                         mz_report** out_report) {
    *out_report = new (std::nothrow) mz_report(std::move(report));
    if (*out_report) return MZ_OK;
    engine->last_error = "out of memory";
    return MZ_ERR_INTERNAL;
}

}  // namespace

extern "C" {

mz_engine* mz_engine_new(const char* cache_dir) {
    try {
        std::string dir = cache_dir ? cache_dir : "";
        if (dir.empty()) {
            const char* env = std::getenv("MZETA_CACHE_DIR");
            if (env) dir = env;
        }
        return dir.empty() ? new mz_engine() : new mz_engine(std::move(dir));
    } catch (...) {
        return nullptr;
    }
}

void mz_engine_free(mz_engine* engine) { delete engine; }

const char* mz_engine_last_error(const mz_engine* engine) {
    return engine ? engine->last_error.c_str() : "null engine handle";
}

mz_status mz_universal_p(mz_engine* engine, int n, char** out_text) {
    if (!out_text) return MZ_ERR_USAGE;
    *out_text = nullptr;
    return guarded(engine, [&] {
        return deliver_text(engine, mzeta::universal_p_text(engine->engine, n), out_text);
    });
}

mz_status mz_universal_pnr(mz_engine* engine, int n, int r, char** out_text) {
    if (!out_text) return MZ_ERR_USAGE;
    *out_text = nullptr;
    return guarded(engine, [&] {
        return deliver_text(engine, mzeta::universal_pnr_text(engine->engine, n, r),
                            out_text);
    });
}

mz_status mz_universal_q(mz_engine* engine, int g, int n, char** out_text) {
    if (!out_text) return MZ_ERR_USAGE;
    *out_text = nullptr;
    return guarded(engine, [&] {
        return deliver_text(engine, mzeta::universal_q_text(engine->engine, g, n),
                            out_text);
    });
}

mz_status mz_doc_parse(mz_engine* engine, const char* text, mz_doc** out_doc) {
    if (!out_doc) return MZ_ERR_USAGE;
    *out_doc = nullptr;
    return guarded(engine, [&]() -> mz_status {
        if (!text) throw mzeta::usage_error("document text is null");
        auto parsed = mzeta::MotiveDocument::parse(text);
        *out_doc = new (std::nothrow) mz_doc{std::move(parsed)};
        if (*out_doc) return MZ_OK;
        engine->last_error = "out of memory";
        return MZ_ERR_INTERNAL;
    });
}

mz_status mz_doc_parse_file(mz_engine* engine, const char* path, mz_doc** out_doc) {
    if (!out_doc) return MZ_ERR_USAGE;
    *out_doc = nullptr;
    return guarded(engine, [&]() -> mz_status {
        if (!path) throw mzeta::usage_error("document path is null");
        auto parsed = mzeta::MotiveDocument::parse_file(path);
        *out_doc = new (std::nothrow) mz_doc{std::move(parsed)};
        if (*out_doc) return MZ_OK;
        engine->last_error = "out of memory";
        return MZ_ERR_INTERNAL;
    });
}

void mz_doc_free(mz_doc* doc) { delete doc; }

mz_status mz_cmd_zeta(mz_engine* engine, const mz_doc* doc, const char* expr,
                      int order, int weight, mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&]() -> mz_status {
        if (!doc) throw mzeta::usage_error("document handle is null");
        std::string name = expr ? expr : "";
        return deliver_report(
            engine, mzeta::cmd_zeta(engine->engine, doc->doc, name, order, weight),
            out_report);
    });
}

mz_status mz_cmd_verify_abelian(mz_engine* engine, int g, mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&] {
        return deliver_report(engine, mzeta::cmd_verify_abelian(engine->engine, g),
                              out_report);
    });
}

mz_status mz_cmd_verify_curve(mz_engine* engine, int g, mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&] {
        return deliver_report(engine, mzeta::cmd_verify_curve(engine->engine, g),
                              out_report);
    });
}

mz_status mz_cmd_verify_product(mz_engine* engine, int gx, int gy,
                                mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&] {
        return deliver_report(engine, mzeta::cmd_verify_product(engine->engine, gx, gy),
                              out_report);
    });
}

mz_status mz_cmd_verify_blowup(mz_engine* engine, int g, int codim,
                               mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&] {
        return deliver_report(engine,
                              mzeta::cmd_verify_blowup(engine->engine, g, codim),
                              out_report);
    });
}

mz_status mz_cmd_verify_identities(mz_engine* engine, int max_weight,
                                   mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&] {
        return deliver_report(
            engine, mzeta::cmd_verify_identities(engine->engine, max_weight), out_report);
    });
}

mz_status mz_cmd_cache_status(mz_engine* engine, mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&] {
        return deliver_report(engine, mzeta::cmd_cache_status(engine->engine), out_report);
    });
}

mz_status mz_cmd_cache_clear(mz_engine* engine, mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&] {
        return deliver_report(engine, mzeta::cmd_cache_clear(engine->engine), out_report);
    });
}

mz_status mz_cmd_cache_warm(mz_engine* engine, int g, mz_report** out_report) {
    if (!out_report) return MZ_ERR_USAGE;
    *out_report = nullptr;
    return guarded(engine, [&] {
        return deliver_report(engine, mzeta::cmd_cache_warm(engine->engine, g),
                              out_report);
    });
}

int mz_report_passed(const mz_report* report) {
    return report && report->report.passed() ? 1 : 0;
}

mz_status mz_report_text(const mz_report* report, char** out_text) {
    if (!report || !out_text) return MZ_ERR_USAGE;
    *out_text = nullptr;
    try {
        *out_text = dup_string(report->report.render_text());
        return *out_text ? MZ_OK : MZ_ERR_INTERNAL;
    } catch (...) {
        return MZ_ERR_INTERNAL;
    }
}

mz_status mz_report_json(const mz_report* report, char** out_text) {
    if (!report || !out_text) return MZ_ERR_USAGE;
    *out_text = nullptr;
    try {
        *out_text = dup_string(report->report.render_json());
        return *out_text ? MZ_OK : MZ_ERR_INTERNAL;
    } catch (...) {
        return MZ_ERR_INTERNAL;
    }
}

void mz_report_free(mz_report* report) { delete report; }

void mz_string_free(char* text) { std::free(text); }

const char* mz_version(void) {
    static const std::string version = mzeta::tool_version();
    return version.c_str();
}

}  // extern "C"
