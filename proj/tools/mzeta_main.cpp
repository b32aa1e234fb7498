/// @file mzeta_main.cpp
/// @brief Command-line front end; talks to the engine through the C API only.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mzeta.h"

namespace {

/// Owns the engine handle for the lifetime of the process.
struct Engine {
    mz_engine* handle = nullptr;
    explicit Engine(const std::string& dir) {
        handle = mz_engine_new(dir.empty() ? nullptr : dir.c_str());
    }
    ~Engine() { mz_engine_free(handle); }
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;
};

int report_error(mz_engine* engine) {
    std::fprintf(stderr, "mzeta: %s\n", mz_engine_last_error(engine));
    return 2;
}

/// Prints the report and converts its outcome into the exit code:
/// 0 when every check passed, 1 otherwise.
int emit_report(mz_engine* engine, mz_report* report, bool json) {
    char* text = nullptr;
    mz_status st = json ? mz_report_json(report, &text) : mz_report_text(report, &text);
    if (st != MZ_OK) {
        mz_report_free(report);
        return report_error(engine);
    }
    std::fputs(text, stdout);
    mz_string_free(text);
    int code = mz_report_passed(report) ? 0 : 1;
    mz_report_free(report);
    return code;
}

int emit_command(mz_engine* engine, mz_status st, mz_report* report, bool json) {
    if (st != MZ_OK) return report_error(engine);
    return emit_report(engine, report, json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mzeta - exact lambda-ring engine for motivic zeta functions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", mz_version());

    std::string cache_dir;
    bool json = false;
    app.add_option("--cache-dir", cache_dir,
                   "cache directory (overrides MZETA_CACHE_DIR)");
    app.add_flag("--json", json, "emit the report as JSON");

    // universal: canonical polynomial text.
    auto* uni = app.add_subcommand("universal", "print a universal polynomial");
    std::string uni_kind;
    std::vector<int> uni_idx;
    uni->add_option("kind", uni_kind, "P | Pnr | q")->required();
    uni->add_option("indices", uni_idx, "P n | Pnr n r | q g n");

    // zeta: report for a motive document.
    auto* zeta = app.add_subcommand("zeta", "zeta data of classes in a document");
    std::string doc_path, expr;
    int order = -1, weight = -1;
    zeta->add_option("document", doc_path, "path to a motive document")->required();
    zeta->add_option("--expr", expr, "class name (default: the document's tasks)");
    zeta->add_option("--order", order, "series order (default: derived)");
    zeta->add_option("--weight", weight, "check the reflection T -> 1/(L^weight T)");

    // verify: functional-equation drivers.
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    int g_abelian = 0, g_curve = 0, gx = 1, gy = 1, g_blow = 2, codim = 2;
    int max_weight = 8;
    auto* v_abelian = verify->add_subcommand("abelian", "abelian reflections");
    v_abelian->add_option("--g", g_abelian, "dimension")->required();
    auto* v_curve = verify->add_subcommand("curve", "curve reflections");
    v_curve->add_option("--g", g_curve, "genus")->required();
    auto* v_product = verify->add_subcommand("product", "product of two curve classes");
    v_product->add_option("--gx", gx, "genus of the first factor");
    v_product->add_option("--gy", gy, "genus of the second factor");
    auto* v_blowup = verify->add_subcommand("blowup", "blow-up of an abelian class");
    v_blowup->add_option("--g", g_blow, "dimension of the blown-up class");
    v_blowup->add_option("--codim", codim, "codimension of the center");
    auto* v_ident = verify->add_subcommand("identities", "operation-calculus battery");
    v_ident->add_option("--max-weight", max_weight, "composition weight bound");

    // cache: persistent-store management.
    auto* cache = app.add_subcommand("cache", "inspect or manage the cache");
    cache->require_subcommand(1);
    auto* c_status = cache->add_subcommand("status", "list cached entries");
    auto* c_clear = cache->add_subcommand("clear", "remove the cache file");
    auto* c_warm = cache->add_subcommand("warm", "precompute composition polynomials");
    int g_warm = 0;
    c_warm->add_option("--g", g_warm, "dimension budget")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Engine engine(cache_dir);
    if (!engine.handle) {
        std::fprintf(stderr, "mzeta: cannot create an engine\n");
        return 2;
    }

    if (uni->parsed()) {
        char* text = nullptr;
        mz_status st;
        if (uni_kind == "P" && uni_idx.size() == 1)
            st = mz_universal_p(engine.handle, uni_idx[0], &text);
        else if (uni_kind == "Pnr" && uni_idx.size() == 2)
            st = mz_universal_pnr(engine.handle, uni_idx[0], uni_idx[1], &text);
        else if (uni_kind == "q" && uni_idx.size() == 2)
            st = mz_universal_q(engine.handle, uni_idx[0], uni_idx[1], &text);
        else {
            std::fprintf(stderr, "mzeta: expected 'universal P n', 'universal Pnr n r'"
                                 " or 'universal q g n'\n");
            return 2;
        }
        if (st != MZ_OK) return report_error(engine.handle);
        std::printf("%s\n", text);
        mz_string_free(text);
        return 0;
    }

    if (zeta->parsed()) {
        mz_doc* doc = nullptr;
        if (mz_doc_parse_file(engine.handle, doc_path.c_str(), &doc) != MZ_OK)
            return report_error(engine.handle);
        mz_report* report = nullptr;
        mz_status st = mz_cmd_zeta(engine.handle, doc, expr.empty() ? nullptr : expr.c_str(),
                                   order, weight, &report);
        mz_doc_free(doc);
        return emit_command(engine.handle, st, report, json);
    }

    mz_report* report = nullptr;
    mz_status st = MZ_ERR_INTERNAL;
    if (v_abelian->parsed())
        st = mz_cmd_verify_abelian(engine.handle, g_abelian, &report);
    else if (v_curve->parsed())
        st = mz_cmd_verify_curve(engine.handle, g_curve, &report);
    else if (v_product->parsed())
        st = mz_cmd_verify_product(engine.handle, gx, gy, &report);
    else if (v_blowup->parsed())
        st = mz_cmd_verify_blowup(engine.handle, g_blow, codim, &report);
    else if (v_ident->parsed())
        st = mz_cmd_verify_identities(engine.handle, max_weight, &report);
    else if (c_status->parsed())
        st = mz_cmd_cache_status(engine.handle, &report);
    else if (c_clear->parsed())
        st = mz_cmd_cache_clear(engine.handle, &report);
    else if (c_warm->parsed())
        st = mz_cmd_cache_warm(engine.handle, g_warm, &report);
    return emit_command(engine.handle, st, report, json);
}
