/// @file commands.cpp
/// @brief Report assembly for the front-end commands.

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "errors.hpp"
#include "zeta.hpp"

namespace mzeta {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string itos(int n) { return std::to_string(n); }

/// Runs one zeta task of a resolved document and appends its section.
void run_zeta_task(UniversalEngine& engine, const ResolvedDocument& rd,
                   const DocTask& task, RunReport& report) {
    auto start = Clock::now();
    const DocClass& cls = rd.at(task.target);
    K0Evaluator eval(*rd.ctx, engine);
    ReportSection& sec = report.section("zeta " + task.target);
    sec.item("class", task.target);
    sec.item("total", cls.total.render());

    int order = task.order;
    if (cls.has_split) {
        ZetaFunction z = rational_form(eval, cls.plus, cls.minus);
        if (order < 0) order = 2 * std::max(z.num_degree, z.den_degree) + 2;
        VarTablePtr zt = z.numerator.table();
        MultiPoly denominator = z.denominator_arg.substitute(
            zt->var("T"), MultiPoly::parse(zt, "-T"));
        sec.item("plus part", cls.plus.render());
        sec.item("minus part", cls.minus.render());
        sec.item("numerator", z.numerator.render());
        sec.item("numerator degree", itos(z.num_degree));
        sec.item("denominator", denominator.render());
        sec.item("denominator degree", itos(z.den_degree));
        sec.check("rational form reproduces the direct series", true,
                  "through order " + itos(z.order));
        if (task.weight >= 0)
            sec.equation(check_zeta_fe(z, task.weight, task.target));
    } else {
        if (task.weight >= 0)
            throw usage_error("task '" + task.target +
                              "': the reflection check requires a plus/minus split");
        if (order < 0) order = 10;
    }

    PowerSeries series = zeta_series(eval, cls.total, order);
    sec.item("order", itos(order));
    for (int i = 0; i <= order; ++i)
        sec.item("T^" + itos(i), series.coeff(i).render());
    report.add_timing("zeta " + task.target, seconds_since(start));
}

RunReport verify_command(UniversalEngine& engine, const std::string& title,
                         const std::function<VerifyReport()>& body) {
    RunReport report(title);
    auto start = Clock::now();
    VerifyReport v = body();
    double elapsed = seconds_since(start);
    report.section(v.title).absorb(v);
    report.set_cache(engine.status());
    report.add_timing(title, elapsed);
    return report;
}

void cache_summary(UniversalEngine& engine, ReportSection& sec) {
    CacheStatus st = engine.status();
    sec.item("P entries", itos(static_cast<int>(st.p_entries.size())));
    sec.item("Pnr entries", itos(static_cast<int>(st.pnr_entries.size())));
}

}  // namespace

std::string universal_p_text(UniversalEngine& engine, int n) {
    if (n < 1 || n > 8)
        throw usage_error("universal P supports 1 <= n <= 8");
    return engine.P(n).render();
}

std::string universal_pnr_text(UniversalEngine& engine, int n, int r) {
    if (n < 1 || r < 1 || n * r > 12)
        throw usage_error("universal Pnr supports n, r >= 1 with n*r <= 12");
    return engine.Pnr(n, r).render();
}

std::string universal_q_text(UniversalEngine& engine, int g, int n) {
    if (g < 1 || g > 3)
        throw usage_error("universal q supports 1 <= g <= 3");
    return engine.q(g, n).render();
}

RunReport cmd_zeta(UniversalEngine& engine, const MotiveDocument& doc,
                   const std::string& expr, int order, int weight) {
    ResolvedDocument rd = doc.resolve(engine);
    std::vector<DocTask> tasks;
    if (!expr.empty()) {
        DocTask t;
        t.kind = "zeta";
        t.target = expr;
        t.order = order;
        t.weight = weight;
        tasks.push_back(std::move(t));
    } else {
        tasks = rd.tasks;
        if (tasks.empty())
            throw usage_error("document declares no tasks; name a class instead");
        for (DocTask& t : tasks) {
            if (order >= 0) t.order = order;
            if (weight >= 0) t.weight = weight;
        }
    }
    RunReport report("zeta");
    for (const DocTask& t : tasks) run_zeta_task(engine, rd, t, report);
    report.set_cache(engine.status());
    return report;
}

RunReport cmd_verify_abelian(UniversalEngine& engine, int g) {
    return verify_command(engine, "verify abelian (g = " + itos(g) + ")",
                          [&] { return verify_abelian(engine, g); });
}

RunReport cmd_verify_curve(UniversalEngine& engine, int g) {
    return verify_command(engine, "verify curve (g = " + itos(g) + ")",
                          [&] { return verify_curve(engine, g); });
}

RunReport cmd_verify_product(UniversalEngine& engine, int gx, int gy) {
    return verify_command(
        engine, "verify product (g = " + itos(gx) + ", " + itos(gy) + ")",
        [&] { return verify_product(engine, gx, gy); });
}

RunReport cmd_verify_blowup(UniversalEngine& engine, int g, int codim) {
    return verify_command(
        engine, "verify blowup (g = " + itos(g) + ", codim = " + itos(codim) + ")",
        [&] { return verify_blowup(engine, g, codim); });
}

RunReport cmd_verify_identities(UniversalEngine& engine, int max_weight) {
    return verify_command(engine, "verify identities (max weight " + itos(max_weight) + ")",
                          [&] { return verify_identities(engine, max_weight); });
}

RunReport cmd_cache_status(UniversalEngine& engine) {
    RunReport report("cache status");
    auto start = Clock::now();
    cache_summary(engine, report.section("cache status"));
    report.set_cache(engine.status());
    report.add_timing("status", seconds_since(start));
    return report;
}

RunReport cmd_cache_clear(UniversalEngine& engine) {
    RunReport report("cache clear");
    auto start = Clock::now();
    engine.clear();
    ReportSection& sec = report.section("cache clear");
    sec.item("cleared", "yes");
    cache_summary(engine, sec);
    report.set_cache(engine.status());
    report.add_timing("clear", seconds_since(start));
    return report;
}

RunReport cmd_cache_warm(UniversalEngine& engine, int g) {
    if (g < 1 || g > 2)
        throw usage_error("cache warm supports 1 <= g <= 2");
    RunReport report("cache warm (g = " + itos(g) + ")");
    auto start = Clock::now();
    warm_cache(engine, g);
    double elapsed = seconds_since(start);
    ReportSection& sec = report.section("cache warm");
    sec.item("warmed for dimension", itos(g));
    cache_summary(engine, sec);
    report.set_cache(engine.status());
    report.add_timing("warm", elapsed);
    return report;
}

}  // namespace mzeta
