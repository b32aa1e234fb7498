/// @file test_doc.cpp
/// @brief Motive document parsing, expression evaluation and resolution.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "core/errors.hpp"
#include "core/commands.hpp"
#include "core/motive_doc.hpp"
#include "core/zeta.hpp"

using namespace mzeta;

namespace {

UniversalEngine& shared_engine() {
    static UniversalEngine engine;
    return engine;
}

ResolvedDocument resolve_text(const std::string& text) {
    return MotiveDocument::parse(text).resolve(shared_engine());
}

/// Evaluates a single expression through a one-class document.
MultiPoly eval_in(const std::string& prelude, const std::string& expr,
                  ResolvedDocument* doc_out = nullptr) {
    ResolvedDocument doc = resolve_text(prelude + "\nexpr probe = " + expr + "\n");
    if (doc_out) *doc_out = doc;
    return doc.at("probe").total;
}

const std::string kElliptic = "# elliptic curve\n"
                              "atom h1 minus bound 2\n"
                              "  sym 2 = L\n"
                              "\n"
                              "plus  E = 1 + L\n"
                              "minus E = h1\n"
                              "expr  E = 1 + h1 + L\n"
                              "\n"
                              "task zeta E order 6\n";

} // namespace

TEST_CASE("elliptic document resolves with a split class and a task") {
    MotiveDocument doc = MotiveDocument::parse(kElliptic);
    REQUIRE(doc.tasks().size() == 1);
    CHECK(doc.tasks()[0].kind == "zeta");
    CHECK(doc.tasks()[0].target == "E");
    CHECK(doc.tasks()[0].order == 6);

    ResolvedDocument rd = doc.resolve(shared_engine());
    REQUIRE(rd.names.size() == 1);
    CHECK(rd.names[0] == "E");
    const DocClass& e = rd.at("E");
    CHECK(e.has_split);
    CHECK(e.total == rd.ctx->constant(1) + rd.ctx->atom_element("h1") + rd.ctx->lefschetz());
    CHECK(e.plus == rd.ctx->constant(1) + rd.ctx->lefschetz());
    CHECK(e.minus == rd.ctx->atom_element("h1"));
    CHECK(rd.ctx->normalize(rd.ctx->symbol_element("h1", 2)) == rd.ctx->lefschetz());

    K0Evaluator ev(*rd.ctx, shared_engine());
    ZetaFunction z = rational_form(ev, e.plus, e.minus);
    CHECK(z.num_degree == 2);
    CHECK(z.den_degree == 2);
    CHECK_THROWS_WITH_AS(rd.at("nope"), doctest::Contains("no class named"), usage_error);
}

TEST_CASE("expression grammar evaluates operations and symbols") {
    const std::string prelude = "atom h1 minus bound 2\n"
                                "  sym 2 = L\n"
                                "atom w plus bound 2\n"
                                "atom x free\n";
    ResolvedDocument rd;
    MultiPoly p = eval_in(prelude, "sym(2, h1)", &rd);
    CHECK(rd.ctx->normalize(p) == rd.ctx->lefschetz());

    CHECK(eval_in(prelude, "alt(2, 1 + L)", &rd) == rd.ctx->lefschetz());
    CHECK(eval_in(prelude, "2*3 - 1", &rd) == rd.ctx->constant(5));
    CHECK(eval_in(prelude, "(1 + L)^2", &rd) ==
          rd.ctx->constant(1) + rd.ctx->constant(2) * rd.ctx->lefschetz() +
              rd.ctx->lefschetz(2));
    CHECK(eval_in(prelude, "L^-1 * L^3", &rd) == rd.ctx->lefschetz(2));
    CHECK(eval_in(prelude, "-h1 + h1", &rd).is_zero());
    CHECK(eval_in(prelude, "Sym2(h1)", &rd) == rd.ctx->symbol_element("h1", 2));
    CHECK(eval_in(prelude, "Alt2(w)", &rd) == rd.ctx->symbol_element("w", 2));

    K0Evaluator ev(*rd.ctx, shared_engine());
    MultiPoly viaschur = eval_in(prelude, "schur([2,1], x)", &rd);
    K0Evaluator ev2(*rd.ctx, shared_engine());
    CHECK(viaschur == ev2.schur(Partition({2, 1}), rd.ctx->atom_element("x")));
}

TEST_CASE("rendered polynomials parse back to equal values") {
    const std::string prelude = "atom h1 minus bound 2\n  sym 2 = L\n";
    ResolvedDocument rd;
    MultiPoly p = eval_in(prelude, "L^-1 - 2*h1*L + 3*Sym2(h1)^2", &rd);
    std::string text = p.render();
    ResolvedDocument rd2;
    MultiPoly q = eval_in(prelude, text, &rd2);
    CHECK(q == p.retable(rd2.ctx->table()));
}

TEST_CASE("document syntax errors carry line numbers") {
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("atom h1 minus bound 2\n  alt 1 = L\n"),
                         doctest::Contains("uses 'sym' images"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("atom w plus bound 2\n  sym 1 = L\n"),
                         doctest::Contains("uses 'alt' images"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("  sym 1 = L\n"),
                         doctest::Contains("line 1"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("atom L free\n"),
                         doctest::Contains("reserved"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("atom Sym3 free\n"),
                         doctest::Contains("shadow"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("atom a free\natom a free\n"),
                         doctest::Contains("redeclared"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("atom a minus bound 2\n  sym 3 = L\n"),
                         doctest::Contains("exceeds the bound"), usage_error);
    CHECK_THROWS_WITH_AS(
        MotiveDocument::parse("atom a minus bound 2\n  sym 2 = L\n  sym 2 = L\n"),
        doctest::Contains("duplicate image index"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("expr a = 1\nexpr a = 2\n"),
                         doctest::Contains("redefined"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("task zeta missing\n"),
                         doctest::Contains("undefined class"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("frobnicate\n"),
                         doctest::Contains("unknown directive"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("expr a = 1 +\n"),
                         doctest::Contains("line 1"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("expr a = foo(2, 1)\n"),
                         doctest::Contains("unknown operation"), usage_error);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse("task zeta a order -2\nexpr a = 1\n"),
                         doctest::Contains("line 1"), usage_error);
}

TEST_CASE("resolution errors carry line numbers") {
    CHECK_THROWS_WITH_AS(resolve_text("expr a = h9\n"),
                         doctest::Contains("unknown atom 'h9'"), usage_error);
    CHECK_THROWS_WITH_AS(resolve_text("atom h1 minus bound 2\nexpr a = Alt2(h1)\n"),
                         doctest::Contains("does not match the parity"), usage_error);
    CHECK_THROWS_WITH_AS(
        resolve_text("atom h1 minus bound 2\nexpr a = 1 + h1\nplus a = 1\nminus a = 0\n"),
        doctest::Contains("plus + minus does not equal expr"), usage_error);
    // Missing split halves default to zero.
    ResolvedDocument rd = resolve_text("atom h1 minus bound 2\nminus odd = h1\n");
    CHECK(rd.at("odd").has_split);
    CHECK(rd.at("odd").plus.is_zero());
    CHECK(rd.at("odd").total == rd.ctx->atom_element("h1"));
}

TEST_CASE("document files are read and missing files are reported") {
    const char* path = "test_doc_tmp.mz";
    {
        std::ofstream out(path);
        out << kElliptic;
    }
    MotiveDocument doc = MotiveDocument::parse_file(path);
    CHECK(doc.tasks().size() == 1);
    std::remove(path);
    CHECK_THROWS_WITH_AS(MotiveDocument::parse_file("no_such_file.mz"),
                         doctest::Contains("cannot read document"), io_error);
}

TEST_CASE("sample documents resolve and their tasks pass") {
    const char* names[] = {"point.mz",   "line.mz",     "elliptic.mz",
                           "genus2.mz",  "abelian2.mz", "product.mz"};
    for (const char* name : names) {
        std::string label = name;
        CAPTURE(label);
        auto doc = MotiveDocument::parse_file(std::string(MZETA_SAMPLES_DIR) + "/" + name);
        RunReport report = cmd_zeta(shared_engine(), doc);
        CHECK(report.passed());
        CHECK(!doc.tasks().empty());
    }
}
