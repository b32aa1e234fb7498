/// @file test_k0.cpp
/// @brief Atom contexts, image rewriting and the lambda-operation evaluator.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/k0.hpp"
#include "core/symfunc.hpp"

using namespace mzeta;

namespace {

Partition pa(std::vector<int> parts) { return Partition(std::move(parts)); }

/// Context with one free atom "x".
struct FreeFixture {
    K0Context ctx;
    UniversalEngine engine;
    K0Evaluator eval;

    FreeFixture() : ctx(32), eval(ctx, engine) {
        ctx.declare_atom("x", AtomKind::Free);
        ctx.freeze();
    }

    MultiPoly x() const { return ctx.atom_element("x"); }
    MultiPoly sym_x(int i) const { return ctx.symbol_element("x", i); }
};

/// Context with two oddly bounded atoms and one evenly bounded atom.
struct BoundedFixture {
    K0Context ctx;
    UniversalEngine engine;
    K0Evaluator eval;

    BoundedFixture() : eval(ctx, engine) {
        ctx.declare_atom("a", AtomKind::Minus, 2);
        ctx.declare_atom("b", AtomKind::Minus, 2);
        ctx.declare_atom("c", AtomKind::Plus, 2);
        ctx.freeze();
    }

    MultiPoly a() const { return ctx.atom_element("a"); }
    MultiPoly b() const { return ctx.atom_element("b"); }
    MultiPoly c() const { return ctx.atom_element("c"); }
    MultiPoly L(int k = 1) const { return ctx.lefschetz(k); }
};

/// Maps an L-free element of a single-free-atom context into the ring of
/// symmetric functions: Sym^i(x) -> h_i, products multiply.  Together with
/// plethysm this is an independent model of every operation the evaluator
/// performs.
SymFunc to_symfunc(const K0Context& ctx, const MultiPoly& p) {
    SymFunc acc = SymFunc::constant(Basis::P, 0);
    for (const auto& [m, coef] : p.terms()) {
        SymFunc term = SymFunc::constant(Basis::P, Rational(coef));
        for (const auto& [v, e] : m.factors()) {
            REQUIRE(ctx.is_symbol_var(v));
            SymFunc h = SymFunc::generator(Basis::H, ctx.symbol_index_of_var(v)).to(Basis::P);
            for (int i = 0; i < e; ++i) term = term * h;
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace

TEST_CASE("context declaration and symbol elements") {
    K0Context ctx;
    ctx.declare_atom("h1", AtomKind::Minus, 4);
    ctx.declare_atom("w", AtomKind::Plus, 3);
    CHECK_THROWS_AS(ctx.table(), usage_error);
    CHECK_THROWS_AS(ctx.declare_atom("h1", AtomKind::Free), usage_error);
    CHECK_THROWS_AS(ctx.declare_atom("2bad", AtomKind::Free), usage_error);
    CHECK_THROWS_AS(ctx.declare_atom("nobound", AtomKind::Minus, 0), usage_error);
    ctx.freeze();
    CHECK_THROWS_AS(ctx.freeze(), usage_error);
    CHECK_THROWS_AS(ctx.declare_atom("late", AtomKind::Free), usage_error);

    CHECK(ctx.table()->info(ctx.lefschetz_var()).name == "L");
    CHECK(ctx.table()->info(ctx.lefschetz_var()).weight == 2);
    CHECK(ctx.table()->info(ctx.lefschetz_var()).invertible);

    CHECK(ctx.symbol_element("h1", 1).render() == "h1");
    CHECK(ctx.symbol_element("h1", 4).render() == "Sym4(h1)");
    CHECK(ctx.symbol_element("w", 2).render() == "Alt2(w)");
    CHECK(ctx.symbol_element("h1", 0).is_one());
    CHECK(ctx.symbol_element("h1", 5).is_zero());
    CHECK(ctx.symbol_element("w", 4).is_zero());
    CHECK(ctx.table()->info(ctx.table()->var("Sym3(h1)")).weight == 3);
    CHECK_THROWS_AS(ctx.symbol_element("nope", 1), usage_error);
    CHECK_THROWS_AS(ctx.atom_element("nope"), usage_error);

    // parity and bound bookkeeping
    Monomial m = Monomial::var(ctx.table()->var("Sym3(h1)")) *
                 Monomial::var(ctx.table()->var("Alt2(w)"), 2);
    CHECK(ctx.monomial_parity(m).value() == -1);
    CHECK(ctx.monomial_bound(m).value() == Int(4 * 3 * 3));
    Monomial even = Monomial::var(ctx.table()->var("Sym3(h1)"), 2);
    CHECK(ctx.monomial_parity(even).value() == 1);
    CHECK(ctx.monomial_parity(Monomial::var(ctx.lefschetz_var(), -3)).value() == 1);
}

TEST_CASE("free atoms get a limited canonical symbol family") {
    K0Context ctx(6);
    ctx.declare_atom("x", AtomKind::Free);
    ctx.freeze();
    CHECK(ctx.symbol_element("x", 6).render() == "Sym6(x)");
    CHECK_THROWS_AS(ctx.symbol_element("x", 7), usage_error);
    CHECK(!ctx.monomial_parity(Monomial::var(ctx.table()->var("Sym2(x)"))).has_value());
    CHECK(!ctx.monomial_bound(Monomial::var(ctx.table()->var("Sym2(x)"))).has_value());

    UniversalEngine engine;
    K0Evaluator eval(ctx, engine);
    // order 7 of the plain atom series needs Sym7(x)
    CHECK_THROWS_AS(eval.sym(7, ctx.atom_element("x")), usage_error);
    // nested operations overflow the family even faster
    CHECK_THROWS_AS(eval.sym(4, ctx.symbol_element("x", 2)), usage_error);
}

TEST_CASE("image rewriting terminates and detects cycles") {
    K0Context ctx;
    ctx.declare_atom("h1", AtomKind::Minus, 4);
    ctx.freeze();
    MultiPoly L = ctx.lefschetz();

    // transitive rewriting: Sym4 -> L * Sym3 -> L * (L * Sym1)
    ctx.set_image("h1", 3, L * ctx.symbol_element("h1", 1));
    ctx.set_image("h1", 4, L * ctx.symbol_element("h1", 3));
    CHECK(ctx.normalize(ctx.symbol_element("h1", 4)) ==
          ctx.lefschetz(2) * ctx.symbol_element("h1", 1));
    CHECK(ctx.has_image("h1", 4));
    CHECK(!ctx.has_image("h1", 2));

    // replacing an image invalidates previous normalizations
    ctx.set_image("h1", 4, ctx.lefschetz(2));
    CHECK(ctx.normalize(ctx.symbol_element("h1", 4)) == ctx.lefschetz(2));

    // a cycle is reported instead of looping
    ctx.set_image("h1", 2, ctx.symbol_element("h1", 4));
    ctx.set_image("h1", 4, ctx.symbol_element("h1", 2));
    CHECK_THROWS_AS(ctx.normalize(ctx.symbol_element("h1", 2)), usage_error);

    CHECK_THROWS_AS(ctx.set_image("h1", 5, L), usage_error);
    CHECK_THROWS_AS(ctx.set_image("nope", 1, L), usage_error);
}

TEST_CASE("series of line classes and constants") {
    BoundedFixture f;
    // Sym^i(L^k) = L^{ik}
    for (int k : {-2, -1, 0, 1, 3})
        for (int i = 0; i <= 4; ++i)
            CHECK(f.eval.sym(i, f.L(k)) == f.ctx.lefschetz(i * k));
    // Alt^i(L^k) vanishes past i = 1
    CHECK(f.eval.alt(1, f.L(2)) == f.L(2));
    CHECK(f.eval.alt(2, f.L(2)).is_zero());
    CHECK(f.eval.alt(2, f.ctx.constant(1)).is_zero());
    // binomial series of integer classes
    CHECK(f.eval.alt(2, f.ctx.constant(3)) == f.ctx.constant(3));
    CHECK(f.eval.alt(3, f.ctx.constant(3)) == f.ctx.constant(1));
    CHECK(f.eval.sym(2, f.ctx.constant(3)) == f.ctx.constant(6));
    // the series of -1 is 1 - T, so its higher symmetric powers vanish
    CHECK(f.eval.sym(1, f.ctx.constant(-1)) == f.ctx.constant(-1));
    CHECK(f.eval.sym(2, f.ctx.constant(-1)).is_zero());
    // Alt^2(1 + L) picks out the product of the two lines
    CHECK(f.eval.alt(2, f.ctx.constant(1) + f.L()) == f.L());
}

TEST_CASE("alternating powers of an oddly bounded atom") {
    BoundedFixture f;
    MultiPoly b = f.b();
    MultiPoly s2 = f.ctx.symbol_element("b", 2);
    CHECK(f.eval.sym(2, b) == s2);
    CHECK(f.eval.sym(3, b).is_zero());
    CHECK(f.eval.alt(2, b) == b * b - s2);
    CHECK(f.eval.alt(3, b) == b * b * b - (f.ctx.constant(2) * b) * s2);
}

TEST_CASE("second symmetric power of a product, pinned") {
    BoundedFixture f;
    MultiPoly a = f.a(), b = f.b();
    MultiPoly sa2 = f.ctx.symbol_element("a", 2);
    MultiPoly ab2 = f.eval.alt(2, b);
    CHECK(f.eval.sym(2, a * b) ==
          a * a * ab2 + sa2 * b * b - f.ctx.constant(2) * sa2 * ab2);
}

TEST_CASE("finiteness bounds propagate through products") {
    BoundedFixture f;
    MultiPoly ab = f.a() * f.b(); // evenly bounded by 4
    CHECK(!f.eval.alt(4, ab).is_zero());
    CHECK(f.eval.alt(5, ab).is_zero());
    CHECK(f.eval.alt(6, ab).is_zero());
    MultiPoly ac = f.a() * f.c(); // oddly bounded by 4
    CHECK(!f.eval.sym(4, ac).is_zero());
    CHECK(f.eval.sym(5, ac).is_zero());
}

TEST_CASE("nested operations on an evenly bounded atom") {
    BoundedFixture f;
    MultiPoly c2 = f.ctx.symbol_element("c", 2);
    // Alt^2 of the top alternating power of a two-dimensional class vanishes
    CHECK(f.eval.alt(1, c2) == c2);
    CHECK(f.eval.alt(2, c2).is_zero());
    // Alt^2(Alt^2) on a four-dimensional class is pinned by e1*e3 - e4
    K0Context big;
    big.declare_atom("d", AtomKind::Plus, 4);
    big.freeze();
    UniversalEngine engine;
    K0Evaluator ev(big, engine);
    CHECK(ev.alt(2, big.symbol_element("d", 2)) ==
          big.symbol_element("d", 1) * big.symbol_element("d", 3) - big.symbol_element("d", 4));
}

TEST_CASE("evaluator agrees with the symmetric function model") {
    FreeFixture f;
    std::vector<MultiPoly> corpus = {
        f.x(),
        f.x() * f.x(),
        f.sym_x(2),
        f.sym_x(3),
        f.x() + f.sym_x(2),
        f.x() * f.sym_x(2),
        f.ctx.constant(2) * f.x(),
        f.x() * f.x() - f.sym_x(2),
    };
    for (const MultiPoly& elem : corpus) {
        SymFunc model = to_symfunc(f.ctx, elem);
        std::string shown = elem.render();
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(shown);
            CAPTURE(n);
            CHECK(to_symfunc(f.ctx, f.eval.sym(n, elem)) ==
                  plethysm(SymFunc::generator(Basis::H, n), model));
            CHECK(to_symfunc(f.ctx, f.eval.alt(n, elem)) ==
                  plethysm(SymFunc::generator(Basis::E, n), model));
        }
    }
}

TEST_CASE("all reduction routes agree") {
    BoundedFixture f;
    std::vector<MultiPoly> corpus = {
        f.a() * f.b(),
        f.a() * f.c(),
        f.a() + f.b() * f.c(),
        f.L() * f.a() * f.b() + f.ctx.constant(1),
        f.a() * f.a() * f.b(),
        f.ctx.symbol_element("a", 2) * f.b() - f.L(2),
    };
    for (const MultiPoly& elem : corpus) {
        std::string shown = elem.render();
        CAPTURE(shown);
        PowerSeries s0 = f.eval.sym_series(elem, 6, Route::Default);
        PowerSeries s1 = f.eval.sym_series(elem, 6, Route::Mirrored);
        PowerSeries s2 = f.eval.sym_series(elem, 6, Route::Opposite);
        PowerSeries a0 = f.eval.alt_series(elem, 6, Route::Default);
        PowerSeries a1 = f.eval.alt_series(elem, 6, Route::Mirrored);
        PowerSeries a2 = f.eval.alt_series(elem, 6, Route::Opposite);
        for (int i = 0; i <= 6; ++i) {
            CHECK(s0.coeff(i) == s1.coeff(i));
            CHECK(s0.coeff(i) == s2.coeff(i));
            CHECK(a0.coeff(i) == a1.coeff(i));
            CHECK(a0.coeff(i) == a2.coeff(i));
        }
    }
}

TEST_CASE("opposite structure inverts the alternating series") {
    BoundedFixture f;
    std::vector<MultiPoly> corpus = {
        f.a(),
        f.a() * f.b() + f.L(),
        f.c() + f.ctx.constant(1),
        f.a() * f.c() - f.b(),
    };
    for (const MultiPoly& elem : corpus) {
        std::string shown = elem.render();
        CAPTURE(shown);
        PowerSeries prod =
            f.eval.sym_series(elem, 6) * f.eval.alt_series(elem, 6).negate_variable();
        CHECK(prod.is_one());
    }
}

TEST_CASE("line twists peel off operations") {
    BoundedFixture f;
    std::vector<MultiPoly> corpus = {f.a(), f.a() * f.b(), f.c() * f.c()};
    for (const MultiPoly& y : corpus)
        for (int k : {-1, 1, 2})
            for (int i = 1; i <= 4; ++i) {
                std::string shown = y.render();
                CAPTURE(shown);
                CHECK(f.eval.sym(i, f.L(k) * y) == f.ctx.lefschetz(i * k) * f.eval.sym(i, y));
                CHECK(f.eval.alt(i, f.L(k) * y) == f.ctx.lefschetz(i * k) * f.eval.alt(i, y));
            }
}

TEST_CASE("image rewriting happens inside evaluations") {
    // an oddly bounded atom whose top symmetric power is a line twist
    K0Context ctx;
    ctx.declare_atom("h1", AtomKind::Minus, 2);
    ctx.freeze();
    ctx.set_image("h1", 2, ctx.lefschetz());
    UniversalEngine engine;
    K0Evaluator eval(ctx, engine);
    MultiPoly h1 = ctx.atom_element("h1");
    CHECK(eval.sym(2, h1) == ctx.lefschetz());
    // Alt^2(h1) = h1^2 - Sym^2(h1) = h1^2 - L after rewriting
    CHECK(eval.alt(2, h1) == h1 * h1 - ctx.lefschetz());
    // the alternating series of an odd class stays infinite; its
    // coefficients keep absorbing the rewritten symbol
    CHECK(eval.alt(3, h1) ==
          h1 * h1 * h1 - ctx.constant(2) * ctx.lefschetz() * h1);
    // the symmetric series, by contrast, is cut off by the bound
    CHECK(eval.sym(3, h1).is_zero());
    CHECK(eval.sym(4, h1).is_zero());
}

TEST_CASE("schur functors via the dual determinant") {
    FreeFixture f;
    MultiPoly x = f.x();

    CHECK(f.eval.schur(pa({}), x).is_one());
    for (int n = 1; n <= 4; ++n) {
        CHECK(f.eval.schur(pa({n}), x) == f.eval.sym(n, x));
        CHECK(f.eval.schur(pa(std::vector<int>(n, 1)), x) == f.eval.alt(n, x));
    }
    // the hook content of a tensor square and cube
    CHECK(f.eval.schur(pa({2}), x) + f.eval.schur(pa({1, 1}), x) == x * x);
    CHECK(f.eval.schur(pa({3}), x) + f.ctx.constant(2) * f.eval.schur(pa({2, 1}), x) +
              f.eval.schur(pa({1, 1, 1}), x) ==
          x * x * x);
    // model comparison for a non-hook shape
    CHECK(to_symfunc(f.ctx, f.eval.schur(pa({2, 2}), x)) ==
          plethysm(SymFunc::basis_element(Basis::S, pa({2, 2})).to(Basis::P),
                   to_symfunc(f.ctx, x)));
}

TEST_CASE("tensor powers decompose into schur functors with hook-length multiplicities") {
    BoundedFixture f;
    std::vector<MultiPoly> corpus = {f.a() * f.b(), f.a() + f.c()};
    for (const MultiPoly& x : corpus)
        for (int n = 2; n <= 4; ++n) {
            MultiPoly sum = f.ctx.zero();
            for (const Partition& lam : partitions_of(n))
                sum += f.ctx.constant(syt_count(lam)) * f.eval.schur(lam, x);
            std::string shown = x.render();
            CAPTURE(shown);
            CHECK(sum == x.pow(n));
        }
}

TEST_CASE("pieri rule for hook schur functors") {
    BoundedFixture f;
    MultiPoly x = f.a() * f.b() + f.L();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; i + j <= 5; ++j) {
            std::vector<int> long_hook{i + 1};
            for (int k = 1; k < j; ++k) long_hook.push_back(1);
            std::vector<int> short_hook{i};
            for (int k = 0; k < j; ++k) short_hook.push_back(1);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(f.eval.sym(i, x) * f.eval.alt(j, x) ==
                  f.eval.schur(pa(long_hook), x) + f.eval.schur(pa(short_hook), x));
        }
}

TEST_CASE("schur functors scale under line twists") {
    BoundedFixture f;
    MultiPoly x = f.a() + f.c();
    for (const Partition& lam : {pa({2}), pa({1, 1}), pa({2, 1}), pa({3})})
        for (int k : {1, 2}) {
            std::string shown = lam.render();
            CAPTURE(shown);
            CHECK(f.eval.schur(lam, f.L(k) * x) ==
                  f.ctx.lefschetz(k * lam.weight()) * f.eval.schur(lam, x));
        }
}

TEST_CASE("evaluator argument validation") {
    BoundedFixture f;
    CHECK_THROWS_AS(f.eval.sym(-1, f.a()), usage_error);
    CHECK_THROWS_AS(f.eval.sym_series(f.a(), -1), usage_error);
    FreeFixture other;
    CHECK_THROWS_AS(f.eval.sym(2, other.x()), usage_error);
    MultiPoly unbound;
    CHECK_THROWS_AS(f.eval.sym(2, unbound), usage_error);
}
