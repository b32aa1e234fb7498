// Unit tests for the sparse polynomial and truncated power series layer.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/multipoly.hpp"
#include "core/power_series.hpp"

using namespace mzeta;

namespace {

VarTablePtr xy_table() {
    auto t = std::make_shared<VarTable>();
    t->add_var("x");
    t->add_var("y");
    return t;
}

VarTablePtr laurent_table() {
    auto t = std::make_shared<VarTable>();
    t->add_var("L", /*invertible=*/true);
    t->add_var("T", /*invertible=*/true);
    t->add_var("u");
    return t;
}

MultiPoly random_poly(const VarTablePtr& t, std::mt19937& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, 4);
    std::uniform_int_distribution<int> coeff(-9, 9);
    PolyBuilder b(t);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial::Factors f;
        for (std::size_t v = 0; v < t->size(); ++v) {
            int e = exp(rng);
            if (e) f.emplace_back(static_cast<int>(v), e);
        }
        b.add(Monomial::from_factors(std::move(f)), coeff(rng));
    }
    return b.build();
}

} // namespace

TEST_CASE("difference of squares") {
    auto t = xy_table();
    auto x = MultiPoly::variable(t, t->var("x"));
    auto one = MultiPoly::constant(t, 1);
    CHECK((x + one) * (x - one) == x * x - one);
    CHECK(((x + one) * (x - one)).render() == "-1 + x^2");
}

TEST_CASE("ring axioms on random polynomials") {
    auto t = xy_table();
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly a = random_poly(t, rng);
        MultiPoly b = random_poly(t, rng);
        MultiPoly c = random_poly(t, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly(t));
        CHECK(a * MultiPoly::constant(t, 1) == a);
        CHECK((a * MultiPoly(t)).is_zero());
    }
}

TEST_CASE("canonical form is order independent") {
    auto t = xy_table();
    int x = t->var("x"), y = t->var("y");
    PolyBuilder b1(t);
    b1.add(Monomial::var(x, 2), 1);
    b1.add(Monomial::var(y, 1), 3);
    PolyBuilder b2(t);
    b2.add(Monomial::var(y, 1), 3);
    b2.add(Monomial::var(x, 2), 1);
    CHECK(b1.build() == b2.build());
}

TEST_CASE("Laurent monomials and invertibility") {
    auto t = laurent_table();
    int L = t->var("L"), u = t->var("u");
    auto Lp = MultiPoly::variable(t, L);
    auto Lm = MultiPoly::variable(t, L, -1);
    CHECK((Lp * Lm).is_one());
    CHECK_THROWS_AS(MultiPoly::variable(t, u, -1), domain_error);
}

TEST_CASE("substitution") {
    auto t = laurent_table();
    int L = t->var("L"), T = t->var("T");
    auto LT2 = MultiPoly::variable(t, L) * MultiPoly::variable(t, T, 2);
    auto p = MultiPoly::constant(t, 1) + LT2; // 1 + L*T^2
    // T -> L^{-1} T^{-1}
    Monomial im = Monomial::var(L, -1) * Monomial::var(T, -1);
    auto image = MultiPoly::monomial(t, im, 1);
    auto q = p.substitute(T, image);
    // 1 + L * L^{-2} T^{-2} = 1 + L^{-1} T^{-2}
    auto expected = MultiPoly::constant(t, 1) +
                    MultiPoly::monomial(t, Monomial::var(L, -1) * Monomial::var(T, -2), 1);
    CHECK(q == expected);

    // substituting a negatively-occurring variable by a non-monomial image is a domain error
    auto r = MultiPoly::variable(t, T, -1);
    CHECK_THROWS_AS(r.substitute(T, p), domain_error);

    // substitution respects invertibility of the target variables
    int u = t->var("u");
    auto neg_u = MultiPoly::variable(t, T).substitute(T, MultiPoly::variable(t, u));
    CHECK(neg_u == MultiPoly::variable(t, u));
}

TEST_CASE("substitution matches direct expansion") {
    auto t = xy_table();
    int x = t->var("x"), y = t->var("y");
    std::mt19937 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly p = random_poly(t, rng, 4);
        MultiPoly img = random_poly(t, rng, 3);
        MultiPoly direct(t);
        for (const auto& [m, c] : p.terms()) {
            MultiPoly term = MultiPoly::constant(t, c);
            term = term * img.pow(m.exponent(x));
            term = term * MultiPoly::variable(t, y).pow(m.exponent(y));
            direct += term;
        }
        CHECK(p.substitute(x, img) == direct);
    }
}

TEST_CASE("mismatched tables are a usage error") {
    auto t1 = xy_table();
    auto t2 = laurent_table();
    auto a = MultiPoly::constant(t1, 1);
    auto b = MultiPoly::constant(t2, 1);
    CHECK_THROWS_AS((void)(a + b), usage_error);
    CHECK_THROWS_AS((void)(a == b), usage_error);
}

TEST_CASE("canonical text and round-trip") {
    auto t = std::make_shared<VarTable>();
    t->add_var("s1", false, 1);
    t->add_var("s2", false, 2);
    t->add_var("t1", false, 1);
    t->add_var("t2", false, 2);
    VarTablePtr tp = t;
    int s1 = tp->var("s1"), s2 = tp->var("s2"), t1 = tp->var("t1"), t2 = tp->var("t2");
    // sigma_1^2 s_2 + sigma_2 s_1^2 - 2 sigma_2 s_2
    PolyBuilder b(tp);
    b.add(Monomial::var(s1, 2) * Monomial::var(t2), 1);
    b.add(Monomial::var(s2) * Monomial::var(t1, 2), 1);
    b.add(Monomial::var(s2) * Monomial::var(t2), -2);
    auto p = b.build();
    CHECK(p.render() == "s1^2*t2 + s2*t1^2 - 2*s2*t2");
    CHECK(MultiPoly::parse(tp, p.render()) == p);
    CHECK(MultiPoly::parse(tp, "  s1^2 * t2+s2*t1^2 -2*s2*t2 ") == p);
    CHECK(MultiPoly(tp).render() == "0");
    CHECK(MultiPoly::parse(tp, "0") == MultiPoly(tp));
    CHECK(MultiPoly::parse(tp, "0").render() == "0");
}

TEST_CASE("rendering symbol-style variable names round-trips") {
    auto t = std::make_shared<VarTable>();
    t->add_var("L", true, 2);
    t->add_var("h1", false, 1);
    t->add_var("Sym2(h1)", false, 2);
    VarTablePtr tp = t;
    auto p = MultiPoly::variable(tp, 1) + MultiPoly::variable(tp, 2) * MultiPoly::variable(tp, 0, -1);
    auto text = p.render();
    CHECK(MultiPoly::parse(tp, text) == p);
}

TEST_CASE("random render/parse round-trip") {
    auto t = laurent_table();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> coeff(-12, 12);
    for (int trial = 0; trial < 100; ++trial) {
        PolyBuilder b(t);
        for (int i = 0; i < 5; ++i) {
            Monomial::Factors f;
            int eL = exp(rng), eT = exp(rng), eu = std::abs(exp(rng));
            if (eL) f.emplace_back(0, eL);
            if (eT) f.emplace_back(1, eT);
            if (eu) f.emplace_back(2, eu);
            b.add(Monomial::from_factors(std::move(f)), coeff(rng));
        }
        MultiPoly p = b.build();
        CHECK(MultiPoly::parse(t, p.render()) == p);
    }
}

TEST_CASE("split and coefficient extraction") {
    auto t = laurent_table();
    int L = t->var("L"), T = t->var("T");
    auto p = MultiPoly::constant(t, 1) + MultiPoly::variable(t, T) +
             MultiPoly::variable(t, L) * MultiPoly::variable(t, T) +
             MultiPoly::variable(t, L) * MultiPoly::variable(t, T, 2);
    auto parts = p.split_by(T);
    CHECK(parts.size() == 3);
    CHECK(parts.at(0).is_one());
    CHECK(parts.at(1) == MultiPoly::constant(t, 1) + MultiPoly::variable(t, L));
    CHECK(parts.at(2) == MultiPoly::variable(t, L));
    CHECK(p.coefficient_of(T, 1) == parts.at(1));
    CHECK(p.coefficient_of(T, 3).is_zero());
    CHECK(p.degree_in(T) == 2);
    CHECK(p.min_degree_in(T) == 0);
}

TEST_CASE("series arithmetic and truncation propagation") {
    auto t = laurent_table();
    auto a = PowerSeries::one(t, 5);
    auto b = PowerSeries::one(t, 3);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK_THROWS_AS((void)(a * b).coeff(4), usage_error);
    CHECK_THROWS_AS((void)a.coeff(6), usage_error);
}

TEST_CASE("series inversion against multiply-back") {
    auto t = laurent_table();
    int L = t->var("L");
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        PowerSeries s = PowerSeries::one(t, 8);
        for (int i = 1; i <= 8; ++i) {
            std::uniform_int_distribution<int> coeff(-4, 4);
            auto c = MultiPoly::constant(t, coeff(rng)) +
                     MultiPoly::variable(t, L).pow(std::abs(coeff(rng)) % 3) * MultiPoly::constant(t, coeff(rng));
            s.set_coeff(i, c);
        }
        CHECK((s * s.invert()).is_one());
        CHECK((s.invert() * s).is_one());
    }
}

TEST_CASE("series inversion requires a unit monomial constant term") {
    auto t = laurent_table();
    int L = t->var("L"), u = t->var("u");
    PowerSeries s(t, 4);
    s.set_coeff(0, MultiPoly::constant(t, 1) + MultiPoly::variable(t, L));
    CHECK_THROWS_AS(s.invert(), domain_error);
    PowerSeries s2(t, 4);
    s2.set_coeff(0, MultiPoly::variable(t, u)); // non-invertible monomial
    CHECK_THROWS_AS(s2.invert(), domain_error);
    PowerSeries s3(t, 4);
    s3.set_coeff(0, MultiPoly::variable(t, L, -1)); // invertible Tate monomial is fine
    CHECK((s3 * s3.invert()).is_one());
    PowerSeries s4(t, 4);
    s4.set_coeff(0, MultiPoly::constant(t, 2));
    CHECK_THROWS_AS(s4.invert(), domain_error);
}

TEST_CASE("retable by names") {
    auto t1 = std::make_shared<VarTable>();
    t1->add_var("a");
    t1->add_var("b");
    auto t2 = std::make_shared<VarTable>();
    t2->add_var("b");
    t2->add_var("a");
    t2->add_var("c");
    VarTablePtr p1 = t1, p2 = t2;
    auto p = MultiPoly::variable(p1, 0) + MultiPoly::variable(p1, 1, 2);
    auto q = p.retable(p2);
    CHECK(q == MultiPoly::variable(p2, 1) + MultiPoly::variable(p2, 0, 2));
    CHECK(q.render() == p.render());
}

TEST_CASE("zero polynomial degree convention") {
    auto t = xy_table();
    CHECK(!MultiPoly(t).weighted_degree().has_value());
    CHECK(MultiPoly::constant(t, 3).weighted_degree() == 0);
}
