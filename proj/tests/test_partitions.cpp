// Unit tests for partitions, hook lengths and symmetric-group characters.
//
// Oracles: brute-force standard-tableau enumeration for small shapes, the
// row-sum identity sum_lambda f_lambda^2 = n!, and the character
// orthogonality relations (which pin the whole table).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "core/partitions.hpp"

using namespace mzeta;

namespace {

// test-only oracle: count standard Young tableaux by direct enumeration
long long count_syt_brute(const Partition& shape) {
    if (shape.empty()) return 1;
    std::vector<int> filled(static_cast<std::size_t>(shape.length()), 0);
    long long count = 0;
    int n = shape.weight();
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            ++count;
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            auto& f = filled[static_cast<std::size_t>(r)];
            if (f >= shape.part(r)) continue;
            if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= f) continue;
            ++f;
            self(self, next + 1);
            --f;
        }
    };
    rec(rec, 1);
    return count;
}

} // namespace

TEST_CASE("partition counts") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(12).size() == 77);
    // restricted counts: partitions of 8 with parts <= 2
    CHECK(partitions_of(8, 2).size() == 5);
}

TEST_CASE("partition enumeration order and uniqueness") {
    auto ps = partitions_of(4);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0] == Partition({4}));
    CHECK(ps[1] == Partition({3, 1}));
    CHECK(ps[2] == Partition({2, 2}));
    CHECK(ps[3] == Partition({2, 1, 1}));
    CHECK(ps[4] == Partition({1, 1, 1, 1}));
    for (int n = 0; n <= 10; ++n) {
        auto v = partitions_of(n);
        std::set<std::string> seen;
        for (const auto& p : v) {
            CHECK(p.weight() == n);
            CHECK(seen.insert(p.render()).second);
        }
        CHECK(std::is_sorted(v.begin(), v.end(), [](const Partition& a, const Partition& b) { return a < b; }));
    }
}

TEST_CASE("conjugation is an involution") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("render and parse") {
    CHECK(Partition({3, 1, 1}).render() == "[3,1,1]");
    CHECK(Partition().render() == "[]");
    CHECK(Partition::parse("[3,1,1]") == Partition({3, 1, 1}));
    CHECK(Partition::parse("[]") == Partition());
    CHECK_THROWS_AS(Partition::parse("[1,2]"), usage_error);
    CHECK_THROWS_AS(Partition({0}), usage_error);
}

TEST_CASE("centralizer orders sum to n!") {
    // class sizes n!/z_rho sum to n!, i.e. sum over classes of 1/z_rho is 1
    for (int n = 1; n <= 8; ++n) {
        Rational total = 0;
        for (const auto& rho : partitions_of(n)) total += Rational(1) / Rational(rho.centralizer_order());
        CHECK(total == 1);
    }
    CHECK(Partition({2, 2, 1}).centralizer_order() == 8);
    CHECK(Partition({3, 1}).centralizer_order() == 3);
}

TEST_CASE("hook length formula vs brute-force enumeration") {
    CHECK(syt_count(Partition({2, 1})) == 2);
    CHECK(syt_count(Partition()) == 1);
    for (int n = 1; n <= 7; ++n)
        for (const auto& shape : partitions_of(n))
            CHECK(syt_count(shape) == Int(count_syt_brute(shape)));
}

TEST_CASE("sum of squares of tableau counts is n!") {
    for (int n = 1; n <= 10; ++n) {
        Int total = 0;
        for (const auto& shape : partitions_of(n)) {
            Int f = syt_count(shape);
            total += f * f;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("pinned character values") {
    CHECK(mn_character(Partition({3, 1}), Partition({2, 2})) == -1);
    // identity class gives tableau counts
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        Partition id(ones);
        for (const auto& lambda : partitions_of(n)) CHECK(mn_character(lambda, id) == syt_count(lambda));
    }
    // sign character
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        Partition sign_shape(ones);
        for (const auto& rho : partitions_of(n)) CHECK(mn_character(sign_shape, rho) == rho.sign());
    }
    // trivial character
    for (int n = 1; n <= 8; ++n)
        for (const auto& rho : partitions_of(n)) CHECK(mn_character(Partition({n}), rho) == 1);
}

TEST_CASE("first-kind orthogonality of characters") {
    for (int n = 1; n <= 7; ++n) {
        auto classes = partitions_of(n);
        auto irreps = partitions_of(n);
        for (const auto& l1 : irreps) {
            for (const auto& l2 : irreps) {
                Rational acc = 0;
                for (const auto& rho : classes)
                    acc += Rational(mn_character(l1, rho) * mn_character(l2, rho)) / Rational(rho.centralizer_order());
                CHECK(acc == (l1 == l2 ? 1 : 0));
            }
        }
    }
}

TEST_CASE("column orthogonality: sum over irreps of chi^2 equals centralizer order") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& rho : partitions_of(n)) {
            Int acc = 0;
            for (const auto& lambda : partitions_of(n)) {
                Int v = mn_character(lambda, rho);
                acc += v * v;
            }
            CHECK(acc == rho.centralizer_order());
        }
    }
}

TEST_CASE("conjugate character is sign-twisted") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& rho : partitions_of(n))
                CHECK(mn_character(lambda.conjugate(), rho) == rho.sign() * mn_character(lambda, rho));
}

TEST_CASE("character weight mismatch is a usage error") {
    CHECK_THROWS_AS(mn_character(Partition({2}), Partition({3})), usage_error);
}
