#pragma once

/// @file multipoly.hpp
/// @brief Exact sparse multivariate Laurent polynomials over arbitrary-precision integers.
///
/// Monomials are sparse exponent lists sorted by variable index; negative
/// exponents are legal only on variables the VarTable marks invertible.
/// Polynomials keep their terms in a canonical order (weighted degree
/// ascending, ties broken by descending lexicographic comparison in declared
/// variable order), so structural equality is term-list equality and the
/// textual rendering is reproducible bit for bit.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ints.hpp"
#include "vartable.hpp"

namespace mzeta {

class Monomial {
public:
    using Factors = std::vector<std::pair<int, int>>; // (var index, exponent != 0), sorted by var

    Monomial() = default;

    static Monomial var(int v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.factors_.emplace_back(v, exp);
        return m;
    }

    static Monomial from_factors(Factors f); // sorts, drops zeros, checks duplicates

    const Factors& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    int exponent(int v) const {
        for (const auto& [var, e] : factors_)
            if (var == v) return e;
        return 0;
    }

    bool has_negative() const {
        for (const auto& [var, e] : factors_)
            if (e < 0) return true;
        return false;
    }

    long long weighted_degree(const VarTable& t) const {
        long long d = 0;
        for (const auto& [var, e] : factors_) d += static_cast<long long>(t.info(var).weight) * e;
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    Monomial pow(int k) const; // componentwise k-fold; k may be negative
    Monomial without(int v) const;

    /// Lexicographic comparison in declared variable order (numeric exponents,
    /// missing = 0).  Returns <0, 0, >0.
    static int lex_cmp(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto& [v, e] : factors_) {
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
            h = (h ^ static_cast<std::size_t>(static_cast<std::uint32_t>(e))) * 0x100000001b3ULL;
        }
        return h;
    }

private:
    Factors factors_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class MultiPoly {
public:
    using Term = std::pair<Monomial, Int>;

    MultiPoly() = default; // unbound zero; only assignable
    explicit MultiPoly(VarTablePtr t) : table_(std::move(t)) {}

    static MultiPoly constant(VarTablePtr t, Int c);
    static MultiPoly variable(VarTablePtr t, int var, int exp = 1);
    static MultiPoly monomial(VarTablePtr t, const Monomial& m, Int c);

    const VarTablePtr& table() const { return table_; }
    bool bound() const { return static_cast<bool>(table_); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_unit() && terms_[0].second == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Largest weighted degree over terms; nullopt for the zero polynomial
    /// (degree "minus infinity" by convention).
    std::optional<long long> weighted_degree() const;

    int degree_in(int var) const;     // max exponent of var (0 for zero poly)
    int min_degree_in(int var) const; // min exponent of var (0 for zero poly)

    Int coefficient(const Monomial& m) const;
    Int constant_term() const { return coefficient(Monomial()); }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly pow(int k) const; // k >= 0, or k < 0 for invertible monomials

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Replaces `var` by `image` everywhere.  If `var` occurs with negative
    /// exponents, the image must be an invertible monomial (unit coefficient,
    /// all variables invertible).
    MultiPoly substitute(int var, const MultiPoly& image) const;

    /// Exponent-of-var -> coefficient polynomial (with var removed).
    std::map<int, MultiPoly> split_by(int var) const;
    MultiPoly coefficient_of(int var, int exp) const;

    MultiPoly swap_vars(int a, int b) const;

    /// Moves the polynomial onto `target`, matching variables by name.
    MultiPoly retable(const VarTablePtr& target) const;

    /// Canonical text: terms in canonical order, '^' exponents, '*' products.
    std::string render() const;
    static MultiPoly parse(VarTablePtr t, std::string_view text);

private:
    friend class PolyBuilder;
    void check_same_table(const MultiPoly& o) const;
    void validate_monomial(const Monomial& m) const;

    VarTablePtr table_;
    std::vector<Term> terms_; // canonical order, nonzero coefficients
};

/// Accumulator for bulk construction; canonicalizes once at build().
class PolyBuilder {
public:
    explicit PolyBuilder(VarTablePtr t) : table_(std::move(t)) {}

    void add(const Monomial& m, const Int& c) {
        if (c == 0) return;
        acc_[m] += c;
    }
    void add(const MultiPoly& p);
    /// acc += c * shift * p
    void add_scaled(const MultiPoly& p, const Int& c, const Monomial& shift = Monomial());

    MultiPoly build();

private:
    VarTablePtr table_;
    std::unordered_map<Monomial, Int, MonomialHash> acc_;
};

/// Term comparison used for the canonical order (true when a precedes b).
bool term_precedes(const VarTable& t, const Monomial& a, const Monomial& b);

} // namespace mzeta
