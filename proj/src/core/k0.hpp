#pragma once

/// @file k0.hpp
/// @brief The coefficient ring of motivic classes and its lambda operations.
///
/// A K0Context declares a set of atoms, each either oddly bounded ("minus",
/// the symmetric powers vanish beyond the bound), evenly bounded ("plus",
/// the alternating powers vanish beyond the bound) or free.  Elements are
/// Laurent polynomials in the Lefschetz class L and the canonical operation
/// symbols of the atoms (Sym^i for minus and free atoms, Alt^i for plus
/// atoms); Sym^1 and Alt^1 are the atom itself.  Atoms may carry rewrite
/// images for individual symbols (e.g. a duality relation expressing high
/// symmetric powers through low ones); normalization applies those images
/// exhaustively and is checked for termination.
///
/// A K0Evaluator computes symmetric- and alternating-power series of
/// arbitrary elements, reducing products through the universal two-alphabet
/// polynomials and nested operations through the universal composition
/// polynomials, with the opposite-structure inversion
///   sym_series(x)(T) * alt_series(x)(-T) = 1
/// closing the remaining cases.  Alternative reduction routes are exposed
/// so results can be cross-checked.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multipoly.hpp"
#include "power_series.hpp"
#include "universal.hpp"

namespace mzeta {

enum class AtomKind { Minus, Plus, Free };

struct AtomInfo {
    std::string name;
    AtomKind kind = AtomKind::Free;
    int bound = 0;     // number of canonical symbols in the table
    int first_var = -1; // table index of the index-1 symbol
};

class K0Context {
public:
    /// symbol_limit caps the canonical symbol family of free atoms (their
    /// nested operations need Sym^k up to order x nesting depth).
    explicit K0Context(int symbol_limit = 32);

    void declare_atom(const std::string& name, AtomKind kind, int bound = 0);
    void freeze();
    bool frozen() const { return table_ != nullptr; }

    const VarTablePtr& table() const;
    int lefschetz_var() const;
    int symbol_limit() const { return symbol_limit_; }

    MultiPoly zero() const;
    MultiPoly constant(const Int& c) const;
    MultiPoly lefschetz(int power = 1) const;
    /// The atom as an element (its index-1 canonical symbol).
    MultiPoly atom_element(const std::string& name) const;
    /// Canonical symbol of the atom as an element: the index-0 symbol is 1,
    /// symbols beyond a bounded atom's bound are 0.
    MultiPoly symbol_element(const std::string& name, int index) const;

    const std::vector<AtomInfo>& atoms() const { return atoms_; }
    const AtomInfo* find_atom(const std::string& name) const;
    const AtomInfo& atom_of_var(int var) const; // var must be a symbol variable
    bool is_symbol_var(int var) const;
    int symbol_index_of_var(int var) const;

    /// Attaches a rewrite image to the atom's canonical symbol of the given
    /// index.  Normalization substitutes images until none applies.
    void set_image(const std::string& atom, int index, const MultiPoly& image);
    bool has_image(const std::string& atom, int index) const;
    /// The stored image polynomial as given to set_image; throws when absent.
    const MultiPoly& image(const std::string& atom, int index) const;
    MultiPoly normalize(const MultiPoly& x) const;

    /// +1 or -1 for monomials built from parity-carrying symbols
    /// (minus atoms contribute (-1)^index per symbol factor, plus atoms and
    /// L are even); nullopt when a free atom is involved.
    std::optional<int> monomial_parity(const Monomial& m) const;
    /// Product of the per-factor finiteness bounds binomial(atom bound,
    /// index); nullopt when a free atom is involved.
    std::optional<Int> monomial_bound(const Monomial& m) const;

private:
    const MultiPoly& normalized_image(int var) const;
    void require_frozen() const;

    int symbol_limit_;
    std::vector<AtomInfo> atoms_;
    std::map<std::string, int> atom_index_;
    VarTablePtr table_;
    int l_var_ = -1;
    std::vector<int> var_atom_;  // per table var: atom index or -1
    std::vector<int> var_index_; // per table var: symbol index or 0
    std::map<int, MultiPoly> images_;
    mutable std::map<int, MultiPoly> normalized_;
    mutable std::map<int, int> norm_state_;
};

/// Reduction strategies for the evaluator.  All three are mathematically
/// equivalent; Default picks the variant that keeps arguments bounded,
/// Mirrored forces the transposed product identities, Opposite derives each
/// series by inverting the other one.
enum class Route { Default, Mirrored, Opposite };

class K0Evaluator {
public:
    K0Evaluator(const K0Context& ctx, UniversalEngine& engine)
        : ctx_(ctx), engine_(engine) {}

    const K0Context& context() const { return ctx_; }
    UniversalEngine& engine() { return engine_; }

    /// sum_i Sym^i(x) T^i (resp. Alt) to the given order.
    PowerSeries sym_series(const MultiPoly& x, int order, Route route = Route::Default);
    PowerSeries alt_series(const MultiPoly& x, int order, Route route = Route::Default);

    MultiPoly sym(int i, const MultiPoly& x, Route route = Route::Default);
    MultiPoly alt(int i, const MultiPoly& x, Route route = Route::Default);

    /// Schur functor via the dual Jacobi-Trudi determinant
    /// det( Alt^{lambda'_i - i + j}(x) ).
    MultiPoly schur(const Partition& lambda, const MultiPoly& x);

private:
    PowerSeries series(const MultiPoly& x, bool want_sym, int order, Route route);
    PowerSeries monomial_series(const Monomial& m, bool want_sym, int order, Route route);
    PowerSeries symbol_series(int var, bool want_sym, int order, Route route);
    PowerSeries product_series(int var, const Monomial& rest, bool want_sym, int order,
                               Route route);
    PowerSeries pow_series(PowerSeries base, const Int& exponent) const;
    MultiPoly nested_value(int i, int j, const AtomInfo& atom, char family);

    struct MemoKey {
        Monomial m;
        bool want_sym;
        int route;
        bool operator<(const MemoKey& o) const {
            if (want_sym != o.want_sym) return want_sym < o.want_sym;
            if (route != o.route) return route < o.route;
            return Monomial::lex_cmp(m, o.m) < 0;
        }
    };

    const K0Context& ctx_;
    UniversalEngine& engine_;
    std::map<MemoKey, PowerSeries> memo_;
};

} // namespace mzeta
