#pragma once

/// @file universal.hpp
/// @brief Universal composition polynomials for lambda-ring operations.
///
/// P_n expresses the n-th exterior power of a product of two alphabets in
/// terms of the elementary symmetric functions of the factors; P_{n,r} does
/// the same for the n-th exterior power of an r-th exterior power.  Both are
/// computed by independent routes (direct expansion with elementary
/// reduction, and Schur / plethysm expansions through the symmetric function
/// layer) so results can be cross-checked term for term.  The q-polynomials
/// are the generating functions of the minors alphabet {xi_S : |S| = n} of a
/// 2g-letter alphabet; they carry the coefficient-level functional equation.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multipoly.hpp"
#include "symfunc.hpp"

namespace mzeta {

/// Table with first-alphabet generators s1..sn (weight i) followed by
/// second-alphabet generators t1..tm (weight j).
VarTablePtr two_alphabet_table(int n, int m);
/// Table with generators s1..sn only.
VarTablePtr one_alphabet_table(int n);
///// Table for q-polynomials: s1..s_{2g} plus the series variable t.
VarTablePtr q_series_table(int g);

enum class PnRoute { Auto, Product, Cauchy };
enum class PnrRoute { Auto, Product, Plethysm };
enum class QRoute { Auto, Product, Plethysm, Newton };

/// P_n in two_alphabet_table(n, n):
///   coefficient of t^n in prod_{i,j <= n} (1 + x_i y_j t),
/// reduced to s_i = e_i(x), t_j = e_j(y).
MultiPoly universal_P(int n, PnRoute route = PnRoute::Auto);

/// P_{n,r} in one_alphabet_table(n*r):
///   coefficient of t^n in prod_{|S| = r} (1 + x_S t) over an nr-letter
///   alphabet, reduced to s_i = e_i(x); equivalently e_n[e_r].
MultiPoly universal_Pnr(int n, int r, PnrRoute route = PnrRoute::Auto);

/// q-polynomial of genus parameter g and level n in q_series_table(g):
///   prod_{S subset [2g], |S| = n} (1 + x_S t),
/// of degree binomial(2g, n) in t with leading coefficient a power of s_{2g}.
MultiPoly q_polynomial(int g, int n, QRoute route = QRoute::Auto);

/// e_m[e_n] specialized to a K-letter alphabet (e_i = 0 for i > K), in the
/// E basis.  Computed by power sums of the minors alphabet and the Newton
/// recursion, never materializing the full weight-mn expansion.
SymFunc truncated_em_en(int m, int n, int K);

/// P_n as sum_{lambda in the K1 x K2 box} s_lambda (x) s_lambda', with each
/// factor expanded in the E basis and specialized to K1 (resp. K2) letters.
/// Pairs with a vanishing factor are dropped.
std::vector<std::pair<SymFunc, SymFunc>> truncated_Pn_pairs(int n, int K1, int K2);

/// Substitutes concrete polynomial values for the e-generators of an
/// integral E-basis symmetric function: e_i -> e_values[i-1].  Terms must
/// only use generators up to e_values.size().
MultiPoly evaluate_e_basis(const SymFunc& f, const std::vector<MultiPoly>& e_values,
                           const VarTablePtr& table);

/// Rewrites a polynomial that is symmetric in the variable block
/// `block_vars` as a polynomial in the elementary symmetric functions of
/// that block.  The result lives on `target`; e_i of the block maps to
/// target_vars[i-1] and every other variable of f maps to the target
/// variable of the same name.  Throws usage_error if f is not symmetric
/// under adjacent transpositions of the block.
MultiPoly elementary_reduce(const MultiPoly& f, const std::vector<int>& block_vars,
                            const VarTablePtr& target, const std::vector<int>& target_vars);

/// Entry listing for cache inspection.
struct CacheStatus {
    std::string path; // empty for a memory-only engine
    bool file_present = false;
    std::uintmax_t file_bytes = 0;
    std::vector<int> p_entries;                      // P n, ascending
    std::vector<std::pair<int, int>> pnr_entries;    // P_{n,r}, lexicographic
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
};

/// Memoizing provider for P_n and P_{n,r} with optional single-file disk
/// persistence.  Small instances are recomputed along both routes and
/// compared before being served.  The cache file is read on first use, not
/// on construction, so a damaged file can be cleared through the same
/// engine; until then every access re-reports the damage.
class UniversalEngine {
public:
    UniversalEngine();
    explicit UniversalEngine(std::string cache_dir);

    UniversalEngine(const UniversalEngine&) = delete;
    UniversalEngine& operator=(const UniversalEngine&) = delete;

    const MultiPoly& P(int n);
    const MultiPoly& Pnr(int n, int r);
    MultiPoly q(int g, int n);

    CacheStatus status();
    /// Removes the cache file and forgets in-memory entries.
    void clear();

    /// Disables the redundant dual-route verification of small instances
    /// (used by tests that time single routes).
    void set_self_check(bool on) { self_check_ = on; }

    std::string cache_file() const;

private:
    void ensure_loaded();
    void load();
    void persist() const;

    std::string dir_;
    bool loaded_ = false;
    bool self_check_ = true;
    std::uint64_t hits_ = 0;
    std::uint64_t misses_ = 0;
    std::map<int, MultiPoly> p_;
    std::map<std::pair<int, int>, MultiPoly> pnr_;
};

} // namespace mzeta
