#pragma once

/// @file symfunc.hpp
/// @brief Exact symmetric functions over the rationals.
///
/// Values are finite linear combinations of basis elements indexed by
/// partitions, in one of the four classical bases: power sums (p),
/// elementary (e), complete homogeneous (h) and Schur (s).  The power-sum
/// basis is the internal pivot: every conversion and plethysm routes
/// through it with exact rational arithmetic, and integrality of e/h/s
/// results is asserted where the caller requires it.

#include <map>
#include <string>
#include <vector>

#include "ints.hpp"
#include "partitions.hpp"

namespace mzeta {

enum class Basis { P, E, H, S };

char basis_tag(Basis b);
Basis basis_from_tag(char c);

class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    SymFunc() : basis_(Basis::P) {}
    explicit SymFunc(Basis b) : basis_(b) {}
    SymFunc(Basis b, Terms t);

    /// The basis element b_lambda.
    static SymFunc basis_element(Basis b, const Partition& lambda);
    /// Generator of degree n: p_n, e_n, h_n or s_(n).
    static SymFunc generator(Basis b, int n);
    static SymFunc constant(Basis b, const Rational& c);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& lambda) const;
    int max_weight() const;
    bool is_homogeneous(int* weight_out = nullptr) const;
    bool is_integral() const;

    SymFunc to(Basis target) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc& operator+=(const SymFunc& o) { *this = *this + o; return *this; }
    SymFunc& operator-=(const SymFunc& o) { *this = *this - o; return *this; }
    SymFunc& operator*=(const SymFunc& o) { *this = *this * o; return *this; }
    SymFunc scaled(const Rational& c) const;

    bool operator==(const SymFunc& o) const;
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    /// Drops basis elements of weight > w (used with truncated alphabets).
    SymFunc truncated_weight(int w) const;
    /// In the E or H basis: drops terms using a generator of index > k
    /// (evaluation in k variables, resp. its omega image).
    SymFunc truncated_parts(int k) const;

    /// "s[2,1] + 2*s[1,1,1]"-style canonical rendering.
    std::string render() const;

private:
    void check_basis(const SymFunc& o) const;

    Basis basis_;
    Terms terms_; // nonzero coefficients only
};

/// Plethysm f[g], computed in the power-sum basis by p_k[g] = g with every
/// p_m replaced by p_{km}, extended linearly in f over exact rationals.
/// g must have no constant (weight-0) component.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// The involution omega (e_n <-> h_n, s_lambda -> s_lambda',
/// p_lambda -> sign(lambda) p_lambda).
SymFunc omega(const SymFunc& f);

/// Hall inner product <f, s_lambda>.
Rational schur_coefficient(const SymFunc& f, const Partition& lambda);

/// Littlewood-Richardson coefficient c^lambda_{mu nu} by lattice-word
/// tableau enumeration.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Kronecker coefficient g(lambda, mu, nu) via the character triple sum.
Int kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// --- expansions used across modules (memoized, thread-safe) ---------------

/// e_n, h_n in the power-sum basis.
const SymFunc& e_in_p(int n);
const SymFunc& h_in_p(int n);
/// p_n as a polynomial in the e (resp. h) generators.
const SymFunc& p_in_e(int n);
const SymFunc& p_in_h(int n);
/// p_n as a polynomial in e_1..e_k with e_i = 0 for i > k
/// (power sums of a k-letter alphabet).
SymFunc p_in_e_truncated(int n, int k);

// --- two-alphabet model ----------------------------------------------------

/// An element of Lambda tensor Lambda, stored in the p-tensor-p basis.
/// Lambda-operations are computed from Adams operations by the Newton
/// recursion; this is the model used to certify the product identities.
class SymFunc2 {
public:
    using Key = std::pair<Partition, Partition>;
    using Terms = std::map<Key, Rational>;

    SymFunc2() = default;

    static SymFunc2 one();
    /// f in the left (resp. right) tensor factor.
    static SymFunc2 left(const SymFunc& f);
    static SymFunc2 right(const SymFunc& f);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymFunc2 operator+(const SymFunc2& o) const;
    SymFunc2 operator-(const SymFunc2& o) const;
    SymFunc2 operator*(const SymFunc2& o) const;
    SymFunc2 scaled(const Rational& c) const;
    bool operator==(const SymFunc2& o) const { return terms_ == o.terms_; }

    /// Adams operation psi^k (p_m -> p_{km} on both tensor factors).
    SymFunc2 adams(int k) const;
    /// e_r[x] and h_r[x] via the Newton recursions from Adams operations.
    SymFunc2 lambda_op(int r) const;
    SymFunc2 sigma_op(int r) const;

    /// Coefficient of s_mu (x) s_nu.
    Rational schur_schur_coefficient(const Partition& mu, const Partition& nu) const;

private:
    Terms terms_;
};

} // namespace mzeta
