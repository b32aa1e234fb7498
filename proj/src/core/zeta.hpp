#pragma once

/// @file zeta.hpp
/// @brief Motivic zeta functions: series, rational forms and functional
///        equations.
///
/// The zeta series of a class x is Σ Sym^i(x)·T^i.  When x splits into a
/// plus part (finite alternating powers) and a minus part (finite symmetric
/// powers) the series is rational: P(T)/Q(-T) with P the symmetric
/// polynomial of the minus part and Q the alternating polynomial of the
/// plus part.  check_fe verifies the reflection T -> 1/(L^d T) on such
/// polynomials exactly; the verify_* drivers assemble full reports for the
/// standard motive families (abelian, curves, products, blow-ups) and for
/// the identity battery underpinning the operation calculus.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "k0.hpp"

namespace mzeta {

/// The context table extended by the series variable T (invertible,
/// weight 1).  Throws if a declared atom already uses the name "T".
VarTablePtr zeta_table(const K0Context& ctx);

/// Splits a normalized class into (plus, minus) by monomial parity.
/// Free atoms carry no parity; they raise a domain error.
std::pair<MultiPoly, MultiPoly> parity_split(const K0Context& ctx, const MultiPoly& x);

/// A zeta function in rational form.  Polynomials live on zeta_table(ctx);
/// both have constant term 1 and the function itself is
/// numerator(T) / denominator_arg(-T).
struct ZetaFunction {
    MultiPoly numerator;       ///< P(T) = Σ Sym^i(minus part)·T^i
    MultiPoly denominator_arg; ///< Q(T) = Σ Alt^i(plus part)·T^i
    int num_degree = 0;        ///< f = deg P
    int den_degree = 0;        ///< e = deg Q
    int order = 0;             ///< order to which the series view was checked
};

/// Outcome of one functional-equation check.
struct FEReport {
    std::string subject;
    int weight = 0;      ///< d: the reflection sends T to 1/(L^d T)
    int degree = 0;      ///< n: declared degree of the subject
    int l_exponent = 0;  ///< d*n/2
    bool passed = false;
    std::string witness; ///< first nonzero coefficient of the difference
};

struct CheckLine {
    std::string label;
    bool passed = false;
    std::string detail;
};

/// A titled list of pass/fail lines produced by the verify_* drivers.
struct VerifyReport {
    std::string title;
    std::vector<CheckLine> lines;

    bool passed() const;
    void add(const std::string& label, bool ok, const std::string& detail = "");
    void add_fe(const FEReport& fe);
    void splice(const VerifyReport& other);
};

/// Coefficient i equals Sym^i(x); plain series view, no finiteness needed.
PowerSeries zeta_series(K0Evaluator& eval, const MultiPoly& x, int order,
                        Route route = Route::Default);

/// Builds the rational form of the zeta function of x_plus + x_minus.
/// Degrees are bounded a priori from the atom bounds; the computed
/// polynomials are checked to terminate at those bounds and the quotient is
/// compared against the direct series.  Non-effective or unbounded input
/// raises a domain error ("not Kimura-finite data").
ZetaFunction rational_form(K0Evaluator& eval, const MultiPoly& x_plus,
                           const MultiPoly& x_minus, Route route = Route::Default);

/// Checks F(1/(L^d T)) * T^n * L^{dn/2} == F(T) exactly.  F must be a
/// polynomial in T with constant term 1 and degree at most n; d*n must be
/// even (otherwise: domain error "half-integral twist unsupported").
FEReport check_fe(const MultiPoly& f, int weight, int degree,
                  const std::string& subject = "");

/// Checks the reflection of the full rational function:
/// Z(1/(L^d T)) == (-1)^e * L^{d(e-f)/2} * T^{e-f} * Z(T) with e, f the
/// denominator and numerator degrees; d*(e-f) must be even.
FEReport check_zeta_fe(const ZetaFunction& z, int weight,
                       const std::string& subject = "");

/// A motive presented as a context together with a parity-split class.
struct Motive {
    std::shared_ptr<K0Context> ctx;
    MultiPoly plus;
    MultiPoly minus;

    MultiPoly total() const { return plus + minus; }
};

/// The unit motive: plus part 1, minus part 0.
Motive point_motive();

/// Abelian class of dimension g: one minus atom (default name "h1") with
/// bound 2g and the relation Sym^{2g}(h1) = L^g; the weight-n piece is
/// Sym^n(h1), split by parity of n.  g must be positive.
Motive abelian_motive(int g, const std::string& atom = "h1");

/// Curve class of genus g: 1 + h1 + L with minus atom h1 of bound 2g and
/// the duality rewrites Sym^i(h1) -> L^{i-g}·Sym^{2g-i}(h1) for i > g.
/// g = 0 yields 1 + L with no atom.
Motive curve_motive(int g, const std::string& atom = "h1");

/// Product: plus = x+y+ + x-y-, minus = x+y- + x-y+ on the merged context.
/// Atom names of the two factors must be disjoint.
Motive product_motive(const Motive& x, const Motive& y);

/// Blow-up along a center of codimension d >= 1:
/// plus = x+ + Σ_{i=1}^{d-1} L^i y+, likewise for the minus parts.
Motive blowup_motive(const Motive& x, const Motive& y, int codim);

/// Full verification of the abelian functional equations at dimension g
/// (1 <= g <= 3): factor polynomials against the root-product polynomials,
/// pair reflections, total degrees 2^{2g-1}, check_fe on the sym- and
/// alt-side products, invariance of the full zeta function, and the
/// q-polynomial reflections.
VerifyReport verify_abelian(UniversalEngine& engine, int g);

/// Reflection q_n(1/(σt))·(σt)^{b_n} == σ^{n·b_n/(2g)}·q_{2g-n}(t) for the
/// universal root-product polynomials, all levels n = 0..2g.
VerifyReport verify_q_fe(UniversalEngine& engine, int g);

/// Curve checks for genus g: rational form with denominator
/// (1+T)(1+LT), numerator degree exactly 2g with leading coefficient L^g,
/// and the weight-1 functional equations.
VerifyReport verify_curve(UniversalEngine& engine, int g);

/// Product of two curve classes (genus gx, gy; default elliptic times
/// elliptic): factor functional equations first, then the product
/// polynomial of the two odd parts, its weight-2 reflection, the
/// paired-variable model comparison (both the elementary-symmetric
/// reduction and the Laurent instantiation xi2 = L/xi1, x2 = L/x1),
/// neutrality of the point factor, and the degree bookkeeping of the
/// full product zeta.
VerifyReport verify_product(UniversalEngine& engine, int gx = 1, int gy = 1);

/// Blow-up of an abelian g-fold along a center of codimension codim
/// (1 <= codim <= g): the center is a point when codim = g and an abelian
/// variety of dimension g - codim otherwise.  Checks degree gains, the
/// twisted center factors in both polynomial sides, check_fe on them, and
/// the reflection of the full zeta function.  Defaults to the surface
/// blown up in a point (g = 2, codim = 2).
VerifyReport verify_blowup(UniversalEngine& engine, int g = 2, int codim = 2);

/// Multiplicativity of the total alternating operation on Schur products
/// (order 4, partitions of weight <= part_max) and the composition rule
/// e_m[e_n] == P_{m,n} for mn <= comp_max.
VerifyReport verify_special_structure(UniversalEngine& engine, int part_max = 3,
                                      int comp_max = 8);

/// Composition with an inner complete generator: h_m[h_n] (n odd) resp.
/// e_m[h_n] (n even) equal P_{m,n} at complete arguments, mn <= comp_max.
VerifyReport verify_parity(UniversalEngine& engine, int comp_max = 8);

/// Product rules in the two-alphabet model (degree <= model_max) and
/// route independence of the evaluator on a motive corpus
/// (order <= route_max).
VerifyReport verify_product_model(UniversalEngine& engine, int model_max = 4,
                                  int route_max = 6);

/// sym_series(x)·alt_series(x at -T) == 1 at the given order over a corpus
/// of at least 20 classes including negatives and Tate twists.
VerifyReport verify_opposite(UniversalEngine& engine, int order = 10);

/// Schur-layer identities: tensor-power decomposition x^n = Σ f^λ S_λ(x)
/// for n <= 4, the Pieri product Sym^i·Alt^j for i+j <= 5, the Tate twist
/// S_λ(L·x) = L^{|λ|}·S_λ(x) for |λ| <= 3, and vanishing of S_λ on line
/// classes for λ with more than one row.
VerifyReport verify_schur_layer(UniversalEngine& engine);

/// The full identity battery; max_weight bounds the composition degree mn.
VerifyReport verify_identities(UniversalEngine& engine, int max_weight = 8);

/// Precomputes the composition polynomials the abelian pipeline at
/// dimension g can request — P_{m,n} for n <= 2g, m <= binomial(2g, g) —
/// so they land in the engine's cache (g = 1 or 2).
void warm_cache(UniversalEngine& engine, int g);

} // namespace mzeta
