/// @file zeta.cpp
/// @brief Zeta series, rational forms, functional equations and the
///        verification drivers.

#include "zeta.hpp"

#include <algorithm>
#include <sstream>

#include "partitions.hpp"
#include "symfunc.hpp"
#include "universal.hpp"

namespace mzeta {

namespace {

std::string itos(const Int& v) { return v.str(); }

/// L^le * T^te as an element of the zeta table.
MultiPoly lt_monomial(const VarTablePtr& zt, int lv, int tv, int le, int te) {
    return MultiPoly::monomial(zt, Monomial::var(lv, le) * Monomial::var(tv, te), 1);
}

/// Collects series coefficients 0..upto into a polynomial in T.
MultiPoly series_to_poly(const PowerSeries& s, const VarTablePtr& zt, int tv, int upto) {
    PolyBuilder b(zt);
    for (int i = 0; i <= std::min(upto, s.order()); ++i) {
        const MultiPoly& c = s.coeff(i);
        if (c.is_zero()) continue;
        b.add_scaled(c.retable(zt), 1, Monomial::var(tv, i));
    }
    return b.build();
}

/// Substitutes values[v] for every variable of f (exponents must be >= 0).
MultiPoly evaluate_vars(const MultiPoly& f, const std::vector<MultiPoly>& values,
                        const VarTablePtr& out) {
    PolyBuilder b(out);
    for (const auto& [m, c] : f.terms()) {
        MultiPoly acc = MultiPoly::constant(out, 1);
        for (const auto& [v, e] : m.factors()) {
            if (e < 0) throw usage_error("evaluate_vars: negative exponent");
            if (v >= static_cast<int>(values.size()) || !values[static_cast<std::size_t>(v)].bound())
                throw usage_error("evaluate_vars: missing value for variable '" +
                                  f.table()->info(v).name + "'");
            acc = acc * values[static_cast<std::size_t>(v)].pow(e);
        }
        b.add_scaled(acc, c);
    }
    return b.build();
}

/// Evaluates a universal polynomial with symmetric-function arguments.
SymFunc evaluate_symfunc(const MultiPoly& f, const std::vector<SymFunc>& values) {
    std::vector<SymFunc> vp;
    vp.reserve(values.size());
    for (const SymFunc& v : values) vp.push_back(v.to(Basis::P));
    SymFunc total = SymFunc::constant(Basis::P, 0);
    for (const auto& [m, c] : f.terms()) {
        SymFunc acc = SymFunc::constant(Basis::P, 1);
        for (const auto& [v, e] : m.factors())
            for (int k = 0; k < e; ++k) acc = acc * vp[static_cast<std::size_t>(v)];
        total = total + acc.scaled(Rational(c));
    }
    return total;
}

/// Same with arguments in the two-alphabet algebra.
SymFunc2 evaluate_symfunc2(const MultiPoly& f, const std::vector<SymFunc2>& values) {
    SymFunc2 total;
    for (const auto& [m, c] : f.terms()) {
        SymFunc2 acc = SymFunc2::one();
        for (const auto& [v, e] : m.factors())
            for (int k = 0; k < e; ++k) acc = acc * values[static_cast<std::size_t>(v)];
        total = total + acc.scaled(Rational(c));
    }
    return total;
}

std::string lowest_t_witness(const MultiPoly& diff, int tv) {
    auto parts = diff.split_by(tv);
    auto it = parts.begin();
    std::ostringstream os;
    os << "T^" << it->first << ": " << it->second.render();
    return os.str();
}

bool series_agree(const PowerSeries& a, const PowerSeries& b, int order) {
    for (int i = 0; i <= order; ++i)
        if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
}

/// True when numerator(T) == sym_series(total) * denominator_arg(-T) through
/// the given order, with the zeta polynomials mapped back to the context
/// table coefficient by coefficient.
bool reproduces_series(K0Evaluator& ev, const ZetaFunction& z, const MultiPoly& total,
                       int order) {
    const VarTablePtr& ct = ev.context().table();
    int tv = z.numerator.table()->var("T");
    std::vector<MultiPoly> nc;
    std::vector<MultiPoly> dc;
    for (int i = 0; i <= order; ++i) {
        nc.push_back(i <= z.num_degree ? z.numerator.coefficient_of(tv, i).retable(ct)
                                       : MultiPoly(ct));
        dc.push_back(i <= z.den_degree ? z.denominator_arg.coefficient_of(tv, i).retable(ct)
                                       : MultiPoly(ct));
    }
    PowerSeries num = PowerSeries::from_coeffs(ct, std::move(nc), order);
    PowerSeries den_neg = PowerSeries::from_coeffs(ct, std::move(dc), order).negate_variable();
    PowerSeries lhs = ev.sym_series(total, order) * den_neg;
    return series_agree(lhs, num, order);
}

/// Degree bound for one parity side: sum over terms of |c| times the
/// product of the per-symbol binomial bounds.  Rejects free atoms, terms
/// of the wrong parity and negative coefficients.
Int side_degree_bound(const K0Context& ctx, const MultiPoly& x, int want_parity) {
    const char* side = want_parity > 0 ? "plus" : "minus";
    Int total = 0;
    for (const auto& [m, c] : x.terms()) {
        auto parity = ctx.monomial_parity(m);
        auto bound = ctx.monomial_bound(m);
        if (!parity || !bound)
            throw domain_error(std::string("not Kimura-finite data: free atom in the ") + side +
                               " part");
        if (*parity != want_parity)
            throw domain_error(std::string("not Kimura-finite data: term of the wrong parity "
                                           "in the ") + side + " part");
        if (c < 0)
            throw domain_error(std::string("not Kimura-finite data: negative coefficient in "
                                           "the ") + side + " part");
        total += c * *bound;
    }
    return total;
}

} // namespace

VarTablePtr zeta_table(const K0Context& ctx) {
    const VarTablePtr& src = ctx.table();
    auto t = std::make_shared<VarTable>();
    for (int v = 0; v < static_cast<int>(src->size()); ++v) {
        const VarInfo& vi = src->info(v);
        if (vi.name == "T")
            throw usage_error("zeta_table: the name 'T' is reserved for the series variable");
        t->add_var(vi.name, vi.invertible, vi.weight);
    }
    t->add_var("T", true, 1);
    return t;
}

std::pair<MultiPoly, MultiPoly> parity_split(const K0Context& ctx, const MultiPoly& x) {
    MultiPoly nx = ctx.normalize(x);
    PolyBuilder plus(ctx.table());
    PolyBuilder minus(ctx.table());
    for (const auto& [m, c] : nx.terms()) {
        auto parity = ctx.monomial_parity(m);
        if (!parity)
            throw domain_error("not Kimura-finite data: a free atom carries no parity");
        if (*parity > 0)
            plus.add(m, c);
        else
            minus.add(m, c);
    }
    return {plus.build(), minus.build()};
}

bool VerifyReport::passed() const {
    for (const CheckLine& l : lines)
        if (!l.passed) return false;
    return true;
}

void VerifyReport::add(const std::string& label, bool ok, const std::string& detail) {
    lines.push_back(CheckLine{label, ok, detail});
}

void VerifyReport::add_fe(const FEReport& fe) {
    std::ostringstream os;
    os << "weight " << fe.weight << ", degree " << fe.degree << ", L-exponent " << fe.l_exponent;
    if (!fe.passed && !fe.witness.empty()) os << "; first difference at " << fe.witness;
    add(fe.subject + ": functional equation", fe.passed, os.str());
}

void VerifyReport::splice(const VerifyReport& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

PowerSeries zeta_series(K0Evaluator& eval, const MultiPoly& x, int order, Route route) {
    return eval.sym_series(x, order, route);
}

ZetaFunction rational_form(K0Evaluator& eval, const MultiPoly& x_plus,
                           const MultiPoly& x_minus, Route route) {
    const K0Context& ctx = eval.context();
    MultiPoly xp = ctx.normalize(x_plus);
    MultiPoly xm = ctx.normalize(x_minus);
    Int f_bound = side_degree_bound(ctx, xm, -1);
    Int e_bound = side_degree_bound(ctx, xp, +1);
    constexpr int kMaxDegree = 1024;
    if (f_bound > kMaxDegree || e_bound > kMaxDegree)
        throw domain_error("rational form: finiteness bound " +
                           itos(f_bound > e_bound ? f_bound : e_bound) +
                           " exceeds the supported degree " + std::to_string(kMaxDegree));
    int f_est = f_bound.convert_to<int>();
    int e_est = e_bound.convert_to<int>();
    const int slack = 2;

    PowerSeries ns = eval.sym_series(xm, f_est + slack, route);
    PowerSeries ds = eval.alt_series(xp, e_est + slack, route);
    for (int i = f_est + 1; i <= f_est + slack; ++i)
        if (!ns.coeff(i).is_zero())
            throw domain_error("rational form: the symmetric polynomial does not terminate "
                               "at the predicted degree " + std::to_string(f_est));
    for (int i = e_est + 1; i <= e_est + slack; ++i)
        if (!ds.coeff(i).is_zero())
            throw domain_error("rational form: the alternating polynomial does not terminate "
                               "at the predicted degree " + std::to_string(e_est));

    VarTablePtr zt = zeta_table(ctx);
    int tv = zt->var("T");
    ZetaFunction z;
    z.numerator = series_to_poly(ns, zt, tv, f_est);
    z.denominator_arg = series_to_poly(ds, zt, tv, e_est);
    z.num_degree = z.numerator.degree_in(tv);
    z.den_degree = z.denominator_arg.degree_in(tv);

    // The quotient must reproduce the direct series: sigma(x) * Q(-T) == P(T),
    // checked through order 10 at least.
    int order = std::max(std::max(f_est, e_est) + slack, 10);
    PowerSeries direct = eval.sym_series(xp + xm, order, route);
    std::vector<MultiPoly> qc;
    qc.reserve(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        qc.push_back(i <= e_est ? ds.coeff(i) : MultiPoly(ctx.table()));
    PowerSeries qser = PowerSeries::from_coeffs(ctx.table(), std::move(qc), order).negate_variable();
    PowerSeries prod = direct * qser;
    for (int i = 0; i <= order; ++i) {
        const MultiPoly expect = i <= f_est ? ns.coeff(i) : MultiPoly(ctx.table());
        if (!(prod.coeff(i) == expect))
            throw domain_error("rational form disagrees with the direct zeta series at order " +
                               std::to_string(i));
    }
    z.order = order;
    return z;
}

FEReport check_fe(const MultiPoly& f, int weight, int degree, const std::string& subject) {
    if (weight < 0 || degree < 0)
        throw usage_error("check_fe: weight and degree must be nonnegative");
    if ((static_cast<long long>(weight) * degree) % 2 != 0)
        throw domain_error("half-integral twist unsupported");
    FEReport rep;
    rep.subject = subject;
    rep.weight = weight;
    rep.degree = degree;
    rep.l_exponent = weight * degree / 2;

    const VarTablePtr& zt = f.table();
    if (!zt) throw usage_error("check_fe: unbound polynomial");
    int tv = zt->find("T");
    int lv = zt->find("L");
    if (tv < 0 || lv < 0)
        throw usage_error("check_fe: the polynomial must use a table with T and L");
    if (f.is_zero() || !(f.coefficient_of(tv, 0) == MultiPoly::constant(zt, 1)))
        throw usage_error("check_fe: constant term must be 1");
    if (f.min_degree_in(tv) < 0 || f.degree_in(tv) > degree)
        throw usage_error("check_fe: subject must be a polynomial in T of degree at most " +
                          std::to_string(degree));

    MultiPoly image = lt_monomial(zt, lv, tv, -weight, -1);
    MultiPoly transformed = f.substitute(tv, image) * lt_monomial(zt, lv, tv, rep.l_exponent, degree);
    MultiPoly diff = transformed - f;
    rep.passed = diff.is_zero();
    if (!rep.passed) rep.witness = lowest_t_witness(diff, tv);
    return rep;
}

FEReport check_zeta_fe(const ZetaFunction& z, int weight, const std::string& subject) {
    if (weight < 0) throw usage_error("check_zeta_fe: weight must be nonnegative");
    int chi = z.den_degree - z.num_degree;
    if ((static_cast<long long>(weight) * chi) % 2 != 0)
        throw domain_error("half-integral twist unsupported");
    FEReport rep;
    rep.subject = subject;
    rep.weight = weight;
    rep.degree = chi;
    rep.l_exponent = weight * chi / 2;

    const VarTablePtr& zt = z.numerator.table();
    int tv = zt->var("T");
    int lv = zt->var("L");
    MultiPoly minus_t = MultiPoly::monomial(zt, Monomial::var(tv), -1);
    MultiPoly qneg = z.denominator_arg.substitute(tv, minus_t);
    MultiPoly image = lt_monomial(zt, lv, tv, -weight, -1);
    MultiPoly num_ref = z.numerator.substitute(tv, image);
    MultiPoly qneg_ref = qneg.substitute(tv, image);
    MultiPoly factor = MultiPoly::monomial(
        zt, Monomial::var(lv, rep.l_exponent) * Monomial::var(tv, chi),
        z.den_degree % 2 == 0 ? 1 : -1);
    MultiPoly diff = num_ref * qneg - z.numerator * qneg_ref * factor;
    rep.passed = diff.is_zero();
    if (!rep.passed) rep.witness = lowest_t_witness(diff, tv);
    return rep;
}

Motive point_motive() {
    auto ctx = std::make_shared<K0Context>();
    ctx->freeze();
    return Motive{ctx, ctx->constant(1), ctx->zero()};
}

Motive abelian_motive(int g, const std::string& atom) {
    if (g < 1) throw usage_error("abelian_motive: dimension must be positive");
    auto ctx = std::make_shared<K0Context>();
    ctx->declare_atom(atom, AtomKind::Minus, 2 * g);
    ctx->freeze();
    ctx->set_image(atom, 2 * g, ctx->lefschetz(g));
    MultiPoly plus = ctx->zero();
    MultiPoly minus = ctx->zero();
    for (int n = 0; n <= 2 * g; ++n) {
        MultiPoly piece = ctx->symbol_element(atom, n);
        if (n % 2 == 0)
            plus += piece;
        else
            minus += piece;
    }
    return Motive{ctx, ctx->normalize(plus), ctx->normalize(minus)};
}

Motive curve_motive(int g, const std::string& atom) {
    if (g < 0) throw usage_error("curve_motive: genus must be nonnegative");
    auto ctx = std::make_shared<K0Context>();
    if (g > 0) ctx->declare_atom(atom, AtomKind::Minus, 2 * g);
    ctx->freeze();
    MultiPoly plus = ctx->constant(1) + ctx->lefschetz();
    MultiPoly minus = ctx->zero();
    if (g > 0) {
        for (int i = g + 1; i <= 2 * g; ++i)
            ctx->set_image(atom, i, ctx->lefschetz(i - g) * ctx->symbol_element(atom, 2 * g - i));
        minus = ctx->atom_element(atom);
    }
    return Motive{ctx, plus, minus};
}

namespace {

std::shared_ptr<K0Context> merged_context(const K0Context& a, const K0Context& b) {
    auto ctx = std::make_shared<K0Context>(std::max(a.symbol_limit(), b.symbol_limit()));
    for (const K0Context* src : {&a, &b})
        for (const AtomInfo& ai : src->atoms())
            ctx->declare_atom(ai.name, ai.kind, ai.kind == AtomKind::Free ? 0 : ai.bound);
    ctx->freeze();
    for (const K0Context* src : {&a, &b})
        for (const AtomInfo& ai : src->atoms())
            for (int i = 1; i <= ai.bound; ++i)
                if (src->has_image(ai.name, i))
                    ctx->set_image(ai.name, i, src->image(ai.name, i).retable(ctx->table()));
    return ctx;
}

} // namespace

Motive product_motive(const Motive& x, const Motive& y) {
    auto ctx = merged_context(*x.ctx, *y.ctx);
    const VarTablePtr& t = ctx->table();
    MultiPoly xp = x.plus.retable(t);
    MultiPoly xm = x.minus.retable(t);
    MultiPoly yp = y.plus.retable(t);
    MultiPoly ym = y.minus.retable(t);
    return Motive{ctx, ctx->normalize(xp * yp + xm * ym), ctx->normalize(xp * ym + xm * yp)};
}

Motive blowup_motive(const Motive& x, const Motive& y, int codim) {
    if (codim < 1) throw usage_error("blowup_motive: codimension must be at least 1");
    auto ctx = merged_context(*x.ctx, *y.ctx);
    const VarTablePtr& t = ctx->table();
    MultiPoly plus = x.plus.retable(t);
    MultiPoly minus = x.minus.retable(t);
    MultiPoly yp = y.plus.retable(t);
    MultiPoly ym = y.minus.retable(t);
    for (int i = 1; i <= codim - 1; ++i) {
        plus += ctx->lefschetz(i) * yp;
        minus += ctx->lefschetz(i) * ym;
    }
    return Motive{ctx, ctx->normalize(plus), ctx->normalize(minus)};
}

VerifyReport verify_q_fe(UniversalEngine& engine, int g) {
    if (g < 1 || g > 3) throw usage_error("verify_q_fe: supported dimensions are 1..3");
    VerifyReport r;
    r.title = "root-product reflections, dimension " + std::to_string(g);
    int n2 = 2 * g;

    auto vt = std::make_shared<VarTable>();
    for (int k = 1; k <= n2; ++k) vt->add_var("s" + std::to_string(k), k == n2, k);
    int tvv = vt->add_var("t", true, 1);
    VarTablePtr tbl = vt;
    int sg = tbl->var("s" + std::to_string(n2));

    std::vector<MultiPoly> q;
    q.reserve(static_cast<std::size_t>(n2) + 1);
    for (int n = 0; n <= n2; ++n) q.push_back(engine.q(g, n).retable(tbl));

    MultiPoly image = MultiPoly::monomial(tbl, Monomial::var(sg, -1) * Monomial::var(tvv, -1), 1);
    for (int n = 0; n <= n2; ++n) {
        int b = binomial(n2, n).convert_to<int>();
        int sexp = binomial(n2 - 1, n - 1).convert_to<int>();
        MultiPoly lead = MultiPoly::monomial(tbl, Monomial::var(sg, sexp), 1);
        r.add("level " + std::to_string(n) + ": degree " + std::to_string(b) +
                  " with leading coefficient s" + std::to_string(n2) + "^" + std::to_string(sexp),
              q[static_cast<std::size_t>(n)].degree_in(tvv) == b &&
                  q[static_cast<std::size_t>(n)].coefficient_of(tvv, b) == lead);
        MultiPoly lhs = q[static_cast<std::size_t>(n)].substitute(tvv, image) *
                        MultiPoly::monomial(tbl, (Monomial::var(sg) * Monomial::var(tvv)).pow(b), 1);
        MultiPoly rhs = lead * q[static_cast<std::size_t>(n2 - n)];
        r.add("level " + std::to_string(n) + " reflects to level " + std::to_string(n2 - n),
              lhs == rhs);
    }
    return r;
}

VerifyReport verify_abelian(UniversalEngine& engine, int g) {
    if (g < 1 || g > 3) throw usage_error("verify_abelian: supported dimensions are 1..3");
    VerifyReport r;
    r.title = "abelian class, dimension " + std::to_string(g);
    int n2 = 2 * g;

    Motive A = abelian_motive(g);
    K0Evaluator ev(*A.ctx, engine);
    VarTablePtr zt = zeta_table(*A.ctx);
    int tv = zt->var("T");
    int lv = zt->var("L");
    const int slack = 2;

    // Factor polynomials: the finite-side series of each weight-n piece.
    std::vector<MultiPoly> factor;
    factor.reserve(static_cast<std::size_t>(n2) + 1);
    for (int n = 0; n <= n2; ++n) {
        int b = binomial(n2, n).convert_to<int>();
        Int lexp = Int(g) * binomial(n2 - 1, n - 1);
        MultiPoly piece = A.ctx->symbol_element("h1", n);
        PowerSeries s = n % 2 == 1 ? ev.sym_series(piece, b + slack)
                                   : ev.alt_series(piece, b + slack);
        bool tail_ok = true;
        for (int i = b + 1; i <= b + slack; ++i) tail_ok = tail_ok && s.coeff(i).is_zero();
        MultiPoly fn = series_to_poly(s, zt, tv, b);
        bool lead_ok = fn.coefficient_of(tv, b) ==
                       MultiPoly::monomial(zt, Monomial::var(lv, lexp.convert_to<int>()), 1);
        r.add("level " + std::to_string(n) + " factor: degree " + std::to_string(b) +
                  " with leading coefficient L^" + itos(lexp),
              tail_ok && lead_ok);

        // Independent route: the root-product polynomial with the canonical
        // symbols substituted.
        MultiPoly qn = engine.q(g, n);
        const VarTablePtr& qt = qn.table();
        std::vector<MultiPoly> vals(qt->size(), MultiPoly());
        for (int k = 1; k <= n2; ++k)
            vals[static_cast<std::size_t>(qt->var("s" + std::to_string(k)))] =
                A.ctx->normalize(A.ctx->symbol_element("h1", k)).retable(zt);
        vals[static_cast<std::size_t>(qt->var("t"))] = MultiPoly::variable(zt, tv);
        r.add("level " + std::to_string(n) + " factor matches the root-product polynomial",
              evaluate_vars(qn, vals, zt) == fn);
        factor.push_back(fn);
    }

    // Pair reflections between complementary levels.
    MultiPoly image = lt_monomial(zt, lv, tv, -g, -1);
    for (int n = 0; n <= n2; ++n) {
        int b = binomial(n2, n).convert_to<int>();
        Int lexp = Int(g) * binomial(n2 - 1, n - 1);
        MultiPoly lhs = factor[static_cast<std::size_t>(n)].substitute(tv, image) *
                        MultiPoly::monomial(zt, (Monomial::var(lv, g) * Monomial::var(tv)).pow(b), 1);
        MultiPoly rhs = MultiPoly::monomial(zt, Monomial::var(lv, lexp.convert_to<int>()), 1) *
                        factor[static_cast<std::size_t>(n2 - n)];
        r.add("levels (" + std::to_string(n) + ", " + std::to_string(n2 - n) +
                  ") pair reflection with L-exponent " + itos(lexp),
              lhs == rhs);
    }

    // Totals.
    int half = 1 << (n2 - 1);
    MultiPoly num_prod = MultiPoly::constant(zt, 1);
    MultiPoly den_prod = MultiPoly::constant(zt, 1);
    for (int n = 0; n <= n2; ++n) {
        if (n % 2 == 1)
            num_prod = num_prod * factor[static_cast<std::size_t>(n)];
        else
            den_prod = den_prod * factor[static_cast<std::size_t>(n)];
    }
    r.add("both side products have degree " + std::to_string(half),
          num_prod.degree_in(tv) == half && den_prod.degree_in(tv) == half);
    r.add_fe(check_fe(num_prod, g, half, "numerator product"));
    r.add_fe(check_fe(den_prod, g, half, "denominator product"));

    ZetaFunction zf = rational_form(ev, A.plus, A.minus);
    r.add("rational form degrees are " + std::to_string(half) + " on both sides",
          zf.num_degree == half && zf.den_degree == half);
    r.add("rational form equals the factor products",
          zf.numerator == num_prod && zf.denominator_arg == den_prod);
    r.add_fe(check_zeta_fe(zf, g, "full zeta invariance"));

    r.splice(verify_q_fe(engine, g));
    return r;
}

VerifyReport verify_curve(UniversalEngine& engine, int g) {
    if (g < 0 || g > 12) throw usage_error("verify_curve: supported genus range is 0..12");
    VerifyReport r;
    r.title = "curve class, genus " + std::to_string(g);

    Motive C = curve_motive(g);
    K0Evaluator ev(*C.ctx, engine);
    ZetaFunction zf = rational_form(ev, C.plus, C.minus);
    const VarTablePtr& zt = zf.numerator.table();
    int tv = zt->var("T");
    int lv = zt->var("L");

    MultiPoly one = MultiPoly::constant(zt, 1);
    MultiPoly expected_den = (one + MultiPoly::variable(zt, tv)) *
                             (one + lt_monomial(zt, lv, tv, 1, 1));
    r.add("denominator is (1+T)(1+LT)", zf.denominator_arg == expected_den);
    r.add("numerator degree " + std::to_string(2 * g) + " with leading coefficient L^" +
              std::to_string(g),
          zf.num_degree == 2 * g &&
              zf.numerator.coefficient_of(tv, 2 * g) ==
                  MultiPoly::monomial(zt, Monomial::var(lv, g), 1));
    if (g == 1) {
        Motive A = abelian_motive(1);
        K0Evaluator eva(*A.ctx, engine);
        ZetaFunction za = rational_form(eva, A.plus, A.minus);
        r.add("agrees with the abelian class of dimension 1",
              zf.numerator == za.numerator && zf.denominator_arg == za.denominator_arg);
    }
    r.add_fe(check_fe(zf.numerator, 1, 2 * g, "numerator"));
    r.add_fe(check_zeta_fe(zf, 1, "full zeta"));
    return r;
}

namespace {

/// Reduces the product over all letter pairs (1 + x_i y_j t) to the
/// elementary symmetric functions of the two blocks.
MultiPoly paired_model_polynomial(int nx, int ny, VarTablePtr& out) {
    auto model = std::make_shared<VarTable>();
    std::vector<int> xv;
    std::vector<int> yv;
    for (int i = 1; i <= nx; ++i) xv.push_back(model->add_var("x" + std::to_string(i)));
    for (int j = 1; j <= ny; ++j) yv.push_back(model->add_var("y" + std::to_string(j)));
    int tv = model->add_var("t");
    VarTablePtr mt = model;

    MultiPoly prod = MultiPoly::constant(mt, 1);
    for (int i : xv)
        for (int j : yv)
            prod = prod * (MultiPoly::constant(mt, 1) +
                           MultiPoly::monomial(mt, Monomial::var(i) * Monomial::var(j) *
                                                       Monomial::var(tv),
                                               1));

    auto mid = std::make_shared<VarTable>();
    std::vector<int> exv;
    for (int i = 1; i <= nx; ++i)
        exv.push_back(mid->add_var("ex" + std::to_string(i), false, i));
    for (int j = 1; j <= ny; ++j) mid->add_var("y" + std::to_string(j));
    mid->add_var("t");
    VarTablePtr midt = mid;
    MultiPoly reduced_x = elementary_reduce(prod, xv, midt, exv);

    auto fin = std::make_shared<VarTable>();
    std::vector<int> exv2;
    std::vector<int> eyv;
    for (int i = 1; i <= nx; ++i)
        exv2.push_back(fin->add_var("ex" + std::to_string(i), false, i));
    for (int j = 1; j <= ny; ++j)
        eyv.push_back(fin->add_var("ey" + std::to_string(j), false, j));
    fin->add_var("t");
    out = fin;

    std::vector<int> yv_mid;
    for (int j = 1; j <= ny; ++j) yv_mid.push_back(midt->var("y" + std::to_string(j)));
    return elementary_reduce(reduced_x, yv_mid, out, eyv);
}

} // namespace

VerifyReport verify_product(UniversalEngine& engine, int gx, int gy) {
    if (gx < 1 || gx > 2 || gy < 1 || gy > 2)
        throw usage_error("verify_product: supported genus range is 1..2 per factor");
    VerifyReport r;
    r.title = "product of curve classes, genus " + std::to_string(gx) + " and " +
              std::to_string(gy);

    Motive X = curve_motive(gx, "a");
    Motive Y = curve_motive(gy, "b");

    // The factors must satisfy their own functional equations first.
    {
        K0Evaluator evx(*X.ctx, engine);
        ZetaFunction zx = rational_form(evx, X.plus, X.minus);
        r.add_fe(check_fe(zx.numerator, 1, 2 * gx, "left factor numerator"));
        r.add_fe(check_fe(zx.denominator_arg, 1, 2, "left factor denominator"));
        K0Evaluator evy(*Y.ctx, engine);
        ZetaFunction zy = rational_form(evy, Y.plus, Y.minus);
        r.add_fe(check_fe(zy.numerator, 1, 2 * gy, "right factor numerator"));
        r.add_fe(check_fe(zy.denominator_arg, 1, 2, "right factor denominator"));
    }

    Motive P = product_motive(X, Y);
    K0Evaluator ev(*P.ctx, engine);
    VarTablePtr zt = zeta_table(*P.ctx);
    int tv = zt->var("T");
    const VarTablePtr& pt = P.ctx->table();
    const int ef = (2 * gx) * (2 * gy);
    const int slack = 2;

    // Alternating polynomial of the product of the two odd parts, built from
    // paired symmetric arguments.
    MultiPoly ab = X.minus.retable(pt) * Y.minus.retable(pt);
    PowerSeries qs = ev.alt_series(ab, ef + slack, Route::Mirrored);
    bool tail_ok = qs.coeff(ef + 1).is_zero() && qs.coeff(ef + 2).is_zero();
    MultiPoly qxy = series_to_poly(qs, zt, tv, ef);
    r.add("odd-part product polynomial has degree " + std::to_string(ef),
          tail_ok && qxy.degree_in(tv) == ef);
    r.add("route agreement for the odd-part product polynomial",
          series_agree(qs, ev.alt_series(ab, ef + slack, Route::Default), ef + slack) &&
              series_agree(qs, ev.alt_series(ab, ef + slack, Route::Opposite), ef + slack));
    r.add_fe(check_fe(qxy, 2, ef, "odd-part product polynomial"));

    // Paired-variable model: expand the product over all letter pairs and
    // substitute the canonical symbols for the block elementaries.
    {
        VarTablePtr ft;
        MultiPoly model = paired_model_polynomial(2 * gx, 2 * gy, ft);
        std::vector<MultiPoly> vals(ft->size(), MultiPoly());
        for (int i = 1; i <= 2 * gx; ++i)
            vals[static_cast<std::size_t>(ft->var("ex" + std::to_string(i)))] =
                P.ctx->normalize(P.ctx->symbol_element("a", i)).retable(zt);
        for (int j = 1; j <= 2 * gy; ++j)
            vals[static_cast<std::size_t>(ft->var("ey" + std::to_string(j)))] =
                P.ctx->normalize(P.ctx->symbol_element("b", j)).retable(zt);
        vals[static_cast<std::size_t>(ft->var("t"))] = MultiPoly::variable(zt, tv);
        r.add("paired-variable model agrees", evaluate_vars(model, vals, zt) == qxy);
    }

    // Laurent instantiation of the model with one letter pair per block:
    // xi2 = L/xi1 and x2 = L/x1 make both factor polynomials and the
    // product polynomial satisfy their reflections identically.
    {
        auto lt = std::make_shared<VarTable>();
        int lv = lt->add_var("L", true, 2);
        int xiv = lt->add_var("xi1", true, 1);
        int xv = lt->add_var("x1", true, 1);
        int tvv = lt->add_var("T", true, 1);
        VarTablePtr ltt = lt;
        MultiPoly one = MultiPoly::constant(ltt, 1);
        auto root_factor = [&](const Monomial& m) {
            return one + MultiPoly::monomial(ltt, m * Monomial::var(tvv), 1);
        };
        Monomial xi1 = Monomial::var(xiv);
        Monomial xi2 = Monomial::var(lv) * Monomial::var(xiv, -1);
        Monomial x1 = Monomial::var(xv);
        Monomial x2 = Monomial::var(lv) * Monomial::var(xv, -1);
        MultiPoly q_left = root_factor(xi1) * root_factor(xi2);
        MultiPoly q_right = root_factor(x1) * root_factor(x2);
        MultiPoly q_pair = root_factor(xi1 * x1) * root_factor(xi1 * x2) *
                           root_factor(xi2 * x1) * root_factor(xi2 * x2);
        r.add_fe(check_fe(q_left, 1, 2, "Laurent model, left factor"));
        r.add_fe(check_fe(q_right, 1, 2, "Laurent model, right factor"));
        r.add_fe(check_fe(q_pair, 2, 4, "Laurent model, product"));
    }

    // Full product zeta: degree bookkeeping and reflection.
    ZetaFunction zf = rational_form(ev, P.plus, P.minus);
    int e_total = 2 * 2 + ef;
    int f_total = 2 * (2 * gy) + (2 * gx) * 2;
    r.add("full degrees: numerator " + std::to_string(f_total) + ", denominator 2*2+" +
              std::to_string(ef) + " = " + std::to_string(e_total),
          zf.num_degree == f_total && zf.den_degree == e_total);
    if (gx == 1 && gy == 1)
        r.add("degrees match the abelian dimension-2 totals (8)",
              e_total == 8 && f_total == 8);
    {
        MultiPoly even_part = X.plus.retable(pt) * Y.plus.retable(pt);
        PowerSeries es = ev.alt_series(even_part, 4 + slack);
        MultiPoly even_poly = series_to_poly(es, zt, tv, 4);
        r.add("denominator splits into even-even and odd-odd factors",
              zf.denominator_arg == even_poly * qxy);
    }
    r.add("rational form reproduces the direct series through order " +
              std::to_string(zf.order),
          reproduces_series(ev, zf, P.total(), zf.order));
    r.add_fe(check_zeta_fe(zf, 2, "full zeta"));

    // The point class is neutral for the product.
    {
        Motive W = product_motive(X, point_motive());
        K0Evaluator evw(*W.ctx, engine);
        ZetaFunction zw = rational_form(evw, W.plus, W.minus);
        K0Evaluator evx(*X.ctx, engine);
        ZetaFunction zx = rational_form(evx, X.plus, X.minus);
        const VarTablePtr& wt = zw.numerator.table();
        r.add("product with the point class leaves the zeta data unchanged",
              zw.numerator == zx.numerator.retable(wt) &&
                  zw.denominator_arg == zx.denominator_arg.retable(wt));
    }
    return r;
}

VerifyReport verify_blowup(UniversalEngine& engine, int g, int codim) {
    if (g < 1 || g > 2) throw usage_error("verify_blowup: supported dimensions are 1..2");
    if (codim < 1 || codim > g)
        throw usage_error("verify_blowup: the codimension must be between 1 and the dimension");
    VerifyReport r;
    int dim_center = g - codim;
    r.title = "blow-up of an abelian class, dimension " + std::to_string(g) +
              ", codimension " + std::to_string(codim) +
              (dim_center == 0 ? " (point center)"
                               : " (abelian center of dimension " + std::to_string(dim_center) +
                                     ")");

    Motive X = abelian_motive(g);
    Motive Y = dim_center == 0 ? point_motive() : abelian_motive(dim_center, "w1");
    Motive B = blowup_motive(X, Y, codim);
    K0Evaluator ev(*B.ctx, engine);
    ZetaFunction zb = rational_form(ev, B.plus, B.minus);
    const VarTablePtr& zt = zb.numerator.table();
    int tv = zt->var("T");
    int lv = zt->var("L");

    K0Evaluator evx(*X.ctx, engine);
    ZetaFunction zx = rational_form(evx, X.plus, X.minus);
    K0Evaluator evy(*Y.ctx, engine);
    ZetaFunction zy = rational_form(evy, Y.plus, Y.minus);

    int eb = zx.den_degree + (codim - 1) * zy.den_degree;
    int fb = zx.num_degree + (codim - 1) * zy.num_degree;
    r.add("degrees: numerator " + std::to_string(zx.num_degree) + "+" +
              std::to_string(codim - 1) + "*" + std::to_string(zy.num_degree) + " = " +
              std::to_string(fb) + ", denominator " + std::to_string(zx.den_degree) + "+" +
              std::to_string(codim - 1) + "*" + std::to_string(zy.den_degree) + " = " +
              std::to_string(eb),
          zb.num_degree == fb && zb.den_degree == eb);

    // Both sides factor into the base and the L^i-twisted center parts.
    MultiPoly expected_num = zx.numerator.retable(zt);
    MultiPoly expected_den = zx.denominator_arg.retable(zt);
    for (int i = 1; i <= codim - 1; ++i) {
        MultiPoly twist = lt_monomial(zt, lv, tv, i, 1);
        expected_num = expected_num * zy.numerator.retable(zt).substitute(tv, twist);
        expected_den = expected_den * zy.denominator_arg.retable(zt).substitute(tv, twist);
    }
    r.add("numerator gains the twisted center factors", zb.numerator == expected_num);
    r.add("denominator gains the twisted center factors", zb.denominator_arg == expected_den);

    r.add_fe(check_fe(zb.denominator_arg, g, eb, "denominator"));
    r.add_fe(check_fe(zb.numerator, g, fb, "numerator"));
    r.add_fe(check_zeta_fe(zb, g, "full zeta"));
    return r;
}

VerifyReport verify_special_structure(UniversalEngine& engine, int part_max, int comp_max) {
    if (part_max < 1 || part_max > 4)
        throw usage_error("verify_special_structure: partition weight range is 1..4");
    if (comp_max < 1 || comp_max > 12)
        throw usage_error("verify_special_structure: composition range is 1..12");
    VerifyReport r;
    r.title = "alternating-operation calculus";

    // lambda_t(a*b) has coefficients P_r(lambda(a); lambda(b)).
    const int order = 4;
    std::vector<Partition> shapes;
    for (int w = 1; w <= part_max; ++w)
        for (const Partition& p : partitions_of(w)) shapes.push_back(p);
    bool mult_ok = true;
    std::string mult_detail;
    int pair_count = 0;
    for (const Partition& mu : shapes) {
        SymFunc a = SymFunc::basis_element(Basis::S, mu);
        std::vector<SymFunc> la(static_cast<std::size_t>(order) + 1);
        for (int i = 1; i <= order; ++i) la[static_cast<std::size_t>(i)] =
            plethysm(SymFunc::generator(Basis::E, i), a);
        for (const Partition& nu : shapes) {
            SymFunc b = SymFunc::basis_element(Basis::S, nu);
            SymFunc prod = a * b;
            std::vector<SymFunc> lb(static_cast<std::size_t>(order) + 1);
            for (int j = 1; j <= order; ++j) lb[static_cast<std::size_t>(j)] =
                plethysm(SymFunc::generator(Basis::E, j), b);
            for (int n = 1; n <= order; ++n) {
                SymFunc lhs = plethysm(SymFunc::generator(Basis::E, n), prod);
                std::vector<SymFunc> vals(static_cast<std::size_t>(2 * n));
                for (int i = 1; i <= n; ++i) {
                    vals[static_cast<std::size_t>(i - 1)] = la[static_cast<std::size_t>(i)];
                    vals[static_cast<std::size_t>(n + i - 1)] = lb[static_cast<std::size_t>(i)];
                }
                if (!(lhs == evaluate_symfunc(engine.P(n), vals))) {
                    mult_ok = false;
                    if (mult_detail.empty())
                        mult_detail = "fails at " + mu.render() + " * " + nu.render() +
                                      ", order " + std::to_string(n);
                }
            }
            ++pair_count;
        }
    }
    r.add("alternating series multiplicative on Schur products (" +
              std::to_string(pair_count) + " pairs, order " + std::to_string(order) + ")",
          mult_ok, mult_detail);

    // Composition: e_m[e_n] equals the universal composition polynomial.
    bool comp_ok = true;
    std::string comp_detail;
    int comp_count = 0;
    for (int m = 1; m <= comp_max; ++m) {
        for (int n = 1; m * n <= comp_max; ++n) {
            SymFunc lhs = plethysm(SymFunc::generator(Basis::E, m),
                                   SymFunc::generator(Basis::E, n));
            std::vector<SymFunc> vals(static_cast<std::size_t>(m * n));
            for (int k = 1; k <= m * n; ++k)
                vals[static_cast<std::size_t>(k - 1)] = SymFunc::generator(Basis::E, k);
            if (!(lhs == evaluate_symfunc(engine.Pnr(m, n), vals))) {
                comp_ok = false;
                if (comp_detail.empty())
                    comp_detail = "fails at (" + std::to_string(m) + ", " + std::to_string(n) + ")";
            }
            ++comp_count;
        }
    }
    r.add("composition rule for nested alternating powers (" + std::to_string(comp_count) +
              " pairs, degree <= " + std::to_string(comp_max) + ")",
          comp_ok, comp_detail);
    return r;
}

VerifyReport verify_parity(UniversalEngine& engine, int comp_max) {
    if (comp_max < 1 || comp_max > 12)
        throw usage_error("verify_parity: composition range is 1..12");
    VerifyReport r;
    r.title = "parity rules for nested operations";

    bool odd_ok = true;
    bool even_ok = true;
    std::string odd_detail;
    std::string even_detail;
    int odd_count = 0;
    int even_count = 0;
    for (int m = 1; m <= comp_max; ++m) {
        for (int n = 1; m * n <= comp_max; ++n) {
            std::vector<SymFunc> vals(static_cast<std::size_t>(m * n));
            for (int k = 1; k <= m * n; ++k)
                vals[static_cast<std::size_t>(k - 1)] = SymFunc::generator(Basis::H, k);
            SymFunc rhs = evaluate_symfunc(engine.Pnr(m, n), vals);
            if (n % 2 == 1) {
                SymFunc lhs = plethysm(SymFunc::generator(Basis::H, m),
                                       SymFunc::generator(Basis::H, n));
                if (!(lhs == rhs)) {
                    odd_ok = false;
                    if (odd_detail.empty())
                        odd_detail = "fails at (" + std::to_string(m) + ", " +
                                     std::to_string(n) + ")";
                }
                ++odd_count;
            } else {
                SymFunc lhs = plethysm(SymFunc::generator(Basis::E, m),
                                       SymFunc::generator(Basis::H, n));
                if (!(lhs == rhs)) {
                    even_ok = false;
                    if (even_detail.empty())
                        even_detail = "fails at (" + std::to_string(m) + ", " +
                                      std::to_string(n) + ")";
                }
                ++even_count;
            }
        }
    }
    r.add("odd inner degree: symmetric of symmetric (" + std::to_string(odd_count) + " pairs)",
          odd_ok, odd_detail);
    r.add("even inner degree: alternating of symmetric (" + std::to_string(even_count) +
              " pairs)",
          even_ok, even_detail);
    return r;
}

VerifyReport verify_product_model(UniversalEngine& engine, int model_max, int route_max) {
    if (model_max < 1 || model_max > 6)
        throw usage_error("verify_product_model: model degree range is 1..6");
    if (route_max < 1 || route_max > 10)
        throw usage_error("verify_product_model: route order range is 1..10");
    VerifyReport r;
    r.title = "product rules";

    // Two-alphabet model: compare against the closed Cauchy-type sums.
    bool ok_ee = true, ok_hh = true, ok_he = true, ok_eh = true;
    for (int n = 1; n <= model_max; ++n) {
        SymFunc2 exy;
        SymFunc2 hxy;
        for (const Partition& lam : partitions_of(n)) {
            SymFunc2 l = SymFunc2::left(SymFunc::basis_element(Basis::S, lam));
            exy = exy + l * SymFunc2::right(SymFunc::basis_element(Basis::S, lam.conjugate()));
            hxy = hxy + l * SymFunc2::right(SymFunc::basis_element(Basis::S, lam));
        }
        const MultiPoly& pn = engine.P(n);
        auto eval_args = [&](Basis bx, Basis by) {
            std::vector<SymFunc2> vals(static_cast<std::size_t>(2 * n));
            for (int i = 1; i <= n; ++i) {
                vals[static_cast<std::size_t>(i - 1)] =
                    SymFunc2::left(SymFunc::generator(bx, i));
                vals[static_cast<std::size_t>(n + i - 1)] =
                    SymFunc2::right(SymFunc::generator(by, i));
            }
            return evaluate_symfunc2(pn, vals);
        };
        ok_ee = ok_ee && eval_args(Basis::E, Basis::E) == exy;
        ok_hh = ok_hh && eval_args(Basis::H, Basis::H) == exy;
        ok_he = ok_he && eval_args(Basis::H, Basis::E) == hxy;
        ok_eh = ok_eh && eval_args(Basis::E, Basis::H) == hxy;
    }
    std::string rng = " (degree <= " + std::to_string(model_max) + ")";
    r.add("model: alternating of a product from paired alternating arguments" + rng, ok_ee);
    r.add("model: alternating of a product from paired symmetric arguments" + rng, ok_hh);
    r.add("model: symmetric of a product, symmetric-alternating arguments" + rng, ok_he);
    r.add("model: symmetric of a product, alternating-symmetric arguments" + rng, ok_eh);

    // Route independence on a corpus of product classes.
    K0Context ctx;
    ctx.declare_atom("a", AtomKind::Minus, 2);
    ctx.declare_atom("b", AtomKind::Minus, 3);
    ctx.declare_atom("c", AtomKind::Plus, 2);
    ctx.declare_atom("d", AtomKind::Plus, 2);
    ctx.freeze();
    ctx.set_image("a", 2, ctx.lefschetz());
    MultiPoly a = ctx.atom_element("a");
    MultiPoly b = ctx.atom_element("b");
    MultiPoly c = ctx.atom_element("c");
    MultiPoly d = ctx.atom_element("d");
    MultiPoly one = ctx.constant(1);
    std::vector<MultiPoly> corpus = {
        a * c,       a * b,       c * d,           a * b * c,
        a * (one + ctx.lefschetz()),               ctx.lefschetz(-1) * c * d,
        a * c + b * d,                             (a + c) * (b + d),
    };
    K0Evaluator ev(ctx, engine);
    bool sym_ok = true;
    bool alt_ok = true;
    for (const MultiPoly& x : corpus) {
        PowerSeries s0 = ev.sym_series(x, route_max, Route::Default);
        sym_ok = sym_ok && series_agree(s0, ev.sym_series(x, route_max, Route::Mirrored), route_max) &&
                 series_agree(s0, ev.sym_series(x, route_max, Route::Opposite), route_max);
        PowerSeries a0 = ev.alt_series(x, route_max, Route::Default);
        alt_ok = alt_ok && series_agree(a0, ev.alt_series(x, route_max, Route::Mirrored), route_max) &&
                 series_agree(a0, ev.alt_series(x, route_max, Route::Opposite), route_max);
    }
    std::string crng = " (" + std::to_string(corpus.size()) + " classes, 3 routes, order " +
                       std::to_string(route_max) + ")";
    r.add("symmetric-series route independence" + crng, sym_ok);
    r.add("alternating-series route independence" + crng, alt_ok);
    return r;
}

VerifyReport verify_opposite(UniversalEngine& engine, int order) {
    if (order < 1 || order > 16) throw usage_error("verify_opposite: order range is 1..16");
    VerifyReport r;
    r.title = "mutually inverse series";

    K0Context ctx;
    ctx.declare_atom("a", AtomKind::Minus, 2);
    ctx.declare_atom("b", AtomKind::Minus, 3);
    ctx.declare_atom("c", AtomKind::Plus, 2);
    ctx.declare_atom("d", AtomKind::Plus, 1);
    ctx.declare_atom("x", AtomKind::Free);
    ctx.freeze();
    ctx.set_image("a", 2, ctx.lefschetz());
    MultiPoly a = ctx.atom_element("a");
    MultiPoly b = ctx.atom_element("b");
    MultiPoly c = ctx.atom_element("c");
    MultiPoly d = ctx.atom_element("d");
    MultiPoly x = ctx.atom_element("x");
    MultiPoly one = ctx.constant(1);
    MultiPoly lef = ctx.lefschetz();

    std::vector<MultiPoly> corpus = {
        one,
        ctx.constant(-1),
        ctx.constant(3),
        lef,
        ctx.constant(-1) * lef,
        ctx.lefschetz(-1),
        one + lef,
        lef - one,
        a,
        ctx.constant(-1) * a,
        a + a,
        b,
        c,
        ctx.constant(-1) * c,
        d,
        x,
        ctx.constant(-1) * x,
        a + c,
        a - c,
        a * c,
        a * b,
        c * d,
        a * x,
        c * x,
        lef * a,
        ctx.lefschetz(-2) * c,
        x + lef,
        a * c - x,
        ctx.symbol_element("x", 2),
        b + lef * d,
    };

    K0Evaluator ev(ctx, engine);
    bool ok = true;
    std::string detail;
    for (const MultiPoly& e : corpus) {
        PowerSeries prod = ev.sym_series(e, order) * ev.alt_series(e, order).negate_variable();
        if (!prod.is_one()) {
            ok = false;
            if (detail.empty()) detail = "fails for " + e.render();
        }
    }
    r.add("corpus size at least 20", corpus.size() >= 20,
          std::to_string(corpus.size()) + " classes");
    r.add("sym_series(x) * alt_series(x at -T) == 1 at order " + std::to_string(order), ok,
          detail);
    return r;
}

VerifyReport verify_schur_layer(UniversalEngine& engine) {
    VerifyReport r;
    r.title = "Schur layer";

    K0Context ctx;
    ctx.declare_atom("a", AtomKind::Minus, 2);
    ctx.declare_atom("c", AtomKind::Plus, 2);
    ctx.declare_atom("x", AtomKind::Free);
    ctx.freeze();
    ctx.set_image("a", 2, ctx.lefschetz());
    K0Evaluator ev(ctx, engine);
    MultiPoly a = ctx.atom_element("a");
    MultiPoly c = ctx.atom_element("c");
    MultiPoly x = ctx.atom_element("x");

    // Tensor powers decompose with standard-tableaux multiplicities.
    std::vector<MultiPoly> corpus = {a, c, x, a + c};
    bool tensor_ok = true;
    for (const MultiPoly& e : corpus) {
        for (int n = 1; n <= 4; ++n) {
            MultiPoly sum = ctx.zero();
            for (const Partition& lam : partitions_of(n))
                sum += ctx.constant(syt_count(lam)) * ev.schur(lam, e);
            tensor_ok = tensor_ok && sum == e.pow(n);
        }
    }
    r.add("tensor powers decompose by tableau counts (n <= 4)", tensor_ok);

    // Pieri: Sym^i * Alt^j splits into the two neighbouring hooks.
    bool pieri_ok = true;
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; i + j <= 5; ++j) {
            std::vector<int> head{i + 1};
            for (int k = 0; k < j - 1; ++k) head.push_back(1);
            std::vector<int> tail{i};
            for (int k = 0; k < j; ++k) tail.push_back(1);
            Partition hook_head(head);
            Partition hook_tail(tail);
            for (const MultiPoly& e : {a, c, x}) {
                MultiPoly lhs = ev.sym(i, e) * ev.alt(j, e);
                pieri_ok = pieri_ok &&
                           lhs == ev.schur(hook_head, e) + ev.schur(hook_tail, e);
            }
        }
    }
    r.add("hook splitting of Sym^i * Alt^j (i+j <= 5)", pieri_ok);

    // Twisting by a line class scales by its |lambda|-th power.
    bool twist_ok = true;
    for (int w = 1; w <= 3; ++w) {
        for (const Partition& lam : partitions_of(w)) {
            for (const MultiPoly& e : {a, c, x}) {
                MultiPoly lhs = ev.schur(lam, ctx.lefschetz() * e);
                twist_ok = twist_ok && lhs == ctx.lefschetz(w) * ev.schur(lam, e);
            }
        }
    }
    r.add("line-class twist scales Schur values (|lambda| <= 3)", twist_ok);

    // On a line class only single-row shapes survive.
    bool line_ok = true;
    for (int w = 1; w <= 3; ++w) {
        for (const Partition& lam : partitions_of(w)) {
            MultiPoly val = ev.schur(lam, ctx.lefschetz());
            if (lam.length() <= 1)
                line_ok = line_ok && val == ctx.lefschetz(w);
            else
                line_ok = line_ok && val.is_zero();
        }
    }
    r.add("single rows survive on a line class (|lambda| <= 3)", line_ok);
    return r;
}

VerifyReport verify_identities(UniversalEngine& engine, int max_weight) {
    if (max_weight < 4 || max_weight > 12)
        throw usage_error("verify_identities: weight range is 4..12");
    VerifyReport r;
    r.title = "identity battery (degree <= " + std::to_string(max_weight) + ")";
    r.splice(verify_special_structure(engine, 3, max_weight));
    r.splice(verify_parity(engine, max_weight));
    r.splice(verify_product_model(engine, 4, 6));
    r.splice(verify_opposite(engine, 10));
    r.splice(verify_schur_layer(engine));
    return r;
}

void warm_cache(UniversalEngine& engine, int g) {
    if (g < 1 || g > 2) throw usage_error("warm_cache: supported dimensions are 1..2");
    // The abelian pipeline at dimension g composes Sym^m over Sym^n for
    // n <= 2g with m up to binomial(2g, n) <= binomial(2g, g).
    int m_max = g == 1 ? 2 : 6;
    for (int n = 1; n <= 2 * g; ++n)
        for (int m = 1; m <= m_max; ++m) engine.Pnr(m, n);
}

} // namespace mzeta
