/// @file k0.cpp
/// @brief K0Context and the lambda-operation evaluator.

#include "k0.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "errors.hpp"
#include "symfunc.hpp"

namespace mzeta {

namespace {

// Full engine-provided composition polynomials are used for nested
// operations up to this weight; beyond it the bound-truncated Newton chain
// takes over.
constexpr long long kNestedEngineCap = 16;
// Engine-provided P_n is used for unbounded products up to this order;
// beyond it (and whenever a finiteness bound shrinks the argument range)
// the boxed Cauchy pairs are summed directly.
constexpr int kProductEngineCap = 10;

bool valid_atom_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::string symbol_name(AtomKind kind, int index, const std::string& atom) {
    if (index == 1) return atom; // Sym^1(x) = Alt^1(x) = x: keep the declared name
    std::string op = kind == AtomKind::Plus ? "Alt" : "Sym";
    return op + std::to_string(index) + "(" + atom + ")";
}

/// Evaluates a polynomial by substituting values[v] for the variable with
/// table index v; the result lives on `out`.
MultiPoly evaluate_positional(const MultiPoly& f, const std::vector<MultiPoly>& values,
                              const VarTablePtr& out) {
    MultiPoly acc(out);
    for (const auto& [mono, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(out, c);
        bool dead = false;
        for (const auto& [v, e] : mono.factors()) {
            if (v < 0 || static_cast<std::size_t>(v) >= values.size())
                throw usage_error("positional evaluation is missing a value");
            if (values[v].is_zero()) {
                dead = true;
                break;
            }
            term *= values[v].pow(e);
        }
        if (!dead) acc += term;
    }
    return acc;
}

} // namespace

K0Context::K0Context(int symbol_limit) : symbol_limit_(symbol_limit) {
    if (symbol_limit < 1) throw usage_error("symbol limit must be positive");
}

void K0Context::declare_atom(const std::string& name, AtomKind kind, int bound) {
    if (frozen()) throw usage_error("cannot declare atoms after the context is frozen");
    if (!valid_atom_name(name)) throw usage_error("invalid atom name '" + name + "'");
    if (atom_index_.count(name)) throw usage_error("duplicate atom '" + name + "'");
    if (kind == AtomKind::Free)
        bound = symbol_limit_;
    else if (bound < 1)
        throw usage_error("finiteness bound of atom '" + name + "' must be positive");
    atom_index_[name] = static_cast<int>(atoms_.size());
    atoms_.push_back(AtomInfo{name, kind, bound, -1});
}

void K0Context::freeze() {
    if (frozen()) throw usage_error("context is already frozen");
    auto t = std::make_shared<VarTable>();
    l_var_ = t->add_var("L", true, 2);
    var_atom_.push_back(-1);
    var_index_.push_back(0);
    for (std::size_t ai = 0; ai < atoms_.size(); ++ai) {
        AtomInfo& a = atoms_[ai];
        a.first_var = static_cast<int>(var_atom_.size());
        for (int i = 1; i <= a.bound; ++i) {
            t->add_var(symbol_name(a.kind, i, a.name), false, i);
            var_atom_.push_back(static_cast<int>(ai));
            var_index_.push_back(i);
        }
    }
    table_ = t;
}

void K0Context::require_frozen() const {
    if (!frozen()) throw usage_error("context is not frozen yet");
}

const VarTablePtr& K0Context::table() const {
    require_frozen();
    return table_;
}

int K0Context::lefschetz_var() const {
    require_frozen();
    return l_var_;
}

MultiPoly K0Context::zero() const {
    return MultiPoly(table());
}

MultiPoly K0Context::constant(const Int& c) const {
    return MultiPoly::constant(table(), c);
}

MultiPoly K0Context::lefschetz(int power) const {
    return MultiPoly::variable(table(), l_var_, power);
}

MultiPoly K0Context::atom_element(const std::string& name) const {
    return symbol_element(name, 1);
}

MultiPoly K0Context::symbol_element(const std::string& name, int index) const {
    require_frozen();
    const AtomInfo* a = find_atom(name);
    if (!a) throw usage_error("unknown atom '" + name + "'");
    if (index < 0) throw usage_error("operation index must be nonnegative");
    if (index == 0) return constant(1);
    if (index > a->bound) {
        if (a->kind == AtomKind::Free)
            throw usage_error("atom '" + name + "' needs operation symbols up to index " +
                              std::to_string(index) +
                              "; construct the context with a larger symbol limit");
        return zero();
    }
    return MultiPoly::variable(table_, a->first_var + index - 1);
}

const AtomInfo* K0Context::find_atom(const std::string& name) const {
    auto it = atom_index_.find(name);
    return it == atom_index_.end() ? nullptr : &atoms_[it->second];
}

const AtomInfo& K0Context::atom_of_var(int var) const {
    require_frozen();
    if (var < 0 || static_cast<std::size_t>(var) >= var_atom_.size() || var_atom_[var] < 0)
        throw usage_error("variable is not an operation symbol");
    return atoms_[var_atom_[var]];
}

bool K0Context::is_symbol_var(int var) const {
    require_frozen();
    return var >= 0 && static_cast<std::size_t>(var) < var_atom_.size() && var_atom_[var] >= 0;
}

int K0Context::symbol_index_of_var(int var) const {
    atom_of_var(var); // validates
    return var_index_[var];
}

void K0Context::set_image(const std::string& atom, int index, const MultiPoly& image) {
    require_frozen();
    const AtomInfo* a = find_atom(atom);
    if (!a) throw usage_error("unknown atom '" + atom + "'");
    if (index < 1 || index > a->bound)
        throw usage_error("no operation symbol of index " + std::to_string(index) +
                          " on atom '" + atom + "'");
    if (!image.bound() || !image.table()->same_as(*table_))
        throw usage_error("image does not belong to this context");
    images_[a->first_var + index - 1] = image;
    normalized_.clear();
    norm_state_.clear();
}

bool K0Context::has_image(const std::string& atom, int index) const {
    require_frozen();
    const AtomInfo* a = find_atom(atom);
    if (!a || index < 1 || index > a->bound) return false;
    return images_.count(a->first_var + index - 1) > 0;
}

const MultiPoly& K0Context::image(const std::string& atom, int index) const {
    require_frozen();
    if (!has_image(atom, index))
        throw usage_error("K0Context: no image set for '" + atom + "' at index " +
                          std::to_string(index));
    const AtomInfo* a = find_atom(atom);
    return images_.at(a->first_var + index - 1);
}

const MultiPoly& K0Context::normalized_image(int var) const {
    auto done = normalized_.find(var);
    if (done != normalized_.end()) return done->second;
    int& state = norm_state_[var];
    if (state == 1)
        throw usage_error("image rewriting does not terminate: cycle through '" +
                          table_->info(var).name + "'");
    state = 1;
    MultiPoly img = normalize(images_.at(var));
    state = 2;
    return normalized_.emplace(var, std::move(img)).first->second;
}

MultiPoly K0Context::normalize(const MultiPoly& x) const {
    require_frozen();
    if (!x.bound() || !x.table()->same_as(*table_))
        throw usage_error("element does not belong to this context");
    if (images_.empty()) return x;
    std::vector<int> pending;
    for (const auto& [m, c] : x.terms())
        for (const auto& [v, e] : m.factors())
            if (images_.count(v) && std::find(pending.begin(), pending.end(), v) == pending.end())
                pending.push_back(v);
    MultiPoly out = x;
    for (int v : pending) out = out.substitute(v, normalized_image(v));
    return out;
}

std::optional<int> K0Context::monomial_parity(const Monomial& m) const {
    require_frozen();
    int sign = 1;
    for (const auto& [v, e] : m.factors()) {
        if (v == l_var_) continue;
        const AtomInfo& a = atom_of_var(v);
        if (a.kind == AtomKind::Free) return std::nullopt;
        bool odd_symbol = a.kind == AtomKind::Minus && var_index_[v] % 2 == 1;
        if (odd_symbol && e % 2 != 0) sign = -sign;
    }
    return sign;
}

std::optional<Int> K0Context::monomial_bound(const Monomial& m) const {
    require_frozen();
    Int prod = 1;
    for (const auto& [v, e] : m.factors()) {
        if (v == l_var_) continue;
        const AtomInfo& a = atom_of_var(v);
        if (a.kind == AtomKind::Free) return std::nullopt;
        Int b = binomial(a.bound, var_index_[v]);
        for (int i = 0; i < e; ++i) prod *= b;
    }
    return prod;
}

PowerSeries K0Evaluator::sym_series(const MultiPoly& x, int order, Route route) {
    return series(x, true, order, route);
}

PowerSeries K0Evaluator::alt_series(const MultiPoly& x, int order, Route route) {
    return series(x, false, order, route);
}

MultiPoly K0Evaluator::sym(int i, const MultiPoly& x, Route route) {
    if (i < 0) throw usage_error("operation index must be nonnegative");
    return sym_series(x, i, route).coeff(i);
}

MultiPoly K0Evaluator::alt(int i, const MultiPoly& x, Route route) {
    if (i < 0) throw usage_error("operation index must be nonnegative");
    return alt_series(x, i, route).coeff(i);
}

PowerSeries K0Evaluator::series(const MultiPoly& x, bool want_sym, int order, Route route) {
    if (order < 0) throw usage_error("series order must be nonnegative");
    const VarTablePtr& t = ctx_.table();
    MultiPoly nx = ctx_.normalize(x);
    if (route == Route::Opposite)
        return series(nx, !want_sym, order, Route::Default).negate_variable().invert();
    PowerSeries acc = PowerSeries::one(t, order);
    for (const auto& [m, c] : nx.terms())
        acc = acc * pow_series(monomial_series(m, want_sym, order, route), c);
    return acc;
}

PowerSeries K0Evaluator::pow_series(PowerSeries base, const Int& exponent) const {
    if (exponent == 0) return PowerSeries::one(base.table(), base.order());
    Int mag = exponent < 0 ? Int(-exponent) : exponent;
    if (mag > 1000000) throw domain_error("series exponent is too large");
    if (exponent < 0) base = base.invert();
    return base.pow(static_cast<int>(mag));
}

PowerSeries K0Evaluator::monomial_series(const Monomial& m, bool want_sym, int order,
                                         Route route) {
    const VarTablePtr& t = ctx_.table();
    int l = ctx_.lefschetz_var();
    int k = m.exponent(l);
    Monomial rest = m.without(l);

    if (rest.is_unit()) {
        // the element L^k: a line class, so Sym^i = L^{ik} and Alt^i = 0 past 1
        PowerSeries s = PowerSeries::one(t, order);
        if (want_sym) {
            for (int i = 1; i <= order; ++i) s.set_coeff(i, MultiPoly::variable(t, l, i * k));
        } else if (order >= 1) {
            s.set_coeff(1, MultiPoly::variable(t, l, k));
        }
        return s;
    }

    PowerSeries s(t, order);
    MemoKey key{rest, want_sym, static_cast<int>(route)};
    auto hit = memo_.find(key);
    if (hit != memo_.end() && hit->second.order() >= order) {
        s = hit->second.truncated(order);
    } else {
        const auto& factors = rest.factors();
        if (factors.size() == 1 && factors[0].second == 1) {
            s = symbol_series(factors[0].first, want_sym, order, route);
        } else {
            Monomial::Factors peeled = factors;
            if (peeled[0].second == 1)
                peeled.erase(peeled.begin());
            else
                peeled[0].second -= 1;
            s = product_series(factors[0].first, Monomial::from_factors(std::move(peeled)),
                               want_sym, order, route);
        }
        memo_.insert_or_assign(key, s);
    }
    if (k != 0)
        for (int i = 1; i <= order; ++i)
            s.set_coeff(i, s.coeff(i) * MultiPoly::variable(t, l, i * k));
    return s;
}

PowerSeries K0Evaluator::symbol_series(int var, bool want_sym, int order, Route route) {
    (void)route; // a single symbol has one reduction; routes differ only on products
    const VarTablePtr& t = ctx_.table();
    const AtomInfo& a = ctx_.atom_of_var(var);
    int j = ctx_.symbol_index_of_var(var);
    char family = a.kind == AtomKind::Plus ? 'A' : 'S';
    // Composition through the universal polynomials lands on the same side
    // as the inner operation for odd symmetric powers, and on the
    // alternating side otherwise.
    bool primitive_sym = family == 'S' && j % 2 == 1;

    PowerSeries prim = PowerSeries::one(t, order);
    if (j == 1) {
        for (int i = 1; i <= order; ++i)
            prim.set_coeff(i, ctx_.normalize(ctx_.symbol_element(a.name, i)));
    } else {
        for (int i = 1; i <= order; ++i) prim.set_coeff(i, nested_value(i, j, a, family));
    }
    if (primitive_sym == want_sym) return prim;
    return prim.negate_variable().invert();
}

MultiPoly K0Evaluator::nested_value(int i, int j, const AtomInfo& atom, char family) {
    (void)family; // arguments are always the atom's canonical symbols
    long long need = static_cast<long long>(i) * j;
    if (atom.kind == AtomKind::Free && need > ctx_.symbol_limit())
        throw usage_error("nested operation on atom '" + atom.name +
                          "' needs symbols up to index " + std::to_string(need) +
                          "; construct the context with a larger symbol limit");
    auto value_of = [&](int k) { return ctx_.normalize(ctx_.symbol_element(atom.name, k)); };
    if (need <= kNestedEngineCap) {
        const MultiPoly& pnr = engine_.Pnr(i, j);
        std::vector<MultiPoly> values;
        values.reserve(static_cast<std::size_t>(need));
        for (int k = 1; k <= static_cast<int>(need); ++k) values.push_back(value_of(k));
        return evaluate_positional(pnr, values, ctx_.table());
    }
    int K = atom.kind == AtomKind::Free ? static_cast<int>(need) : atom.bound;
    SymFunc expanded = truncated_em_en(i, j, K);
    std::vector<MultiPoly> values;
    values.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) values.push_back(value_of(k));
    return evaluate_e_basis(expanded, values, ctx_.table());
}

PowerSeries K0Evaluator::product_series(int var, const Monomial& rest, bool want_sym, int order,
                                        Route route) {
    const VarTablePtr& t = ctx_.table();
    Monomial xm = Monomial::var(var);

    // Pick the product identity: by default symmetric arguments on the left
    // and alternating on the right for Sym^n(xy), alternating on both sides
    // for Alt^n(xy); the mirrored route transposes each choice.
    char opx, opy;
    if (want_sym) {
        opx = route == Route::Mirrored ? 'A' : 'S';
        opy = route == Route::Mirrored ? 'S' : 'A';
    } else {
        opx = route == Route::Mirrored ? 'S' : 'A';
        opy = route == Route::Mirrored ? 'S' : 'A';
    }

    // An argument family is finite when its side is symmetric with odd
    // parity or alternating with even parity; the finiteness bound then
    // boxes the Cauchy pairs.
    auto cap = [&](char op, const Monomial& m) {
        auto parity = ctx_.monomial_parity(m);
        auto bound = ctx_.monomial_bound(m);
        if (!parity || !bound) return order;
        bool finite = op == 'S' ? *parity == -1 : *parity == 1;
        if (!finite || *bound >= order) return order;
        return static_cast<int>(*bound);
    };
    int K1 = cap(opx, xm);
    int K2 = cap(opy, rest);

    PowerSeries xs = monomial_series(xm, opx == 'S', order, route);
    PowerSeries ys = monomial_series(rest, opy == 'S', order, route);

    PowerSeries out = PowerSeries::one(t, order);
    for (int n = 1; n <= order; ++n) {
        int k1 = std::min(K1, n);
        int k2 = std::min(K2, n);
        MultiPoly cn(t);
        if (n <= kProductEngineCap && k1 >= n && k2 >= n) {
            const MultiPoly& pn = engine_.P(n);
            std::vector<MultiPoly> values;
            values.reserve(2 * static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) values.push_back(xs.coeff(i));
            for (int i = 1; i <= n; ++i) values.push_back(ys.coeff(i));
            cn = evaluate_positional(pn, values, t);
        } else {
            std::vector<MultiPoly> xvals, yvals;
            for (int i = 1; i <= k1; ++i) xvals.push_back(xs.coeff(i));
            for (int i = 1; i <= k2; ++i) yvals.push_back(ys.coeff(i));
            for (const auto& [le, ri] : truncated_Pn_pairs(n, k1, k2))
                cn += evaluate_e_basis(le, xvals, t) * evaluate_e_basis(ri, yvals, t);
        }
        out.set_coeff(n, cn);
    }
    return out;
}

MultiPoly K0Evaluator::schur(const Partition& lambda, const MultiPoly& x) {
    const VarTablePtr& t = ctx_.table();
    if (lambda.empty()) return MultiPoly::constant(t, 1);
    Partition mu = lambda.conjugate();
    int rows = mu.length();
    int max_index = mu.part(0) - 1 + rows;
    PowerSeries alts = alt_series(x, max_index);

    std::vector<std::vector<MultiPoly>> m(rows, std::vector<MultiPoly>(rows, MultiPoly(t)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            int idx = mu.part(i) - (i + 1) + (j + 1);
            if (idx == 0)
                m[i][j] = MultiPoly::constant(t, 1);
            else if (idx > 0)
                m[i][j] = alts.coeff(idx);
        }

    // determinant by expansion along rows, memoized on the remaining column set
    std::map<unsigned, MultiPoly> memo;
    std::function<MultiPoly(int, unsigned)> det = [&](int row, unsigned mask) -> MultiPoly {
        if (row == rows) return MultiPoly::constant(t, 1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        MultiPoly acc(t);
        int sign = 1;
        for (int j = 0; j < rows; ++j) {
            unsigned bit = 1u << j;
            if (!(mask & bit)) continue;
            if (!m[row][j].is_zero()) {
                MultiPoly sub = det(row + 1, mask & ~bit);
                MultiPoly contrib = m[row][j] * sub;
                acc = sign > 0 ? acc + contrib : acc - contrib;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return det(0, (1u << rows) - 1);
}

} // namespace mzeta
