/// @file universal.cpp
/// @brief Computation and caching of the universal composition polynomials.

#include "universal.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "partitions.hpp"

namespace fs = std::filesystem;

namespace mzeta {

namespace {

constexpr const char* kCacheFileName = "universal.cache";
constexpr const char* kCacheMagic = "MZETA-CACHE v1";

std::string numbered(const char* stem, int i) { return stem + std::to_string(i); }

template <typename F>
void for_each_combination(int n, int r, F&& fn) {
    if (r < 0 || r > n) return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

MultiPoly drop_above(const MultiPoly& p, int var, int max_exp) {
    PolyBuilder b(p.table());
    for (const auto& [m, c] : p.terms())
        if (m.exponent(var) <= max_exp) b.add(m, c);
    return b.build();
}

// prod over chosen index subsets S of (1 + x_S t), optionally truncated in t.
MultiPoly subset_product(const VarTablePtr& table, const std::vector<int>& xs, int tvar,
                         int subset_size, int trunc) {
    MultiPoly acc = MultiPoly::constant(table, 1);
    for_each_combination(static_cast<int>(xs.size()), subset_size, [&](const std::vector<int>& s) {
        Monomial m = Monomial::var(tvar);
        for (int i : s) m = m * Monomial::var(xs[static_cast<std::size_t>(i)]);
        acc *= MultiPoly::constant(table, 1) + MultiPoly::monomial(table, m, 1);
        if (trunc >= 0) acc = drop_above(acc, tvar, trunc);
    });
    return acc;
}

MultiPoly universal_P_product(int n) {
    auto tb = std::make_shared<VarTable>();
    std::vector<int> xs, ys;
    for (int i = 1; i <= n; ++i) xs.push_back(tb->add_var(numbered("x", i)));
    for (int j = 1; j <= n; ++j) ys.push_back(tb->add_var(numbered("y", j)));
    int u = tb->add_var("t");
    VarTablePtr table = tb;

    MultiPoly acc = MultiPoly::constant(table, 1);
    for (int xi : xs) {
        for (int yj : ys) {
            Monomial m = Monomial::var(xi) * Monomial::var(yj) * Monomial::var(u);
            acc *= MultiPoly::constant(table, 1) + MultiPoly::monomial(table, m, 1);
            acc = drop_above(acc, u, n);
        }
    }
    MultiPoly coeff = acc.coefficient_of(u, n);

    auto midtb = std::make_shared<VarTable>();
    std::vector<int> smid, ymid;
    for (int i = 1; i <= n; ++i) smid.push_back(midtb->add_var(numbered("s", i), false, i));
    for (int j = 1; j <= n; ++j) ymid.push_back(midtb->add_var(numbered("y", j)));
    VarTablePtr mid = midtb;
    MultiPoly half = elementary_reduce(coeff, xs, mid, smid);

    VarTablePtr fin = two_alphabet_table(n, n);
    std::vector<int> tfin;
    for (int j = 1; j <= n; ++j) tfin.push_back(fin->var(numbered("t", j)));
    return elementary_reduce(half, ymid, fin, tfin);
}

MultiPoly universal_P_cauchy(int n) {
    VarTablePtr table = two_alphabet_table(n, n);
    std::vector<MultiPoly> svals, tvals;
    for (int i = 1; i <= n; ++i) svals.push_back(MultiPoly::variable(table, table->var(numbered("s", i))));
    for (int j = 1; j <= n; ++j) tvals.push_back(MultiPoly::variable(table, table->var(numbered("t", j))));
    PolyBuilder acc(table);
    for (const Partition& lam : partitions_of(n)) {
        SymFunc left = SymFunc::basis_element(Basis::S, lam).to(Basis::E);
        SymFunc right = SymFunc::basis_element(Basis::S, lam.conjugate()).to(Basis::E);
        acc.add(evaluate_e_basis(left, svals, table) * evaluate_e_basis(right, tvals, table));
    }
    return acc.build();
}

MultiPoly universal_Pnr_product(int n, int r) {
    int letters = n * r;
    auto tb = std::make_shared<VarTable>();
    std::vector<int> xs;
    for (int i = 1; i <= letters; ++i) xs.push_back(tb->add_var(numbered("x", i)));
    int u = tb->add_var("t");
    VarTablePtr table = tb;

    MultiPoly acc = subset_product(table, xs, u, r, n);
    MultiPoly coeff = acc.coefficient_of(u, n);

    VarTablePtr fin = one_alphabet_table(letters);
    std::vector<int> sfin;
    for (int i = 1; i <= letters; ++i) sfin.push_back(fin->var(numbered("s", i)));
    return elementary_reduce(coeff, xs, fin, sfin);
}

MultiPoly universal_Pnr_plethysm(int n, int r) {
    int letters = n * r;
    SymFunc comp = plethysm(SymFunc::generator(Basis::E, n), SymFunc::generator(Basis::E, r)).to(Basis::E);
    VarTablePtr table = one_alphabet_table(letters);
    std::vector<MultiPoly> svals;
    for (int i = 1; i <= letters; ++i) svals.push_back(MultiPoly::variable(table, table->var(numbered("s", i))));
    return evaluate_e_basis(comp, svals, table);
}

std::vector<MultiPoly> q_generator_values(int g, const VarTablePtr& table) {
    std::vector<MultiPoly> svals;
    for (int i = 1; i <= 2 * g; ++i) svals.push_back(MultiPoly::variable(table, table->var(numbered("s", i))));
    return svals;
}

MultiPoly q_product(int g, int n) {
    int letters = 2 * g;
    auto tb = std::make_shared<VarTable>();
    std::vector<int> xs;
    for (int i = 1; i <= letters; ++i) xs.push_back(tb->add_var(numbered("x", i)));
    int u = tb->add_var("t");
    VarTablePtr table = tb;

    MultiPoly acc = subset_product(table, xs, u, n, -1);

    VarTablePtr fin = q_series_table(g);
    std::vector<int> sfin;
    for (int i = 1; i <= letters; ++i) sfin.push_back(fin->var(numbered("s", i)));
    return elementary_reduce(acc, xs, fin, sfin);
}

MultiPoly q_sum(int g, int n, const std::function<SymFunc(int)>& level) {
    VarTablePtr table = q_series_table(g);
    std::vector<MultiPoly> svals = q_generator_values(g, table);
    int tvar = table->var("t");
    Int degree = binomial(2 * g, n);
    PolyBuilder acc(table);
    for (int m = 0; degree >= m; ++m) {
        MultiPoly em = evaluate_e_basis(level(m), svals, table);
        acc.add_scaled(em, 1, Monomial::var(tvar, m));
    }
    return acc.build();
}

MultiPoly q_plethysm(int g, int n) {
    return q_sum(g, n, [&](int m) {
        if (m == 0) return SymFunc::constant(Basis::E, 1);
        SymFunc full = plethysm(SymFunc::generator(Basis::E, m), SymFunc::generator(Basis::E, n));
        return full.to(Basis::E).truncated_parts(2 * g);
    });
}

MultiPoly q_newton(int g, int n) {
    return q_sum(g, n, [&](int m) { return truncated_em_en(m, n, 2 * g); });
}

} // namespace

VarTablePtr two_alphabet_table(int n, int m) {
    auto t = std::make_shared<VarTable>();
    for (int i = 1; i <= n; ++i) t->add_var(numbered("s", i), false, i);
    for (int j = 1; j <= m; ++j) t->add_var(numbered("t", j), false, j);
    return t;
}

VarTablePtr one_alphabet_table(int n) {
    auto t = std::make_shared<VarTable>();
    for (int i = 1; i <= n; ++i) t->add_var(numbered("s", i), false, i);
    return t;
}

VarTablePtr q_series_table(int g) {
    auto t = std::make_shared<VarTable>();
    for (int i = 1; i <= 2 * g; ++i) t->add_var(numbered("s", i), false, i);
    t->add_var("t");
    return t;
}

MultiPoly universal_P(int n, PnRoute route) {
    if (n < 1) throw usage_error("universal P index must be at least 1");
    switch (route) {
        case PnRoute::Product: return universal_P_product(n);
        case PnRoute::Cauchy:
        case PnRoute::Auto: return universal_P_cauchy(n);
    }
    throw usage_error("unknown route");
}

MultiPoly universal_Pnr(int n, int r, PnrRoute route) {
    if (n < 1 || r < 1) throw usage_error("universal P indices must be at least 1");
    switch (route) {
        case PnrRoute::Product: return universal_Pnr_product(n, r);
        case PnrRoute::Plethysm:
        case PnrRoute::Auto: return universal_Pnr_plethysm(n, r);
    }
    throw usage_error("unknown route");
}

MultiPoly q_polynomial(int g, int n, QRoute route) {
    if (g < 0) throw usage_error("genus parameter must be nonnegative");
    if (n < 0 || n > 2 * g) throw usage_error("q level must lie between 0 and 2g");
    if (n == 0) {
        // Single empty subset with trivial minor: 1 + t.
        VarTablePtr table = q_series_table(g);
        return MultiPoly::constant(table, 1) + MultiPoly::variable(table, table->var("t"));
    }
    switch (route) {
        case QRoute::Product: return q_product(g, n);
        case QRoute::Plethysm: return q_plethysm(g, n);
        case QRoute::Newton: return q_newton(g, n);
        case QRoute::Auto: return (2 * g <= 4) ? q_product(g, n) : q_newton(g, n);
    }
    throw usage_error("unknown route");
}

SymFunc truncated_em_en(int m, int n, int K) {
    if (m < 0) throw usage_error("outer index must be nonnegative");
    if (n < 1) throw usage_error("inner index must be at least 1");
    if (K < 0) throw usage_error("alphabet size must be nonnegative");

    struct Chain {
        std::vector<SymFunc> e;   // E_0, E_1, ...
        std::vector<SymFunc> psi; // psi_1, psi_2, ...
    };
    static std::map<std::pair<int, int>, Chain> memo;
    static std::mutex mx;
    std::scoped_lock lock(mx);

    Chain& chain = memo[{n, K}];
    if (chain.e.empty()) chain.e.push_back(SymFunc::constant(Basis::E, 1));
    while (static_cast<int>(chain.e.size()) <= m) {
        int target = static_cast<int>(chain.e.size());
        while (static_cast<int>(chain.psi.size()) < target) {
            // psi_i = p_i composed with e_n, on a K-letter alphabet: scale the
            // power-sum expansion of e_n by i and expand each power sum in
            // the truncated e generators.
            int i = static_cast<int>(chain.psi.size()) + 1;
            SymFunc acc(Basis::E);
            for (const auto& [rho, c] : e_in_p(n).terms()) {
                SymFunc prod = SymFunc::constant(Basis::E, 1);
                for (int part : rho.parts()) prod *= p_in_e_truncated(part * i, K);
                acc += prod.scaled(c);
            }
            chain.psi.push_back(acc);
        }
        SymFunc acc(Basis::E);
        for (int i = 1; i <= target; ++i) {
            Rational c(i % 2 == 0 ? -1 : 1, target);
            acc += (chain.psi[static_cast<std::size_t>(i - 1)] * chain.e[static_cast<std::size_t>(target - i)]).scaled(c);
        }
        chain.e.push_back(acc);
    }
    return chain.e[static_cast<std::size_t>(m)];
}

std::vector<std::pair<SymFunc, SymFunc>> truncated_Pn_pairs(int n, int K1, int K2) {
    if (n < 0) throw usage_error("index must be nonnegative");
    std::vector<std::pair<SymFunc, SymFunc>> out;
    if (n == 0) {
        out.emplace_back(SymFunc::constant(Basis::E, 1), SymFunc::constant(Basis::E, 1));
        return out;
    }
    for (const Partition& lam : partitions_of(n)) {
        if (lam.length() > K1 || lam.part(0) > K2) continue; // outside the box
        SymFunc left = SymFunc::basis_element(Basis::S, lam).to(Basis::E).truncated_parts(K1);
        SymFunc right = SymFunc::basis_element(Basis::S, lam.conjugate()).to(Basis::E).truncated_parts(K2);
        if (left.is_zero() || right.is_zero()) continue;
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

MultiPoly evaluate_e_basis(const SymFunc& f, const std::vector<MultiPoly>& e_values,
                           const VarTablePtr& table) {
    if (f.basis() != Basis::E) throw usage_error("e-basis evaluation expects the E basis");
    PolyBuilder acc(table);
    for (const auto& [lam, c] : f.terms()) {
        Int ci = as_integer(c, "e-basis evaluation");
        MultiPoly term = MultiPoly::constant(table, ci);
        const auto& parts = lam.parts();
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            int part = parts[i];
            if (part > static_cast<int>(e_values.size()))
                throw usage_error("e-basis term exceeds the provided generators");
            term *= e_values[static_cast<std::size_t>(part - 1)].pow(static_cast<int>(j - i));
            i = j;
        }
        acc.add(term);
    }
    return acc.build();
}

MultiPoly elementary_reduce(const MultiPoly& f, const std::vector<int>& block_vars,
                            const VarTablePtr& target, const std::vector<int>& target_vars) {
    if (!f.bound()) throw usage_error("elementary_reduce: unbound polynomial");
    const int N = static_cast<int>(block_vars.size());
    if (N == 0) throw usage_error("elementary_reduce: empty block");
    if (static_cast<int>(target_vars.size()) != N)
        throw usage_error("elementary_reduce: need one target variable per elementary function");

    for (int i = 0; i + 1 < N; ++i)
        if (f.swap_vars(block_vars[static_cast<std::size_t>(i)], block_vars[static_cast<std::size_t>(i + 1)]) != f)
            throw usage_error("elementary_reduce: polynomial is not symmetric in the block");

    const VarTable& src = *f.table();
    std::vector<int> block_pos(src.size(), -1);
    for (int i = 0; i < N; ++i) block_pos[static_cast<std::size_t>(block_vars[static_cast<std::size_t>(i)])] = i;

    // Map the passthrough variables that actually occur, by name.
    std::vector<int> pass_map(src.size(), -1);
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [v, e] : m.factors()) {
            if (block_pos[static_cast<std::size_t>(v)] >= 0 || pass_map[static_cast<std::size_t>(v)] >= 0)
                continue;
            pass_map[static_cast<std::size_t>(v)] = target->var(src.info(v).name);
        }
    }

    // e_1..e_N of the block, expanded once.
    std::vector<MultiPoly> e_basic;
    {
        std::vector<MultiPoly> coeffs;
        coeffs.push_back(MultiPoly::constant(f.table(), 1));
        for (int j = 0; j < N; ++j) {
            MultiPoly xj = MultiPoly::variable(f.table(), block_vars[static_cast<std::size_t>(j)]);
            coeffs.emplace_back(f.table());
            for (std::size_t i = coeffs.size() - 1; i >= 1; --i) coeffs[i] += coeffs[i - 1] * xj;
        }
        e_basic.assign(coeffs.begin() + 1, coeffs.end());
    }
    std::map<std::vector<int>, MultiPoly> expansion_memo;
    auto expand = [&](const std::vector<int>& mult) -> const MultiPoly& {
        auto it = expansion_memo.find(mult);
        if (it != expansion_memo.end()) return it->second;
        MultiPoly acc = MultiPoly::constant(f.table(), 1);
        for (int i = 0; i < N; ++i)
            if (mult[static_cast<std::size_t>(i)] > 0)
                acc *= e_basic[static_cast<std::size_t>(i)].pow(mult[static_cast<std::size_t>(i)]);
        return expansion_memo.emplace(mult, std::move(acc)).first->second;
    };

    MultiPoly work = f;
    PolyBuilder out(target);
    auto block_exponents = [&](const Monomial& m) {
        std::vector<int> a(static_cast<std::size_t>(N), 0);
        for (const auto& [v, e] : m.factors()) {
            int pos = block_pos[static_cast<std::size_t>(v)];
            if (pos >= 0) a[static_cast<std::size_t>(pos)] = e;
        }
        return a;
    };

    while (!work.is_zero()) {
        // Lex-greatest block exponent vector among the terms.
        std::vector<int> lead;
        for (const auto& [m, c] : work.terms()) {
            std::vector<int> a = block_exponents(m);
            if (lead.empty() || a > lead) lead = std::move(a);
        }
        for (int i = 0; i + 1 < N; ++i)
            if (lead[static_cast<std::size_t>(i)] < lead[static_cast<std::size_t>(i + 1)])
                throw domain_error("elementary_reduce: internal ordering failure");

        // Coefficient of the leading block monomial, block variables stripped.
        PolyBuilder coeff_b(f.table());
        for (const auto& [m, c] : work.terms()) {
            if (block_exponents(m) != lead) continue;
            Monomial stripped = m;
            for (int v : block_vars) stripped = stripped.without(v);
            coeff_b.add(stripped, c);
        }
        MultiPoly coeff = coeff_b.build();

        std::vector<int> mult(static_cast<std::size_t>(N), 0);
        for (int i = 0; i < N; ++i) {
            int next = (i + 1 < N) ? lead[static_cast<std::size_t>(i + 1)] : 0;
            mult[static_cast<std::size_t>(i)] = lead[static_cast<std::size_t>(i)] - next;
        }

        work -= expand(mult) * coeff;

        // Emit coeff * prod target_vars[i]^mult[i], renaming passthroughs.
        Monomial::Factors e_factors;
        for (int i = 0; i < N; ++i)
            if (mult[static_cast<std::size_t>(i)] != 0)
                e_factors.emplace_back(target_vars[static_cast<std::size_t>(i)], mult[static_cast<std::size_t>(i)]);
        Monomial e_mono = Monomial::from_factors(e_factors);
        for (const auto& [m, c] : coeff.terms()) {
            Monomial::Factors mapped;
            for (const auto& [v, e] : m.factors()) mapped.emplace_back(pass_map[static_cast<std::size_t>(v)], e);
            out.add(Monomial::from_factors(std::move(mapped)) * e_mono, c);
        }
    }
    return out.build();
}

// --- engine -----------------------------------------------------------------

UniversalEngine::UniversalEngine() = default;

UniversalEngine::UniversalEngine(std::string cache_dir) : dir_(std::move(cache_dir)) {}

void UniversalEngine::ensure_loaded() {
    if (loaded_) return;
    if (!dir_.empty()) load(); // a damaged file keeps throwing until clear()
    loaded_ = true;
}

std::string UniversalEngine::cache_file() const {
    return dir_.empty() ? std::string() : (fs::path(dir_) / kCacheFileName).string();
}

namespace {

void validate_record_grading(const MultiPoly& poly, const std::string& kind, int n, int r) {
    for (const auto& [m, c] : poly.terms()) {
        long long s_grade = 0, t_grade = 0;
        for (const auto& [v, e] : m.factors()) {
            const VarInfo& info = poly.table()->info(v);
            long long w = static_cast<long long>(info.weight) * e;
            if (!info.name.empty() && info.name[0] == 's') s_grade += w; else t_grade += w;
        }
        bool ok = (kind == "P") ? (s_grade == n && t_grade == n)
                                : (s_grade == static_cast<long long>(n) * r && t_grade == 0);
        if (!ok)
            throw io_error("cache record " + kind + " " + std::to_string(n) +
                           (kind == "Pnr" ? " " + std::to_string(r) : "") +
                           " fails its grading check; the cache file is damaged"
                           " (run 'mzeta cache clear')");
    }
}

} // namespace

void UniversalEngine::load() {
    std::string path = cache_file();
    std::ifstream in(path);
    if (!in.is_open()) return; // no cache yet
    std::string line;
    if (!std::getline(in, line) || line != kCacheMagic)
        throw io_error("cache file " + path + " has an unrecognized header (run 'mzeta cache clear')");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream hdr(line);
        std::string kind;
        hdr >> kind;
        std::string body;
        if (!std::getline(in, body))
            throw io_error("cache file " + path + " ends mid-record (run 'mzeta cache clear')");
        try {
            if (kind == "P") {
                int n = 0;
                if (!(hdr >> n) || n < 1)
                    throw io_error("cache file " + path + " has a malformed P record (run 'mzeta cache clear')");
                MultiPoly poly = MultiPoly::parse(two_alphabet_table(n, n), body);
                validate_record_grading(poly, "P", n, 0);
                p_.insert_or_assign(n, std::move(poly));
            } else if (kind == "Pnr") {
                int n = 0, r = 0;
                if (!(hdr >> n >> r) || n < 1 || r < 1)
                    throw io_error("cache file " + path + " has a malformed Pnr record (run 'mzeta cache clear')");
                MultiPoly poly = MultiPoly::parse(one_alphabet_table(n * r), body);
                validate_record_grading(poly, "Pnr", n, r);
                pnr_.insert_or_assign({n, r}, std::move(poly));
            } else {
                throw io_error("cache file " + path + " has an unknown record kind '" + kind +
                               "' (run 'mzeta cache clear')");
            }
        } catch (const usage_error& e) {
            throw io_error("cache file " + path + " contains an unreadable record (" + e.what() +
                           "); run 'mzeta cache clear'");
        }
    }
}

void UniversalEngine::persist() const {
    if (dir_.empty()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw io_error("cannot create cache directory " + dir_ + ": " + ec.message());
    std::string path = cache_file();
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out.is_open()) throw io_error("cannot write cache file " + tmp);
        out << kCacheMagic << '\n';
        for (const auto& [n, poly] : p_) out << "P " << n << '\n' << poly.render() << "\n\n";
        for (const auto& [key, poly] : pnr_)
            out << "Pnr " << key.first << ' ' << key.second << '\n' << poly.render() << "\n\n";
        if (!out.good()) throw io_error("failed while writing cache file " + tmp);
    }
    fs::rename(tmp, path, ec);
    if (ec) throw io_error("cannot replace cache file " + path + ": " + ec.message());
}

const MultiPoly& UniversalEngine::P(int n) {
    ensure_loaded();
    auto it = p_.find(n);
    if (it != p_.end()) {
        ++hits_;
        return it->second;
    }
    ++misses_;
    MultiPoly value = universal_P(n, PnRoute::Auto);
    if (self_check_ && n <= 4) {
        if (value != universal_P(n, PnRoute::Product))
            throw domain_error("universal P routes disagree at index " + std::to_string(n));
    }
    auto [pos, inserted] = p_.emplace(n, std::move(value));
    persist();
    return pos->second;
}

const MultiPoly& UniversalEngine::Pnr(int n, int r) {
    ensure_loaded();
    auto key = std::make_pair(n, r);
    auto it = pnr_.find(key);
    if (it != pnr_.end()) {
        ++hits_;
        return it->second;
    }
    ++misses_;
    MultiPoly value = universal_Pnr(n, r, PnrRoute::Auto);
    if (self_check_ && n * r <= 6) {
        if (value != universal_Pnr(n, r, PnrRoute::Product))
            throw domain_error("universal P_{n,r} routes disagree at (" + std::to_string(n) + ", " +
                               std::to_string(r) + ")");
    }
    auto [pos, inserted] = pnr_.emplace(key, std::move(value));
    persist();
    return pos->second;
}

MultiPoly UniversalEngine::q(int g, int n) {
    MultiPoly value = q_polynomial(g, n, QRoute::Auto);
    if (self_check_ && n >= 1 && 2 * g <= 4) {
        if (value != q_polynomial(g, n, QRoute::Newton))
            throw domain_error("q-polynomial routes disagree at (" + std::to_string(g) + ", " +
                               std::to_string(n) + ")");
    }
    return value;
}

CacheStatus UniversalEngine::status() {
    ensure_loaded();
    CacheStatus st;
    st.path = cache_file();
    st.hits = hits_;
    st.misses = misses_;
    if (!st.path.empty()) {
        std::error_code ec;
        st.file_present = fs::exists(st.path, ec) && !ec;
        if (st.file_present) st.file_bytes = fs::file_size(st.path, ec);
    }
    for (const auto& [n, poly] : p_) st.p_entries.push_back(n);
    for (const auto& [key, poly] : pnr_) st.pnr_entries.push_back(key);
    return st;
}

void UniversalEngine::clear() {
    p_.clear();
    pnr_.clear();
    hits_ = misses_ = 0;
    loaded_ = true; // nothing left to load; recovers from a damaged file
    std::string path = cache_file();
    if (!path.empty()) {
        std::error_code ec;
        fs::remove(path, ec);
        if (ec) throw io_error("cannot remove cache file " + path + ": " + ec.message());
    }
}

} // namespace mzeta
