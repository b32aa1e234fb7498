/// @file symfunc.cpp
/// @brief Symmetric function arithmetic, conversions and plethysm.

#include "symfunc.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <sstream>

#include "errors.hpp"

namespace mzeta {

char basis_tag(Basis b) {
    switch (b) {
        case Basis::P: return 'p';
        case Basis::E: return 'e';
        case Basis::H: return 'h';
        case Basis::S: return 's';
    }
    throw usage_error("unknown basis");
}

Basis basis_from_tag(char c) {
    switch (c) {
        case 'p': return Basis::P;
        case 'e': return Basis::E;
        case 'h': return Basis::H;
        case 's': return Basis::S;
        default: throw usage_error(std::string("unknown basis tag '") + c + "'");
    }
}

SymFunc::SymFunc(Basis b, Terms t) : basis_(b), terms_(std::move(t)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it); else ++it;
    }
}

SymFunc SymFunc::basis_element(Basis b, const Partition& lambda) {
    SymFunc f(b);
    f.terms_[lambda] = 1;
    return f;
}

SymFunc SymFunc::generator(Basis b, int n) {
    if (n < 0) throw usage_error("generator index must be nonnegative");
    if (n == 0) return constant(b, 1);
    return basis_element(b, Partition::single(n));
}

SymFunc SymFunc::constant(Basis b, const Rational& c) {
    SymFunc f(b);
    if (c != 0) f.terms_[Partition()] = c;
    return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::max_weight() const {
    int w = 0;
    for (const auto& [lam, c] : terms_) w = std::max(w, lam.weight());
    return w;
}

bool SymFunc::is_homogeneous(int* weight_out) const {
    int w = -1;
    for (const auto& [lam, c] : terms_) {
        if (w < 0) w = lam.weight();
        else if (lam.weight() != w) return false;
    }
    if (w < 0) w = 0;
    if (weight_out) *weight_out = w;
    return true;
}

bool SymFunc::is_integral() const {
    for (const auto& [lam, c] : terms_)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

void SymFunc::check_basis(const SymFunc& o) const {
    if (basis_ != o.basis_)
        throw usage_error("symmetric function operands use different bases");
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    check_basis(o);
    SymFunc r(basis_);
    r.terms_ = terms_;
    for (const auto& [lam, c] : o.terms_) {
        Rational& slot = r.terms_[lam];
        slot += c;
        if (slot == 0) r.terms_.erase(lam);
    }
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator-() const {
    SymFunc r(basis_);
    for (const auto& [lam, c] : terms_) r.terms_[lam] = -c;
    return r;
}

SymFunc SymFunc::scaled(const Rational& c) const {
    SymFunc r(basis_);
    if (c == 0) return r;
    for (const auto& [lam, k] : terms_) r.terms_[lam] = k * c;
    return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    check_basis(o);
    if (basis_ == Basis::S) {
        // Schur functions are not closed under termwise merging; route the
        // product through the multiplicative power-sum basis.
        return (to(Basis::P) * o.to(Basis::P)).to(Basis::S);
    }
    SymFunc r(basis_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            Partition m = a.merged(b);
            Rational& slot = r.terms_[m];
            slot += ca * cb;
            if (slot == 0) r.terms_.erase(m);
        }
    }
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return to(Basis::P).terms_ == o.to(Basis::P).terms_;
}

SymFunc SymFunc::truncated_weight(int w) const {
    SymFunc r(basis_);
    for (const auto& [lam, c] : terms_)
        if (lam.weight() <= w) r.terms_[lam] = c;
    return r;
}

SymFunc SymFunc::truncated_parts(int k) const {
    if (basis_ != Basis::E && basis_ != Basis::H)
        throw usage_error("part truncation applies to the e and h bases only");
    SymFunc r(basis_);
    for (const auto& [lam, c] : terms_)
        if (lam.part(0) <= k) r.terms_[lam] = c;
    return r;
}

namespace {

std::string render_rational(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

// --- memoized generator expansions ----------------------------------------

std::mutex expand_mutex;

// e_n and h_n in the power-sum basis, by the Newton recursions
//   n e_n = sum_{i=1..n} (-1)^{i-1} p_i e_{n-i},   n h_n = sum p_i h_{n-i}.
const SymFunc& eh_in_p(int n, bool elementary) {
    static std::deque<SymFunc> e_memo, h_memo;
    if (n < 0) throw usage_error("generator index must be nonnegative");
    std::scoped_lock lock(expand_mutex);
    auto& memo = elementary ? e_memo : h_memo;
    if (memo.empty()) memo.push_back(SymFunc::constant(Basis::P, 1));
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        SymFunc acc(Basis::P);
        for (int i = 1; i <= m; ++i) {
            Rational c(elementary && i % 2 == 0 ? -1 : 1, m);
            acc += (SymFunc::generator(Basis::P, i) * memo[static_cast<std::size_t>(m - i)]).scaled(c);
        }
        memo.push_back(acc);
    }
    return memo[static_cast<std::size_t>(n)];
}

// p_n as a polynomial in e_1..e_k (e_i = 0 for i > k); k < 0 means untruncated.
SymFunc p_in_e_impl(int n, int k) {
    if (n <= 0) throw usage_error("power sum index must be positive");
    std::vector<SymFunc> memo;
    memo.push_back(SymFunc::constant(Basis::E, 1)); // p_0 placeholder, unused
    for (int m = 1; m <= n; ++m) {
        SymFunc acc(Basis::E);
        int top = (k >= 0) ? std::min(m - 1, k) : m - 1;
        for (int i = 1; i <= top; ++i) {
            SymFunc term = SymFunc::generator(Basis::E, i) * memo[static_cast<std::size_t>(m - i)];
            acc += (i % 2 == 0) ? -term : term;
        }
        if (k < 0 || m <= k) {
            SymFunc lead = SymFunc::generator(Basis::E, m).scaled(m % 2 == 0 ? Rational(-m) : Rational(m));
            acc += lead;
        }
        memo.push_back(acc);
    }
    return memo.back();
}

} // namespace

const SymFunc& e_in_p(int n) { return eh_in_p(n, true); }
const SymFunc& h_in_p(int n) { return eh_in_p(n, false); }

const SymFunc& p_in_e(int n) {
    static std::deque<SymFunc> memo;
    static std::mutex m;
    if (n <= 0) throw usage_error("power sum index must be positive");
    std::scoped_lock lock(m);
    while (static_cast<int>(memo.size()) < n) memo.push_back(p_in_e_impl(static_cast<int>(memo.size()) + 1, -1));
    return memo[static_cast<std::size_t>(n - 1)];
}

const SymFunc& p_in_h(int n) {
    // omega(p_n) = (-1)^{n-1} p_n and omega(e_k) = h_k, so the h-expansion
    // of p_n is the e-expansion retagged with a global sign (-1)^{n-1}.
    static std::deque<SymFunc> memo;
    static std::mutex m;
    if (n <= 0) throw usage_error("power sum index must be positive");
    std::scoped_lock lock(m);
    while (static_cast<int>(memo.size()) < n) {
        int mm = static_cast<int>(memo.size()) + 1;
        SymFunc in_e = p_in_e_impl(mm, -1);
        SymFunc::Terms t;
        for (const auto& [lam, c] : in_e.terms()) t[lam] = (mm % 2 == 0) ? -c : c;
        memo.push_back(SymFunc(Basis::H, std::move(t)));
    }
    return memo[static_cast<std::size_t>(n - 1)];
}

SymFunc p_in_e_truncated(int n, int k) {
    if (k < 0) throw usage_error("alphabet size must be nonnegative");
    static std::map<std::pair<int, int>, SymFunc> memo;
    static std::mutex m;
    std::scoped_lock lock(m);
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, p_in_e_impl(n, k)).first;
    return it->second;
}

namespace {

SymFunc product_of_generators(Basis pivot, const Partition& lam,
                              const SymFunc& (*gen)(int)) {
    SymFunc acc = SymFunc::constant(pivot, 1);
    for (int part : lam.parts()) acc *= gen(part);
    return acc;
}

SymFunc to_power_basis(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::P: return f;
        case Basis::E: {
            SymFunc r(Basis::P);
            for (const auto& [lam, c] : f.terms())
                r += product_of_generators(Basis::P, lam, e_in_p).scaled(c);
            return r;
        }
        case Basis::H: {
            SymFunc r(Basis::P);
            for (const auto& [lam, c] : f.terms())
                r += product_of_generators(Basis::P, lam, h_in_p).scaled(c);
            return r;
        }
        case Basis::S: {
            // s_lambda = sum_rho chi^lambda(rho) / z_rho * p_rho
            SymFunc r(Basis::P);
            SymFunc::Terms t;
            for (const auto& [lam, c] : f.terms()) {
                for (const Partition& rho : partitions_of(lam.weight())) {
                    Int chi = mn_character(lam, rho);
                    if (chi == 0) continue;
                    Rational& slot = t[rho];
                    slot += c * Rational(chi, rho.centralizer_order());
                }
            }
            return SymFunc(Basis::P, std::move(t));
        }
    }
    throw usage_error("unknown basis");
}

SymFunc from_power_basis(const SymFunc& f, Basis target) {
    switch (target) {
        case Basis::P: return f;
        case Basis::E: {
            SymFunc r(Basis::E);
            for (const auto& [lam, c] : f.terms())
                r += product_of_generators(Basis::E, lam, p_in_e).scaled(c);
            return r;
        }
        case Basis::H: {
            SymFunc r(Basis::H);
            for (const auto& [lam, c] : f.terms())
                r += product_of_generators(Basis::H, lam, p_in_h).scaled(c);
            return r;
        }
        case Basis::S: {
            // <f, s_lambda> = sum_rho f_rho chi^lambda(rho); collect by weight.
            std::map<int, SymFunc::Terms> by_weight;
            for (const auto& [rho, c] : f.terms()) by_weight[rho.weight()][rho] = c;
            SymFunc::Terms out;
            for (const auto& [w, terms] : by_weight) {
                for (const Partition& lam : partitions_of(w)) {
                    Rational coeff = 0;
                    for (const auto& [rho, c] : terms) coeff += c * Rational(mn_character(lam, rho));
                    if (coeff != 0) out[lam] = coeff;
                }
            }
            return SymFunc(Basis::S, std::move(out));
        }
    }
    throw usage_error("unknown basis");
}

} // namespace

SymFunc SymFunc::to(Basis target) const {
    if (target == basis_) return *this;
    return from_power_basis(to_power_basis(*this), target);
}

std::string SymFunc::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (lam.empty()) {
            os << render_rational(mag);
            continue;
        }
        if (mag != 1) os << render_rational(mag) << '*';
        os << basis_tag(basis_) << lam.render();
    }
    return os.str();
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    SymFunc gp = to_power_basis(g);
    if (gp.coefficient(Partition()) != 0)
        throw domain_error("plethysm argument has a nonzero constant term");
    SymFunc fp = to_power_basis(f);
    // p_k[g] scales every part of every power-sum index by k; memoize per k.
    std::map<int, SymFunc> adams;
    auto adams_of = [&](int k) -> const SymFunc& {
        auto it = adams.find(k);
        if (it == adams.end()) {
            SymFunc::Terms t;
            for (const auto& [rho, c] : gp.terms()) t[rho.scaled(k)] = c;
            it = adams.emplace(k, SymFunc(Basis::P, std::move(t))).first;
        }
        return it->second;
    };
    SymFunc out(Basis::P);
    for (const auto& [rho, c] : fp.terms()) {
        SymFunc acc = SymFunc::constant(Basis::P, 1);
        for (int part : rho.parts()) acc *= adams_of(part);
        out += acc.scaled(c);
    }
    return out;
}

SymFunc omega(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::P: {
            SymFunc::Terms t;
            for (const auto& [lam, c] : f.terms())
                t[lam] = ((lam.weight() - lam.length()) % 2 == 0) ? c : -c;
            return SymFunc(Basis::P, std::move(t));
        }
        case Basis::E: return SymFunc(Basis::H, f.terms());
        case Basis::H: return SymFunc(Basis::E, f.terms());
        case Basis::S: {
            SymFunc::Terms t;
            for (const auto& [lam, c] : f.terms()) t[lam.conjugate()] = c;
            return SymFunc(Basis::S, std::move(t));
        }
    }
    throw usage_error("unknown basis");
}

Rational schur_coefficient(const SymFunc& f, const Partition& lambda) {
    SymFunc fp = to_power_basis(f);
    Rational coeff = 0;
    for (const auto& [rho, c] : fp.terms()) {
        if (rho.weight() != lambda.weight()) continue;
        coeff += c * Rational(mn_character(lambda, rho));
    }
    return coeff;
}

namespace {

// Backtracking count of Littlewood-Richardson fillings of lambda/mu with
// content nu.  Cells are visited top-to-bottom, right-to-left within a row,
// so the reverse reading word grows one letter per step and the lattice
// property can be enforced incrementally.
struct LRCounter {
    const std::vector<int>& lam;
    const std::vector<int>& mu;
    const std::vector<int>& nu;
    std::vector<std::vector<int>> fill;
    std::vector<int> used;
    Int count = 0;

    LRCounter(const std::vector<int>& l, const std::vector<int>& m, const std::vector<int>& n)
        : lam(l), mu(m), nu(n) {
        fill.resize(lam.size());
        for (std::size_t r = 0; r < lam.size(); ++r)
            fill[r].assign(static_cast<std::size_t>(lam[r]), 0);
        used.assign(nu.size() + 1, 0);
    }

    int mu_part(std::size_t r) const {
        return r < mu.size() ? mu[r] : 0;
    }

    void run(std::size_t row, int col) {
        if (row == lam.size()) {
            ++count;
            return;
        }
        if (col < mu_part(row)) {
            run(row + 1, row + 1 < lam.size() ? lam[row + 1] - 1 : 0);
            return;
        }
        for (int v = 1; v <= static_cast<int>(nu.size()); ++v) {
            if (used[static_cast<std::size_t>(v)] >= nu[static_cast<std::size_t>(v - 1)]) continue;
            if (v > 1 && used[static_cast<std::size_t>(v)] >= used[static_cast<std::size_t>(v - 1)]) continue;
            if (col + 1 < lam[row] && fill[row][static_cast<std::size_t>(col + 1)] < v) continue;
            if (row > 0 && col < lam[row - 1] && col >= mu_part(row - 1) &&
                fill[row - 1][static_cast<std::size_t>(col)] >= v)
                continue;
            fill[row][static_cast<std::size_t>(col)] = v;
            ++used[static_cast<std::size_t>(v)];
            if (col > 0) run(row, col - 1);
            else run(row + 1, row + 1 < lam.size() ? lam[row + 1] - 1 : 0);
            --used[static_cast<std::size_t>(v)];
            fill[row][static_cast<std::size_t>(col)] = 0;
        }
    }
};

} // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() != mu.weight() + nu.weight()) return 0;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return 0;
    if (nu.empty()) return 1;
    if (lambda.empty()) return 0;
    LRCounter counter(lambda.parts(), mu.parts(), nu.parts());
    counter.run(0, lambda.part(0) - 1);
    return counter.count;
}

Int kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() != mu.weight() || mu.weight() != nu.weight()) return 0;
    Rational total = 0;
    for (const Partition& rho : partitions_of(lambda.weight())) {
        Int prod = mn_character(lambda, rho) * mn_character(mu, rho) * mn_character(nu, rho);
        if (prod != 0) total += Rational(prod, rho.centralizer_order());
    }
    return as_integer(total, "Kronecker coefficient");
}

// --- SymFunc2 ---------------------------------------------------------------

SymFunc2 SymFunc2::one() {
    SymFunc2 r;
    r.terms_[{Partition(), Partition()}] = 1;
    return r;
}

SymFunc2 SymFunc2::left(const SymFunc& f) {
    SymFunc fp = f.to(Basis::P);
    SymFunc2 r;
    for (const auto& [rho, c] : fp.terms()) r.terms_[{rho, Partition()}] = c;
    return r;
}

SymFunc2 SymFunc2::right(const SymFunc& f) {
    SymFunc fp = f.to(Basis::P);
    SymFunc2 r;
    for (const auto& [rho, c] : fp.terms()) r.terms_[{Partition(), rho}] = c;
    return r;
}

SymFunc2 SymFunc2::operator+(const SymFunc2& o) const {
    SymFunc2 r;
    r.terms_ = terms_;
    for (const auto& [key, c] : o.terms_) {
        Rational& slot = r.terms_[key];
        slot += c;
        if (slot == 0) r.terms_.erase(key);
    }
    return r;
}

SymFunc2 SymFunc2::operator-(const SymFunc2& o) const { return *this + o.scaled(-1); }

SymFunc2 SymFunc2::operator*(const SymFunc2& o) const {
    SymFunc2 r;
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            Key key{a.first.merged(b.first), a.second.merged(b.second)};
            Rational& slot = r.terms_[key];
            slot += ca * cb;
            if (slot == 0) r.terms_.erase(key);
        }
    }
    return r;
}

SymFunc2 SymFunc2::scaled(const Rational& c) const {
    SymFunc2 r;
    if (c == 0) return r;
    for (const auto& [key, k] : terms_) r.terms_[key] = k * c;
    return r;
}

SymFunc2 SymFunc2::adams(int k) const {
    if (k <= 0) throw usage_error("Adams operation index must be positive");
    SymFunc2 r;
    for (const auto& [key, c] : terms_) r.terms_[{key.first.scaled(k), key.second.scaled(k)}] = c;
    return r;
}

namespace {

// Newton recursion shared by lambda and sigma operations:
//   r e_r(x) = sum_{i=1..r} (-1)^{i-1} psi^i(x) e_{r-i}(x)
//   r h_r(x) = sum_{i=1..r}            psi^i(x) h_{r-i}(x)
SymFunc2 newton_op(const SymFunc2& x, int r, bool alternating) {
    if (r < 0) throw usage_error("operation index must be nonnegative");
    std::vector<SymFunc2> memo;
    memo.push_back(SymFunc2::one());
    for (int m = 1; m <= r; ++m) {
        SymFunc2 acc;
        for (int i = 1; i <= m; ++i) {
            Rational c(alternating && i % 2 == 0 ? -1 : 1, m);
            acc = acc + (x.adams(i) * memo[static_cast<std::size_t>(m - i)]).scaled(c);
        }
        memo.push_back(acc);
    }
    return memo.back();
}

} // namespace

SymFunc2 SymFunc2::lambda_op(int r) const { return newton_op(*this, r, true); }
SymFunc2 SymFunc2::sigma_op(int r) const { return newton_op(*this, r, false); }

Rational SymFunc2::schur_schur_coefficient(const Partition& mu, const Partition& nu) const {
    Rational coeff = 0;
    for (const auto& [key, c] : terms_) {
        if (key.first.weight() != mu.weight() || key.second.weight() != nu.weight()) continue;
        Int chis = mn_character(mu, key.first) * mn_character(nu, key.second);
        if (chis != 0) coeff += c * Rational(chis);
    }
    return coeff;
}

} // namespace mzeta
