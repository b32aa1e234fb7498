#include "multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mzeta {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_factors(Factors f) {
    std::sort(f.begin(), f.end());
    Monomial m;
    for (const auto& [v, e] : f) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            throw usage_error("Monomial: duplicate variable in factor list");
        m.factors_.emplace_back(v, e);
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
        if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
            r.factors_.push_back(a.factors_[i++]);
        } else if (i == a.factors_.size() || b.factors_[j].first < a.factors_[i].first) {
            r.factors_.push_back(b.factors_[j++]);
        } else {
            int e = a.factors_[i].second + b.factors_[j].second;
            if (e != 0) r.factors_.emplace_back(a.factors_[i].first, e);
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r;
    if (k == 0) return r;
    r.factors_ = factors_;
    for (auto& [v, e] : r.factors_) e *= k;
    return r;
}

Monomial Monomial::without(int v) const {
    Monomial r;
    for (const auto& f : factors_)
        if (f.first != v) r.factors_.push_back(f);
    return r;
}

int Monomial::lex_cmp(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
        int va = i < a.factors_.size() ? a.factors_[i].first : INT32_MAX;
        int vb = j < b.factors_.size() ? b.factors_[j].first : INT32_MAX;
        int v = std::min(va, vb);
        int ea = (va == v) ? a.factors_[i].second : 0;
        int eb = (vb == v) ? b.factors_[j].second : 0;
        if (ea != eb) return ea < eb ? -1 : 1;
        if (va == v) ++i;
        if (vb == v) ++j;
    }
    return 0;
}

bool term_precedes(const VarTable& t, const Monomial& a, const Monomial& b) {
    long long da = a.weighted_degree(t);
    long long db = b.weighted_degree(t);
    if (da != db) return da < db;
    return Monomial::lex_cmp(a, b) > 0; // descending lex within a grade
}

// ---------------------------------------------------------------------------
// MultiPoly

void MultiPoly::check_same_table(const MultiPoly& o) const {
    if (!bound() || !o.bound()) throw usage_error("MultiPoly: operation on unbound polynomial");
    if (!same_table(table_, o.table_)) throw usage_error("MultiPoly: mismatched variable tables");
}

void MultiPoly::validate_monomial(const Monomial& m) const {
    for (const auto& [v, e] : m.factors()) {
        const VarInfo& info = table_->info(v);
        if (e < 0 && !info.invertible)
            throw domain_error("MultiPoly: negative exponent on non-invertible variable '" + info.name + "'");
    }
}

MultiPoly MultiPoly::constant(VarTablePtr t, Int c) {
    MultiPoly p(std::move(t));
    if (c != 0) p.terms_.emplace_back(Monomial(), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr t, int var, int exp) {
    return monomial(std::move(t), Monomial::var(var, exp), 1);
}

MultiPoly MultiPoly::monomial(VarTablePtr t, const Monomial& m, Int c) {
    MultiPoly p(std::move(t));
    p.validate_monomial(m);
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
}

std::optional<long long> MultiPoly::weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    // canonical order is grade-ascending, so the last term carries the degree
    return terms_.back().first.weighted_degree(*table_);
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

int MultiPoly::min_degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(var));
    return d;
}

Int MultiPoly::coefficient(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
        if (mm == m) return c;
    return 0;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_table(o);
    MultiPoly r(table_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        bool take_a;
        if (i == terms_.size()) take_a = false;
        else if (j == o.terms_.size()) take_a = true;
        else if (terms_[i].first == o.terms_[j].first) {
            Int c = terms_[i].second + o.terms_[j].second;
            if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
            continue;
        } else {
            take_a = term_precedes(*table_, terms_[i].first, o.terms_[j].first);
        }
        if (take_a) r.terms_.push_back(terms_[i++]);
        else r.terms_.push_back(o.terms_[j++]);
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_table(o);
    if (is_zero() || o.is_zero()) return MultiPoly(table_);
    if (is_one()) return o;
    if (o.is_one()) return *this;
    PolyBuilder b(table_);
    const bool a_smaller = terms_.size() <= o.terms_.size();
    const auto& outer = a_smaller ? terms_ : o.terms_;
    const auto& inner = a_smaller ? o.terms_ : terms_;
    for (const auto& [ma, ca] : outer)
        for (const auto& [mb, cb] : inner) b.add(ma * mb, ca * cb);
    return b.build();
}

MultiPoly MultiPoly::pow(int k) const {
    if (!bound()) throw usage_error("MultiPoly: pow on unbound polynomial");
    if (k == 0) return constant(table_, 1);
    if (k < 0) {
        if (terms_.size() != 1)
            throw domain_error("MultiPoly: negative power of a non-monomial");
        const auto& [m, c] = terms_[0];
        if (!(c == 1 || c == -1))
            throw domain_error("MultiPoly: negative power requires unit coefficient");
        Monomial inv = m.pow(k);
        MultiPoly r(table_);
        r.validate_monomial(inv);
        r.terms_.emplace_back(inv, (k % 2 == 0) ? Int(1) : c);
        return r;
    }
    MultiPoly base = *this;
    MultiPoly r = constant(table_, 1);
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    check_same_table(o);
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& image) const {
    check_same_table(image);
    bool negative_use = min_degree_in(var) < 0;
    if (negative_use) {
        // inverting the image is only possible for invertible unit monomials
        if (image.terms_.size() != 1 || !(image.terms_[0].second == 1 || image.terms_[0].second == -1))
            throw domain_error("MultiPoly: substitution would invert a non-monomial image");
        for (const auto& [v, e] : image.terms_[0].first.factors())
            if (!table_->info(v).invertible)
                throw domain_error("MultiPoly: substitution would invert non-invertible variable '" +
                                   table_->info(v).name + "'");
    }
    PolyBuilder b(table_);
    std::map<int, MultiPoly> powers; // exponent -> image^exponent
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) {
            b.add(m, c);
            continue;
        }
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, image.pow(e)).first;
        b.add_scaled(it->second, c, m.without(var));
    }
    return b.build();
}

std::map<int, MultiPoly> MultiPoly::split_by(int var) const {
    std::map<int, MultiPoly> out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, MultiPoly(table_)).first;
        // direct insertion keeps canonical relative order
        it->second.terms_.emplace_back(m.without(var), c);
    }
    for (auto& [e, p] : out)
        std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
            return term_precedes(*table_, a.first, b.first);
        });
    return out;
}

MultiPoly MultiPoly::coefficient_of(int var, int exp) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) == exp) r.terms_.emplace_back(m.without(var), c);
    std::sort(r.terms_.begin(), r.terms_.end(), [&](const Term& a, const Term& b) {
        return term_precedes(*table_, a.first, b.first);
    });
    return r;
}

MultiPoly MultiPoly::swap_vars(int a, int b) const {
    if (a == b) return *this;
    PolyBuilder bld(table_);
    for (const auto& [m, c] : terms_) {
        Monomial::Factors f;
        for (const auto& [v, e] : m.factors()) f.emplace_back(v == a ? b : (v == b ? a : v), e);
        bld.add(Monomial::from_factors(std::move(f)), c);
    }
    return bld.build();
}

MultiPoly MultiPoly::retable(const VarTablePtr& target) const {
    if (!bound() || !target) throw usage_error("MultiPoly: retable requires bound tables");
    std::vector<int> remap(table_->size(), -1);
    PolyBuilder b(target);
    for (const auto& [m, c] : terms_) {
        Monomial::Factors f;
        for (const auto& [v, e] : m.factors()) {
            if (remap[static_cast<std::size_t>(v)] < 0) {
                int tv = target->find(table_->info(v).name);
                if (tv < 0)
                    throw usage_error("MultiPoly: retable target lacks variable '" + table_->info(v).name + "'");
                remap[static_cast<std::size_t>(v)] = tv;
            }
            f.emplace_back(remap[static_cast<std::size_t>(v)], e);
        }
        Monomial mm = Monomial::from_factors(std::move(f));
        MultiPoly::monomial(target, mm, 1); // validates invertibility on the target
        b.add(mm, c);
    }
    return b.build();
}

// ---------------------------------------------------------------------------
// Rendering / parsing

std::string MultiPoly::render() const {
    if (!bound()) throw usage_error("MultiPoly: render on unbound polynomial");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_unit()) {
            out << a.str();
        } else {
            bool printed = false;
            if (a != 1) {
                out << a.str();
                printed = true;
            }
            for (const auto& [v, e] : m.factors()) {
                if (printed) out << "*";
                out << table_->info(v).name;
                if (e != 1) out << "^" << e;
                printed = true;
            }
        }
    }
    return out.str();
}

namespace {

struct Parser {
    VarTablePtr table;
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw usage_error("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return Int(std::string(s.substr(start, pos - start)));
    }

    int parse_exponent() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected exponent");
        return std::stoi(std::string(s.substr(start, pos - start)));
    }

    // identifier, optionally of the symbol form Name(Inner)
    std::string parse_varname() {
        skip_ws();
        std::size_t start = pos;
        auto word_char = [&](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
        };
        if (pos == s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected variable name");
        while (pos < s.size() && word_char(s[pos])) ++pos;
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            while (pos < s.size() && word_char(s[pos])) ++pos;
            if (pos == s.size() || s[pos] != ')') fail("unterminated symbol name");
            ++pos;
        }
        return std::string(s.substr(start, pos - start));
    }

    MultiPoly parse_poly() {
        PolyBuilder b(table);
        bool expect_term = true;
        int sign = 1;
        skip_ws();
        while (!done()) {
            if (!expect_term) {
                if (accept('+')) sign = 1;
                else if (accept('-')) sign = -1;
                else fail("expected '+' or '-'");
                expect_term = true;
                continue;
            }
            if (accept('+')) continue; // leading '+'
            if (accept('-')) {
                sign = -sign;
                continue;
            }
            // term: [int ['*']] factors | int
            Int coeff = 1;
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = parse_integer();
                have_coeff = true;
            }
            Monomial::Factors factors;
            bool expect_factor = !have_coeff;
            while (true) {
                if (expect_factor || accept('*')) {
                    skip_ws();
                    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                        std::string name = parse_varname();
                        int v = table->find(name);
                        if (v < 0) fail("unknown variable '" + name + "'");
                        int e = 1;
                        if (accept('^')) e = parse_exponent();
                        factors.emplace_back(v, e);
                        expect_factor = false;
                        continue;
                    }
                    if (expect_factor) fail("expected variable");
                    fail("expected variable after '*'");
                }
                break;
            }
            Monomial m = Monomial::from_factors(std::move(factors));
            MultiPoly::monomial(table, m, 1); // invertibility validation
            b.add(m, sign < 0 ? Int(-coeff) : coeff);
            sign = 1;
            expect_term = false;
        }
        if (expect_term) fail("dangling sign or empty input");
        return b.build();
    }
};

} // namespace

MultiPoly MultiPoly::parse(VarTablePtr t, std::string_view text) {
    // canonical "0" and plain constants round through the term parser
    Parser p{std::move(t), text};
    p.skip_ws();
    if (p.done()) throw usage_error("polynomial parse error: empty input");
    return p.parse_poly();
}

// ---------------------------------------------------------------------------
// PolyBuilder

void PolyBuilder::add(const MultiPoly& p) {
    if (!same_table(table_, p.table())) throw usage_error("PolyBuilder: mismatched variable tables");
    for (const auto& [m, c] : p.terms()) add(m, c);
}

void PolyBuilder::add_scaled(const MultiPoly& p, const Int& c, const Monomial& shift) {
    if (!same_table(table_, p.table())) throw usage_error("PolyBuilder: mismatched variable tables");
    if (c == 0) return;
    for (const auto& [m, pc] : p.terms()) add(m * shift, pc * c);
}

MultiPoly PolyBuilder::build() {
    MultiPoly r(table_);
    r.terms_.reserve(acc_.size());
    for (auto& [m, c] : acc_) {
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    }
    acc_.clear();
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&](const MultiPoly::Term& a, const MultiPoly::Term& b) {
                  return term_precedes(*table_, a.first, b.first);
              });
    return r;
}

} // namespace mzeta
