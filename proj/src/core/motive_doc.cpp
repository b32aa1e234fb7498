/// @file motive_doc.cpp
/// @brief Parsing and resolution of motive documents.

#include "motive_doc.hpp"

#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>

#include "partitions.hpp"

namespace mzeta {

namespace {

[[noreturn]] void fail_at(int line, const std::string& what) {
    throw usage_error("document line " + std::to_string(line) + ": " + what);
}

// ---------------------------------------------------------------------------
// Expressions

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { Number, Lefschetz, Atom, Symbol, SymOp, AltOp, SchurOp, Sum, Mul, Pow, Neg };
    Kind kind;
    Int number;              // Number
    std::string name;        // Atom, Symbol
    char family = 0;         // Symbol: 'S' or 'A' as written
    int index = 0;           // Symbol, SymOp, AltOp
    std::vector<int> shape;  // SchurOp
    int expo = 0;            // Pow
    std::vector<ExprPtr> kids;
    std::vector<int> signs;  // Sum
};

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// "Sym"/"Alt" followed by digits; returns the family tag or 0.
char symbol_form(const std::string& ident, int* index_out) {
    char fam = 0;
    if (ident.rfind("Sym", 0) == 0) fam = 'S';
    else if (ident.rfind("Alt", 0) == 0) fam = 'A';
    if (fam == 0 || ident.size() <= 3) return 0;
    int idx = 0;
    for (std::size_t i = 3; i < ident.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return 0;
        idx = idx * 10 + (ident[i] - '0');
        if (idx > 1000000) return 0;
    }
    *index_out = idx;
    return fam;
}

/// Recursive-descent parser over one expression.
class ExprParser {
public:
    ExprParser(std::string_view s, int line) : s_(s), line_(line) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected text '" + rest() + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;

    [[noreturn]] void fail(const std::string& what) { fail_at(line_, what); }

    std::string rest() const { return std::string(s_.substr(pos_)); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& where) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + where);
    }

    Int parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    int parse_small_int(bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ == s_.size() ||
            !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            fail("expected a name");
        while (pos_ < s_.size() && is_word_char(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    ExprPtr make(Expr::Kind k) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        return e;
    }

    ExprPtr parse_sum() {
        auto sum = make(Expr::Kind::Sum);
        int sign = accept('-') ? -1 : 1;
        sum->kids.push_back(parse_term());
        sum->signs.push_back(sign);
        for (;;) {
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else break;
            sum->kids.push_back(parse_term());
            sum->signs.push_back(sign);
        }
        if (sum->kids.size() == 1 && sum->signs[0] == 1) return std::move(sum->kids[0]);
        return sum;
    }

    ExprPtr parse_term() {
        auto mul = make(Expr::Kind::Mul);
        mul->kids.push_back(parse_factor());
        while (accept('*')) mul->kids.push_back(parse_factor());
        if (mul->kids.size() == 1) return std::move(mul->kids[0]);
        return mul;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atomic();
        if (accept('^')) {
            auto p = make(Expr::Kind::Pow);
            p->expo = parse_small_int(true);
            p->kids.push_back(std::move(base));
            return p;
        }
        return base;
    }

    ExprPtr parse_atomic() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            expect(')', "after subexpression");
            return e;
        }
        if (c == '-') {
            ++pos_;
            auto n = make(Expr::Kind::Neg);
            n->kids.push_back(parse_atomic());
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = make(Expr::Kind::Number);
            e->number = parse_number();
            return e;
        }
        std::string ident = parse_ident();
        if (peek() == '(') {
            if (ident == "sym" || ident == "alt") {
                ++pos_;
                auto e = make(ident == "sym" ? Expr::Kind::SymOp : Expr::Kind::AltOp);
                e->index = parse_small_int(false);
                expect(',', "after the operation index");
                e->kids.push_back(parse_sum());
                expect(')', "after the operation argument");
                return e;
            }
            if (ident == "schur") {
                ++pos_;
                auto e = make(Expr::Kind::SchurOp);
                expect('[', "to open the shape");
                e->shape.push_back(parse_small_int(false));
                while (accept(',')) e->shape.push_back(parse_small_int(false));
                expect(']', "to close the shape");
                for (std::size_t i = 0; i < e->shape.size(); ++i) {
                    if (e->shape[i] < 1) fail("shape rows must be positive");
                    if (i > 0 && e->shape[i] > e->shape[i - 1])
                        fail("shape rows must not increase");
                }
                expect(',', "after the shape");
                e->kids.push_back(parse_sum());
                expect(')', "after the operation argument");
                return e;
            }
            int idx = 0;
            char fam = symbol_form(ident, &idx);
            if (fam != 0) {
                ++pos_;
                auto e = make(Expr::Kind::Symbol);
                e->name = parse_ident();
                e->family = fam;
                e->index = idx;
                expect(')', "after the symbol's atom name");
                return e;
            }
            fail("unknown operation '" + ident + "'");
        }
        if (ident == "L") return make(Expr::Kind::Lefschetz);
        auto e = make(Expr::Kind::Atom);
        e->name = ident;
        return e;
    }
};

ExprPtr parse_expression(const std::string& text, int line) {
    if (text.empty()) fail_at(line, "missing expression");
    return ExprParser(text, line).run();
}

const AtomInfo* doc_find_atom(const K0Context& ctx, const std::string& name) {
    for (const AtomInfo& a : ctx.atoms())
        if (a.name == name) return &a;
    return nullptr;
}

MultiPoly eval_expr(const Expr& e, int line, const K0Context& ctx, K0Evaluator& ev) {
    switch (e.kind) {
    case Expr::Kind::Number:
        return ctx.constant(e.number);
    case Expr::Kind::Lefschetz:
        return ctx.lefschetz();
    case Expr::Kind::Atom:
        if (!doc_find_atom(ctx, e.name)) fail_at(line, "unknown atom '" + e.name + "'");
        return ctx.atom_element(e.name);
    case Expr::Kind::Symbol: {
        const AtomInfo* a = doc_find_atom(ctx, e.name);
        if (!a) fail_at(line, "unknown atom '" + e.name + "'");
        char expected = a->kind == AtomKind::Plus ? 'A' : 'S';
        if (e.family != expected)
            fail_at(line, std::string("symbol family '") + (e.family == 'S' ? "Sym" : "Alt") +
                              "' does not match the parity of atom '" + e.name + "'");
        return ctx.symbol_element(e.name, e.index);
    }
    case Expr::Kind::SymOp:
        return ev.sym(e.index, eval_expr(*e.kids[0], line, ctx, ev));
    case Expr::Kind::AltOp:
        return ev.alt(e.index, eval_expr(*e.kids[0], line, ctx, ev));
    case Expr::Kind::SchurOp:
        return ev.schur(Partition(e.shape), eval_expr(*e.kids[0], line, ctx, ev));
    case Expr::Kind::Neg:
        return ctx.constant(-1) * eval_expr(*e.kids[0], line, ctx, ev);
    case Expr::Kind::Pow:
        return eval_expr(*e.kids[0], line, ctx, ev).pow(e.expo);
    case Expr::Kind::Mul: {
        MultiPoly acc = ctx.constant(1);
        for (const ExprPtr& k : e.kids) acc = acc * eval_expr(*k, line, ctx, ev);
        return acc;
    }
    case Expr::Kind::Sum: {
        MultiPoly acc = ctx.zero();
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
            MultiPoly k = eval_expr(*e.kids[i], line, ctx, ev);
            acc = e.signs[i] > 0 ? acc + k : acc - k;
        }
        return acc;
    }
    }
    fail_at(line, "unreachable expression kind");
}

MultiPoly eval_text(const std::string& text, int line, const K0Context& ctx, K0Evaluator& ev) {
    ExprPtr ast = parse_expression(text, line);
    try {
        return eval_expr(*ast, line, ctx, ev);
    } catch (const usage_error& err) {
        std::string what = err.what();
        if (what.rfind("document line", 0) == 0) throw;
        throw usage_error("document line " + std::to_string(line) + ": " + what);
    } catch (const domain_error& err) {
        std::string what = err.what();
        if (what.rfind("document line", 0) == 0) throw;
        throw domain_error("document line " + std::to_string(line) + ": " + what);
    }
}

// ---------------------------------------------------------------------------
// Line scanning

struct LineScanner {
    std::string_view s;
    std::size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
               s[pos] != '=')
            ++pos;
        if (pos == start) fail_at(line, "unexpected end of line");
        return std::string(s.substr(start, pos - start));
    }
    int integer(const std::string& what) {
        std::string w = word();
        try {
            std::size_t used = 0;
            int v = std::stoi(w, &used);
            if (used != w.size()) throw std::invalid_argument(w);
            return v;
        } catch (const std::exception&) {
            fail_at(line, "expected " + what + ", got '" + w + "'");
        }
    }
    /// Consumes '=' and returns the raw remainder.
    std::string tail_after_equals() {
        skip_ws();
        if (pos == s.size() || s[pos] != '=') fail_at(line, "expected '='");
        ++pos;
        std::size_t start = pos;
        return std::string(s.substr(start));
    }
};

bool identifier_ok(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!is_word_char(c)) return false;
    return true;
}

} // namespace

const DocClass& ResolvedDocument::at(const std::string& name) const {
    auto it = classes.find(name);
    if (it == classes.end())
        throw usage_error("no class named '" + name + "' in the document");
    return it->second;
}

MotiveDocument MotiveDocument::parse(const std::string& text) {
    MotiveDocument doc;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    AtomSpec* current_atom = nullptr;

    auto find_class = [&](const std::string& name) -> ClassSpec& {
        for (ClassSpec& c : doc.classes_)
            if (c.name == name) return c;
        doc.classes_.push_back(ClassSpec{});
        doc.classes_.back().name = name;
        doc.classes_.back().first_line = line;
        return doc.classes_.back();
    };

    while (std::getline(in, raw)) {
        ++line;
        std::string body = raw;
        std::size_t hash = body.find('#');
        if (hash != std::string::npos) body.erase(hash);
        bool indented = !body.empty() && std::isspace(static_cast<unsigned char>(body[0]));
        LineScanner sc{body, 0, line};
        if (sc.done()) continue;

        if (indented) {
            if (!current_atom) fail_at(line, "image line outside an atom block");
            std::string kw = sc.word();
            bool want_sym = kw == "sym";
            if (!want_sym && kw != "alt")
                fail_at(line, "expected 'sym' or 'alt', got '" + kw + "'");
            bool atom_plus = current_atom->kind == AtomKind::Plus;
            if (want_sym == atom_plus)
                fail_at(line, "atom '" + current_atom->name + "' uses '" +
                                  (atom_plus ? "alt" : "sym") + "' images");
            int index = sc.integer("an image index");
            if (index < 1) fail_at(line, "image index must be positive");
            if (current_atom->kind != AtomKind::Free && index > current_atom->bound)
                fail_at(line, "image index exceeds the bound of atom '" +
                                  current_atom->name + "'");
            for (const ImageSpec& prev : current_atom->images)
                if (prev.index == index)
                    fail_at(line, "duplicate image index " + std::to_string(index));
            std::string expr = sc.tail_after_equals();
            (void)parse_expression(expr, line); // syntax check
            current_atom->images.push_back(ImageSpec{index, expr, line});
            continue;
        }

        std::string kw = sc.word();
        if (kw == "atom") {
            std::string name = sc.word();
            if (!identifier_ok(name)) fail_at(line, "bad atom name '" + name + "'");
            if (name == "L" || name == "T")
                fail_at(line, "the name '" + name + "' is reserved");
            int sym_idx = 0;
            if (symbol_form(name, &sym_idx) != 0)
                fail_at(line, "atom name '" + name + "' would shadow canonical symbols");
            for (const AtomSpec& a : doc.atoms_)
                if (a.name == name) fail_at(line, "atom '" + name + "' redeclared");
            std::string kind = sc.word();
            AtomSpec spec;
            spec.name = name;
            spec.line = line;
            spec.bound = 0;
            if (kind == "free") {
                spec.kind = AtomKind::Free;
            } else if (kind == "minus" || kind == "plus") {
                spec.kind = kind == "minus" ? AtomKind::Minus : AtomKind::Plus;
                std::string bk = sc.word();
                if (bk != "bound") fail_at(line, "expected 'bound', got '" + bk + "'");
                spec.bound = sc.integer("a bound");
                if (spec.bound < 1) fail_at(line, "bound must be positive");
            } else {
                fail_at(line, "expected 'minus', 'plus' or 'free', got '" + kind + "'");
            }
            if (!sc.done()) fail_at(line, "unexpected text after atom declaration");
            doc.atoms_.push_back(std::move(spec));
            current_atom = &doc.atoms_.back();
            continue;
        }
        current_atom = nullptr;

        if (kw == "expr" || kw == "plus" || kw == "minus") {
            std::string name = sc.word();
            if (!identifier_ok(name)) fail_at(line, "bad class name '" + name + "'");
            std::string expr = sc.tail_after_equals();
            (void)parse_expression(expr, line); // syntax check
            ClassSpec& c = find_class(name);
            std::string* slot = kw == "expr" ? &c.total : kw == "plus" ? &c.plus : &c.minus;
            int* slot_line = kw == "expr" ? &c.total_line
                                          : kw == "plus" ? &c.plus_line : &c.minus_line;
            if (!slot->empty())
                fail_at(line, "'" + kw + " " + name + "' redefined (first on line " +
                                  std::to_string(*slot_line) + ")");
            *slot = expr;
            *slot_line = line;
            continue;
        }

        if (kw == "task") {
            std::string kind = sc.word();
            if (kind != "zeta") fail_at(line, "unknown task kind '" + kind + "'");
            DocTask t;
            t.kind = kind;
            t.target = sc.word();
            t.line = line;
            while (!sc.done()) {
                std::string key = sc.word();
                if (key == "order") {
                    if (t.order >= 0) fail_at(line, "order given twice");
                    t.order = sc.integer("a series order");
                    if (t.order < 0) fail_at(line, "order must be nonnegative");
                } else if (key == "weight") {
                    if (t.weight >= 0) fail_at(line, "weight given twice");
                    t.weight = sc.integer("a reflection weight");
                    if (t.weight < 0) fail_at(line, "weight must be nonnegative");
                } else {
                    fail_at(line, "expected 'order' or 'weight', got '" + key + "'");
                }
            }
            doc.tasks_.push_back(std::move(t));
            continue;
        }

        fail_at(line, "unknown directive '" + kw + "'");
    }

    for (const DocTask& t : doc.tasks_) {
        bool found = false;
        for (const ClassSpec& c : doc.classes_)
            if (c.name == t.target) found = true;
        if (!found)
            fail_at(t.line, "task references undefined class '" + t.target + "'");
    }
    return doc;
}

MotiveDocument MotiveDocument::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read document '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("cannot read document '" + path + "'");
    return parse(buf.str());
}

ResolvedDocument MotiveDocument::resolve(UniversalEngine& engine) const {
    ResolvedDocument out;
    out.ctx = std::make_shared<K0Context>();
    for (const AtomSpec& a : atoms_) {
        try {
            if (a.kind == AtomKind::Free)
                out.ctx->declare_atom(a.name, a.kind);
            else
                out.ctx->declare_atom(a.name, a.kind, a.bound);
        } catch (const usage_error& err) {
            fail_at(a.line, err.what());
        }
    }
    out.ctx->freeze();

    {
        // Image expressions may use the evaluator; run them on a scratch
        // evaluator so nothing normalized before the images is memoized.
        K0Evaluator scratch(*out.ctx, engine);
        for (const AtomSpec& a : atoms_)
            for (const ImageSpec& im : a.images) {
                MultiPoly img = eval_text(im.text, im.line, *out.ctx, scratch);
                try {
                    out.ctx->set_image(a.name, im.index, img);
                } catch (const usage_error& err) {
                    fail_at(im.line, err.what());
                }
            }
    }

    K0Evaluator ev(*out.ctx, engine);
    for (const ClassSpec& c : classes_) {
        DocClass dc;
        dc.has_split = !c.plus.empty() || !c.minus.empty();
        dc.plus = c.plus.empty() ? out.ctx->zero() : eval_text(c.plus, c.plus_line, *out.ctx, ev);
        dc.minus =
            c.minus.empty() ? out.ctx->zero() : eval_text(c.minus, c.minus_line, *out.ctx, ev);
        if (!c.total.empty()) {
            dc.total = eval_text(c.total, c.total_line, *out.ctx, ev);
            if (dc.has_split &&
                !(out.ctx->normalize(dc.total) == out.ctx->normalize(dc.plus + dc.minus)))
                fail_at(c.total_line,
                        "plus + minus does not equal expr for '" + c.name + "'");
        } else {
            dc.total = dc.plus + dc.minus;
        }
        out.names.push_back(c.name);
        out.classes.emplace(c.name, std::move(dc));
    }
    out.tasks = tasks_;
    return out;
}

} // namespace mzeta
