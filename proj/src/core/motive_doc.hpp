/// @file motive_doc.hpp
/// @brief Text documents describing atom contexts, classes and tasks.
///
/// Document format (one directive per line, '#' starts a comment):
///
///   atom NAME minus bound K      declare an atom with odd parity
///   atom NAME plus bound K       declare an atom with even parity
///   atom NAME free               declare an atom without finiteness data
///     sym I = EXPR               image of SymI(NAME)  (minus/free atoms)
///     alt I = EXPR               image of AltI(NAME)  (plus atoms)
///   expr NAME = EXPR             a named class (total)
///   plus NAME = EXPR             even part of a named class
///   minus NAME = EXPR            odd part of a named class
///   task zeta NAME [order N] [weight D]
///                                request the zeta data of a class; weight D
///                                additionally asks for the reflection check
///                                T -> 1/(L^D T) on the rational form
///
/// Indented lines attach images to the most recent atom.  When both the
/// total and a parity split are given for one name, plus + minus must equal
/// the total.  Expressions use integers, L, atom names, canonical symbols
/// (Sym2(h1), Alt3(w)), the operations sym(i, e), alt(i, e) and
/// schur([parts], e), and + - * ^ with parentheses; rendered polynomials
/// parse back to equal values.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "k0.hpp"

namespace mzeta {

/// A task line; order -1 requests the documented default, weight -1 skips
/// the reflection check.
struct DocTask {
    std::string kind;
    std::string target;
    int order = -1;
    int weight = -1;
    int line = 0;
};

/// A class evaluated on the document context.
struct DocClass {
    MultiPoly total;
    bool has_split = false;
    MultiPoly plus;
    MultiPoly minus;
};

/// A document resolved against an engine: frozen context plus classes.
struct ResolvedDocument {
    std::shared_ptr<K0Context> ctx;
    std::vector<std::string> names; // declaration order
    std::map<std::string, DocClass> classes;
    std::vector<DocTask> tasks;

    const DocClass& at(const std::string& name) const;
};

class MotiveDocument {
public:
    /// Parses and syntax-checks a document; usage errors carry line numbers.
    static MotiveDocument parse(const std::string& text);
    /// Reads the file (io error on failure) and parses it.
    static MotiveDocument parse_file(const std::string& path);

    const std::vector<DocTask>& tasks() const { return tasks_; }

    /// Builds the context, installs the images and evaluates every class.
    ResolvedDocument resolve(UniversalEngine& engine) const;

private:
    struct ImageSpec {
        int index;
        std::string text;
        int line;
    };
    struct AtomSpec {
        std::string name;
        AtomKind kind;
        int bound; // ignored for free atoms
        std::vector<ImageSpec> images;
        int line;
    };
    struct ClassSpec {
        std::string name;
        std::string total, plus, minus; // raw expression texts; empty = absent
        int total_line = 0, plus_line = 0, minus_line = 0;
        int first_line = 0;
    };

    std::vector<AtomSpec> atoms_;
    std::vector<ClassSpec> classes_;
    std::vector<DocTask> tasks_;
};

} // namespace mzeta
