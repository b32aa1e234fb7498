#include "partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace mzeta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw usage_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw usage_error("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    c.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

Partition Partition::merged(const Partition& o) const {
    std::vector<int> m;
    m.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
               std::back_inserter(m), std::greater<int>());
    return Partition(std::move(m));
}

Partition Partition::scaled(int k) const {
    if (k <= 0) throw usage_error("Partition: scale factor must be positive");
    std::vector<int> m = parts_;
    for (int& p : m) p *= k;
    return Partition(std::move(m));
}

Partition Partition::dropped_first() const {
    if (parts_.empty()) throw usage_error("Partition: no first part to drop");
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Int Partition::centralizer_order() const {
    Int z = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        int mult = static_cast<int>(j - i);
        for (int k = 0; k < mult; ++k) z *= parts_[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

std::string Partition::render() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << "]";
    return out.str();
}

Partition Partition::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (i == text.size() || text[i] != '[') throw usage_error("Partition: expected '['");
    ++i;
    std::vector<int> parts;
    skip();
    while (i < text.size() && text[i] != ']') {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw usage_error("Partition: expected part");
        parts.push_back(std::stoi(text.substr(start, i - start)));
        skip();
        if (i < text.size() && text[i] == ',') { ++i; skip(); }
    }
    if (i == text.size()) throw usage_error("Partition: expected ']'");
    ++i;
    skip();
    if (i != text.size()) throw usage_error("Partition: trailing characters");
    return Partition(std::move(parts));
}

bool Partition::operator<(const Partition& o) const {
    if (weight_ != o.weight_) return weight_ < o.weight_;
    return parts_ > o.parts_; // descending lex: [n] first
}

std::size_t Partition::hash() const {
    std::size_t h = 0x811c9dc5u;
    for (int p : parts_) h = (h ^ static_cast<std::size_t>(p)) * 0x01000193u;
    return h;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
    if (n < 0) throw usage_error("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, max_part, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n == 0 ? 1 : n); }

Int syt_count(const Partition& shape) {
    if (shape.empty()) return 1;
    Partition conj = shape.conjugate();
    Int hooks = 1;
    for (int i = 0; i < shape.length(); ++i) {
        for (int j = 0; j < shape.part(i); ++j) {
            int arm = shape.part(i) - j - 1;
            int leg = conj.part(j) - i - 1;
            hooks *= (arm + leg + 1);
        }
    }
    Int total = factorial(shape.weight());
    if (total % hooks != 0) throw domain_error("syt_count: hook product does not divide n!");
    return total / hooks;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama via first-column hook lengths (beta sets).

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& p) const {
        return p.first.hash() * 1000003u ^ p.second.hash();
    }
};

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int p = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
        if (p < 0) throw domain_error("mn_character: invalid beta set");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

Int mn_rec(const Partition& lambda, const Partition& rho);

Int mn_compute(const Partition& lambda, const Partition& rho) {
    int r = rho.part(0);
    Partition rest = rho.dropped_first();
    int l = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (l - 1 - i);
    Int acc = 0;
    for (int i = 0; i < l; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        int nb = b - r;
        if (nb < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            int v = beta[static_cast<std::size_t>(j)];
            if (v == nb) { occupied = true; break; }
            if (v > nb && v < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        Int sub = mn_rec(partition_from_beta(std::move(nbeta)), rest);
        acc += (between % 2 == 0) ? sub : -sub;
    }
    return acc;
}

std::shared_mutex mn_mutex;
std::unordered_map<std::pair<Partition, Partition>, Int, PairHash> mn_memo;

Int mn_rec(const Partition& lambda, const Partition& rho) {
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, rho);
    {
        std::shared_lock lock(mn_mutex);
        auto it = mn_memo.find(key);
        if (it != mn_memo.end()) return it->second;
    }
    Int value = mn_compute(lambda, rho);
    std::unique_lock lock(mn_mutex);
    return mn_memo.emplace(std::move(key), std::move(value)).first->second;
}

} // namespace

Int mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight())
        throw usage_error("mn_character: character argument and class must have equal weight");
    return mn_rec(lambda, rho);
}

} // namespace mzeta
