#pragma once

/// @file partitions.hpp
/// @brief Integer partitions, hook lengths, and symmetric-group characters.

#include <string>
#include <vector>

#include "ints.hpp"

namespace mzeta {

/// Weakly decreasing positive parts.  The empty partition has weight 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition single(int part) { return Partition(std::vector<int>{part}); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const;
    /// Sorted merge of parts (multiset union).
    Partition merged(const Partition& o) const;
    /// All parts multiplied by k (> 0).
    Partition scaled(int k) const;
    Partition dropped_first() const;

    /// Size of the centralizer of the conjugacy class: prod i^{m_i} m_i!.
    Int centralizer_order() const;
    /// Sign of the class: (-1)^(weight - length).
    int sign() const { return ((weight_ - length()) % 2 == 0) ? 1 : -1; }

    /// "[3,1,1]"; "[]" for the empty partition.
    std::string render() const;
    static Partition parse(const std::string& text);

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    /// Canonical order: weight ascending, then descending-lexicographic
    /// part lists first ([n] before [n-1,1] before ... before [1^n]).
    bool operator<(const Partition& o) const;

    std::size_t hash() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const { return p.hash(); }
};

/// All partitions of n, in the order [n], [n-1,1], ..., [1^n]
/// (descending lexicographic).  n = 0 yields the empty partition only.
std::vector<Partition> partitions_of(int n);

/// Partitions of n with every part <= max_part.
std::vector<Partition> partitions_of(int n, int max_part);

/// Number of standard Young tableaux of the shape (hook length formula).
Int syt_count(const Partition& shape);

/// Irreducible symmetric-group character chi^lambda evaluated on the class
/// of cycle type rho (Murnaghan-Nakayama rule, memoized, thread-safe).
Int mn_character(const Partition& lambda, const Partition& rho);

} // namespace mzeta
