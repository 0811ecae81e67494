#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "glnq/arith.hpp"

namespace glnq {

// Weakly decreasing sequence of positive parts. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);  // sorts; rejects nonpositive parts

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    Partition conjugate() const;
    std::map<int, int> multiplicities() const;
    int multiplicity(int part) const;
    std::vector<int> partial_sums() const;  // s_i = mu_1 + ... + mu_i
    Partition scale(int d) const;
    bool distinct_parts() const;
    bool is_hook() const;

    std::string to_string() const;  // "(3,1,1)"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition hook(int n, int r);  // (n - r, 1^r)

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

// Parses "3,1,1" or "[3,1,1]"; empty string gives the empty partition.
Partition parse_partition(const std::string& text);

Int z_of(const Partition& mu);

// Symmetric group character values.
long mn_character(const Partition& lambda, const Partition& mu);
long hook_char_on_ncycle(int n, const Partition& lambda);
long char_on_near_ncycle(int n, const Partition& lambda);

// Hook characters via the explicit multiplicity formula (no border strips).
Int hook_char_explicit(int n, int r, const Partition& mu);

// Ordered k-tuples of n-cycles with product of cycle type mu.
Int stanley_count(int n, int k, const Partition& mu);
Int stanley_count_explicit(int n, int k, const Partition& mu);

}  // namespace glnq
