#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhall {

// Arbitrary finite sequence of nonnegative integers.
using Composition = std::vector<int>;

int weight(const Composition& mu);

// Weakly decreasing sequence of positive integers; trailing zeros are never
// stored, so the empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    // Accepts a weakly decreasing sequence, possibly with trailing zeros.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    // mu^+ : sort descending, drop zeros.
    static Partition from_composition(const Composition& mu);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const;

    // Zero-padded part access, 1-based index not used: part(i) is parts_[i]
    // for i < length() and 0 beyond.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string to_string() const;  // "3,2,1"; "-" for the empty partition

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& la);

// n(la) = sum (i-1)*la_i = sum C(la'_i, 2)
long n_stat(const Partition& la);

// For a composition: n(mu') = sum C(mu_i, 2), the form used by the
// statistics suite.
long n_stat_conjugate(const Composition& mu);

// inner subset of outer, componentwise
bool contains(const Partition& outer, const Partition& inner);

// outer/inner has at most one cell per column (resp. per row); false when
// inner is not contained in outer.
bool is_horizontal_strip(const Partition& inner, const Partition& outer);
bool is_vertical_strip(const Partition& inner, const Partition& outer);

// Multiset of hook lengths la_i + la'_j - i - j + 1 over cells (i,j),
// row-major order.
std::vector<int> hook_lengths(const Partition& la);

struct PartitionFilter {
    std::optional<int> max_length;
    std::optional<int> max_part;
    std::optional<Partition> containing;    // result must contain this
    std::optional<Partition> contained_in;  // result must fit inside this
};

// All partitions of n matching the filter, in reverse lexicographic order
// ((n) first, (1^n) last). The order is part of the CLI contract.
std::vector<Partition> partitions_of(int n, const PartitionFilter& f = {});
void for_each_partition(int n, const PartitionFilter& f,
                        const std::function<void(const Partition&)>& fn);

// All compositions of n with exactly `parts` nonnegative parts, lexicographic.
std::vector<Composition> compositions_of(int n, int parts,
                                         bool allow_zero = false);

// Compositions of n with at most max_parts positive parts.
std::vector<Composition> compositions_up_to(int n, int max_parts);

std::string to_string(const Composition& mu);

}  // namespace qhall
