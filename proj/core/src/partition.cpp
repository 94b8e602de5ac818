#include "qhall/partition.hpp"

#include <algorithm>
#include <numeric>

namespace qhall {

int weight(const Composition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_composition(const Composition& mu) {
    std::vector<int> v;
    v.reserve(mu.size());
    for (int x : mu) {
        if (x < 0) throw std::invalid_argument("negative part in composition");
        if (x > 0) v.push_back(x);
    }
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition conjugate(const Partition& la) {
    if (la.empty()) return Partition();
    std::vector<int> c(static_cast<std::size_t>(la.part(0)));
    for (std::size_t j = 0; j < c.size(); ++j) {
        int h = 0;
        for (int p : la)
            if (p >= static_cast<int>(j) + 1) ++h;
        c[j] = h;
    }
    return Partition(std::move(c));
}

long n_stat(const Partition& la) {
    long n = 0;
    for (std::size_t i = 0; i < la.length(); ++i)
        n += static_cast<long>(i) * la.part(i);
    return n;
}

long n_stat_conjugate(const Composition& mu) {
    long n = 0;
    for (int m : mu) n += static_cast<long>(m) * (m - 1) / 2;
    return n;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!contains(outer, inner)) return false;
    // at most one cell per column <=> outer_{i+1} <= inner_i
    for (std::size_t i = 0; i < outer.length(); ++i)
        if (outer.part(i + 1) > inner.part(i)) return false;
    return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
    if (!contains(outer, inner)) return false;
    for (std::size_t i = 0; i < outer.length(); ++i)
        if (outer.part(i) - inner.part(i) > 1) return false;
    return true;
}

std::vector<int> hook_lengths(const Partition& la) {
    std::vector<int> hooks;
    Partition lc = conjugate(la);
    for (std::size_t i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.part(i); ++j)
            hooks.push_back(la.part(i) + lc.part(static_cast<std::size_t>(j)) -
                            static_cast<int>(i) - j - 1);
    return hooks;
}

namespace {

void gen_rec(int n, int max_part, int depth, const PartitionFilter& f,
             std::vector<int>& cur,
             const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        Partition p(cur);
        if (f.containing && !contains(p, *f.containing)) return;
        fn(p);
        return;
    }
    if (f.max_length && depth >= *f.max_length) return;
    int hi = std::min(n, max_part);
    if (f.contained_in)
        hi = std::min(hi, f.contained_in->part(static_cast<std::size_t>(depth)));
    int lo = 1;
    if (f.containing)
        lo = std::max(lo, f.containing->part(static_cast<std::size_t>(depth)));
    // descending first part gives reverse lexicographic output order
    for (int p = hi; p >= lo; --p) {
        cur.push_back(p);
        gen_rec(n - p, p, depth + 1, f, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const PartitionFilter& f,
                        const std::function<void(const Partition&)>& fn) {
    if (n < 0) return;
    std::vector<int> cur;
    int max_part = f.max_part ? *f.max_part : n;
    gen_rec(n, max_part, 0, f, cur, fn);
}

std::vector<Partition> partitions_of(int n, const PartitionFilter& f) {
    std::vector<Partition> out;
    for_each_partition(n, f, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Composition> compositions_of(int n, int parts, bool allow_zero) {
    std::vector<Composition> out;
    if (parts == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    Composition cur(static_cast<std::size_t>(parts), 0);
    int lo = allow_zero ? 0 : 1;
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == parts) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int left = parts - idx - 1;
        for (int v = lo; v <= rem - lo * left; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, rem - v);
        }
    };
    rec(0, n);
    return out;
}

std::vector<Composition> compositions_up_to(int n, int max_parts) {
    std::vector<Composition> out;
    for (int k = 1; k <= max_parts; ++k) {
        auto cs = compositions_of(n, k, false);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

std::string to_string(const Composition& mu) {
    if (mu.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(mu[i]);
    }
    return s;
}

}  // namespace qhall
