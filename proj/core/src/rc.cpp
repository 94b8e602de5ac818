#include "qhall/rc.hpp"

#include "qhall/qseries.hpp"
#include "qhall/tableaux.hpp"

#include <map>
#include <stdexcept>

namespace qhall {

int total_area(const RectangleSequence& R) {
    int a = 0;
    for (const auto& r : R) {
        if (r.height <= 0 || r.width <= 0)
            throw std::invalid_argument("rectangle sides must be positive");
        a += r.height * r.width;
    }
    return a;
}

const Partition& Configuration::level(std::size_t k) const {
    static const Partition kEmpty;
    if (k == 0 || k > nu.size()) return kEmpty;
    return nu[k - 1];
}

namespace {

// Q_i(la) = sum_j min(i, la_j)
int qsum(const Partition& la, int i) {
    int s = 0;
    for (int p : la) s += std::min(i, p);
    return s;
}

// |nu^(k)| = sum_{j>k} la_j - sum_a width_a * max(height_a - k, 0)
int level_size(const Partition& la, const RectangleSequence& R, int k) {
    int s = 0;
    for (std::size_t j = static_cast<std::size_t>(k); j < la.length(); ++j)
        s += la.part(j);
    for (const auto& r : R)
        s -= r.width * std::max(r.height - k, 0);
    return s;
}

int max_height(const RectangleSequence& R) {
    int h = 0;
    for (const auto& r : R) h = std::max(h, r.height);
    return h;
}

}  // namespace

int vacancy(const Configuration& nu, const RectangleSequence& R, int k, int i) {
    if (k < 1 || i < 1) throw std::invalid_argument("vacancy: k,i >= 1");
    int p = 0;
    for (const auto& r : R)
        if (r.height == k) p += std::min(i, r.width);
    p += qsum(nu.level(static_cast<std::size_t>(k) - 1), i);
    p -= 2 * qsum(nu.level(static_cast<std::size_t>(k)), i);
    p += qsum(nu.level(static_cast<std::size_t>(k) + 1), i);
    return p;
}

long cc(const Configuration& nu, const RectangleSequence& R) {
    int kmax = std::max(static_cast<int>(nu.nu.size()) + 1, max_height(R));
    int imax = 1;
    for (const auto& p : nu.nu) imax = std::max(imax, p.part(0));
    for (const auto& r : R) imax = std::max(imax, r.width);
    long c = 0;
    for (int k = 1; k <= kmax; ++k) {
        Partition prevc = conjugate(nu.level(static_cast<std::size_t>(k) - 1));
        Partition curc = conjugate(nu.level(static_cast<std::size_t>(k)));
        for (int i = 1; i <= imax; ++i) {
            long a = prevc.part(static_cast<std::size_t>(i) - 1) -
                     curc.part(static_cast<std::size_t>(i) - 1);
            for (const auto& r : R)
                if (r.height >= k && r.width >= i) ++a;
            c += binom2(a);
        }
    }
    return c;
}

void for_each_admissible_config(const Partition& la, const RectangleSequence& R,
                                const std::function<void(const Configuration&)>& fn) {
    if (la.weight() != total_area(R))
        throw std::invalid_argument("admissible_configs: |la| != total area");
    // prescribed sizes per level; beyond the scan bound both terms vanish
    const int scan_max = static_cast<int>(la.length()) + max_height(R) + 1;
    std::vector<int> sizes;
    int last_positive = 0;
    for (int k = 1; k <= scan_max; ++k) {
        int s = level_size(la, R, k);
        if (s < 0) return;  // no admissible configuration
        sizes.push_back(s);
        if (s > 0) last_positive = k;
    }
    sizes.resize(static_cast<std::size_t>(last_positive));

    int wmax = 1;
    for (const auto& r : R) wmax = std::max(wmax, r.width);

    Configuration cfg;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == sizes.size()) {
            // vacancy numbers stabilize once i saturates every min(i, .)
            for (int kk = 1; kk <= static_cast<int>(sizes.size()); ++kk) {
                int im = wmax;
                for (int d = -1; d <= 1; ++d)
                    im = std::max(im, cfg.level(static_cast<std::size_t>(kk + d)).part(0));
                for (int i = 1; i <= im; ++i)
                    if (vacancy(cfg, R, kk, i) < 0) return;
            }
            fn(cfg);
            return;
        }
        for_each_partition(sizes[k], {}, [&](const Partition& p) {
            cfg.nu.push_back(p);
            rec(k + 1);
            cfg.nu.pop_back();
        });
    };
    rec(0);
}

std::vector<Configuration> admissible_configs(const Partition& la,
                                              const RectangleSequence& R) {
    std::vector<Configuration> out;
    for_each_admissible_config(la, R, [&](const Configuration& c) { out.push_back(c); });
    return out;
}

LaurentPoly rc_poly(const Partition& la, const RectangleSequence& R) {
    LaurentPoly r;
    for_each_admissible_config(la, R, [&](const Configuration& cfg) {
        LaurentPoly term = LaurentPoly::monomial(1, cc(cfg, R));
        int kmax = std::max(static_cast<int>(cfg.nu.size()), max_height(R));
        for (int k = 1; k <= kmax && !term.is_zero(); ++k) {
            const Partition& level = cfg.level(static_cast<std::size_t>(k));
            Partition lc = conjugate(level);
            for (int i = 1; i <= level.part(0); ++i) {
                int mi = lc.part(static_cast<std::size_t>(i) - 1) -
                         lc.part(static_cast<std::size_t>(i));
                if (mi == 0) continue;
                int p = vacancy(cfg, R, k, i);
                term *= q_binomial(p + mi, mi);
                if (term.is_zero()) break;
            }
        }
        r += term;
    });
    return r;
}

long tensor_multiplicity(const Partition& la, const RectangleSequence& R) {
    if (la.weight() != total_area(R))
        throw std::invalid_argument("tensor_multiplicity: |la| != total area");
    std::map<Partition, long> mults;
    mults[Partition()] = 1;
    int area = 0;
    for (const auto& r : R) {
        area += r.height * r.width;
        std::vector<int> rect(static_cast<std::size_t>(r.height), r.width);
        Partition rp(rect);
        std::map<Partition, long> next;
        for (const auto& [mu, c] : mults) {
            PartitionFilter f;
            f.containing = mu;
            for_each_partition(area, f, [&](const Partition& ga) {
                if (!contains(la, ga)) return;  // prune: must stay inside la
                long lr = lr_coefficient(ga, mu, rp);
                if (lr) next[ga] += c * lr;
            });
        }
        mults = std::move(next);
    }
    auto it = mults.find(la);
    return it == mults.end() ? 0 : it->second;
}

}  // namespace qhall
