#include "qhall/hl.hpp"

#include "qhall/qseries.hpp"
#include "qhall/tableaux.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qhall {

namespace {

// Kostka-Foulkes calls dominate every sweep; memoize on (eta, la).
const LaurentPoly& kf_cached(const Partition& eta, const Partition& la) {
    static std::map<std::pair<Partition, Partition>, LaurentPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(eta, la);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, kostka_foulkes(eta, Composition(la.parts())))
                 .first;
    return it->second;
}

long kostka_cached(const Partition& eta, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, long> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(eta, mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, kostka_number(eta, Composition(mu.parts())))
                 .first;
    return it->second;
}

void check_weights(const Partition& la, const Composition& mu,
                   const char* who) {
    if (la.weight() != weight(mu))
        throw std::invalid_argument(std::string(who) + ": weight mismatch");
}

// DFS over flags 0 = nu^(0) c nu^(1) c ... c nu^(r) = target with
// |nu^(k)| = sizes[k]; horizontal_strips additionally requires each step to
// be a horizontal strip.
void for_each_flag(const Partition& target, const std::vector<int>& sizes,
                   bool horizontal_strips,
                   const std::function<void(const std::vector<Partition>&)>& fn) {
    std::vector<Partition> flag;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == sizes.size()) {
            fn(flag);
            return;
        }
        const Partition& prev = k == 0 ? Partition() : flag[k - 1];
        PartitionFilter f;
        f.containing = prev;
        f.contained_in = target;
        for_each_partition(sizes[k], f, [&](const Partition& nu) {
            if (horizontal_strips && !is_horizontal_strip(prev, nu)) return;
            flag.push_back(nu);
            rec(k + 1);
            flag.pop_back();
        });
    };
    rec(0);
}

std::vector<int> prefix_sums(const Composition& mu) {
    std::vector<int> s;
    int acc = 0;
    for (int m : mu) {
        if (m < 0) throw std::invalid_argument("negative composition part");
        acc += m;
        s.push_back(acc);
    }
    return s;
}

LaurentPoly p_flag_term(const std::vector<Partition>& flag) {
    const std::size_t r = flag.size();
    long c = 0;
    for (std::size_t k = 0; k < r; ++k) {
        const Partition& hi = flag[k];
        const Partition& lo = k == 0 ? Partition() : flag[k - 1];
        for (std::size_t i = 0; i < hi.length(); ++i)
            c += binom2(hi.part(i) - lo.part(i));
    }
    LaurentPoly term = LaurentPoly::monomial(1, c);
    for (std::size_t k = 0; k + 1 < r; ++k) {
        const Partition& lo = flag[k];
        const Partition& hi = flag[k + 1];
        for (std::size_t i = 0; i < hi.length(); ++i)
            term *= q_binomial(hi.part(i) - lo.part(i + 1),
                               lo.part(i) - lo.part(i + 1));
    }
    return term;
}

LaurentPoly r_flag_term(const std::vector<Partition>& flag) {
    const std::size_t r = flag.size();
    LaurentPoly term = LaurentPoly::one();
    for (std::size_t k = 0; k + 1 < r; ++k) {
        const Partition& lo = flag[k];
        const Partition& hi = flag[k + 1];
        for (std::size_t i = 0; i < hi.length(); ++i)
            term *= q_binomial(hi.part(i) - hi.part(i + 1),
                               lo.part(i) - hi.part(i + 1));
    }
    return term;
}

}  // namespace

LaurentPoly p_poly_def(const Partition& la, const Composition& mu) {
    check_weights(la, mu, "p_poly_def");
    Partition mup = Partition::from_composition(mu);
    LaurentPoly r;
    for (const Partition& eta : partitions_of(la.weight())) {
        long k = kostka_cached(eta, mup);
        if (k == 0) continue;
        r += kf_cached(eta, la) * LaurentPoly::monomial(k, 0);
    }
    return r;
}

std::vector<FermionicTerm> p_fermionic_terms(const Partition& la,
                                             const Composition& mu) {
    check_weights(la, mu, "p_poly_fermionic");
    std::vector<FermionicTerm> out;
    for_each_flag(conjugate(la), prefix_sums(mu), false,
                  [&](const std::vector<Partition>& flag) {
                      out.push_back({flag, p_flag_term(flag)});
                  });
    return out;
}

LaurentPoly p_poly_fermionic(const Partition& la, const Composition& mu) {
    check_weights(la, mu, "p_poly_fermionic");
    LaurentPoly r;
    for_each_flag(conjugate(la), prefix_sums(mu), false,
                  [&](const std::vector<Partition>& flag) { r += p_flag_term(flag); });
    return r;
}

LaurentPoly r_poly_def(const Partition& la, const Composition& mu) {
    check_weights(la, mu, "r_poly_def");
    Partition mup = Partition::from_composition(mu);
    LaurentPoly r;
    for (const Partition& eta : partitions_of(la.weight())) {
        long k = kostka_cached(eta, mup);
        if (k == 0) continue;
        r += kf_cached(conjugate(eta), la) * LaurentPoly::monomial(k, 0);
    }
    return r;
}

std::vector<FermionicTerm> r_fermionic_terms(const Partition& la,
                                             const Composition& mu) {
    check_weights(la, mu, "r_poly_fermionic");
    std::vector<FermionicTerm> out;
    for_each_flag(conjugate(la), prefix_sums(mu), true,
                  [&](const std::vector<Partition>& flag) {
                      out.push_back({flag, r_flag_term(flag)});
                  });
    return out;
}

LaurentPoly r_poly_fermionic(const Partition& la, const Composition& mu) {
    check_weights(la, mu, "r_poly_fermionic");
    LaurentPoly r;
    for_each_flag(conjugate(la), prefix_sums(mu), true,
                  [&](const std::vector<Partition>& flag) { r += r_flag_term(flag); });
    return r;
}

ExpansionMap qprime_monomial_expansion(const Partition& la) {
    ExpansionMap m;
    for (const Partition& mu : partitions_of(la.weight())) {
        LaurentPoly c = p_poly_def(la, Composition(mu.parts()));
        if (!c.is_zero()) m.emplace(mu, std::move(c));
    }
    return m;
}

ExpansionMap qprime_schur_expansion(const Partition& la) {
    ExpansionMap m;
    for (const Partition& eta : partitions_of(la.weight())) {
        LaurentPoly c = kf_cached(eta, la);
        if (!c.is_zero()) m.emplace(eta, std::move(c));
    }
    return m;
}

LaurentPoly pieri_e_coeff(const Partition& la, const Partition& mu, int m) {
    if (la.weight() - mu.weight() != m || !is_vertical_strip(mu, la))
        return LaurentPoly::zero();
    Partition lc = conjugate(la);
    Partition mc = conjugate(mu);
    LaurentPoly r = LaurentPoly::one();
    for (std::size_t i = 0; i < lc.length(); ++i)
        r *= q_binomial(lc.part(i) - lc.part(i + 1), lc.part(i) - mc.part(i));
    return r;
}

LaurentPoly pieri_h_coeff(const Partition& la, const Partition& mu) {
    if (!contains(la, mu)) return LaurentPoly::zero();
    Partition lc = conjugate(la);
    Partition mc = conjugate(mu);
    long e = 0;
    for (std::size_t i = 0; i < lc.length(); ++i)
        e += binom2(lc.part(i) - mc.part(i));
    LaurentPoly r = LaurentPoly::monomial(1, e);
    for (std::size_t i = 0; i < lc.length(); ++i)
        r *= q_binomial(lc.part(i) - mc.part(i + 1), lc.part(i) - mc.part(i));
    return r;
}

namespace {

// Partitions of n sorted so that dominance implies "comes earlier"; the
// Kostka-Foulkes matrix is then unitriangular and inverts by back
// substitution. Cached per weight.
struct KFBlock {
    std::vector<Partition> parts;            // descending lex
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<LaurentPoly>> kf;   // kf[i][j] = K_{p_i,p_j}(t)
    std::vector<std::vector<LaurentPoly>> inv;  // matrix inverse
};

const KFBlock& kf_block(int n) {
    static std::map<int, KFBlock> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    KFBlock b;
    b.parts = partitions_of(n);  // reverse lex: (n) first
    const std::size_t s = b.parts.size();
    for (std::size_t i = 0; i < s; ++i) b.index[b.parts[i]] = i;
    b.kf.assign(s, std::vector<LaurentPoly>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i; j < s; ++j)
            b.kf[i][j] = kf_cached(b.parts[i], b.parts[j]);
    b.inv.assign(s, std::vector<LaurentPoly>(s));
    for (std::size_t i = 0; i < s; ++i) {
        b.inv[i][i] = LaurentPoly::one();
        for (std::size_t j = i + 1; j < s; ++j) {
            LaurentPoly acc;
            for (std::size_t k = i; k < j; ++k)
                acc += b.inv[i][k] * b.kf[k][j];
            b.inv[i][j] = -acc;
        }
    }
    return cache.emplace(n, std::move(b)).first->second;
}

}  // namespace

ExpansionMap hl_in_schur(const Partition& mu) {
    const KFBlock& b = kf_block(mu.weight());
    std::size_t row = b.index.at(mu);
    // From s = K P it follows that P_mu = sum_i (K^{-1})[mu][i] s_{p_i}.
    ExpansionMap out;
    for (std::size_t i = 0; i < b.parts.size(); ++i) {
        const LaurentPoly& c = b.inv[row][i];
        if (!c.is_zero()) out.emplace(b.parts[i], c);
    }
    return out;
}

LaurentPoly hl_structure_constant(const Partition& mu, const Partition& nu,
                                  const Partition& la) {
    if (mu.weight() + nu.weight() != la.weight())
        throw std::invalid_argument("hl_structure_constant: weight mismatch");
    ExpansionMap pm = hl_in_schur(mu);
    ExpansionMap pn = hl_in_schur(nu);
    LaurentPoly r;
    for (const auto& [al, ca] : pm) {
        for (const auto& [be, cb] : pn) {
            // s_al * s_be = sum_ga c^{ga}_{al,be} s_ga; only ga with
            // K_{ga,la}(t) != 0 contribute.
            LaurentPoly cab = ca * cb;
            if (cab.is_zero()) continue;
            for (const Partition& ga : partitions_of(la.weight())) {
                long c = lr_coefficient(ga, al, be);
                if (c == 0) continue;
                const LaurentPoly& k = kf_cached(ga, la);
                if (k.is_zero()) continue;
                r += cab * k * LaurentPoly::monomial(c, 0);
            }
        }
    }
    return r;
}

LaurentPoly mixed_coeff(const Partition& mu, const Partition& nu,
                        const Partition& la) {
    if (mu.weight() + nu.weight() != la.weight())
        throw std::invalid_argument("mixed_coeff: weight mismatch");
    LaurentPoly r;
    for (const Partition& ka : partitions_of(nu.weight())) {
        const LaurentPoly& k = kf_cached(nu, ka);
        if (k.is_zero()) continue;
        r += k * hl_structure_constant(mu, ka, la);
    }
    return r;
}

LaurentPoly t_multinomial(const Partition& la, const Composition& mu) {
    check_weights(la, mu, "t_multinomial");
    Partition mup = Partition::from_composition(mu);
    LaurentPoly r;
    for (const Partition& eta : partitions_of(la.weight())) {
        long k = kostka_cached(eta, mup);
        if (k == 0) continue;
        r += cocharge_kf(eta, la) * LaurentPoly::monomial(k, 0);
    }
    return r;
}

LaurentPoly supernomial(const std::vector<int>& L, int twice_a) {
    const int k = static_cast<int>(L.size());
    for (int l : L)
        if (l < 0) throw std::invalid_argument("supernomial: negative L entry");
    // la' is the suffix-sum sequence of L
    std::vector<int> lc(L.size());
    int acc = 0;
    for (int i = k - 1; i >= 0; --i) {
        acc += L[static_cast<std::size_t>(i)];
        lc[static_cast<std::size_t>(i)] = acc;
    }
    Partition laconj(lc);
    Partition la = conjugate(laconj);
    const int n = la.weight();
    if ((n + twice_a) % 2 != 0)
        throw std::invalid_argument("supernomial: a must match |la|/2 mod 1");
    const int mu2 = (n + twice_a) / 2;  // a + |la|/2
    const int mu1 = n - mu2;
    if (mu1 < 0 || mu2 < 0) return LaurentPoly::zero();

    // explicit sum over j_1 + ... + j_k = mu2
    LaurentPoly js;
    if (k == 0) {
        if (mu2 == 0) js = LaurentPoly::one();
    } else {
        for (const Composition& j : compositions_of(mu2, k, true)) {
            LaurentPoly term = q_binomial(L.back(), j.back());
            if (term.is_zero()) continue;
            for (int l = k - 2; l >= 0; --l) {
                term *= q_binomial(L[static_cast<std::size_t>(l)] +
                                       j[static_cast<std::size_t>(l) + 1],
                                   j[static_cast<std::size_t>(l)]);
                if (term.is_zero()) break;
            }
            if (term.is_zero()) continue;
            long e = 0;
            for (int l = 2; l <= k; ++l) {
                int suffix = 0;
                for (int s = l; s <= k; ++s) suffix += L[static_cast<std::size_t>(s) - 1];
                e += static_cast<long>(j[static_cast<std::size_t>(l) - 2]) *
                     (suffix - j[static_cast<std::size_t>(l) - 1]);
            }
            js += term.shifted(e);
        }
    }

    // Kostka route
    LaurentPoly ks = t_multinomial(la, Composition{mu1, mu2});
    if (!(js == ks))
        throw std::logic_error("supernomial: j-sum and Kostka form disagree");
    return js;
}

}  // namespace qhall
