#include "qhall/pgroups.hpp"

#include "qhall/qseries.hpp"
#include "qhall/stats.hpp"

#include <stdexcept>

namespace qhall {

OrderSet::OrderSet(std::vector<int> pts, int ambient)
    : points(std::move(pts)), n(ambient) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 1 || points[i] > n - 1)
            throw std::invalid_argument("OrderSet: point outside [1, n-1]");
        if (i > 0 && points[i] <= points[i - 1])
            throw std::invalid_argument("OrderSet: points must increase");
    }
}

Composition OrderSet::mu() const {
    Composition m;
    int prev = 0;
    for (int a : points) {
        m.push_back(a - prev);
        prev = a;
    }
    m.push_back(n - prev);
    return m;
}

LaurentPoly alpha(const Partition& la, const Partition& nu) {
    if (!contains(la, nu)) return LaurentPoly::zero();
    Partition lc = conjugate(la);
    Partition nc = conjugate(nu);
    LaurentPoly r = LaurentPoly::one();
    for (std::size_t j = 0; j < lc.length(); ++j) {
        long e = static_cast<long>(nc.part(j + 1)) * (lc.part(j) - nc.part(j));
        r *= q_binomial(lc.part(j) - nc.part(j + 1), nc.part(j) - nc.part(j + 1))
                 .shifted(e);
    }
    return r;
}

LaurentPoly alpha_chain(const Partition& la, const std::vector<Partition>& flag) {
    LaurentPoly r = LaurentPoly::one();
    const Partition* prev = nullptr;
    for (const Partition& nu : flag) {
        if (prev && !contains(nu, *prev))
            throw std::invalid_argument("alpha_chain: flag not increasing");
        r *= alpha(nu, prev ? *prev : Partition());
        prev = &nu;
    }
    if (prev && !contains(la, *prev))
        throw std::invalid_argument("alpha_chain: flag not inside la");
    r *= alpha(la, prev ? *prev : Partition());
    return r;
}

LaurentPoly alpha_S(const Partition& la, const OrderSet& S) {
    if (S.n != la.weight())
        throw std::invalid_argument("alpha_S: ambient n != |la|");
    LaurentPoly r;
    std::vector<Partition> flag;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == S.points.size()) {
            r += alpha_chain(la, flag);
            return;
        }
        PartitionFilter f;
        f.containing = flag.empty() ? Partition() : flag.back();
        f.contained_in = la;
        for_each_partition(S.points[k], f, [&](const Partition& nu) {
            flag.push_back(nu);
            rec(k + 1);
            flag.pop_back();
        });
    };
    rec(0);
    return r;
}

LaurentPoly gen_binomial(const Partition& la, int k) {
    if (k < 0 || k > la.weight())
        throw std::invalid_argument("gen_binomial: k outside [0, |la|]");
    LaurentPoly r;
    PartitionFilter f;
    f.contained_in = la;
    for_each_partition(k, f, [&](const Partition& nu) { r += alpha(la, nu); });
    return r;
}

LaurentPoly beta(const Partition& la, const OrderSet& S) {
    const std::size_t m = S.points.size();
    LaurentPoly r;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<int> pts;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) pts.push_back(S.points[i]);
        std::size_t removed = m - pts.size();
        LaurentPoly a = alpha_S(la, OrderSet(pts, S.n));
        if (removed % 2)
            r -= a;
        else
            r += a;
    }
    return r;
}

LaurentPoly butler_value_count(const Partition& la, const OrderSet& S) {
    if (S.n != la.weight())
        throw std::invalid_argument("butler_value_count: ambient n != |la|");
    Composition mu = S.mu();
    LaurentPoly r;
    for_each_transport_matrix(Composition(la.parts()), mu,
                              [&](const TransportMatrix& m) {
                                  Tabloid t = matrix_to_tabloid(m);
                                  r.add_term(tabloid_stat(TabloidStat::BUTLER_V, t), 1);
                              });
    return r;
}

}  // namespace qhall
