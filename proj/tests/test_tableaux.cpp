#include "qhall/qseries.hpp"
#include "qhall/stats.hpp"
#include "qhall/tableaux.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace qhall;

TEST_CASE("ssyt enumeration") {
    CHECK(enumerate_ssyt(SkewShape(Partition{2, 1}), {1, 1, 1}).size() == 2);
    // shape = weight: the single superstandard tableau
    for (const Partition& la : partitions_of(5)) {
        auto ts = enumerate_ssyt(SkewShape(la), Composition(la.parts()));
        REQUIRE(ts.size() == 1);
        for (std::size_t r = 0; r < ts[0].rows.size(); ++r)
            for (int x : ts[0].rows[r]) CHECK(x == static_cast<int>(r) + 1);
    }
    CHECK(enumerate_ssyt(SkewShape(Partition{1, 1}), {2}).empty());
    CHECK_THROWS_AS(enumerate_ssyt(SkewShape(Partition{2}), {1}),
                    std::invalid_argument);
}

TEST_CASE("kostka numbers") {
    CHECK(kostka_number(Partition{3, 1}, {3, 1}) == 1);
    CHECK(kostka_number(Partition{2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka_number(Partition{2, 2}, {2, 1, 1}) == 1);
    // permutation invariance
    CHECK(kostka_number(Partition{3, 2}, {1, 2, 2}) ==
          kostka_number(Partition{3, 2}, {2, 2, 1}));
}

TEST_CASE("charge basics") {
    // decreasing standard word carries the top charge, increasing carries 0
    CHECK(charge({3, 2, 1}) == 3);
    CHECK(charge({1, 2, 3}) == 0);
    CHECK(charge({1, 1, 2, 2}) == 0);
    CHECK(charge({2, 2, 1, 1}) == 2);
    CHECK_THROWS_AS(charge({1, 2, 2}), std::invalid_argument);
}

TEST_CASE("charge vs hook formula oracle") {
    for (int n = 1; n <= 7; ++n) {
        Composition ones(static_cast<std::size_t>(n), 1);
        for (const Partition& eta : partitions_of(n))
            CHECK(kostka_foulkes(eta, ones) == kf_hook_column(eta, n));
    }
}

TEST_CASE("kostka foulkes pinned values") {
    CHECK(kostka_foulkes(Partition{1, 1, 1}, {1, 1, 1}) == LaurentPoly::one());
    CHECK(kostka_foulkes(Partition{3}, {1, 1, 1}) == LaurentPoly::monomial(1, 3));
    LaurentPoly t_t2;
    t_t2.add_term(1, 1);
    t_t2.add_term(2, 1);
    CHECK(kostka_foulkes(Partition{2, 1}, {1, 1, 1}) == t_t2);
    // K_{(n),nu}(t) = t^{n(nu)}
    for (int n = 1; n <= 8; ++n)
        for (const Partition& nu : partitions_of(n))
            CHECK(kostka_foulkes(Partition{n}, Composition(nu.parts())) ==
                  LaurentPoly::monomial(1, n_stat(nu)));
    // evaluation at 1 gives the Kostka number, and compositions canonicalize
    for (int n = 1; n <= 6; ++n)
        for (const Partition& eta : partitions_of(n))
            for (const Composition& mu : compositions_up_to(n, 3)) {
                LaurentPoly kf = kostka_foulkes(eta, mu);
                CHECK(kf.eval_one() == kostka_number(eta, mu));
                CHECK(kf == kostka_foulkes(
                                eta, Composition(Partition::from_composition(mu).parts())));
            }
}

TEST_CASE("cocharge") {
    for (const Partition& la : partitions_of(5))
        CHECK(cocharge_kf(la, la) == LaurentPoly::monomial(1, n_stat(la)));
    CHECK(cocharge_kf(Partition{3}, Partition{1, 1, 1}) == LaurentPoly::one());
    LaurentPoly t_t2;
    t_t2.add_term(1, 1);
    t_t2.add_term(2, 1);
    CHECK(cocharge_kf(Partition{2, 1}, Partition{1, 1, 1}) == t_t2);
}

TEST_CASE("hook column pinned") {
    CHECK(kf_hook_column(Partition{1, 1, 1}, 3) == LaurentPoly::one());
    CHECK(kf_hook_column(Partition{3}, 3) == LaurentPoly::monomial(1, 3));
    LaurentPoly q_q2;
    q_q2.add_term(1, 1);
    q_q2.add_term(2, 1);
    CHECK(kf_hook_column(Partition{2, 1}, 3) == q_q2);
}

TEST_CASE("border strips") {
    SkewShape row = border_strip({}, 4);
    CHECK(row.outer == Partition{4});
    CHECK(row.inner == Partition{});
    CHECK(is_border_strip(row));

    SkewShape col = border_strip({1, 2, 3}, 4);
    CHECK(col.outer == Partition{1, 1, 1, 1});
    CHECK(is_border_strip(col));

    SkewShape hook = border_strip({2}, 3);
    CHECK(hook.outer == Partition{2, 2});
    CHECK(hook.inner == Partition{1});
    CHECK(is_border_strip(hook));

    CHECK_THROWS_AS(border_strip({3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(border_strip({2, 2}, 4), std::invalid_argument);

    // every b(S) is a border strip, for all S in [1,5]
    int n = 6;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> S;
        for (int i = 1; i < n; ++i)
            if (mask & (1 << (i - 1))) S.push_back(i);
        CHECK(is_border_strip(border_strip(S, n)));
    }
}

TEST_CASE("lattice words and LR counts") {
    CHECK(is_lattice_word({1, 1, 2, 1, 3, 2}));
    CHECK_FALSE(is_lattice_word({2, 1}));
    for (const Partition& la : partitions_of(5)) {
        CHECK(lr_count(SkewShape(la), la) == 1);
        for (const Partition& eta : partitions_of(5))
            if (!(eta == la)) CHECK(lr_count(SkewShape(la), eta) == 0);
    }
    CHECK(lr_count(border_strip({1}, 2), Partition{1, 1}) == 1);
}

TEST_CASE("lr_coefficient") {
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{3, 2}, Partition{3, 2}, Partition{}) == 1);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{1}, Partition{3}) == 0);
    // symmetry in (mu, nu)
    for (const Partition& la : partitions_of(6))
        for (int k = 1; k <= 5; ++k)
            for (const Partition& mu : partitions_of(k))
                for (const Partition& nu : partitions_of(6 - k))
                    CHECK(lr_coefficient(la, mu, nu) == lr_coefficient(la, nu, mu));
}

TEST_CASE("inclusion-exclusion identity for border strips") {
    // sum_{T subset S} (-1)^{|S-T|} K_{eta,mu(T)} = lr_count(b(S), eta)
    for (int n = 2; n <= 6; ++n) {
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> S;
            for (int i = 1; i < n; ++i)
                if (mask & (1 << (i - 1))) S.push_back(i);
            SkewShape bs = border_strip(S, n);
            for (const Partition& eta : partitions_of(n)) {
                long lhs = 0;
                const std::size_t m = S.size();
                for (std::size_t sub = 0; sub < (std::size_t(1) << m); ++sub) {
                    std::vector<int> T;
                    for (std::size_t i = 0; i < m; ++i)
                        if (sub & (std::size_t(1) << i)) T.push_back(S[i]);
                    Composition mu;
                    int prev = 0;
                    for (int a : T) {
                        mu.push_back(a - prev);
                        prev = a;
                    }
                    mu.push_back(n - prev);
                    long k = kostka_number(eta, mu);
                    lhs += (m - T.size()) % 2 ? -k : k;
                }
                CHECK(lhs == lr_count(bs, eta));
            }
        }
    }
}

TEST_CASE("dual RSK: basics and round trip") {
    auto pq = dual_rsk({{1}});
    CHECK(pq.P.rows == std::vector<std::vector<int>>{{1}});
    CHECK(pq.Q.rows == std::vector<std::vector<int>>{{1}});
    CHECK_THROWS_AS(dual_rsk({{2}}), std::invalid_argument);

    // round trip over all 0/1 matrices with margins of weight <= 5
    for (int n = 1; n <= 5; ++n)
        for (const Composition& la : compositions_up_to(n, 3))
            for (const Composition& mu : compositions_up_to(n, 3))
                for_each_zero_one_matrix(la, mu, [&](const ZeroOneMatrix& m) {
                    DualRSKPair pq2 = dual_rsk(m.a);
                    CHECK(conjugate(pq2.P.shape.outer) == pq2.Q.shape.outer);
                    if (!pq2.P.rows.empty()) {
                        Composition wp = pq2.P.weight();
                        wp.resize(mu.size(), 0);
                        CHECK(wp == mu);
                        Composition wq = pq2.Q.weight();
                        wq.resize(la.size(), 0);
                        CHECK(wq == la);
                    }
                    CHECK(dual_rsk_inverse(pq2, static_cast<int>(mu.size())) == m.a);
                });
}

TEST_CASE("dual RSK: both sides semistandard and counting identity") {
    auto is_ssyt = [](const SSYT& t) {
        for (const auto& row : t.rows)
            for (std::size_t j = 0; j + 1 < row.size(); ++j)
                if (row[j] > row[j + 1]) return false;
        for (std::size_t r = 0; r + 1 < t.rows.size(); ++r)
            for (std::size_t j = 0; j < t.rows[r + 1].size(); ++j)
                if (t.rows[r][j] >= t.rows[r + 1][j]) return false;
        return true;
    };
    long count = 0;
    for_each_zero_one_matrix({2, 1}, {1, 1, 1}, [&](const ZeroOneMatrix& m) {
        auto pq = dual_rsk(m.a);
        CHECK(is_ssyt(pq.P));
        CHECK(is_ssyt(pq.Q));
        ++count;
    });
    CHECK(count == 3);

    // multiset of P-shapes matches the K_{eta,mu} K_{eta',la} counts
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lap : partitions_of(n))
            for (const Partition& mup : partitions_of(n)) {
                Composition la(lap.parts()), mu(mup.parts());
                std::map<Partition, long> shapes;
                for_each_zero_one_matrix(la, mu, [&](const ZeroOneMatrix& m) {
                    auto pq2 = dual_rsk(m.a);
                    CHECK(is_ssyt(pq2.P));
                    CHECK(is_ssyt(pq2.Q));
                    ++shapes[pq2.P.shape.outer];
                });
                for (const Partition& eta : partitions_of(n)) {
                    long expected = kostka_number(eta, mu) *
                                    kostka_number(conjugate(eta), la);
                    auto it = shapes.find(eta);
                    long got = it == shapes.end() ? 0 : it->second;
                    CHECK(got == expected);
                }
            }
}
