#include "qhall/qseries.hpp"

#include <mutex>
#include <vector>

namespace qhall {

LaurentPoly q_pochhammer(int n) {
    LaurentPoly p = LaurentPoly::one();
    for (int j = 1; j <= n; ++j) {
        LaurentPoly f = LaurentPoly::one();
        f.add_term(j, -1);
        p *= f;
    }
    return p;
}

namespace {

// Pascal rows under a lock; every entry computed at most once.
class BinomialTable {
public:
    const LaurentPoly& get(int n, int k) {
        static const LaurentPoly kZero;
        if (k < 0 || n < 0 || k > n) return kZero;
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(rows_.size()) <= n) {
            int m = static_cast<int>(rows_.size());
            std::vector<LaurentPoly> row(static_cast<std::size_t>(m) + 1);
            row[0] = LaurentPoly::one();
            row[static_cast<std::size_t>(m)] = LaurentPoly::one();
            for (int j = 1; j < m; ++j) {
                // [m;j] = [m-1;j] + q^{m-j} [m-1;j-1]
                const auto& prev = rows_[static_cast<std::size_t>(m) - 1];
                row[static_cast<std::size_t>(j)] =
                    prev[static_cast<std::size_t>(j)] +
                    prev[static_cast<std::size_t>(j) - 1].shifted(m - j);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<LaurentPoly>> rows_;
};

BinomialTable& table() {
    static BinomialTable t;
    return t;
}

}  // namespace

const LaurentPoly& q_binomial(int n, int k) { return table().get(n, k); }

LaurentPoly q_multinomial(int N, const Composition& mu) {
    int s = 0;
    for (int m : mu) {
        if (m < 0) return LaurentPoly::zero();
        s += m;
    }
    if (s != N)
        throw std::invalid_argument("q_multinomial: composition weight != N");
    // [N; mu] = prod_k [mu_1+...+mu_k ; mu_k]
    LaurentPoly r = LaurentPoly::one();
    int partial = 0;
    for (int m : mu) {
        partial += m;
        r *= q_binomial(partial, m);
    }
    return r;
}

}  // namespace qhall
