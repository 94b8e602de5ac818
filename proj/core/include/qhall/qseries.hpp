#pragma once

#include "qhall/laurent.hpp"
#include "qhall/partition.hpp"

namespace qhall {

// alpha*(alpha-1)/2, valid for any integer (C(-1,2) = 1)
inline long binom2(long a) { return a * (a - 1) / 2; }

// (q;q)_n = prod_{j=1}^{n} (1 - q^j); 1 for n = 0
LaurentPoly q_pochhammer(int n);

// Gaussian binomial [n;k]_q; the zero polynomial when k < 0, k > n or n < 0.
// Values are cached, the returned reference stays valid.
const LaurentPoly& q_binomial(int n, int k);

// [N; mu_1,...,mu_r]_q = (q;q)_N / prod (q;q)_{mu_i}; zero if some mu_i < 0.
// Throws when sum(mu) != N.
LaurentPoly q_multinomial(int N, const Composition& mu);

}  // namespace qhall
