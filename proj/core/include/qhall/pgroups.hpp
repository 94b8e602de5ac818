#pragma once

#include "qhall/laurent.hpp"
#include "qhall/partition.hpp"

#include <vector>

namespace qhall {

// S = {a_1 < ... < a_m} inside [1, n-1]; mu(S) is the composition of
// consecutive differences (a_1, a_2-a_1, ..., n-a_m).
struct OrderSet {
    std::vector<int> points;
    int n;

    OrderSet(std::vector<int> pts, int ambient);
    Composition mu() const;
};

// Number of subgroups of type nu in a finite abelian p-group of type la,
// as a polynomial in p. Zero when nu is not contained in la.
LaurentPoly alpha(const Partition& la, const Partition& nu);

// Chains with prescribed subgroup types nu^(1) c= ... c= nu^(m) c= la;
// the count factors over consecutive steps.
LaurentPoly alpha_chain(const Partition& la, const std::vector<Partition>& flag);

// Chains with prescribed orders p^{a_i}: sum of alpha_chain over all type
// flags with |nu^(k)| = a_k.
LaurentPoly alpha_S(const Partition& la, const OrderSet& S);

// [la'; k] = number of subgroups of order p^k, summed over types.
LaurentPoly gen_binomial(const Partition& la, int k);

// beta_la(S;p) = sum_{T subset S} (-1)^{|S-T|} alpha_la(T;p)
LaurentPoly beta(const Partition& la, const OrderSet& S);

// sum of p^{v(T)} over tabloids in the transport-matrix image of shape la
// and weight mu(S); equals alpha_S.
LaurentPoly butler_value_count(const Partition& la, const OrderSet& S);

}  // namespace qhall
