#pragma once

#include "qhall/laurent.hpp"
#include "qhall/partition.hpp"

#include <map>
#include <vector>

namespace qhall {

// Coefficients of a symmetric function on a partition-indexed basis.
using ExpansionMap = std::map<Partition, LaurentPoly>;

// Increasing chain of partitions together with its weighted product term.
struct FermionicTerm {
    std::vector<Partition> flag;  // nu^(1) .. nu^(r), nu^(0) = empty implied
    LaurentPoly term;
};

// P_{la,mu}(t) = sum_eta K_{eta,mu} K_{eta,la}(t)
LaurentPoly p_poly_def(const Partition& la, const Composition& mu);

// Sign-free sum over flags of partitions ending at la' with step sizes given
// by mu; equal to p_poly_def.
LaurentPoly p_poly_fermionic(const Partition& la, const Composition& mu);
std::vector<FermionicTerm> p_fermionic_terms(const Partition& la,
                                             const Composition& mu);

// R_{la,mu}(t) = sum_eta K_{eta,mu} K_{eta',la}(t)
LaurentPoly r_poly_def(const Partition& la, const Composition& mu);

// Horizontal-strip flag sum; the number of terms equals #SSYT(la', mu).
LaurentPoly r_poly_fermionic(const Partition& la, const Composition& mu);
std::vector<FermionicTerm> r_fermionic_terms(const Partition& la,
                                             const Composition& mu);

// Monomial and Schur expansions of the modified Hall-Littlewood function
// indexed by la.
ExpansionMap qprime_monomial_expansion(const Partition& la);
ExpansionMap qprime_schur_expansion(const Partition& la);

// f^{la}_{mu,(1^m)}(t): zero unless la/mu is a vertical m-strip.
LaurentPoly pieri_e_coeff(const Partition& la, const Partition& mu, int m);

// g_mu^la(t), the coefficient of P_la in h_{|la/mu|} P_mu; zero unless mu
// lies inside la.
LaurentPoly pieri_h_coeff(const Partition& la, const Partition& mu);

// Coefficients of P_mu on the Schur basis (row of the inverse Kostka-Foulkes
// matrix on partitions of |mu|).
ExpansionMap hl_in_schur(const Partition& mu);

// Structure constants f^{la}_{mu,nu}(t) of the Hall-Littlewood basis,
// computed through the Schur basis.
LaurentPoly hl_structure_constant(const Partition& mu, const Partition& nu,
                                  const Partition& la);

// g^{la}_{mu;nu}(t): coefficient of P_la in s_nu P_mu.
LaurentPoly mixed_coeff(const Partition& mu, const Partition& nu,
                        const Partition& la);

// Supernomial coefficient [L; a]_t with a passed as 2a (half-integers
// allowed). Computes both the explicit j-sum and the Kostka form and checks
// they agree. Returns zero when a is out of range.
LaurentPoly supernomial(const std::vector<int>& L, int twice_a);

// [la; mu]^(0) = sum_eta K_{eta,mu} Ktilde_{eta,la}(t)
LaurentPoly t_multinomial(const Partition& la, const Composition& mu);

}  // namespace qhall
