#pragma once

#include "qhall/laurent.hpp"
#include "qhall/partition.hpp"

#include <functional>
#include <vector>

namespace qhall {

// Word over the alphabet {1..n}
using Word = std::vector<int>;

Composition word_weight(const Word& w);

// outer/inner pair with inner contained in outer; inner empty for straight
// shapes.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    explicit SkewShape(Partition out, Partition in = Partition());

    int cell_count() const { return outer.weight() - inner.weight(); }
    bool is_straight() const { return inner.empty(); }
};

// consecutive rows overlap in exactly one column and the shape is connected
bool is_border_strip(const SkewShape& s);

// Semistandard filling: rows weakly increase, columns strictly increase.
// rows[r] holds the entries of row r left to right (skew rows hold only the
// cells outside the inner shape).
struct SSYT {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    Composition weight() const;
};

// Reading word: rows right to left, top to bottom. With this convention the
// unique tableau of shape = weight reads as 1^a 2^b ... and has charge 0.
Word reading_word(const SSYT& t);

bool is_lattice_word(const Word& w);

// Exhaustive, duplicate-free enumeration; entries bounded by len(weight).
// Throws when |shape| != |weight|.
void for_each_ssyt(const SkewShape& shape, const Composition& weight,
                   const std::function<void(const SSYT&)>& fn);
std::vector<SSYT> enumerate_ssyt(const SkewShape& shape,
                                 const Composition& weight);

// #SSYT(eta, mu); invariant under permuting mu.
long kostka_number(const Partition& eta, const Composition& mu);

// Lascoux-Schutzenberger charge of a word of dominant (partition) weight.
// Standard subwords are extracted scanning right to left, cyclically; the
// index of r+1 is that of r, plus one when r+1 sits to the left of r.
long charge(const Word& w);

// K_{eta,mu}(t) = sum of t^charge over reading words of SSYT(eta, mu+).
LaurentPoly kostka_foulkes(const Partition& eta, const Composition& mu);

// cocharge normalization t^{n(la)} K_{eta,la}(1/t)
LaurentPoly cocharge_kf(const Partition& eta, const Partition& la);

// Hook-length form of K_{la,(1^N)}(q); exact polynomial division, a failed
// division signals an implementation bug.
LaurentPoly kf_hook_column(const Partition& la, int N);

// Border strip b(S) for S = {a_1 < ... < a_m} inside [1, n-1]: a_1 cells in
// the bottom row, a_2 - a_1 in the next, ..., n - a_m in the top row, with
// consecutive rows overlapping in exactly one column.
SkewShape border_strip(const std::vector<int>& S, int n);

// Number of SSYT of the skew shape and weight eta whose reading word is a
// lattice permutation.
long lr_count(const SkewShape& shape, const Partition& eta);

// c^{la}_{mu,nu} = lr_count(la/mu, nu); zero when mu is not inside la.
long lr_coefficient(const Partition& la, const Partition& mu,
                    const Partition& nu);

// Knuth dual correspondence for a (0,1)-matrix given by rows of 0/1 entries:
// P semistandard of shape eta and weight = column sums, Q semistandard of
// the conjugate shape and weight = row sums.
struct DualRSKPair {
    SSYT P;
    SSYT Q;
};
DualRSKPair dual_rsk(const std::vector<std::vector<int>>& m);

// Inverse map; column count must be passed since trailing zero columns are
// not recoverable from the pair.
std::vector<std::vector<int>> dual_rsk_inverse(const DualRSKPair& pq,
                                               int ncols);

}  // namespace qhall
