#pragma once

#include "qhall/laurent.hpp"
#include "qhall/partition.hpp"
#include "qhall/tableaux.hpp"

#include <functional>
#include <vector>

namespace qhall {

// Nonnegative integer matrix with prescribed margins.
struct TransportMatrix {
    std::vector<std::vector<int>> a;

    Composition row_sums() const;
    Composition col_sums() const;
};

struct ZeroOneMatrix {
    std::vector<std::vector<int>> a;

    Composition row_sums() const;
    Composition col_sums() const;
};

// Composition-shaped filling. The statistics impose the monotonicity they
// need: the enumerated carrier set T(nu,mu) is column-nondecreasing, the
// transport-matrix image is row-nondecreasing, Zelevinsky tabloids are
// column-strict.
struct Tabloid {
    std::vector<std::vector<int>> rows;

    Composition shape() const;
    Composition weight() const;
    bool column_nondecreasing() const;
    bool column_strict() const;  // strictly increasing downward
    bool row_nondecreasing() const;
};

enum class WordStat { INV, MAJ, MAJMOD, Z, ZMOD, DEN, LP, CHARGE };
enum class TabloidStat { SHIMOMURA_D, LLT_E, BUTLER_V };
enum class MatrixStat { ZEL, CH };

WordStat word_stat_from_name(const std::string& name);
TabloidStat tabloid_stat_from_name(const std::string& name);

long word_stat(WordStat id, const Word& w);

// SHIMOMURA_D requires a partition shape; LLT_E and BUTLER_V accept any
// composition shape. Complements n(shape-sorted) - stat are exposed through
// tabloid_stat_complement.
long tabloid_stat(TabloidStat id, const Tabloid& t);
long tabloid_stat_complement(TabloidStat id, const Tabloid& t);

long matrix_stat(MatrixStat id, const ZeroOneMatrix& m);

// Number of pairs (x,y) in a row with y left of x and T(x) < T(y) < T(below x).
long zel_tabloid(const Tabloid& t);

// Carriers. All enumerations are exhaustive, duplicate-free and
// deterministic (lexicographic in their natural encoding).
void for_each_word(const Composition& mu, const std::function<void(const Word&)>& fn);
std::vector<Word> words_of_weight(const Composition& mu);

void for_each_transport_matrix(const Composition& rows, const Composition& cols,
                               const std::function<void(const TransportMatrix&)>& fn);
std::vector<TransportMatrix> transport_matrices(const Composition& rows,
                                                const Composition& cols);

void for_each_zero_one_matrix(const Composition& rows, const Composition& cols,
                              const std::function<void(const ZeroOneMatrix&)>& fn);
std::vector<ZeroOneMatrix> zero_one_matrices(const Composition& rows,
                                             const Composition& cols);

// Column-nondecreasing fillings of the composition shape nu with weight mu.
void for_each_tabloid(const Composition& nu, const Composition& mu,
                      const std::function<void(const Tabloid&)>& fn);
std::vector<Tabloid> tabloids(const Composition& nu, const Composition& mu);

// Column-strict fillings (Zelevinsky carrier).
void for_each_column_strict_tabloid(const Composition& nu, const Composition& mu,
                                    const std::function<void(const Tabloid&)>& fn);

// Row-unary bijection with transport matrices: row j of the tabloid lists
// row j of the matrix in unary. Image tabloids are row-nondecreasing.
Tabloid matrix_to_tabloid(const TransportMatrix& m);
TransportMatrix tabloid_to_matrix(const Tabloid& t);

// Column i of the tabloid lists the support of row i of the matrix; image
// tabloids are column-strict of shape conjugate to the row sums.
Tabloid zero_one_to_cstabloid(const ZeroOneMatrix& m);
ZeroOneMatrix cstabloid_to_zero_one(const Tabloid& t, int ncols);

// Generating polynomial sum t^{stat} over a carrier.
template <typename T>
LaurentPoly distribution(const std::vector<T>& carrier,
                         const std::function<long(const T&)>& stat) {
    LaurentPoly r;
    for (const T& x : carrier) r.add_term(stat(x), 1);
    return r;
}

}  // namespace qhall
