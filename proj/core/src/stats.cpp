#include "qhall/stats.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace qhall {

namespace {

Composition matrix_row_sums(const std::vector<std::vector<int>>& a) {
    Composition r;
    for (const auto& row : a) {
        int s = 0;
        for (int x : row) s += x;
        r.push_back(s);
    }
    return r;
}

Composition matrix_col_sums(const std::vector<std::vector<int>>& a) {
    Composition c;
    for (const auto& row : a) {
        if (row.size() > c.size()) c.resize(row.size(), 0);
        for (std::size_t j = 0; j < row.size(); ++j) c[j] += row[j];
    }
    return c;
}

}  // namespace

Composition TransportMatrix::row_sums() const { return matrix_row_sums(a); }
Composition TransportMatrix::col_sums() const { return matrix_col_sums(a); }
Composition ZeroOneMatrix::row_sums() const { return matrix_row_sums(a); }
Composition ZeroOneMatrix::col_sums() const { return matrix_col_sums(a); }

Composition Tabloid::shape() const {
    Composition s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

Composition Tabloid::weight() const {
    int maxv = 0;
    for (const auto& r : rows)
        for (int x : r) maxv = std::max(maxv, x);
    Composition mu(static_cast<std::size_t>(maxv), 0);
    for (const auto& r : rows)
        for (int x : r) ++mu[static_cast<std::size_t>(x) - 1];
    return mu;
}

namespace {

// entries of column c, top to bottom, with their row indices
std::vector<std::pair<int, int>> column_cells(const Tabloid& t, std::size_t c) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (c < t.rows[r].size())
            out.emplace_back(static_cast<int>(r), t.rows[r][c]);
    return out;
}

std::size_t column_count(const Tabloid& t) {
    std::size_t n = 0;
    for (const auto& r : t.rows) n = std::max(n, r.size());
    return n;
}

}  // namespace

bool Tabloid::column_nondecreasing() const {
    for (std::size_t c = 0; c < column_count(*this); ++c) {
        auto cells = column_cells(*this, c);
        for (std::size_t i = 0; i + 1 < cells.size(); ++i)
            if (cells[i].second > cells[i + 1].second) return false;
    }
    return true;
}

bool Tabloid::column_strict() const {
    for (std::size_t c = 0; c < column_count(*this); ++c) {
        auto cells = column_cells(*this, c);
        for (std::size_t i = 0; i + 1 < cells.size(); ++i)
            if (cells[i].second >= cells[i + 1].second) return false;
    }
    return true;
}

bool Tabloid::row_nondecreasing() const {
    for (const auto& r : rows)
        for (std::size_t j = 0; j + 1 < r.size(); ++j)
            if (r[j] > r[j + 1]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// word statistics

namespace {

long stat_inv(const Word& w) {
    long v = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++v;
    return v;
}

long stat_maj(const Word& w) {
    long v = 0;
    for (std::size_t m = 0; m + 1 < w.size(); ++m)
        if (w[m] > w[m + 1]) v += static_cast<long>(m) + 1;
    return v;
}

long stat_majmod(const Word& w) {
    long v = 0;
    for (std::size_t m = 0; m + 1 < w.size(); ++m)
        if (w[m] >= w[m + 1]) v += static_cast<long>(m) + 1;
    return v - n_stat_conjugate(word_weight(w));
}

Word two_letter_subword(const Word& w, int i, int j) {
    Word s;
    for (int x : w)
        if (x == i || x == j) s.push_back(x);
    return s;
}

long stat_z(const Word& w, bool modified) {
    int n = 0;
    for (int x : w) n = std::max(n, x);
    long v = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Word s = two_letter_subword(w, i, j);
            if (s.empty()) continue;
            v += modified ? stat_majmod(s) : stat_maj(s);
        }
    return v;
}

long stat_den(const Word& w) {
    int n = 0;
    for (int x : w) n = std::max(n, x);
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    auto in_cyclic = [n](int x, int a, int b) {
        // C[a,b] = (a, b] when a <= b, else [1, b] union (a, n]
        if (a <= b) return x > a && x <= b;
        return x <= b || x > a;
    };
    long v = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (in_cyclic(w[i], w[j], sorted[j])) ++v;
    return v;
}

// Number of distinct larger letters to the left of position i whose
// multiplicity in w_1..w_i equals that of w_i in w_1..w_i, summed over i.
long stat_lp(const Word& w) {
    int n = 0;
    for (int x : w) n = std::max(n, x);
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    long v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int x = w[i];
        ++mult[static_cast<std::size_t>(x)];
        if (i > 0)
            for (int a = x + 1; a <= n; ++a)
                if (seen[static_cast<std::size_t>(a)] &&
                    mult[static_cast<std::size_t>(a)] ==
                        mult[static_cast<std::size_t>(x)])
                    ++v;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return v;
}

}  // namespace

long word_stat(WordStat id, const Word& w) {
    switch (id) {
        case WordStat::INV: return stat_inv(w);
        case WordStat::MAJ: return stat_maj(w);
        case WordStat::MAJMOD: return stat_majmod(w);
        case WordStat::Z: return stat_z(w, false);
        case WordStat::ZMOD: return stat_z(w, true);
        case WordStat::DEN: return stat_den(w);
        case WordStat::LP: return stat_lp(w);
        case WordStat::CHARGE: return charge(w);
    }
    throw std::invalid_argument("unknown word statistic");
}

WordStat word_stat_from_name(const std::string& name) {
    if (name == "inv") return WordStat::INV;
    if (name == "maj") return WordStat::MAJ;
    if (name == "majmod") return WordStat::MAJMOD;
    if (name == "z") return WordStat::Z;
    if (name == "zmod") return WordStat::ZMOD;
    if (name == "den") return WordStat::DEN;
    if (name == "lp") return WordStat::LP;
    if (name == "charge") return WordStat::CHARGE;
    throw std::invalid_argument("unknown word statistic: " + name);
}

TabloidStat tabloid_stat_from_name(const std::string& name) {
    if (name == "d") return TabloidStat::SHIMOMURA_D;
    if (name == "e") return TabloidStat::LLT_E;
    if (name == "v") return TabloidStat::BUTLER_V;
    throw std::invalid_argument("unknown tabloid statistic: " + name);
}

// ---------------------------------------------------------------------------
// tabloid statistics

namespace {

// The cell-dimension statistics live on top-justified column lists: column
// c holds its entries top to bottom, gaps of composition shapes closed up.
using Columns = std::vector<std::vector<int>>;

Columns to_columns(const Tabloid& t) {
    Columns cols(column_count(t));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (auto [r, v] : column_cells(t, c)) cols[c].push_back(v);
    return cols;
}

// Special 1s: the lowest 1 of its column.
std::vector<int> special_rows(const Columns& cols) {
    std::vector<int> sp(cols.size(), -1);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r)
            if (cols[c][r] == 1) sp[c] = static_cast<int>(r);
    return sp;
}

// Two-letter cell dimension shared by the Shimomura and LLT recursions:
// each 2 collects the nonspecial 1s of its row plus the special 1s of its
// row lying strictly to its right.
long dim2(const Columns& cols) {
    std::vector<int> sp = special_rows(cols);
    long d = 0;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r) {
            if (cols[c][r] != 2) continue;
            for (std::size_t c2 = 0; c2 < cols.size(); ++c2) {
                if (r >= cols[c2].size() || cols[c2][r] != 1) continue;
                if (sp[c2] != static_cast<int>(r))
                    ++d;  // nonspecial 1 anywhere in the row
                else if (c2 > c)
                    ++d;  // special 1 strictly to the right
            }
        }
    return d;
}

Columns relabel_two(Columns cols, int k) {
    for (auto& col : cols)
        for (auto& x : col) x = (x == k) ? 2 : 1;
    return cols;
}

// Erase the letter k (always at the bottom of its column). The d recursion
// then re-sorts columns into partition shape, the e recursion keeps the
// column order.
Columns erase_letter(const Columns& cols, int k) {
    Columns out;
    for (const auto& col : cols) {
        std::vector<int> nc;
        for (int v : col)
            if (v != k) nc.push_back(v);
        out.push_back(std::move(nc));
    }
    return out;
}

int max_letter(const Columns& cols) {
    int k = 0;
    for (const auto& col : cols)
        for (int x : col) k = std::max(k, x);
    return k;
}

long shimomura_d(const Columns& cols) {
    int k = max_letter(cols);
    if (k <= 1) return 0;
    if (k == 2) return dim2(cols);
    Columns rest = erase_letter(cols, k);
    std::stable_sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
        return a.size() > b.size();
    });
    return dim2(relabel_two(cols, k)) + shimomura_d(rest);
}

long llt_e(const Columns& cols) {
    int k = max_letter(cols);
    if (k <= 1) return 0;
    if (k == 2) return dim2(cols);
    return dim2(relabel_two(cols, k)) + llt_e(erase_letter(cols, k));
}

long butler_v(const Tabloid& t) {
    long v = 0;
    std::size_t ncols = column_count(t);
    for (std::size_t c = 0; c < ncols; ++c) {
        auto cells = column_cells(t, c);
        auto right = c + 1 < ncols ? column_cells(t, c + 1)
                                   : std::vector<std::pair<int, int>>{};
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int x = cells[i].second;
            for (std::size_t j = 0; j < i; ++j)
                if (cells[j].second < x) ++v;
            for (const auto& [r2, y] : right)
                if (r2 > cells[i].first && y < x) ++v;
        }
    }
    return v;
}

}  // namespace

long tabloid_stat(TabloidStat id, const Tabloid& t) {
    switch (id) {
        case TabloidStat::SHIMOMURA_D: {
            Composition s = t.shape();
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] < s[i + 1])
                    throw std::invalid_argument(
                        "SHIMOMURA_D requires a partition shape");
            return shimomura_d(to_columns(t));
        }
        case TabloidStat::LLT_E: return llt_e(to_columns(t));
        case TabloidStat::BUTLER_V: return butler_v(t);
    }
    throw std::invalid_argument("unknown tabloid statistic");
}

long tabloid_stat_complement(TabloidStat id, const Tabloid& t) {
    Partition sorted = Partition::from_composition(t.shape());
    return n_stat(sorted) - tabloid_stat(id, t);
}

// ---------------------------------------------------------------------------
// matrix statistics

namespace {

// The height/interval conditions read off the transposed matrix: with rows
// summing to la the statistic generates R_{la,mu} only in that orientation
// (checked against the Kostka form on every margin pair of weight <= 6).
long zel_matrix(const ZeroOneMatrix& m) {
    std::size_t nc = 0;
    for (const auto& row : m.a) nc = std::max(nc, row.size());
    std::vector<std::vector<int>> tr(nc, std::vector<int>(m.a.size(), 0));
    for (std::size_t i = 0; i < m.a.size(); ++i)
        for (std::size_t j = 0; j < m.a[i].size(); ++j)
            tr[j][i] = m.a[i][j];

    struct Entry {
        int i, j, ht;
    };
    std::vector<Entry> supp;
    for (std::size_t i = 0; i < tr.size(); ++i)
        for (std::size_t j = 0; j < tr[i].size(); ++j) {
            if (!tr[i][j]) continue;
            int ht = 0;
            for (std::size_t k = 0; k <= i; ++k) ht += tr[k][j];
            supp.push_back({static_cast<int>(i), static_cast<int>(j), ht});
        }
    long v = 0;
    for (const auto& a : supp) {
        int iplus = std::numeric_limits<int>::max();
        for (const auto& b : supp)
            if (b.j == a.j && b.ht == a.ht + 1) iplus = b.i;
        for (const auto& b : supp)
            if (b.j < a.j && b.ht == a.ht && a.i < b.i && b.i < iplus) ++v;
    }
    return v;
}

}  // namespace

long matrix_stat(MatrixStat id, const ZeroOneMatrix& m) {
    for (const auto& row : m.a)
        for (int x : row)
            if (x != 0 && x != 1)
                throw std::invalid_argument("matrix_stat: entries must be 0/1");
    switch (id) {
        case MatrixStat::ZEL: return zel_matrix(m);
        case MatrixStat::CH: {
            DualRSKPair pq = dual_rsk(m.a);
            if (pq.Q.rows.empty()) return 0;
            return charge(reading_word(pq.Q));
        }
    }
    throw std::invalid_argument("unknown matrix statistic");
}

long zel_tabloid(const Tabloid& t) {
    if (!t.column_strict())
        throw std::invalid_argument("zel_tabloid: tabloid is not column-strict");
    long v = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        for (std::size_t cx = 0; cx < row.size(); ++cx) {
            int below = std::numeric_limits<int>::max();
            if (r + 1 < t.rows.size() && cx < t.rows[r + 1].size())
                below = t.rows[r + 1][cx];
            for (std::size_t cy = 0; cy < cx; ++cy)
                if (row[cx] < row[cy] && row[cy] < below) ++v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// carriers

void for_each_word(const Composition& mu, const std::function<void(const Word&)>& fn) {
    int n = weight(mu);
    Word w;
    Composition rem = mu;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == n) {
            fn(w);
            return;
        }
        for (std::size_t v = 0; v < rem.size(); ++v) {
            if (rem[v] == 0) continue;
            --rem[v];
            w.push_back(static_cast<int>(v) + 1);
            rec();
            w.pop_back();
            ++rem[v];
        }
    };
    rec();
}

std::vector<Word> words_of_weight(const Composition& mu) {
    std::vector<Word> out;
    for_each_word(mu, [&](const Word& w) { out.push_back(w); });
    return out;
}

namespace {

// Fill matrices row by row; rem holds remaining column budgets.
void matrices_rec(const Composition& rows, std::vector<int>& rem, int cap,
                  std::size_t r, std::vector<std::vector<int>>& acc,
                  const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    if (r == rows.size()) {
        for (int x : rem)
            if (x != 0) return;
        fn(acc);
        return;
    }
    std::vector<int>& row = acc[r];
    std::function<void(std::size_t, int)> fill = [&](std::size_t j, int need) {
        if (j == rem.size()) {
            if (need == 0) matrices_rec(rows, rem, cap, r + 1, acc, fn);
            return;
        }
        int hi = std::min(rem[j], need);
        if (cap > 0) hi = std::min(hi, cap);
        for (int v = 0; v <= hi; ++v) {
            row[j] = v;
            rem[j] -= v;
            fill(j + 1, need - v);
            rem[j] += v;
            row[j] = 0;
        }
    };
    fill(0, rows[r]);
}

}  // namespace

void for_each_transport_matrix(const Composition& rows, const Composition& cols,
                               const std::function<void(const TransportMatrix&)>& fn) {
    if (weight(rows) != weight(cols)) return;
    std::vector<int> rem = cols;
    std::vector<std::vector<int>> acc(rows.size(), std::vector<int>(cols.size(), 0));
    matrices_rec(rows, rem, 0, 0, acc,
                 [&](const std::vector<std::vector<int>>& a) { fn(TransportMatrix{a}); });
}

std::vector<TransportMatrix> transport_matrices(const Composition& rows,
                                                const Composition& cols) {
    std::vector<TransportMatrix> out;
    for_each_transport_matrix(rows, cols, [&](const TransportMatrix& m) { out.push_back(m); });
    return out;
}

void for_each_zero_one_matrix(const Composition& rows, const Composition& cols,
                              const std::function<void(const ZeroOneMatrix&)>& fn) {
    if (weight(rows) != weight(cols)) return;
    std::vector<int> rem = cols;
    std::vector<std::vector<int>> acc(rows.size(), std::vector<int>(cols.size(), 0));
    matrices_rec(rows, rem, 1, 0, acc,
                 [&](const std::vector<std::vector<int>>& a) { fn(ZeroOneMatrix{a}); });
}

std::vector<ZeroOneMatrix> zero_one_matrices(const Composition& rows,
                                             const Composition& cols) {
    std::vector<ZeroOneMatrix> out;
    for_each_zero_one_matrix(rows, cols, [&](const ZeroOneMatrix& m) { out.push_back(m); });
    return out;
}

namespace {

void tabloid_rec(const Composition& nu, const Composition& mu, bool strict,
                 std::size_t r, std::size_t c, Tabloid& t, Composition& rem,
                 const std::function<void(const Tabloid&)>& fn) {
    if (r == nu.size()) {
        fn(t);
        return;
    }
    if (c == static_cast<std::size_t>(nu[r])) {
        tabloid_rec(nu, mu, strict, r + 1, 0, t, rem, fn);
        return;
    }
    // nearest present cell above in this column
    int lo = 1;
    for (std::size_t r2 = r; r2-- > 0;) {
        if (c < t.rows[r2].size()) {
            lo = t.rows[r2][c] + (strict ? 1 : 0);
            break;
        }
    }
    for (int v = lo; v <= static_cast<int>(mu.size()); ++v) {
        std::size_t vi = static_cast<std::size_t>(v) - 1;
        if (rem[vi] == 0) continue;
        --rem[vi];
        t.rows[r].push_back(v);
        tabloid_rec(nu, mu, strict, r, c + 1, t, rem, fn);
        t.rows[r].pop_back();
        ++rem[vi];
    }
}

void tabloid_enum(const Composition& nu, const Composition& mu, bool strict,
                  const std::function<void(const Tabloid&)>& fn) {
    if (weight(nu) != weight(mu))
        throw std::invalid_argument("tabloids: weight mismatch");
    Tabloid t;
    t.rows.assign(nu.size(), {});
    Composition rem = mu;
    tabloid_rec(nu, mu, strict, 0, 0, t, rem, fn);
}

}  // namespace

void for_each_tabloid(const Composition& nu, const Composition& mu,
                      const std::function<void(const Tabloid&)>& fn) {
    tabloid_enum(nu, mu, false, fn);
}

std::vector<Tabloid> tabloids(const Composition& nu, const Composition& mu) {
    std::vector<Tabloid> out;
    for_each_tabloid(nu, mu, [&](const Tabloid& t) { out.push_back(t); });
    return out;
}

void for_each_column_strict_tabloid(const Composition& nu, const Composition& mu,
                                    const std::function<void(const Tabloid&)>& fn) {
    tabloid_enum(nu, mu, true, fn);
}

Tabloid matrix_to_tabloid(const TransportMatrix& m) {
    Tabloid t;
    for (const auto& row : m.a) {
        std::vector<int> r;
        for (std::size_t v = 0; v < row.size(); ++v)
            for (int c = 0; c < row[v]; ++c) r.push_back(static_cast<int>(v) + 1);
        t.rows.push_back(std::move(r));
    }
    return t;
}

TransportMatrix tabloid_to_matrix(const Tabloid& t) {
    if (!t.row_nondecreasing())
        throw std::invalid_argument("tabloid_to_matrix: rows must be sorted");
    Composition mu = t.weight();
    TransportMatrix m;
    for (const auto& row : t.rows) {
        std::vector<int> r(mu.size(), 0);
        for (int x : row) ++r[static_cast<std::size_t>(x) - 1];
        m.a.push_back(std::move(r));
    }
    return m;
}

Tabloid zero_one_to_cstabloid(const ZeroOneMatrix& m) {
    std::vector<std::vector<int>> cols;
    for (const auto& row : m.a) {
        std::vector<int> col;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j]) col.push_back(static_cast<int>(j) + 1);
        cols.push_back(std::move(col));
    }
    Tabloid t;
    for (std::size_t r = 0;; ++r) {
        std::vector<int> row;
        for (const auto& col : cols)
            if (r < col.size()) row.push_back(col[r]);
        if (row.empty()) break;
        t.rows.push_back(std::move(row));
    }
    return t;
}

ZeroOneMatrix cstabloid_to_zero_one(const Tabloid& t, int ncols) {
    // column i of the tabloid is the support of row i
    std::size_t nrows = column_count(t);
    ZeroOneMatrix m;
    m.a.assign(nrows, std::vector<int>(static_cast<std::size_t>(ncols), 0));
    for (std::size_t c = 0; c < nrows; ++c)
        for (auto [r, v] : column_cells(t, c))
            m.a[c][static_cast<std::size_t>(v) - 1] = 1;
    return m;
}

}  // namespace qhall
