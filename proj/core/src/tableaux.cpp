#include "qhall/tableaux.hpp"

#include "qhall/qseries.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qhall {

Composition word_weight(const Word& w) {
    int n = 0;
    for (int x : w) {
        if (x < 1) throw std::invalid_argument("word letters must be >= 1");
        n = std::max(n, x);
    }
    Composition mu(static_cast<std::size_t>(n), 0);
    for (int x : w) ++mu[static_cast<std::size_t>(x) - 1];
    return mu;
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!contains(outer, inner))
        throw std::invalid_argument("skew shape: inner not inside outer");
}

bool is_border_strip(const SkewShape& s) {
    const auto& out = s.outer;
    const auto& in = s.inner;
    if (s.cell_count() == 0) return false;
    for (std::size_t i = 0; i < out.length(); ++i)
        if (out.part(i) - in.part(i) <= 0) return false;  // empty row breaks it
    for (std::size_t i = 0; i + 1 < out.length(); ++i)
        if (out.part(i + 1) != in.part(i) + 1) return false;
    return true;
}

Composition SSYT::weight() const {
    int maxv = 0;
    for (const auto& row : rows)
        for (int x : row) maxv = std::max(maxv, x);
    Composition mu(static_cast<std::size_t>(maxv), 0);
    for (const auto& row : rows)
        for (int x : row) ++mu[static_cast<std::size_t>(x) - 1];
    return mu;
}

Word reading_word(const SSYT& t) {
    Word w;
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

bool is_lattice_word(const Word& w) {
    int maxv = 0;
    for (int x : w) maxv = std::max(maxv, x);
    std::vector<int> cnt(static_cast<std::size_t>(maxv) + 1, 0);
    for (int x : w) {
        ++cnt[static_cast<std::size_t>(x)];
        if (x > 1 && cnt[static_cast<std::size_t>(x)] >
                         cnt[static_cast<std::size_t>(x) - 1])
            return false;
    }
    return true;
}

namespace {

struct Cell {
    int row;
    int col;  // absolute column, 0-based
};

void ssyt_rec(const SkewShape& shape, const Composition& target,
              std::vector<Cell>& cells, std::size_t k,
              std::vector<std::vector<int>>& rows, Composition& count,
              const std::function<void(const SSYT&)>& fn) {
    if (k == cells.size()) {
        SSYT t;
        t.shape = shape;
        t.rows = rows;
        fn(t);
        return;
    }
    const Cell& c = cells[k];
    int lo = 1;
    // left neighbor in the same row
    int inner_c = shape.inner.part(static_cast<std::size_t>(c.row));
    if (c.col > inner_c) {
        int left = rows[static_cast<std::size_t>(c.row)]
                       [static_cast<std::size_t>(c.col - inner_c) - 1];
        lo = std::max(lo, left);
    }
    // neighbor above, strict
    if (c.row > 0) {
        int r = c.row - 1;
        int ic = shape.inner.part(static_cast<std::size_t>(r));
        int oc = shape.outer.part(static_cast<std::size_t>(r));
        if (c.col >= ic && c.col < oc) {
            int above = rows[static_cast<std::size_t>(r)]
                            [static_cast<std::size_t>(c.col - ic)];
            lo = std::max(lo, above + 1);
        }
    }
    for (int v = lo; v <= static_cast<int>(target.size()); ++v) {
        std::size_t vi = static_cast<std::size_t>(v) - 1;
        if (count[vi] >= target[vi]) continue;
        rows[static_cast<std::size_t>(c.row)].push_back(v);
        ++count[vi];
        ssyt_rec(shape, target, cells, k + 1, rows, count, fn);
        --count[vi];
        rows[static_cast<std::size_t>(c.row)].pop_back();
    }
}

}  // namespace

void for_each_ssyt(const SkewShape& shape, const Composition& weight,
                   const std::function<void(const SSYT&)>& fn) {
    if (shape.cell_count() != qhall::weight(weight))
        throw std::invalid_argument("for_each_ssyt: |shape| != |weight|");
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < shape.outer.length(); ++r)
        for (int c = shape.inner.part(r); c < shape.outer.part(r); ++c)
            cells.push_back({static_cast<int>(r), c});
    std::vector<std::vector<int>> rows(shape.outer.length());
    Composition count(weight.size(), 0);
    ssyt_rec(shape, weight, cells, 0, rows, count, fn);
}

std::vector<SSYT> enumerate_ssyt(const SkewShape& shape,
                                 const Composition& weight) {
    std::vector<SSYT> out;
    for_each_ssyt(shape, weight, [&](const SSYT& t) { out.push_back(t); });
    return out;
}

long kostka_number(const Partition& eta, const Composition& mu) {
    if (eta.weight() != qhall::weight(mu))
        throw std::invalid_argument("kostka_number: weight mismatch");
    // invariant under permuting mu, so memoize on the sorted weight
    static std::map<std::pair<Partition, Partition>, long> cache;
    static std::mutex m;
    Partition mup = Partition::from_composition(mu);
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({eta, mup});
        if (it != cache.end()) return it->second;
    }
    long n = 0;
    for_each_ssyt(SkewShape(eta), Composition(mup.parts()),
                  [&](const SSYT&) { ++n; });
    std::lock_guard<std::mutex> lock(m);
    cache.emplace(std::make_pair(eta, mup), n);
    return n;
}

long charge(const Word& w) {
    if (w.empty()) return 0;
    Composition mu = word_weight(w);
    for (std::size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] < mu[i + 1])
            throw std::invalid_argument("charge: weight is not a partition");
    const int n = static_cast<int>(w.size());
    std::vector<bool> used(w.size(), false);
    Composition rem = mu;
    long total = 0;
    int remaining = n;
    while (remaining > 0) {
        int top = static_cast<int>(rem.size());
        while (top > 0 && rem[static_cast<std::size_t>(top) - 1] == 0) --top;
        // leftmost unused 1; successive letters are found scanning rightward
        // cyclically, the index growing by one on every wrap
        int pos = -1;
        for (int i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)] && w[static_cast<std::size_t>(i)] == 1) {
                pos = i;
                break;
            }
        used[static_cast<std::size_t>(pos)] = true;
        --rem[0];
        --remaining;
        long idx = 0;
        for (int r = 2; r <= top; ++r) {
            int found = -1;
            bool wrapped = false;
            for (int i = pos + 1; i < n; ++i)
                if (!used[static_cast<std::size_t>(i)] &&
                    w[static_cast<std::size_t>(i)] == r) {
                    found = i;
                    break;
                }
            if (found < 0) {
                wrapped = true;
                for (int i = 0; i < pos; ++i)
                    if (!used[static_cast<std::size_t>(i)] &&
                        w[static_cast<std::size_t>(i)] == r) {
                        found = i;
                        break;
                    }
            }
            used[static_cast<std::size_t>(found)] = true;
            --rem[static_cast<std::size_t>(r) - 1];
            --remaining;
            if (wrapped) ++idx;
            total += idx;
            pos = found;
        }
    }
    return total;
}

LaurentPoly kostka_foulkes(const Partition& eta, const Composition& mu) {
    if (eta.weight() != qhall::weight(mu))
        throw std::invalid_argument("kostka_foulkes: weight mismatch");
    static std::map<std::pair<Partition, Partition>, LaurentPoly> cache;
    static std::mutex m;
    Partition la = Partition::from_composition(mu);
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({eta, la});
        if (it != cache.end()) return it->second;
    }
    LaurentPoly r;
    for_each_ssyt(SkewShape(eta), Composition(la.parts()), [&](const SSYT& t) {
        r.add_term(charge(reading_word(t)), 1);
    });
    std::lock_guard<std::mutex> lock(m);
    cache.emplace(std::make_pair(eta, la), r);
    return r;
}

LaurentPoly cocharge_kf(const Partition& eta, const Partition& la) {
    return kostka_foulkes(eta, Composition(la.parts()))
        .reciprocal()
        .shifted(n_stat(la));
}

LaurentPoly kf_hook_column(const Partition& la, int N) {
    if (la.weight() != N)
        throw std::invalid_argument("kf_hook_column: |la| != N");
    LaurentPoly p = q_pochhammer(N).shifted(n_stat(conjugate(la)));
    for (int h : hook_lengths(la)) {
        LaurentPoly d = LaurentPoly::one();
        d.add_term(h, -1);
        auto q = p.divided_exactly_by(d);
        if (!q)
            throw std::logic_error("kf_hook_column: non-exact hook division");
        p = std::move(*q);
    }
    return p;
}

SkewShape border_strip(const std::vector<int>& S, int n) {
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 1 || S[i] > n - 1)
            throw std::invalid_argument("border_strip: entry outside [1,n-1]");
        if (i > 0 && S[i] <= S[i - 1])
            throw std::invalid_argument("border_strip: set must be strictly increasing");
    }
    // row lengths bottom-up
    std::vector<int> lens;
    int prev = 0;
    for (int a : S) {
        lens.push_back(a - prev);
        prev = a;
    }
    lens.push_back(n - prev);
    const int m = static_cast<int>(lens.size());
    std::vector<int> start(static_cast<std::size_t>(m));  // top-down, 1-based
    std::vector<int> len_td(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        len_td[static_cast<std::size_t>(i)] = lens[static_cast<std::size_t>(m - 1 - i)];
    start[static_cast<std::size_t>(m) - 1] = 1;
    for (int i = m - 2; i >= 0; --i)
        start[static_cast<std::size_t>(i)] = start[static_cast<std::size_t>(i) + 1] +
                                             len_td[static_cast<std::size_t>(i) + 1] - 1;
    std::vector<int> outer, inner;
    for (int i = 0; i < m; ++i)
        outer.push_back(start[static_cast<std::size_t>(i)] +
                        len_td[static_cast<std::size_t>(i)] - 1);
    for (int i = 0; i < m; ++i)
        inner.push_back(start[static_cast<std::size_t>(i)] - 1);
    return SkewShape(Partition(outer), Partition(inner));
}

long lr_count(const SkewShape& shape, const Partition& eta) {
    if (shape.cell_count() != eta.weight())
        throw std::invalid_argument("lr_count: weight mismatch");
    long n = 0;
    for_each_ssyt(shape, Composition(eta.parts()), [&](const SSYT& t) {
        if (is_lattice_word(reading_word(t))) ++n;
    });
    return n;
}

long lr_coefficient(const Partition& la, const Partition& mu,
                    const Partition& nu) {
    if (mu.weight() + nu.weight() != la.weight())
        throw std::invalid_argument("lr_coefficient: weight mismatch");
    if (!contains(la, mu)) return 0;
    static std::map<std::tuple<Partition, Partition, Partition>, long> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({la, mu, nu});
        if (it != cache.end()) return it->second;
    }
    long c = lr_count(SkewShape(la, mu), nu);
    std::lock_guard<std::mutex> lock(m);
    cache.emplace(std::make_tuple(la, mu, nu), c);
    return c;
}

namespace {

SSYT straight_tableau(const std::vector<std::vector<int>>& rows) {
    std::vector<int> shape;
    for (const auto& r : rows)
        if (!r.empty()) shape.push_back(static_cast<int>(r.size()));
    SSYT t;
    t.shape = SkewShape(Partition(shape));
    t.rows.assign(rows.begin(), rows.begin() + shape.size());
    return t;
}

SSYT transpose_tableau(const SSYT& t) {
    std::vector<std::vector<int>> cols;
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (cols.size() <= j) cols.emplace_back();
            cols[j].push_back(row[j]);
        }
    }
    return straight_tableau(cols);
}

}  // namespace

DualRSKPair dual_rsk(const std::vector<std::vector<int>>& m) {
    for (const auto& row : m)
        for (int x : row)
            if (x != 0 && x != 1)
                throw std::invalid_argument("dual_rsk: entries must be 0/1");
    // Row-strict insertion tableau built with the ">= bumps" rule, recording
    // tableau R of the same shape; the pair is (P = transpose, Q = R).
    std::vector<std::vector<int>> p;  // row-strict rows
    std::vector<std::vector<int>> rec;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (!m[i][j]) continue;
            int x = static_cast<int>(j) + 1;
            std::size_t r = 0;
            for (;;) {
                if (r == p.size()) {
                    p.emplace_back();
                    rec.emplace_back();
                }
                auto& row = p[r];
                auto it = std::lower_bound(row.begin(), row.end(), x);
                if (it == row.end()) {
                    row.push_back(x);
                    rec[r].push_back(static_cast<int>(i) + 1);
                    break;
                }
                std::swap(x, *it);
                ++r;
            }
        }
    }
    DualRSKPair out;
    out.P = transpose_tableau(straight_tableau(p));
    out.Q = straight_tableau(rec);
    return out;
}

std::vector<std::vector<int>> dual_rsk_inverse(const DualRSKPair& pq,
                                               int ncols) {
    // undo insertions in reverse order of the recording entries
    SSYT pt = transpose_tableau(pq.P);  // row-strict form
    std::vector<std::vector<int>> p = pt.rows;
    std::vector<std::vector<int>> rec = pq.Q.rows;
    struct Ev {
        int letter;
        std::size_t row;
        std::size_t col;
    };
    std::vector<Ev> evs;
    for (std::size_t r = 0; r < rec.size(); ++r)
        for (std::size_t c = 0; c < rec[r].size(); ++c)
            evs.push_back({rec[r][c], r, c});
    // insertion order: by letter, then by column within the letter (cells of
    // one letter are added left to right); undo in reverse
    std::stable_sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
        if (a.letter != b.letter) return a.letter < b.letter;
        return a.col < b.col;
    });
    int nrows = 0;
    for (const auto& e : evs) nrows = std::max(nrows, e.letter);
    std::vector<std::vector<int>> m(static_cast<std::size_t>(nrows),
                                    std::vector<int>(static_cast<std::size_t>(ncols), 0));
    for (auto it = evs.rbegin(); it != evs.rend(); ++it) {
        std::size_t r = it->row;
        int x = p[r].back();
        p[r].pop_back();
        while (r > 0) {
            --r;
            auto& row = p[r];
            // the entry that bumped x: rightmost entry <= x
            auto jt = std::upper_bound(row.begin(), row.end(), x);
            if (jt == row.begin())
                throw std::logic_error("dual_rsk_inverse: corrupt pair");
            --jt;
            std::swap(x, *jt);
        }
        if (x > ncols) throw std::invalid_argument("dual_rsk_inverse: ncols too small");
        m[static_cast<std::size_t>(it->letter) - 1][static_cast<std::size_t>(x) - 1] = 1;
        while (!p.empty() && p.back().empty()) p.pop_back();
    }
    return m;
}

}  // namespace qhall
