#pragma once

// Explicit constructions of unitrades, bitrades and the ternary codes used to
// build many inequivalent bitrades.

#include <tritrade/monomial.hpp>
#include <tritrade/trade.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace tritrade {

// ---- products and extensions -------------------------------------------------

/// Direct product; (x, y) lies in part 0 when x and y lie in parts of equal index.
inline BipartiteTrade product(const BipartiteTrade &b, const BipartiteTrade &c) {
    if (b.k() != c.k()) {
        throw error(errc::invalid_argument, "product needs a common alphabet");
    }
    const int n = b.n() + c.n();
    const Cell right = cell_count(c.n(), c.k());
    const Cell total = cell_count(n, b.k());
    Bits s(total), p0(total), p1(total);
    for (auto x = b.base().support().find_first(); x != Bits::npos; x = b.base().support().find_next(x)) {
        for (auto y = c.base().support().find_first(); y != Bits::npos; y = c.base().support().find_next(y)) {
            const Cell z = static_cast<Cell>(x) * right + static_cast<Cell>(y);
            s[z] = true;
            (b.part0().test(x) == c.part0().test(y) ? p0 : p1)[z] = true;
        }
    }
    return BipartiteTrade(TradeSet(n, b.k(), std::move(s)), std::move(p0), std::move(p1));
}

/// Replaces the last coordinate by (x_n + x_{n+1}) mod k, m times.
inline BipartiteTrade k_extension(const BipartiteTrade &b, int m) {
    if (m < 0) {
        throw error(errc::invalid_argument, "extension count must be non-negative");
    }
    if (m > 0 && b.n() == 0) {
        throw error(errc::invalid_argument, "cannot extend a 0-dimensional trade");
    }
    BipartiteTrade cur = b;
    const auto k = static_cast<Cell>(b.k());
    for (int step = 0; step < m; ++step) {
        const int n = cur.n() + 1;
        const Cell total = cell_count(n, cur.k());
        Bits s(total), p0(total), p1(total);
        for (Cell z = 0; z < total; ++z) {
            const Cell head = z / (k * k);
            const Cell a = (z / k) % k;
            const Cell c = z % k;
            const Cell src = head * k + (a + c) % k;
            s[z] = cur.base().contains(src);
            p0[z] = cur.part0().test(src);
            p1[z] = cur.part1().test(src);
        }
        cur = BipartiteTrade(TradeSet(n, cur.k(), std::move(s)), std::move(p0), std::move(p1));
    }
    return cur;
}

/// {x : sum x_i != 0 mod 3}, part 0 on residue 1.
inline BipartiteTrade maximal_bitrade(int n) {
    if (n < 1) {
        throw error(errc::invalid_argument, "maximal bitrade needs n >= 1");
    }
    const Cell total = cell_count(n, 3);
    Bits s(total), p0(total), p1(total);
    for (Cell c = 0; c < total; ++c) {
        const auto d = digits_of(c, n, 3);
        int r = 0;
        for (auto x : d) {
            r += x;
        }
        r %= 3;
        s[c] = r != 0;
        p0[c] = r == 1;
        p1[c] = r == 2;
    }
    return BipartiteTrade(TradeSet(n, 3, std::move(s)), std::move(p0), std::move(p1));
}

/// Number of distinct maximal bitrades (as sets) in Q_3^n.
inline std::uint64_t maximal_bitrade_count(int n) { return 3ULL << (n - 1); }

/// Whether the complement of a trade meets every line exactly once.
inline bool complement_is_mds(const TradeSet &s) {
    const auto inc = s.line_incidence();
    return std::all_of(inc.begin(), inc.end(), [&](auto c) { return c == s.k() - 1; });
}

/// U[x^u XOR x^v] with u = 0^n and v = 1^{n-s} 0^s: size 2^{n+1} - 2^{s+1}.
inline BipartiteTrade rank2_family(int n, int s) {
    if (n < 1 || s < 0 || s > n - 1) {
        throw error(errc::bad_s, "need 0 <= s <= n-1");
    }
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n - s; ++i) {
        v[static_cast<std::size_t>(i)] = 1;
    }
    const MonomialSet ms(n, {Word(3, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)), Word(3, v)});
    return *bipartition(u_from_bool(f_from_monomials(ms)));
}

inline MonomialSet bitrade14_witness() { return MonomialSet::parse("100;011;002"); }

/// 14 * 3^{n-3} points.
inline BipartiteTrade bitrade14(int n) {
    if (n < 3) {
        throw error(errc::dimension_too_small, "the size-14 series starts at n = 3");
    }
    const auto base = bipartition(u_from_bool(f_from_monomials(bitrade14_witness())));
    return k_extension(*base, n - 3);
}

// ---- ternary codes -----------------------------------------------------------

struct Composition {
    int n0 = 0;
    int n1 = 0;
    int n2 = 0;

    friend auto operator<=>(const Composition &, const Composition &) = default;
};

inline Composition composition(const Word &w) {
    Composition c;
    for (int i = 0; i < w.n(); ++i) {
        (w[i] == 0 ? c.n0 : (w[i] == 1 ? c.n1 : c.n2)) += 1;
    }
    return c;
}

/// Linear code over GF(3) given by generator rows.
class TernaryCode {
  public:
    TernaryCode(int length, std::vector<std::vector<std::uint8_t>> rows) : length_(length), rows_(std::move(rows)) {
        for (const auto &r : rows_) {
            if (static_cast<int>(r.size()) != length_) {
                throw error(errc::invalid_argument, "generator row length mismatch");
            }
        }
        const auto t = rows_.size();
        std::set<std::vector<std::uint8_t>> seen;
        for (std::uint64_t code = 0; code < ipow(3, static_cast<unsigned>(t)); ++code) {
            std::vector<std::uint8_t> w(static_cast<std::size_t>(length_), 0);
            auto rest = code;
            for (std::size_t i = 0; i < t; ++i) {
                const auto a = static_cast<std::uint8_t>(rest % 3);
                rest /= 3;
                for (int j = 0; j < length_; ++j) {
                    w[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((w[static_cast<std::size_t>(j)] + a * rows_[i][static_cast<std::size_t>(j)]) % 3);
                }
            }
            if (!seen.insert(w).second) {
                throw error(errc::invalid_argument, "generator rows are dependent");
            }
            words_.emplace_back(3, std::move(w));
        }
        std::sort(words_.begin(), words_.end());
    }

    int length() const noexcept { return length_; }
    int dimension() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<std::uint8_t>> &rows() const noexcept { return rows_; }
    const std::vector<Word> &words() const noexcept { return words_; }

    Word row(std::size_t i) const { return Word(3, rows_[i]); }

    int min_distance() const {
        int d = length_ + 1;
        for (const auto &w : words_) {
            const int wt = length_ - composition(w).n0;
            if (wt > 0) {
                d = std::min(d, wt);
            }
        }
        return d;
    }

    /// No other codeword shares the composition of basis row i.
    bool row_composition_unique(std::size_t i) const {
        const auto c = composition(row(i));
        return std::count_if(words_.begin(), words_.end(), [&](const Word &w) { return composition(w) == c; }) == 1;
    }

  private:
    int length_;
    std::vector<std::vector<std::uint8_t>> rows_;
    std::vector<Word> words_;
};

enum class ColumnScaling { first_nonzero_one, last_nonzero_one };

/// Columns are the projective points of GF(3)^t in lex order, each scaled so
/// its first (or last) nonzero entry is 1.
inline TernaryCode hamming_dual(int t, ColumnScaling scaling = ColumnScaling::first_nonzero_one) {
    if (t < 1) {
        throw error(errc::invalid_argument, "need t >= 1");
    }
    std::vector<std::vector<std::uint8_t>> cols;
    for (Cell c = 1; c < cell_count(t, 3); ++c) {
        const auto d = digits_of(c, t, 3);
        const auto lead = scaling == ColumnScaling::first_nonzero_one
                              ? *std::find_if(d.begin(), d.end(), [](auto x) { return x != 0; })
                              : *std::find_if(d.rbegin(), d.rend(), [](auto x) { return x != 0; });
        if (lead == 1) {
            cols.push_back(d);
        }
    }
    std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(t), std::vector<std::uint8_t>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (int i = 0; i < t; ++i) {
            rows[static_cast<std::size_t>(i)][j] = cols[j][static_cast<std::size_t>(i)];
        }
    }
    return TernaryCode(static_cast<int>(cols.size()), std::move(rows));
}

/// H_t with 2^{j-1} extra copies of the j-th unit column, j = 2..t. Built on
/// the last-nonzero scaling: with the first-nonzero one, rows 2..t share
/// their composition with other codewords.
inline TernaryCode hprime(int t) {
    if (t < 2) {
        throw error(errc::invalid_argument, "need t >= 2");
    }
    auto rows = hamming_dual(t, ColumnScaling::last_nonzero_one).rows();
    for (int j = 2; j <= t; ++j) {
        for (int copy = 0; copy < (1 << (j - 1)); ++copy) {
            for (int i = 0; i < t; ++i) {
                rows[static_cast<std::size_t>(i)].push_back(i == j - 1 ? 1 : 0);
            }
        }
    }
    const auto len = static_cast<int>(rows[0].size());
    return TernaryCode(len, std::move(rows));
}

struct OddDistanceReport {
    std::size_t size = 0;
    int length = 0;
    int k = 0;
    bool pairwise_odd = true;
    std::size_t bound = 0; // (k-1) m + 2
    bool within_bound = true;
    bool mod4_applicable = false; // |A| equals the embedding dimension + 2
    bool mod4_holds = true;
};

/// Checks pairwise odd distances and the (k-1) m + 2 size bound. When |A|
/// sits exactly at the bound, also checks |A| = 0 mod 4.
inline OddDistanceReport verify_odd_distance_bound(std::span<const Word> a) {
    OddDistanceReport r;
    r.size = a.size();
    if (a.empty()) {
        return r;
    }
    r.length = a[0].n();
    r.k = a[0].k();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (hamming_distance(a[i], a[j]) % 2 == 0) {
                r.pairwise_odd = false;
            }
        }
    }
    r.bound = static_cast<std::size_t>((r.k - 1) * r.length + 2);
    r.within_bound = !r.pairwise_odd || r.size <= r.bound;
    r.mod4_applicable = r.pairwise_odd && r.size == r.bound;
    r.mod4_holds = !r.mod4_applicable || r.size % 4 == 0;
    return r;
}

// ---- monomial recovery -------------------------------------------------------

/// count[v] = |S intersect U[x^v]| for every v in Q_3^n at once.
inline std::vector<std::uint32_t> cube_intersections(const TradeSet &s) {
    if (s.k() != 3) {
        throw error(errc::invalid_argument, "cube intersections are ternary");
    }
    const int n = s.n();
    std::vector<std::uint32_t> a(cell_count(n, 3));
    for (std::size_t c = 0; c < a.size(); ++c) {
        a[c] = s.contains(c) ? 1 : 0;
    }
    // axis transform (a0, a1, a2) -> (a0 + a1, a1 + a2, a0 + a2)
    Cell stride = 1;
    for (int d = 0; d < n; ++d) {
        for (Cell base = 0; base < a.size(); ++base) {
            if ((base / stride) % 3 != 0) {
                continue;
            }
            const auto x0 = a[base];
            const auto x1 = a[base + stride];
            const auto x2 = a[base + 2 * stride];
            a[base] = x0 + x1;
            a[base + stride] = x1 + x2;
            a[base + 2 * stride] = x0 + x2;
        }
        stride *= 3;
    }
    return a;
}

/// Recovers V from U = U[f^V] when V has code distance >= distance and
/// |V| 2^{n-D+1} < 2^{n-2}: v is in V iff |U cap U[x^v]| >= 2^n - 2^{n-2}.
inline MonomialSet recover_monomials(const TradeSet &u, int distance) {
    const int n = u.n();
    if (n < 2) {
        throw error(errc::precondition_unverifiable, "recovery needs n >= 2");
    }
    const auto counts = cube_intersections(u);
    const std::uint64_t full = std::uint64_t{1} << n;
    const std::uint64_t threshold = full - (full >> 2);
    std::vector<Word> found;
    for (Cell v = 0; v < counts.size(); ++v) {
        if (counts[v] >= threshold) {
            found.push_back(Word::from_cell(v, n, 3));
        }
    }
    MonomialSet out(n, found);
    const int d = std::clamp(distance, 0, 60);
    // |V| 2^{n-D+1} < 2^{n-2}  <=>  |V| < 2^{D-3}
    const bool inequality = d >= 3 && found.size() < (std::uint64_t{1} << (d - 3));
    if (!inequality) {
        throw error(errc::precondition_unverifiable, "|V| 2^{n-D+1} < 2^{n-2} does not hold");
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            if (hamming_distance(found[i], found[j]) < d) {
                throw error(errc::precondition_unverifiable, "recovered words are closer than the stated distance");
            }
        }
    }
    if (!(u_from_bool(f_from_monomials(out)) == u)) {
        throw error(errc::ambiguous_recovery, "recovered monomials do not reproduce the unitrade");
    }
    return out;
}

// ---- balanced functions ------------------------------------------------------

/// ones[face] for every face of Q_2^n, faces written over {0, 1, 2 = free}.
inline std::vector<std::uint32_t> face_weights(const BoolFn &f) {
    const int n = f.n();
    std::vector<std::uint32_t> a(cell_count(n, 3), 0);
    const auto bin = binary_cells(n);
    for (Cell b = 0; b < bin.size(); ++b) {
        a[bin[b]] = f(b) ? 1 : 0;
    }
    Cell stride = 1;
    for (int d = 0; d < n; ++d) {
        for (Cell base = 0; base < a.size(); ++base) {
            if ((base / stride) % 3 == 0) {
                a[base + 2 * stride] = a[base] + a[base + stride];
            }
        }
        stride *= 3;
    }
    return a;
}

/// Ones and zeros differ by at most 2 on every face of every dimension.
inline bool almost_balanced_in_faces(const BoolFn &f) {
    const auto w = face_weights(f);
    for (Cell face = 0; face < w.size(); ++face) {
        const auto d = digits_of(face, f.n(), 3);
        const auto size = std::int64_t{1} << std::count(d.begin(), d.end(), 2);
        const auto ones = static_cast<std::int64_t>(w[face]);
        if (std::abs(2 * ones - size) > 2) {
            return false;
        }
    }
    return true;
}

inline BoolFn parity(int n) {
    return BoolFn::from_predicate(n, [](const Word &x) {
        int s = 0;
        for (int i = 0; i < x.n(); ++i) {
            s ^= x[i];
        }
        return s != 0;
    });
}

/// U[f XOR p] for an almost-balanced-in-faces f, p the parity function.
inline BipartiteTrade pot12(const BoolFn &f) {
    if (!almost_balanced_in_faces(f)) {
        throw error(errc::not_balanced, "function is not almost balanced in faces");
    }
    const auto u = u_from_bool(f ^ parity(f.n()));
    auto b = bipartition(u);
    if (!b) {
        throw error(errc::not_a_unitrade, "U[f + p] is not bipartite for this f");
    }
    return *b;
}

// ---- Reed-Muller embedding ---------------------------------------------------

/// F over Q_2^{2n} with F(z) = [psi(z) in U], psi(a, b) = 2a + b per pair.
inline BoolFn rm_embed(const TradeSet &u) {
    if (u.k() != 4) {
        throw error(errc::invalid_argument, "rm_embed takes a unitrade over Q_4^n");
    }
    if (!is_unitrade(u)) {
        throw error(errc::not_a_unitrade, "input is not a unitrade");
    }
    const int n = u.n();
    // the pair (z_{2i}, z_{2i+1}) is two binary digits of a base-4 digit, so
    // with most-significant-first indexing the cell numbers coincide
    Bits b(cell_count(2 * n, 2));
    for (Cell c = 0; c < b.size(); ++c) {
        b[c] = u.contains(c);
    }
    return BoolFn(2 * n, std::move(b));
}

} // namespace tritrade
