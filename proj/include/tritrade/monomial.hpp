#pragma once

// Monomial cubes, XOR-of-monomials representations, exact rank (minimal ESOP
// size with mixed polarity) and the cardinality formulas for small sets of
// monomials.
//
// A monomial word v over {0,1,2} encodes x^v = prod_i x_i^{v_i} with x^0 = 1,
// x^1 = x and x^2 = x + 1 (the digit 2 reads as -1). Its unitrade is the cube
// {0,1} x ... with factor {0,1}, {1,2}, {0,2} for digits 0, 1, 2.

#include <tritrade/trade.hpp>

#include <array>
#include <mutex>
#include <set>

namespace tritrade {

/// Set of exponent words over Q_3^n; duplicates removed, first-seen order kept.
class MonomialSet {
  public:
    MonomialSet() = default;
    MonomialSet(int n, std::vector<Word> words) : n_(n) {
        for (auto &w : words) {
            if (w.n() != n || w.k() != 3) {
                throw error(errc::invalid_argument, "monomial words must lie in Q_3^n");
            }
            if (std::find(words_.begin(), words_.end(), w) == words_.end()) {
                words_.push_back(std::move(w));
            }
        }
    }

    /// "100;011;002"
    static MonomialSet parse(std::string_view text) {
        std::vector<Word> words;
        int n = -1;
        std::size_t pos = 0;
        while (pos <= text.size() && !text.empty()) {
            const auto end = std::min(text.find(';', pos), text.size());
            auto w = Word::parse(text.substr(pos, end - pos), 3);
            if (n >= 0 && w.n() != n) {
                throw error(errc::invalid_argument, "monomial words of different length");
            }
            n = w.n();
            words.push_back(std::move(w));
            pos = end + 1;
        }
        return MonomialSet(std::max(n, 0), std::move(words));
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::vector<Word> &words() const noexcept { return words_; }
    const Word &operator[](std::size_t i) const { return words_[i]; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (i) {
                s.push_back(';');
            }
            s += words_[i].str();
        }
        return s;
    }

    friend bool operator==(const MonomialSet &, const MonomialSet &) = default;

  private:
    int n_ = 0;
    std::vector<Word> words_;
};

namespace detail {

// The two symbols of the cube factor for exponent digit d, smaller first.
constexpr std::array<std::array<std::uint8_t, 2>, 3> cube_factor = {{{0, 1}, {1, 2}, {0, 2}}};

} // namespace detail

inline TradeSet monomial_cube(const Word &v) {
    if (v.k() != 3) {
        throw error(errc::invalid_argument, "monomial words are ternary");
    }
    const int n = v.n();
    std::vector<Cell> cells;
    cells.reserve(cell_count(n, 2));
    for (Cell b = 0; b < cell_count(n, 2); ++b) {
        Cell c = 0;
        for (int i = 0; i < n; ++i) {
            c = c * 3 + detail::cube_factor[v[i]][(b >> (n - 1 - i)) & 1U];
        }
        cells.push_back(c);
    }
    return TradeSet::from_cells(n, 3, cells);
}

/// Truth table of x^v on Q_2^n.
inline BoolFn monomial_fn(const Word &v) {
    return BoolFn::from_predicate(v.n(), [&](const Word &x) {
        bool val = true;
        for (int i = 0; i < v.n(); ++i) {
            if (v[i] == 1) {
                val = val && x[i] == 1;
            } else if (v[i] == 2) {
                val = val && x[i] == 0;
            }
        }
        return val;
    });
}

inline BoolFn f_from_monomials(const MonomialSet &v) {
    BoolFn f(v.n());
    for (const auto &w : v.words()) {
        f = f ^ monomial_fn(w);
    }
    return f;
}

/// Canonical signed function of the monomial cube: (-1)^(number of
/// coordinates holding the larger symbol of the factor).
inline TernFn monomial_sign_fn(const Word &v) {
    const int n = v.n();
    std::vector<std::int8_t> vals(cell_count(n, 3), 0);
    for (Cell b = 0; b < cell_count(n, 2); ++b) {
        Cell c = 0;
        for (int i = 0; i < n; ++i) {
            c = c * 3 + detail::cube_factor[v[i]][(b >> (n - 1 - i)) & 1U];
        }
        vals[c] = static_cast<std::int8_t>(std::popcount(b) % 2 ? -1 : 1);
    }
    return TernFn(n, std::move(vals));
}

// ---- rank --------------------------------------------------------------------

namespace detail {

inline std::uint64_t monomial_table(const Word &v) { return monomial_fn(v).table(); }

inline std::vector<std::uint64_t> monomial_tables(int n) {
    std::vector<std::uint64_t> out;
    for (Cell c = 0; c < cell_count(n, 3); ++c) {
        out.push_back(monomial_table(Word::from_cell(c, n, 3)));
    }
    return out;
}

// Distance from 0 in the Cayley graph of GF(2)^{2^n} generated by monomials.
inline std::vector<std::uint8_t> bfs_rank_table(int n) {
    const std::size_t states = std::size_t{1} << (std::size_t{1} << n);
    const auto gens = monomial_tables(n);
    std::vector<std::uint8_t> dist(states, 0xFF);
    std::vector<std::uint32_t> frontier{0};
    dist[0] = 0;
    std::uint8_t layer = 0;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        ++layer;
        for (auto s : frontier) {
            for (auto g : gens) {
                const auto t = static_cast<std::uint32_t>(s ^ g);
                if (dist[t] == 0xFF) {
                    dist[t] = layer;
                    next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

// rank_n(f) = min_A rank(A) + rank(f0 + A) + rank(f1 + A), where f0, f1 are
// the restrictions to x_0 = 0, 1. Grouping the monomials of a representation
// by their first exponent digit gives A (digit 0), f1 + A (digit 1) and
// f0 + A (digit 2).
inline int decomposition_rank(std::uint64_t f, int n, const std::vector<std::uint8_t> &lower) {
    const unsigned half = 1U << (n - 1);
    const std::uint64_t mask = half == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << half) - 1;
    const std::uint64_t f0 = f & mask;
    const std::uint64_t f1 = (f >> half) & mask;
    int best = 1 << 20;
    for (std::uint64_t a = 0; a <= mask; ++a) {
        const int r = lower[a] + lower[f0 ^ a] + lower[f1 ^ a];
        best = std::min(best, r);
    }
    return best;
}

inline std::vector<std::uint8_t> decomposition_rank_table(int n) {
    std::vector<std::uint8_t> table{0, 1};
    for (int m = 1; m <= n; ++m) {
        const std::size_t states = std::size_t{1} << (std::size_t{1} << m);
        std::vector<std::uint8_t> next(states);
        for (std::uint64_t f = 0; f < states; ++f) {
            next[f] = static_cast<std::uint8_t>(decomposition_rank(f, m, table));
        }
        table = std::move(next);
    }
    return table;
}

template <class Build>
const std::vector<std::uint8_t> &cached_table(int n, Build build, std::array<std::vector<std::uint8_t>, 5> &slots, std::mutex &mu) {
    std::lock_guard lock(mu);
    auto &slot = slots[static_cast<std::size_t>(n)];
    if (slot.empty()) {
        slot = build(n);
    }
    return slot;
}

} // namespace detail

enum class RankEngine { bfs, decomposition };

/// Exact rank table for all 2^{2^n} boolean functions, n <= 4.
inline const std::vector<std::uint8_t> &rank_table(int n, RankEngine engine = RankEngine::bfs) {
    if (n < 0 || n > 4) {
        throw error(errc::dimension_too_large, "rank tables exist for n <= 4");
    }
    static std::mutex mu;
    static std::array<std::vector<std::uint8_t>, 5> bfs;
    static std::array<std::vector<std::uint8_t>, 5> dec;
    if (engine == RankEngine::bfs) {
        return detail::cached_table(n, detail::bfs_rank_table, bfs, mu);
    }
    return detail::cached_table(n, detail::decomposition_rank_table, dec, mu);
}

/// Minimal number of monomials whose XOR is f. Exact for n <= 4 by table,
/// n = 5 by one decomposition step over the n = 4 table when enabled.
inline int rank(const BoolFn &f, bool allow_n5 = false) {
    const int n = f.n();
    if (n <= 4) {
        return rank_table(n)[f.table()];
    }
    if (n == 5 && allow_n5) {
        return detail::decomposition_rank(f.table(), 5, rank_table(4));
    }
    throw error(errc::dimension_too_large, n == 5 ? "rank at n = 5 must be enabled explicitly" : "rank needs n <= 5");
}

inline int rank(const TradeSet &u, bool allow_n5 = false) {
    if (u.k() != 3 || !is_unitrade(u)) {
        throw error(errc::not_a_unitrade, "rank is defined for ternary unitrades");
    }
    return rank(bool_from_unitrade(u), allow_n5);
}

/// A minimal monomial representation of f (n <= 4), read off the BFS layers.
inline MonomialSet minimal_representation(const BoolFn &f) {
    const int n = f.n();
    const auto &dist = rank_table(n);
    const auto gens = detail::monomial_tables(n);
    std::vector<Word> words;
    std::uint64_t cur = f.table();
    while (cur != 0) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (dist[cur ^ gens[g]] + 1 == dist[cur]) {
                words.push_back(Word::from_cell(static_cast<Cell>(g), n, 3));
                cur ^= gens[g];
                break;
            }
        }
    }
    return MonomialSet(n, std::move(words));
}

// ---- cardinality formulas ----------------------------------------------------------

/// Number of columns where all words agree; minus_infinity when some column
/// carries all three symbols.
inline int r_of(std::span<const Word> w) {
    if (w.empty()) {
        throw error(errc::invalid_argument, "r(W) needs a nonempty set");
    }
    const int n = w[0].n();
    int equal = 0;
    for (int i = 0; i < n; ++i) {
        unsigned seen = 0;
        for (const auto &x : w) {
            seen |= 1U << x[i];
        }
        if (seen == 7U) {
            return minus_infinity;
        }
        equal += std::popcount(seen) == 1;
    }
    return equal;
}

inline int r_of(const MonomialSet &w) { return r_of(w.words()); }

inline constexpr std::size_t cardinality_formula_limit = 20;

/// |U[f^V]| = sum over nonempty W of (-2)^{|W|-1} 2^{r(W)}.
inline std::int64_t cardinality_formula(const MonomialSet &v) {
    if (v.size() > cardinality_formula_limit) {
        throw error(errc::too_many_monomials, "cardinality formula is limited to 20 monomials");
    }
    const std::size_t m = v.size();
    const int n = v.n();
    // per word, per column: symbol bit
    std::vector<std::uint32_t> sym(m * static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            sym[j * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1U << v[j][i];
        }
    }
    std::int64_t total = 0;
    std::vector<std::uint32_t> seen(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
        std::fill(seen.begin(), seen.end(), 0U);
        for (std::size_t j = 0; j < m; ++j) {
            if ((mask >> j) & 1U) {
                for (int i = 0; i < n; ++i) {
                    seen[static_cast<std::size_t>(i)] |= sym[j * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
                }
            }
        }
        int r = 0;
        bool dead = false;
        for (auto s : seen) {
            dead = dead || s == 7U;
            r += std::popcount(s) == 1;
        }
        if (dead) {
            continue;
        }
        const int t = std::popcount(mask);
        const std::int64_t sign = t % 2 ? 1 : -1;
        total += sign * (std::int64_t{1} << (t - 1)) * (std::int64_t{1} << r);
    }
    return total;
}

// ---- triples -------------------------------------------------------------------------

/// Column census of three rows a, b, c: k1 counts columns of shape (x,y,y),
/// k2 (y,x,y), k3 (y,y,x), k4 all distinct, k_eq all equal.
struct TripleProfile {
    int k1 = 0;
    int k2 = 0;
    int k3 = 0;
    int k4 = 0;
    int k_eq = 0;

    friend bool operator==(const TripleProfile &, const TripleProfile &) = default;
};

inline TripleProfile triple_profile(const Word &a, const Word &b, const Word &c) {
    if (a.n() != b.n() || a.n() != c.n()) {
        throw error(errc::invalid_argument, "rows of different length");
    }
    TripleProfile p;
    for (int i = 0; i < a.n(); ++i) {
        const bool ab = a[i] == b[i];
        const bool bc = b[i] == c[i];
        const bool ac = a[i] == c[i];
        if (ab && bc) {
            ++p.k_eq;
        } else if (bc) {
            ++p.k1;
        } else if (ac) {
            ++p.k2;
        } else if (ab) {
            ++p.k3;
        } else {
            ++p.k4;
        }
    }
    return p;
}

/// Profile of a three-word set, rows taken in the set's order.
inline TripleProfile triple_profile(const MonomialSet &v) {
    if (v.size() != 3) {
        throw error(errc::invalid_argument, "triple_profile needs exactly three words");
    }
    return triple_profile(v[0], v[1], v[2]);
}

/// 3 * 2^n - 2 (2^k1 + 2^k2 + 2^k3) + 4 [k4 = 0], valid without equal columns.
inline std::int64_t triple_cardinality(const TripleProfile &p, int n) {
    if (p.k_eq != 0) {
        throw error(errc::profile_has_equal_columns, "profile has all-equal columns");
    }
    if (p.k1 + p.k2 + p.k3 + p.k4 != n) {
        throw error(errc::invalid_argument, "profile does not sum to n");
    }
    const auto p2 = [](int e) { return std::int64_t{1} << e; };
    return 3 * p2(n) - 2 * (p2(p.k1) + p2(p.k2) + p2(p.k3)) + (p.k4 == 0 ? 4 : 0);
}

/// Cancels equal pairs and merges pairs at distance 1 (x^a + x^b = x^c for
/// the third symbol c) until no pair is closer than 2.
inline MonomialSet normalize_monomials(const MonomialSet &v) {
    std::vector<Word> words = v.words();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < words.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < words.size() && !changed; ++j) {
                const int d = hamming_distance(words[i], words[j]);
                if (d == 0) {
                    words.erase(words.begin() + static_cast<std::ptrdiff_t>(j));
                    words.erase(words.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                } else if (d == 1) {
                    std::vector<std::uint8_t> merged(words[i].digits().begin(), words[i].digits().end());
                    for (std::size_t t = 0; t < merged.size(); ++t) {
                        if (merged[t] != words[j][static_cast<int>(t)]) {
                            merged[t] = static_cast<std::uint8_t>(3 - merged[t] - words[j][static_cast<int>(t)]);
                        }
                    }
                    words.erase(words.begin() + static_cast<std::ptrdiff_t>(j));
                    words[i] = Word(3, std::move(merged));
                    changed = true;
                }
            }
        }
    }
    return MonomialSet(v.n(), std::move(words));
}

enum class TripleRule {
    two_coordinates,    // the words differ in at most two coordinates
    dominated,          // some word agrees with one of the others in every coordinate
    two_valued_columns, // every column two-valued, nobody dominated
    odd_distance_sum,
    even_distance_sum,
};

inline std::string_view to_string(TripleRule r) {
    switch (r) {
    case TripleRule::two_coordinates: return "two-coordinates";
    case TripleRule::dominated: return "dominated";
    case TripleRule::two_valued_columns: return "two-valued-columns";
    case TripleRule::odd_distance_sum: return "odd-distance-sum";
    case TripleRule::even_distance_sum: return "even-distance-sum";
    }
    return "unknown";
}

struct TripleVerdict {
    bool bitrade = false;
    TripleRule rule = TripleRule::two_coordinates;
};

/// Bitrade test for U[f^V], |V| = 3, without building the set.
inline TripleVerdict triple_is_bitrade(const MonomialSet &v) {
    if (v.size() != 3) {
        throw error(errc::invalid_argument, "triple_is_bitrade needs three words");
    }
    const auto norm = normalize_monomials(v);
    if (norm.size() != 3) {
        throw error(errc::degenerate_triple, "triple collapses to rank at most 2");
    }
    const int n = norm.n();
    int varying = 0;
    bool general = false;
    for (int i = 0; i < n; ++i) {
        unsigned seen = 0;
        for (const auto &w : norm.words()) {
            seen |= 1U << w[i];
        }
        varying += std::popcount(seen) > 1;
        general = general || seen == 7U;
    }
    if (varying <= 2) {
        return {true, TripleRule::two_coordinates};
    }
    if (!general) {
        for (int w = 0; w < 3; ++w) {
            const auto &x = norm[static_cast<std::size_t>(w)];
            const auto &y = norm[static_cast<std::size_t>((w + 1) % 3)];
            const auto &z = norm[static_cast<std::size_t>((w + 2) % 3)];
            bool dom = true;
            for (int i = 0; i < n && dom; ++i) {
                dom = x[i] == y[i] || x[i] == z[i];
            }
            if (dom) {
                return {true, TripleRule::dominated};
            }
        }
        return {false, TripleRule::two_valued_columns};
    }
    const int sum = hamming_distance(norm[0], norm[1]) + hamming_distance(norm[1], norm[2]) + hamming_distance(norm[0], norm[2]);
    if (sum % 2 == 1) {
        return {true, TripleRule::odd_distance_sum};
    }
    return {false, TripleRule::even_distance_sum};
}

// ---- sign consistency ---------------------------------------------------------------

/// How the canonical signed functions of two monomial cubes must be scaled so
/// that their sum stays in {-1, 0, +1}: `same` keeps both signs, `opposite`
/// negates one of them. Two ternary monomial cubes always meet, so one of the
/// two always works.
enum class SignRelation { same, opposite };

inline SignRelation sign_consistency(const Word &u, const Word &v) {
    if (u.k() != 3 || v.k() != 3 || u.n() != v.n()) {
        throw error(errc::invalid_argument, "sign_consistency needs two words of Q_3^n");
    }
    // The cubes meet in a boolean subcube and both signs are proper
    // colourings, so the product of signs is constant on it. Coordinates where
    // u and v differ pin the shared symbol; count where exactly one of the two
    // factors reads it as its larger symbol.
    int flips = 0;
    for (int i = 0; i < u.n(); ++i) {
        if (u[i] == v[i]) {
            continue;
        }
        const auto &fu = detail::cube_factor[u[i]];
        const auto &fv = detail::cube_factor[v[i]];
        const std::uint8_t common = (fu[0] == fv[0] || fu[0] == fv[1]) ? fu[0] : fu[1];
        flips += (common == fu[1]) != (common == fv[1]);
    }
    return flips % 2 == 1 ? SignRelation::same : SignRelation::opposite;
}

/// Whether signs eps_v can be chosen with every pair of V related as
/// sign_consistency demands.
inline bool jointly_consistent(const MonomialSet &v) {
    const std::size_t m = v.size();
    if (m > 20) {
        throw error(errc::too_many_monomials, "jointly_consistent is limited to 20 words");
    }
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        if (mask & 1U) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            for (std::size_t j = i + 1; j < m && ok; ++j) {
                const auto rel = sign_consistency(v[i], v[j]);
                const bool flipped = ((mask >> i) & 1U) != ((mask >> j) & 1U);
                ok = (rel == SignRelation::opposite) == flipped;
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

// ---- decomposability ------------------------------------------------------------------

/// True when U is a Cartesian product over a nontrivial split of the coordinates.
inline bool is_decomposable(const TradeSet &u) {
    const int n = u.n();
    if (n < 2 || u.empty()) {
        return false;
    }
    const auto cells = u.cells();
    for (std::uint32_t s = 1; s + 1 < (1U << n); ++s) {
        if (!(s & 1U)) {
            continue; // coordinate 0 stays on the first side
        }
        std::set<std::vector<std::uint8_t>> left;
        std::set<std::vector<std::uint8_t>> right;
        for (auto c : cells) {
            const auto d = digits_of(c, n, u.k());
            std::vector<std::uint8_t> l;
            std::vector<std::uint8_t> r;
            for (int i = 0; i < n; ++i) {
                ((s >> i) & 1U ? l : r).push_back(d[static_cast<std::size_t>(i)]);
            }
            left.insert(std::move(l));
            right.insert(std::move(r));
        }
        if (left.size() * right.size() == cells.size()) {
            return true;
        }
    }
    return false;
}

} // namespace tritrade
