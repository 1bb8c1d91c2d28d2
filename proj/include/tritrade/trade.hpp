#pragma once

// Unitrade and bitrade predicates, bipartition, structural checks and the
// cardinality predicates for admissible sizes.

#include <tritrade/funcspace.hpp>

#include <cmath>
#include <deque>
#include <iterator>
#include <unordered_map>

namespace tritrade {

inline bool is_unitrade(const TradeSet &s) {
    const auto inc = s.line_incidence();
    return std::all_of(inc.begin(), inc.end(), [](auto c) { return c == 0 || c == 2; });
}

namespace detail {

template <class Visit>
void for_each_neighbor(const TradeSet &s, Cell c, Visit visit) {
    const auto &table = line_table(s.n(), s.k());
    for (int d = 0; d < s.n(); ++d) {
        for (auto other : table.cells(table.line_of(c, d))) {
            if (other != c && s.contains(other)) {
                visit(other);
            }
        }
    }
}

// Opaque byte key of a bit vector, for hashing.
inline std::string bits_key(const Bits &b) {
    std::vector<Bits::block_type> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    return std::string(reinterpret_cast<const char *>(blocks.data()), blocks.size() * sizeof(Bits::block_type));
}

} // namespace detail

/// BFS 2-colouring of the induced Hamming subgraph. Each component is coloured
/// from its smallest cell, which lands in part0.
inline std::optional<BipartiteTrade> bipartition(const TradeSet &s) {
    if (!is_unitrade(s)) {
        throw error(errc::not_a_unitrade, "bipartition needs a unitrade");
    }
    const std::size_t total = s.support().size();
    std::vector<std::int8_t> colour(total, -1);
    Bits p0(total);
    Bits p1(total);
    std::deque<Cell> queue;
    for (auto start = s.support().find_first(); start != Bits::npos; start = s.support().find_next(start)) {
        if (colour[start] >= 0) {
            continue;
        }
        colour[start] = 0;
        queue.push_back(static_cast<Cell>(start));
        while (!queue.empty()) {
            const Cell c = queue.front();
            queue.pop_front();
            bool clash = false;
            detail::for_each_neighbor(s, c, [&](Cell o) {
                if (colour[o] < 0) {
                    colour[o] = static_cast<std::int8_t>(1 - colour[c]);
                    queue.push_back(o);
                } else if (colour[o] == colour[c]) {
                    clash = true;
                }
            });
            if (clash) {
                return std::nullopt;
            }
        }
    }
    for (std::size_t c = 0; c < total; ++c) {
        if (colour[c] == 0) {
            p0.set(c);
        } else if (colour[c] == 1) {
            p1.set(c);
        }
    }
    return BipartiteTrade(s, std::move(p0), std::move(p1));
}

inline bool is_bitrade(const TradeSet &s) { return is_unitrade(s) && bipartition(s).has_value(); }

inline bool is_connected(const TradeSet &s) {
    const auto first = s.support().find_first();
    if (first == Bits::npos) {
        return true;
    }
    Bits seen(s.support().size());
    std::vector<Cell> stack{static_cast<Cell>(first)};
    seen.set(first);
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        detail::for_each_neighbor(s, c, [&](Cell o) {
            if (!seen.test(o)) {
                seen.set(o);
                stack.push_back(o);
            }
        });
    }
    return seen == s.support();
}

struct StructureReport {
    bool intersects = false;       // S and T share a cell
    bool containment_is_equal = true; // S subset of T (or T of S) only when S == T
    bool connected = false;        // induced graph of S is connected
};

inline StructureReport connectivity_and_structure(const TradeSet &s, const TradeSet &t) {
    s.check_same_shape(t);
    if (s.k() != 3) {
        throw error(errc::invalid_argument, "structure checks are for k = 3");
    }
    StructureReport r;
    r.intersects = s.support().intersects(t.support());
    const bool s_in_t = s.support().is_subset_of(t.support());
    const bool t_in_s = t.support().is_subset_of(s.support());
    const bool nonempty = !s.empty() && !t.empty();
    r.containment_is_equal = !nonempty || (!s_in_t && !t_in_s) || s == t;
    r.connected = is_connected(s);
    return r;
}

/// Signed function of a bitrade: +1 on part0, -1 on part1.
inline TernFn signed_fn(const BipartiteTrade &b) {
    if (b.k() != 3) {
        throw error(errc::invalid_argument, "signed functions are defined for k = 3");
    }
    std::vector<std::int8_t> v(b.base().support().size(), 0);
    for (auto i = b.part0().find_first(); i != Bits::npos; i = b.part0().find_next(i)) {
        v[i] = 1;
    }
    for (auto i = b.part1().find_first(); i != Bits::npos; i = b.part1().find_next(i)) {
        v[i] = -1;
    }
    return TernFn(b.n(), std::move(v));
}

/// Bitrade with part0 = {f = +1}, part1 = {f = -1}. f must lie in V_{n,3}.
inline BipartiteTrade bitrade_of(const TernFn &f) {
    if (!in_line_sum_zero_space(f)) {
        throw error(errc::not_a_unitrade, "function has a nonzero line sum");
    }
    const auto size = f.values().size();
    Bits p0(size);
    Bits p1(size);
    for (std::size_t i = 0; i < size; ++i) {
        if (f.values()[i] > 0) {
            p0.set(i);
        } else if (f.values()[i] < 0) {
            p1.set(i);
        }
    }
    return BipartiteTrade(f.support(), std::move(p0), std::move(p1));
}

// ---- cardinality predicates -------------------------------------------------

inline bool mod3_admissible(int n, std::uint64_t c) {
    const std::uint64_t r = c % 3;
    return r == 0 || r == ipow(2, static_cast<unsigned>(n)) % 3;
}

/// Sizes c = alpha * 2^n allowed for unitrades in Q_3^n.
inline bool unitrade_alpha_admissible(int n, std::uint64_t c) {
    if (n < 0 || n > 60) {
        throw error(errc::invalid_argument, "dimension out of range");
    }
    if (c == 0) {
        return true;
    }
    if (n == 0) {
        return c == 1;
    }
    const auto p = [](int e) { return std::uint64_t{1} << e; };
    const std::uint64_t two = p(n + 1);
    const std::uint64_t five_half = 5 * p(n - 1);
    if (c >= five_half) {
        return true;
    }
    for (int j = 0; j <= n - 1; ++j) {
        if (c == two - p(n - j)) {
            return true;
        }
    }
    for (int j = 2; j <= n / 2; ++j) {
        if (c == two + p(n - j)) {
            return true;
        }
    }
    for (int j = 1; j <= n - 1; ++j) {
        if (c == five_half - p(n - j)) {
            return true;
        }
    }
    for (int j = 3; j <= n - 2; ++j) {
        if (c == five_half - 3 * p(n - j - 1)) {
            return true;
        }
    }
    return false;
}

/// Bitrade sizes in the window 2^{N+1} < c <= 5 * 2^{N-1}.
inline bool small_bitrade_admissible(int N, std::uint64_t c) {
    if (N < 1 || N > 60) {
        throw error(errc::out_of_range, "dimension out of range");
    }
    const std::uint64_t lo = std::uint64_t{1} << (N + 1);
    const std::uint64_t hi = 5 * (std::uint64_t{1} << (N - 1));
    if (c <= lo || c > hi) {
        throw error(errc::out_of_range, "size outside (2^{N+1}, 5*2^{N-1}]");
    }
    for (int n = 0; n <= N; ++n) {
        const std::uint64_t scale = std::uint64_t{1} << (N - n);
        const std::uint64_t half5 = 5 * (std::uint64_t{1} << n) / 2;
        if (n >= 4 && c == scale * (half5 - 6)) {
            return true;
        }
        if ((n == 5 || n == 3) && c == scale * (half5 - 2)) {
            return true;
        }
        if (n == 4 && c == scale * half5) {
            return true;
        }
    }
    return false;
}

// ---- XOR of two bitrades ----------------------------------------------------

/// Finds bitrades B1, B2 from the catalog with chi_U = chi_B1 xor chi_B2. The
/// catalog is scanned in order, so when U itself is a catalog entry and the
/// empty set is listed first the answer is (U, empty).
inline std::optional<std::pair<TradeSet, TradeSet>> xor_of_two_bitrades(const TradeSet &u, std::span<const TradeSet> catalog,
                                                                        bool allow_n5 = false) {
    if (u.n() > (allow_n5 ? 5 : 4)) {
        throw error(errc::dimension_too_large, "xor search is limited to n <= 4 unless enabled for n = 5");
    }
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(catalog.size());
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        catalog[i].check_same_shape(u);
        index.emplace(detail::bits_key(catalog[i].support()), i);
    }
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto it = index.find(detail::bits_key(u.support() ^ catalog[i].support()));
        if (it != index.end()) {
            return std::pair{catalog[it->second], catalog[i]};
        }
    }
    return std::nullopt;
}

// ---- statistics ---------------------------------------------------------------

struct MeanStd {
    double mean = 0;
    double stddev = 0;
};

/// Mean and population standard deviation of |part0| over nonempty bitrades.
inline MeanStd half_cardinality_stats(std::span<const BipartiteTrade> catalog) {
    double sum = 0;
    double sq = 0;
    std::size_t count = 0;
    for (const auto &b : catalog) {
        if (b.size() == 0) {
            continue;
        }
        const auto h = static_cast<double>(b.part0().count());
        sum += h;
        sq += h * h;
        ++count;
    }
    if (count == 0) {
        throw error(errc::empty_catalog, "no nonempty bitrades");
    }
    MeanStd r;
    r.mean = sum / static_cast<double>(count);
    r.stddev = std::sqrt(std::max(0.0, sq / static_cast<double>(count) - r.mean * r.mean));
    return r;
}

/// Same statistics from a size histogram: hist[s] = number of bitrades of size s.
inline MeanStd half_cardinality_stats(std::span<const std::uint64_t> hist) {
    long double sum = 0;
    long double sq = 0;
    long double count = 0;
    for (std::size_t s = 1; s < hist.size(); ++s) {
        const auto w = static_cast<long double>(hist[s]);
        const auto h = static_cast<long double>(s) / 2;
        sum += w * h;
        sq += w * h * h;
        count += w;
    }
    if (count == 0) {
        throw error(errc::empty_catalog, "no nonempty bitrades");
    }
    MeanStd r;
    const long double mean = sum / count;
    r.mean = static_cast<double>(mean);
    r.stddev = static_cast<double>(std::sqrt(std::max<long double>(0, sq / count - mean * mean)));
    return r;
}

// ---- catalogs -----------------------------------------------------------------

/// All 2^{2^n} unitrades of Q_3^n, indexed by the packed truth table of f.
inline std::vector<TradeSet> all_unitrades(int n) {
    if (n > 4) {
        throw error(errc::dimension_too_large, "full unitrade catalog needs n <= 4");
    }
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
    std::vector<TradeSet> out;
    out.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        out.push_back(u_from_bool(BoolFn::from_table(n, t)));
    }
    return out;
}

} // namespace tritrade
