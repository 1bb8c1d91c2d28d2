#pragma once

// Testing sets: point sets on which distinct members of a function family
// already differ.

#include <tritrade/trade.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tritrade {

using BigInt = boost::multiprecision::cpp_int;

struct TestSet {
    int m = 0;
    int k = 3;
    std::vector<Word> points;

    std::size_t size() const noexcept { return points.size(); }

    Bits mask() const {
        Bits b(cell_count(m, k));
        for (const auto &p : points) {
            b[p.cell()] = true;
        }
        return b;
    }
};

/// The 2^m points of {0,1}^m; restriction to them determines a unitrade.
inline TestSet boolean_testset(int m) {
    TestSet t{m, 3, {}};
    for (auto c : binary_cells(m)) {
        t.points.push_back(Word::from_cell(c, m, 3));
    }
    return t;
}

/// T^l, points in lex order of the factors.
inline TestSet product_testset(const TestSet &t, int l) {
    if (l < 1) {
        throw error(errc::invalid_argument, "power must be >= 1");
    }
    TestSet out{t.m * l, t.k, {}};
    std::vector<std::size_t> idx(static_cast<std::size_t>(l), 0);
    if (t.points.empty()) {
        return out;
    }
    while (true) {
        std::vector<std::uint8_t> d;
        for (auto i : idx) {
            const auto &ds = t.points[i].digits();
            d.insert(d.end(), ds.begin(), ds.end());
        }
        out.points.emplace_back(t.k, std::move(d));
        int pos = l - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == t.points.size()) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return out;
}

/// Whether no two distinct members of the family agree on T.
inline bool distinguishes(const TestSet &t, std::span<const TradeSet> family) {
    const auto mask = t.mask();
    std::unordered_set<std::string> seen;
    std::unordered_set<std::string> whole;
    for (const auto &s : family) {
        if (!whole.insert(detail::bits_key(s.support())).second) {
            continue;
        }
        if (!seen.insert(detail::bits_key(s.support() & mask)).second) {
            return false;
        }
    }
    return true;
}

inline constexpr std::uint64_t family_bound_max_exponent = std::uint64_t{1} << 24;

/// alphabet^(test_size^l), exactly.
inline BigInt family_bound(std::uint64_t test_size, int l, std::uint64_t alphabet) {
    BigInt e = boost::multiprecision::pow(BigInt(test_size), static_cast<unsigned>(l));
    if (e > family_bound_max_exponent) {
        throw error(errc::out_of_range, "exponent too large to expand");
    }
    return boost::multiprecision::pow(BigInt(alphabet), e.convert_to<unsigned>());
}

/// log2 of family_bound without expanding it.
inline double log2_family_bound(double test_size, int l, double alphabet) {
    return std::pow(test_size, l) * std::log2(alphabet);
}

/// (2^m - 1)^{1/m}: the base of the doubly exponential bound obtained from a
/// (2^m - 1)-point testing set.
inline double testset_alpha(int m) {
    return std::pow(std::ldexp(1.0, m) - 1.0, 1.0 / m);
}

// ---- GF(2) elimination -----------------------------------------------------

namespace detail {

/// Incremental row-echelon basis over GF(2).
class Gf2Basis {
  public:
    explicit Gf2Basis(std::size_t width) : width_(width) {}

    /// Adds row if independent; returns whether it was.
    bool insert(Bits row) {
        for (const auto &[pivot, r] : rows_) {
            if (row.test(pivot)) {
                row ^= r;
            }
        }
        const auto p = row.find_first();
        if (p == Bits::npos) {
            return false;
        }
        for (auto &[pivot, r] : rows_) {
            if (r.test(p)) {
                r ^= row;
            }
        }
        rows_.emplace_back(p, std::move(row));
        return true;
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t width() const noexcept { return width_; }

  private:
    std::size_t width_;
    std::vector<std::pair<std::size_t, Bits>> rows_;
};

} // namespace detail

/// Rank over GF(2) of the system x_a + x_b + x_c = 0, one equation per line.
inline std::size_t line_system_rank(int m) {
    const auto &table = line_table(m, 3);
    detail::Gf2Basis basis(cell_count(m, 3));
    for (std::size_t l = 0; l < table.size(); ++l) {
        Bits row(basis.width());
        for (auto c : table.cells(l)) {
            row[c] = true;
        }
        basis.insert(std::move(row));
    }
    return basis.rank();
}

struct Extraction {
    TestSet testset;
    std::size_t line_rank = 0;     // 3^m - 2^m
    std::size_t combined_rank = 0; // 3^m - 1
};

/// Raised when U is a XOR of two bitrades; carries the pair.
class precondition_failed : public error {
  public:
    precondition_failed(TradeSet a, TradeSet b)
        : error(errc::precondition_failed, "unitrade is the XOR of two bitrades"), witness(std::move(a), std::move(b)) {}
    std::pair<TradeSet, TradeSet> witness;
};

/// Independent line equations first (line order), then the equations
/// x_v = 0 for v outside U (cell order) that stay independent; the points of
/// the latter form T. If U is not a XOR of two bitrades, T is a testing set
/// for bitrades. A catalog, when given, is used to check that.
inline Extraction extract_testset(const TradeSet &u, std::optional<std::span<const TradeSet>> catalog = std::nullopt) {
    if (u.k() != 3 || !is_unitrade(u)) {
        throw error(errc::not_a_unitrade, "extract_testset needs a ternary unitrade");
    }
    if (catalog) {
        // a pair of nonempty bitrades is the more informative witness
        std::vector<TradeSet> nonempty;
        for (const auto &b : *catalog) {
            if (!b.empty()) {
                nonempty.push_back(b);
            }
        }
        if (auto pair = xor_of_two_bitrades(u, nonempty, true)) {
            throw precondition_failed(pair->first, pair->second);
        }
        if (auto pair = xor_of_two_bitrades(u, *catalog, true)) {
            throw precondition_failed(pair->first, pair->second);
        }
    }
    const int m = u.n();
    const Cell total = cell_count(m, 3);
    const auto &table = line_table(m, 3);
    detail::Gf2Basis basis(total);
    for (std::size_t l = 0; l < table.size(); ++l) {
        Bits row(total);
        for (auto c : table.cells(l)) {
            row[c] = true;
        }
        basis.insert(std::move(row));
    }
    Extraction out;
    out.line_rank = basis.rank();
    out.testset = TestSet{m, 3, {}};
    for (Cell v = 0; v < total; ++v) {
        if (u.contains(v)) {
            continue;
        }
        Bits row(total);
        row[v] = true;
        if (basis.insert(std::move(row))) {
            out.testset.points.push_back(Word::from_cell(v, m, 3));
        }
    }
    out.combined_rank = basis.rank();
    const auto free_dim = std::uint64_t{1} << m;
    if (out.line_rank + free_dim != total || out.combined_rank + 1 != total || out.testset.size() + 1 != free_dim) {
        throw error(errc::rank_defect, "elimination ranks do not match 3^m - 2^m and 3^m - 1");
    }
    return out;
}

} // namespace tritrade
