#pragma once

// Equivalence of signed ternary functions under coordinate permutations,
// per-coordinate symbol permutations and the global sign flip.

#include <tritrade/funcspace.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

namespace tritrade {

/// |G| = 2 * n! * 6^n.
inline std::uint64_t group_order(int n) {
    std::uint64_t g = 2;
    for (int i = 1; i <= n; ++i) {
        g *= 6ULL * static_cast<std::uint64_t>(i);
    }
    return g;
}

/// Value string of the lexicographically least image, ordering values
/// -1 < 0 < +1. Printed with the usual {-,0,+} alphabet.
struct CanonicalKey {
    std::string bytes;

    TernFn function() const { return TernFn::parse(bytes); }
    friend bool operator==(const CanonicalKey &, const CanonicalKey &) = default;
    friend auto operator<=>(const CanonicalKey &, const CanonicalKey &) = default;
};

struct ClassRecord {
    TernFn representative;
    std::uint64_t orbit_size = 0;
    std::uint64_t aut_order = 0;

    CanonicalKey key() const { return CanonicalKey{representative.str()}; }
    std::size_t cardinality() const { return representative.support_size(); }
};

namespace detail {

inline constexpr std::array<std::array<std::uint8_t, 3>, 6> s3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

/// source[y] is computed on demand, so early-exit comparisons stay cheap.
struct SourceMap {
    const std::vector<std::array<Cell, 3>> &contrib;
    int n;
    Cell cells;

    Cell operator[](Cell y) const {
        Cell x = 0;
        for (int j = n - 1; j >= 0; --j) {
            x += contrib[static_cast<std::size_t>(j)][y % 3];
            y /= 3;
        }
        return x;
    }
    Cell size() const noexcept { return cells; }
};

/// Calls visit(source, sign) once per group element, where source[y] is the
/// cell whose value lands on y, so the image is h(y) = sign * f(source[y]).
template <class Visit>
void for_each_group_element(int n, Visit &&visit) {
    const Cell size = cell_count(n, 3);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Cell> weight(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        weight[static_cast<std::size_t>(i)] = cell_count(n - 1 - i, 3);
    }
    std::vector<int> sym(static_cast<std::size_t>(n), 0);
    // contrib[j][d]: contribution of y_j = d to the source cell
    std::vector<std::array<Cell, 3>> contrib(static_cast<std::size_t>(n));
    do {
        std::fill(sym.begin(), sym.end(), 0);
        while (true) {
            for (int j = 0; j < n; ++j) {
                const auto i = static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]);
                const auto &p = s3[static_cast<std::size_t>(sym[i])];
                for (int d = 0; d < 3; ++d) {
                    contrib[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] = weight[i] * p[static_cast<std::size_t>(d)];
                }
            }
            const SourceMap source{contrib, n, size};
            if (!visit(source, 1) || !visit(source, -1)) {
                return;
            }
            int i = 0;
            while (i < n && ++sym[static_cast<std::size_t>(i)] == 6) {
                sym[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == n) {
                break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::string bytes_of(const TernFn &f) {
    const auto v = f.values();
    return std::string(reinterpret_cast<const char *>(v.data()), v.size());
}

} // namespace detail

inline CanonicalKey canonical_form(const TernFn &f) {
    const auto v = f.values();
    std::vector<std::int8_t> best(v.begin(), v.end());
    detail::for_each_group_element(f.n(), [&](const detail::SourceMap &src, int sign) {
        std::size_t y = 0;
        for (; y < best.size(); ++y) {
            const int h = sign * v[src[y]];
            if (h != best[y]) {
                break;
            }
        }
        if (y < best.size() && sign * v[src[y]] < best[y]) {
            for (; y < best.size(); ++y) {
                best[y] = static_cast<std::int8_t>(sign * v[src[y]]);
            }
        }
        return true;
    });
    return CanonicalKey{TernFn(f.n(), std::move(best)).str()};
}

inline std::uint64_t aut_order(const TernFn &f) {
    const auto v = f.values();
    std::uint64_t count = 0;
    detail::for_each_group_element(f.n(), [&](const detail::SourceMap &src, int sign) {
        std::size_t y = 0;
        while (y < v.size() && sign * v[src[y]] == v[y]) {
            ++y;
        }
        count += y == v.size();
        return true;
    });
    return count;
}

/// Isometries generating the group (sign flip handled separately).
inline std::vector<Isometry> group_generators(int n) {
    std::vector<Isometry> gens;
    const auto id = Isometry::identity(n, 3);
    for (int i = 0; i + 1 < n; ++i) {
        auto perm = id.coord_perm();
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
        gens.emplace_back(3, perm, id.symbol_perms());
    }
    for (int i = 0; i < n; ++i) {
        for (const auto &p : {std::vector<std::uint8_t>{1, 0, 2}, std::vector<std::uint8_t>{1, 2, 0}}) {
            auto sym = id.symbol_perms();
            sym[static_cast<std::size_t>(i)] = p;
            gens.emplace_back(3, id.coord_perm(), sym);
        }
    }
    return gens;
}

inline constexpr std::size_t default_orbit_limit = 1U << 20;

/// Closure of {f} under the generators; sorted.
inline std::vector<TernFn> orbit(const TernFn &f, std::size_t limit = default_orbit_limit) {
    const int n = f.n();
    std::vector<std::vector<Cell>> maps;
    for (const auto &g : group_generators(n)) {
        maps.push_back(g.cell_map());
    }
    std::unordered_set<std::string> seen{detail::bytes_of(f)};
    std::vector<TernFn> out{f};
    std::vector<std::int8_t> buf(f.values().size());
    for (std::size_t head = 0; head < out.size(); ++head) {
        const auto v = out[head].values();
        const auto push = [&]() {
            TernFn h(n, buf);
            if (seen.insert(detail::bytes_of(h)).second) {
                if (out.size() >= limit) {
                    throw error(errc::orbit_too_large, "orbit exceeds " + std::to_string(limit) + " functions");
                }
                out.push_back(std::move(h));
            }
        };
        for (const auto &m : maps) {
            for (std::size_t c = 0; c < v.size(); ++c) {
                buf[m[c]] = v[c];
            }
            push();
        }
        for (std::size_t c = 0; c < v.size(); ++c) {
            buf[c] = static_cast<std::int8_t>(-v[c]);
        }
        push();
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void sort_classes(std::vector<ClassRecord> &classes) {
    std::sort(classes.begin(), classes.end(), [](const ClassRecord &a, const ClassRecord &b) {
        const auto ka = std::pair(a.cardinality(), a.key());
        const auto kb = std::pair(b.cardinality(), b.key());
        return ka < kb;
    });
}

/// Orbit sweep: every function not yet covered opens a new class, and its
/// whole orbit is marked. The stream is expected to be closed under the group.
template <class Range>
std::vector<ClassRecord> classify(const Range &functions, std::size_t limit = default_orbit_limit) {
    std::unordered_set<std::string> covered;
    std::vector<ClassRecord> out;
    for (const TernFn &f : functions) {
        if (covered.contains(detail::bytes_of(f))) {
            continue;
        }
        const auto orb = orbit(f, limit);
        for (const auto &h : orb) {
            covered.insert(detail::bytes_of(h));
        }
        ClassRecord rec;
        rec.representative = canonical_form(f).function();
        rec.orbit_size = orb.size();
        rec.aut_order = aut_order(rec.representative);
        out.push_back(std::move(rec));
    }
    sort_classes(out);
    return out;
}

/// Union of per-worker class lists, deduplicated by key.
inline std::vector<ClassRecord> merge_classes(std::vector<ClassRecord> a, const std::vector<ClassRecord> &b) {
    std::map<CanonicalKey, ClassRecord> by_key;
    for (auto &r : a) {
        by_key.emplace(r.key(), std::move(r));
    }
    for (const auto &r : b) {
        by_key.emplace(r.key(), r);
    }
    std::vector<ClassRecord> out;
    for (auto &[k, r] : by_key) {
        out.push_back(std::move(r));
    }
    sort_classes(out);
    return out;
}

inline bool double_count_check(std::span<const ClassRecord> classes, std::uint64_t expected_total) {
    std::uint64_t total = 0;
    for (const auto &c : classes) {
        const auto g = group_order(c.representative.n());
        if (c.aut_order == 0 || g % c.aut_order != 0) {
            return false;
        }
        total += g / c.aut_order;
    }
    return total == expected_total;
}

} // namespace tritrade
