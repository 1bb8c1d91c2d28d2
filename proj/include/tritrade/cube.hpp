#pragma once

// Geometry of the q-ary hypercube Q_k^n: words, lines (1-dimensional faces),
// the order used by the down-set transforms, hyperfaces and isometries.
//
// Cells are addressed by the base-k value of a word's digits with coordinate 0
// most significant. Every dense array in the library uses this order.
//
// For k = 3 the digit 2 plays two roles: it is the maximal element of the
// partial order (x <= y iff every digit of x equals the digit of y or y's
// digit is 2), and it stands for -1 when the alphabet is read as GF(3).

#include <tritrade/error.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tritrade {

using Cell = std::uint32_t;

constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

inline Cell cell_count(int n, int k) {
    return static_cast<Cell>(ipow(static_cast<std::uint64_t>(k), static_cast<unsigned>(n)));
}

inline void check_shape(int n, int k) {
    if (n < 0 || k < 2 || k > 9) {
        throw error(errc::invalid_argument, "need n >= 0 and 2 <= k <= 9");
    }
    if (ipow(static_cast<std::uint64_t>(k), static_cast<unsigned>(n)) > (1ULL << 31)) {
        throw error(errc::dimension_too_large, "cube does not fit 32-bit cell indices");
    }
}

inline std::vector<std::uint8_t> digits_of(Cell cell, int n, int k) {
    std::vector<std::uint8_t> d(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        d[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(cell % static_cast<Cell>(k));
        cell /= static_cast<Cell>(k);
    }
    return d;
}

inline Cell cell_of(std::span<const std::uint8_t> digits, int k) {
    Cell c = 0;
    for (auto d : digits) {
        c = c * static_cast<Cell>(k) + d;
    }
    return c;
}

/// A point of Q_k^n.
class Word {
  public:
    Word() = default;

    Word(int k, std::vector<std::uint8_t> digits) : k_(k), digits_(std::move(digits)) {
        if (k < 2 || k > 9) {
            throw error(errc::invalid_argument, "alphabet size must be in 2..9");
        }
        for (auto d : digits_) {
            if (d >= k) {
                throw error(errc::invalid_argument, "digit out of alphabet");
            }
        }
    }

    static Word from_cell(Cell cell, int n, int k) { return Word(k, digits_of(cell, n, k)); }

    /// Digits as text, e.g. "0121"; one character per coordinate.
    static Word parse(std::string_view text, int k) {
        std::vector<std::uint8_t> d;
        d.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                throw error(errc::invalid_argument, "bad digit in word '" + std::string(text) + "'");
            }
            d.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return Word(k, std::move(d));
    }

    int n() const noexcept { return static_cast<int>(digits_.size()); }
    int k() const noexcept { return k_; }
    std::uint8_t operator[](int i) const { return digits_[static_cast<std::size_t>(i)]; }
    std::span<const std::uint8_t> digits() const noexcept { return digits_; }
    Cell cell() const { return cell_of(digits_, k_); }

    std::string str() const {
        std::string s;
        s.reserve(digits_.size());
        for (auto d : digits_) {
            s.push_back(static_cast<char>('0' + d));
        }
        return s;
    }

    friend bool operator==(const Word &, const Word &) = default;
    friend auto operator<=>(const Word &a, const Word &b) {
        if (auto c = a.k_ <=> b.k_; c != 0) {
            return c;
        }
        return a.digits_ <=> b.digits_;
    }

  private:
    int k_ = 3;
    std::vector<std::uint8_t> digits_;
};

inline int hamming_distance(const Word &a, const Word &b) {
    if (a.n() != b.n()) {
        throw error(errc::invalid_argument, "words of different length");
    }
    int d = 0;
    for (int i = 0; i < a.n(); ++i) {
        d += a[i] != b[i];
    }
    return d;
}

/// Line identifier: the direction that varies and the base word whose digit
/// in that direction is 0.
struct LineId {
    int direction = 0;
    Word base;

    friend bool operator==(const LineId &, const LineId &) = default;
};

struct Line {
    LineId id;
    std::vector<Word> members; // k words, digit order along `direction`
};

/// Flat line table: line l owns cells [l*k, l*k + k). Lines are ordered
/// direction-major, then by base in lex order.
class LineTable {
  public:
    LineTable(int n, int k) : n_(n), k_(k) {
        check_shape(n, k);
        if (n == 0) {
            return;
        }
        per_direction_ = cell_count(n - 1, k);
        cells_.reserve(static_cast<std::size_t>(n) * per_direction_ * static_cast<std::size_t>(k));
        for (int d = 0; d < n; ++d) {
            const Cell stride = cell_count(n - 1 - d, k);
            for (Cell r = 0; r < per_direction_; ++r) {
                const Cell base = expand(r, d);
                for (int s = 0; s < k; ++s) {
                    cells_.push_back(base + static_cast<Cell>(s) * stride);
                }
            }
        }
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return n_ == 0 ? 0 : static_cast<std::size_t>(n_) * per_direction_; }

    std::span<const Cell> cells(std::size_t line) const {
        return std::span<const Cell>(cells_).subspan(line * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_));
    }

    int direction(std::size_t line) const { return static_cast<int>(line / per_direction_); }

    /// Index of the line through `cell` along direction `d`.
    std::size_t line_of(Cell cell, int d) const {
        const Cell hi_stride = cell_count(n_ - d, k_);
        const Cell lo_stride = cell_count(n_ - 1 - d, k_);
        const Cell hi = cell / hi_stride;
        const Cell lo = cell % lo_stride;
        return static_cast<std::size_t>(d) * per_direction_ + hi * lo_stride + lo;
    }

  private:
    // Insert a 0 digit at position d of an (n-1)-digit reduced index.
    Cell expand(Cell reduced, int d) const {
        const Cell lo_stride = cell_count(n_ - 1 - d, k_);
        const Cell hi = reduced / lo_stride;
        const Cell lo = reduced % lo_stride;
        return hi * lo_stride * static_cast<Cell>(k_) + lo;
    }

    int n_;
    int k_;
    Cell per_direction_ = 0;
    std::vector<Cell> cells_;
};

/// Shared, lazily built line table for (n, k). Thread-safe; the returned
/// reference stays valid for the life of the process.
inline const LineTable &line_table(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<LineTable>> cache;
    std::lock_guard lock(mu);
    auto &slot = cache[{n, k}];
    if (!slot) {
        slot = std::make_unique<LineTable>(n, k);
    }
    return *slot;
}

/// All n*k^(n-1) lines of Q_k^n with their member words.
inline std::vector<Line> lines(int n, int k) {
    const auto &table = line_table(n, k);
    std::vector<Line> out;
    out.reserve(table.size());
    for (std::size_t l = 0; l < table.size(); ++l) {
        Line line;
        auto cells = table.cells(l);
        line.id.direction = table.direction(l);
        line.id.base = Word::from_cell(cells[0], n, k);
        for (auto c : cells) {
            line.members.push_back(Word::from_cell(c, n, k));
        }
        out.push_back(std::move(line));
    }
    return out;
}

/// Words of Q_{k-1}^n below y: every maximal digit (k-1) of y is replaced by
/// any digit in 0..k-2, the others are kept.
inline std::vector<Word> below(const Word &y) {
    const int k = y.k();
    std::vector<std::vector<std::uint8_t>> acc{{}};
    for (int i = 0; i < y.n(); ++i) {
        std::vector<std::vector<std::uint8_t>> next;
        const bool top = y[i] == k - 1;
        for (const auto &prefix : acc) {
            for (int s = 0; s < k - 1; ++s) {
                if (!top && s != y[i]) {
                    continue;
                }
                auto w = prefix;
                w.push_back(static_cast<std::uint8_t>(top ? s : y[i]));
                next.push_back(std::move(w));
            }
        }
        acc = std::move(next);
    }
    std::vector<Word> out;
    out.reserve(acc.size());
    for (auto &d : acc) {
        out.emplace_back(k, std::move(d));
    }
    return out;
}

/// Cells of the hyperface {x : x_coord = value}, listed in the cell order of
/// the re-indexed (n-1)-dimensional cube.
inline std::vector<Cell> hyperface_cells(int n, int k, int coord, int value) {
    if (coord < 0 || coord >= n || value < 0 || value >= k) {
        throw error(errc::invalid_argument, "hyperface coordinate or value out of range");
    }
    const Cell lo_stride = cell_count(n - 1 - coord, k);
    const Cell count = cell_count(n - 1, k);
    std::vector<Cell> out(count);
    for (Cell r = 0; r < count; ++r) {
        const Cell hi = r / lo_stride;
        const Cell lo = r % lo_stride;
        out[r] = (hi * static_cast<Cell>(k) + static_cast<Cell>(value)) * lo_stride + lo;
    }
    return out;
}

/// Isometry of Q_k^n: a coordinate permutation combined with one symbol
/// permutation per coordinate, plus an optional global negation that only
/// acts on signed functions.
///
/// Action on words: (g x)[coord_perm[i]] = symbol_perms[i][x[i]].
class Isometry {
  public:
    static Isometry identity(int n, int k) {
        Isometry g;
        g.k_ = k;
        g.coord_perm_.resize(static_cast<std::size_t>(n));
        std::iota(g.coord_perm_.begin(), g.coord_perm_.end(), 0);
        std::vector<std::uint8_t> id(static_cast<std::size_t>(k));
        std::iota(id.begin(), id.end(), std::uint8_t{0});
        g.symbol_perms_.assign(static_cast<std::size_t>(n), id);
        return g;
    }

    Isometry() = default;

    Isometry(int k, std::vector<int> coord_perm, std::vector<std::vector<std::uint8_t>> symbol_perms, bool sign_flip = false)
        : k_(k), coord_perm_(std::move(coord_perm)), symbol_perms_(std::move(symbol_perms)), sign_flip_(sign_flip) {
        const auto n = coord_perm_.size();
        if (symbol_perms_.size() != n || !is_perm(coord_perm_, static_cast<int>(n))) {
            throw error(errc::invalid_argument, "bad coordinate permutation");
        }
        for (const auto &p : symbol_perms_) {
            std::vector<int> q(p.begin(), p.end());
            if (!is_perm(q, k)) {
                throw error(errc::invalid_argument, "bad symbol permutation");
            }
        }
    }

    int n() const noexcept { return static_cast<int>(coord_perm_.size()); }
    int k() const noexcept { return k_; }
    bool sign_flip() const noexcept { return sign_flip_; }
    const std::vector<int> &coord_perm() const noexcept { return coord_perm_; }
    const std::vector<std::vector<std::uint8_t>> &symbol_perms() const noexcept { return symbol_perms_; }

    Word apply(const Word &x) const {
        if (x.n() != n() || x.k() != k_) {
            throw error(errc::invalid_argument, "isometry/word shape mismatch");
        }
        std::vector<std::uint8_t> out(static_cast<std::size_t>(n()));
        for (int i = 0; i < n(); ++i) {
            out[static_cast<std::size_t>(coord_perm_[static_cast<std::size_t>(i)])] =
                symbol_perms_[static_cast<std::size_t>(i)][x[i]];
        }
        return Word(k_, std::move(out));
    }

    /// image[c] = cell of g applied to cell c.
    std::vector<Cell> cell_map() const {
        const Cell count = cell_count(n(), k_);
        std::vector<Cell> out(count);
        std::vector<Cell> weight(static_cast<std::size_t>(n()));
        for (int i = 0; i < n(); ++i) {
            weight[static_cast<std::size_t>(i)] = cell_count(n() - 1 - coord_perm_[static_cast<std::size_t>(i)], k_);
        }
        for (Cell c = 0; c < count; ++c) {
            Cell rest = c;
            Cell img = 0;
            for (int i = n() - 1; i >= 0; --i) {
                const auto d = rest % static_cast<Cell>(k_);
                rest /= static_cast<Cell>(k_);
                img += weight[static_cast<std::size_t>(i)] * symbol_perms_[static_cast<std::size_t>(i)][d];
            }
            out[c] = img;
        }
        return out;
    }

    /// (a * b)(x) = a(b(x)).
    friend Isometry operator*(const Isometry &a, const Isometry &b) {
        if (a.n() != b.n() || a.k_ != b.k_) {
            throw error(errc::invalid_argument, "isometry shape mismatch");
        }
        Isometry r = identity(a.n(), a.k_);
        for (int i = 0; i < a.n(); ++i) {
            const int mid = b.coord_perm_[static_cast<std::size_t>(i)];
            r.coord_perm_[static_cast<std::size_t>(i)] = a.coord_perm_[static_cast<std::size_t>(mid)];
            for (int s = 0; s < a.k_; ++s) {
                r.symbol_perms_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] =
                    a.symbol_perms_[static_cast<std::size_t>(mid)][b.symbol_perms_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]];
            }
        }
        r.sign_flip_ = a.sign_flip_ != b.sign_flip_;
        return r;
    }

    Isometry inverse() const {
        Isometry r = identity(n(), k_);
        for (int i = 0; i < n(); ++i) {
            const int j = coord_perm_[static_cast<std::size_t>(i)];
            r.coord_perm_[static_cast<std::size_t>(j)] = i;
            for (int s = 0; s < k_; ++s) {
                r.symbol_perms_[static_cast<std::size_t>(j)][symbol_perms_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]] =
                    static_cast<std::uint8_t>(s);
            }
        }
        r.sign_flip_ = sign_flip_;
        return r;
    }

    friend bool operator==(const Isometry &, const Isometry &) = default;

  private:
    static bool is_perm(const std::vector<int> &p, int size) {
        if (static_cast<int>(p.size()) != size) {
            return false;
        }
        std::vector<bool> seen(static_cast<std::size_t>(size));
        for (int v : p) {
            if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) {
                return false;
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
        return true;
    }

    int k_ = 3;
    std::vector<int> coord_perm_;
    std::vector<std::vector<std::uint8_t>> symbol_perms_;
    bool sign_flip_ = false;
};

/// Uniformly random isometry driven by a caller-supplied engine.
template <class Rng>
Isometry random_isometry(int n, int k, Rng &rng, bool allow_sign_flip = true) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<std::uint8_t>> sym(static_cast<std::size_t>(n));
    for (auto &p : sym) {
        p.resize(static_cast<std::size_t>(k));
        std::iota(p.begin(), p.end(), std::uint8_t{0});
        std::shuffle(p.begin(), p.end(), rng);
    }
    const bool flip = allow_sign_flip && (rng() & 1U);
    return Isometry(k, std::move(perm), std::move(sym), flip);
}

} // namespace tritrade
