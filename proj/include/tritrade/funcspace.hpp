#pragma once

// Function spaces over the cube: boolean functions on Q_2^n, signed ternary
// functions on Q_3^n, the bijection f -> U[f] between boolean functions and
// ternary unitrades, the Moebius (ANF) transform, and the two bases of the
// line-sum-zero space V_{n,3}.

#include <tritrade/trade_set.hpp>

#include <bit>
#include <optional>

namespace tritrade {

/// Boolean function on Q_2^n, bits in cell order.
class BoolFn {
  public:
    BoolFn() : BoolFn(0) {}
    explicit BoolFn(int n) : n_(n), bits_(cell_count(checked(n), 2)) {}
    BoolFn(int n, Bits bits) : n_(n), bits_(std::move(bits)) {
        if (bits_.size() != cell_count(checked(n), 2)) {
            throw error(errc::invalid_argument, "truth table length must be 2^n");
        }
    }

    /// Truth table packed into an integer: bit i is f at cell i (n <= 6).
    static BoolFn from_table(int n, std::uint64_t table) {
        if (n > 6) {
            throw error(errc::dimension_too_large, "packed truth tables need n <= 6");
        }
        BoolFn f(n);
        for (std::size_t i = 0; i < f.bits_.size(); ++i) {
            f.bits_[i] = (table >> i) & 1U;
        }
        return f;
    }

    template <class Pred>
    static BoolFn from_predicate(int n, Pred pred) {
        BoolFn f(n);
        for (Cell c = 0; c < f.bits_.size(); ++c) {
            f.bits_[c] = pred(Word::from_cell(c, n, 2));
        }
        return f;
    }

    static BoolFn parse(std::string_view text) {
        int n = 0;
        while ((std::size_t{1} << n) < text.size()) {
            ++n;
        }
        if ((std::size_t{1} << n) != text.size()) {
            throw error(errc::invalid_argument, "boolean function string length must be 2^n");
        }
        BoolFn f(n);
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') {
                throw error(errc::invalid_argument, "boolean function string must be over {0,1}");
            }
            f.bits_[i] = text[i] == '1';
        }
        return f;
    }

    int n() const noexcept { return n_; }
    const Bits &bits() const noexcept { return bits_; }
    bool operator()(Cell c) const { return bits_.test(c); }
    std::size_t weight() const { return bits_.count(); }

    std::uint64_t table() const {
        if (n_ > 6) {
            throw error(errc::dimension_too_large, "packed truth tables need n <= 6");
        }
        std::uint64_t t = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            t |= static_cast<std::uint64_t>(bits_[i]) << i;
        }
        return t;
    }

    std::string str() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            s[i] = bits_[i] ? '1' : '0';
        }
        return s;
    }

    friend BoolFn operator^(const BoolFn &a, const BoolFn &b) {
        if (a.n_ != b.n_) {
            throw error(errc::invalid_argument, "boolean function dimension mismatch");
        }
        return BoolFn(a.n_, a.bits_ ^ b.bits_);
    }

    friend bool operator==(const BoolFn &a, const BoolFn &b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

  private:
    static int checked(int n) {
        check_shape(n, 2);
        return n;
    }

    int n_;
    Bits bits_;
};

/// Signed ternary function Q_3^n -> {-1, 0, +1}, values in cell order.
class TernFn {
  public:
    TernFn() : TernFn(0) {}
    explicit TernFn(int n) : n_(n), values_(checked_size(n), 0) {}
    TernFn(int n, std::vector<std::int8_t> values) : n_(n), values_(std::move(values)) {
        if (values_.size() != checked_size(n)) {
            throw error(errc::invalid_argument, "value vector length must be 3^n");
        }
        for (auto v : values_) {
            if (v < -1 || v > 1) {
                throw error(errc::invalid_argument, "values must lie in {-1,0,+1}");
            }
        }
    }

    /// Text form: 3^n characters over {-,0,+}.
    static TernFn parse(std::string_view text) {
        int n = 0;
        std::size_t len = 1;
        while (len < text.size()) {
            len *= 3;
            ++n;
        }
        if (len != text.size()) {
            throw error(errc::invalid_argument, "ternary function string length must be 3^n");
        }
        std::vector<std::int8_t> v(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
            case '-': v[i] = -1; break;
            case '0': v[i] = 0; break;
            case '+': v[i] = 1; break;
            default: throw error(errc::invalid_argument, "ternary function string must be over {-,0,+}");
            }
        }
        return TernFn(n, std::move(v));
    }

    int n() const noexcept { return n_; }
    std::span<const std::int8_t> values() const noexcept { return values_; }
    std::int8_t operator()(Cell c) const { return values_[c]; }
    std::int8_t operator()(const Word &w) const { return values_[w.cell()]; }

    std::size_t support_size() const {
        return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](auto v) { return v != 0; }));
    }

    TradeSet support() const {
        Bits b(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) {
            b[i] = values_[i] != 0;
        }
        return TradeSet(n_, 3, std::move(b));
    }

    TernFn negated() const {
        TernFn r = *this;
        for (auto &v : r.values_) {
            v = static_cast<std::int8_t>(-v);
        }
        return r;
    }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
    }

    std::string str() const {
        std::string s(values_.size(), '0');
        for (std::size_t i = 0; i < values_.size(); ++i) {
            s[i] = values_[i] < 0 ? '-' : (values_[i] > 0 ? '+' : '0');
        }
        return s;
    }

    friend bool operator==(const TernFn &, const TernFn &) = default;
    friend auto operator<=>(const TernFn &a, const TernFn &b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return a.values_ <=> b.values_;
    }

  private:
    static std::size_t checked_size(int n) {
        check_shape(n, 3);
        return cell_count(n, 3);
    }

    int n_;
    std::vector<std::int8_t> values_;
};

/// Ternary cell carrying the same digits as binary cell b.
inline std::vector<Cell> binary_cells(int n) {
    const Cell count = cell_count(n, 2);
    std::vector<Cell> out(count);
    for (Cell b = 0; b < count; ++b) {
        Cell t = 0;
        for (int i = n - 1; i >= 0; --i) {
            t = t * 3 + ((b >> i) & 1U);
        }
        out[b] = t;
    }
    return out;
}

/// U[f](y) = XOR of f(x) over binary x <= y. Separable: along each axis the
/// value at digit 2 is the XOR of the values at digits 0 and 1.
inline TradeSet u_from_bool(const BoolFn &f) {
    const int n = f.n();
    const Cell total = cell_count(n, 3);
    std::vector<std::uint8_t> a(total, 0);
    const auto bin = binary_cells(n);
    for (Cell b = 0; b < bin.size(); ++b) {
        a[bin[b]] = f(b);
    }
    for (int d = 0; d < n; ++d) {
        const Cell stride = cell_count(n - 1 - d, 3);
        for (Cell c = 0; c < total; ++c) {
            if ((c / stride) % 3 == 2) {
                a[c] = a[c - stride] ^ a[c - 2 * stride];
            }
        }
    }
    Bits s(total);
    for (Cell c = 0; c < total; ++c) {
        s[c] = a[c] != 0;
    }
    return TradeSet(n, 3, std::move(s));
}

/// Inverse of u_from_bool: the restriction of the indicator to Q_2^n.
inline BoolFn bool_from_unitrade(const TradeSet &u) {
    if (u.k() != 3) {
        throw error(errc::invalid_argument, "bool_from_unitrade needs k = 3");
    }
    const auto bin = binary_cells(u.n());
    BoolFn f(u.n());
    Bits bits(bin.size());
    for (Cell b = 0; b < bin.size(); ++b) {
        bits[b] = u.contains(bin[b]);
    }
    f = BoolFn(u.n(), std::move(bits));
    if (!(u_from_bool(f) == u)) {
        throw error(errc::not_a_unitrade, "set is not determined by its boolean restriction");
    }
    return f;
}

/// ANF coefficients G[f](y) = XOR of f(x) over x subset of y. An involution.
inline BoolFn mobius(const BoolFn &f) {
    Bits b = f.bits();
    const std::size_t size = b.size();
    for (std::size_t step = 1; step < size; step <<= 1) {
        for (std::size_t i = 0; i < size; ++i) {
            if (i & step) {
                b[i] = b[i] ^ b[i ^ step];
            }
        }
    }
    return BoolFn(f.n(), std::move(b));
}

/// Algebraic degree; minus_infinity for the zero function.
inline int degree(const BoolFn &f) {
    const auto g = mobius(f);
    int deg = minus_infinity;
    for (auto i = g.bits().find_first(); i != Bits::npos; i = g.bits().find_next(i)) {
        deg = std::max(deg, std::popcount(static_cast<std::uint64_t>(i)));
    }
    return deg;
}

inline BoolFn retract(const BoolFn &f, int coord, int value) {
    const auto cells = hyperface_cells(f.n(), 2, coord, value);
    Bits b(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        b[i] = f(cells[i]);
    }
    return BoolFn(f.n() - 1, std::move(b));
}

inline TernFn retract(const TernFn &f, int coord, int value) {
    const auto cells = hyperface_cells(f.n(), 3, coord, value);
    std::vector<std::int8_t> v(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        v[i] = f(cells[i]);
    }
    return TernFn(f.n() - 1, std::move(v));
}

/// (g f)(g x) = f(x), negated when g carries the sign flip.
inline TernFn apply_isometry(const Isometry &g, const TernFn &f) {
    if (g.n() != f.n() || g.k() != 3) {
        throw error(errc::invalid_argument, "isometry/function shape mismatch");
    }
    const auto image = g.cell_map();
    std::vector<std::int8_t> out(f.values().size());
    const std::int8_t s = g.sign_flip() ? -1 : 1;
    for (std::size_t c = 0; c < out.size(); ++c) {
        out[image[c]] = static_cast<std::int8_t>(s * f(static_cast<Cell>(c)));
    }
    return TernFn(f.n(), std::move(out));
}

/// Signed indicator of the boolean subcube B_x = {y : x <= y}:
/// b_x(y) = (-1)^(number of coordinates where y is not 2) on B_x, 0 elsewhere.
/// For n = 1, x = 0 this gives (-1, 0, +1) at digits (0, 1, 2).
inline TernFn gf2_basis_fn(const Word &x) {
    if (x.k() != 3) {
        throw error(errc::invalid_argument, "gf2_basis_fn is defined for k = 3");
    }
    const int n = x.n();
    for (int i = 0; i < n; ++i) {
        if (x[i] == 2) {
            throw error(errc::bad_base_word, "base word must avoid the maximal digit");
        }
    }
    TernFn f(n);
    std::vector<std::int8_t> v(cell_count(n, 3), 0);
    for (Cell z = 0; z < cell_count(n, 2); ++z) {
        std::vector<std::uint8_t> d(static_cast<std::size_t>(n));
        int not_top = 0;
        for (int i = 0; i < n; ++i) {
            const bool top = (z >> (n - 1 - i)) & 1U;
            d[static_cast<std::size_t>(i)] = top ? 2 : x[i];
            not_top += !top;
        }
        v[cell_of(d, 3)] = static_cast<std::int8_t>((not_top % 2) ? -1 : 1);
    }
    return TernFn(n, std::move(v));
}

/// s_alpha(x) = prod s_{alpha_i}(x_i) with s_0 = 1 and s_1(a) = a, reading the
/// digit 2 as -1.
inline TernFn gf3_basis_fn(const Word &alpha) {
    if (alpha.k() != 2) {
        throw error(errc::invalid_argument, "alpha must be a binary word");
    }
    const int n = alpha.n();
    std::vector<std::int8_t> v(cell_count(n, 3));
    for (Cell c = 0; c < v.size(); ++c) {
        const auto d = digits_of(c, n, 3);
        int prod = 1;
        for (int i = 0; i < n; ++i) {
            if (alpha[i] == 1) {
                prod *= d[static_cast<std::size_t>(i)] == 2 ? -1 : d[static_cast<std::size_t>(i)];
            }
        }
        v[c] = static_cast<std::int8_t>(prod);
    }
    return TernFn(n, std::move(v));
}

/// Centered residue mod 3 in {-1, 0, +1}.
constexpr int mod3(long long x) {
    const int r = static_cast<int>(((x % 3) + 3) % 3);
    return r == 2 ? -1 : r;
}

/// <f, g>_3 = sum f(x) g(x) mod 3, as a centered residue.
inline int inner3(const TernFn &f, const TernFn &g) {
    if (f.n() != g.n()) {
        throw error(errc::invalid_argument, "inner3 dimension mismatch");
    }
    long long s = 0;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        s += f.values()[i] * g.values()[i];
    }
    return mod3(s);
}

enum class LineSumKind { all_zero, signed_triple, invalid };

/// Classification of every line of Q_3^n, in line-table order.
inline std::vector<LineSumKind> line_sums(const TernFn &f) {
    const auto &table = line_table(f.n(), 3);
    std::vector<LineSumKind> out(table.size());
    for (std::size_t l = 0; l < table.size(); ++l) {
        int sum = 0;
        int nonzero = 0;
        for (auto c : table.cells(l)) {
            sum += f(c);
            nonzero += f(c) != 0;
        }
        if (nonzero == 0) {
            out[l] = LineSumKind::all_zero;
        } else if (sum == 0 && nonzero == 2) {
            out[l] = LineSumKind::signed_triple;
        } else {
            out[l] = LineSumKind::invalid;
        }
    }
    return out;
}

inline bool in_line_sum_zero_space(const TernFn &f) {
    const auto kinds = line_sums(f);
    return std::none_of(kinds.begin(), kinds.end(), [](auto k) { return k == LineSumKind::invalid; });
}

/// Integer extension of values given on Q_2^n (binary cell order) to all of
/// Q_3^n by f(..2..) = -(f(..0..) + f(..1..)). Returns nullopt when some value
/// leaves {-1, 0, +1}.
inline std::optional<TernFn> extend_from_binary(int n, std::span<const std::int8_t> binary_values) {
    const Cell total = cell_count(n, 3);
    if (binary_values.size() != cell_count(n, 2)) {
        throw error(errc::invalid_argument, "need 2^n binary values");
    }
    std::vector<int> a(total, 0);
    const auto bin = binary_cells(n);
    for (Cell b = 0; b < bin.size(); ++b) {
        a[bin[b]] = binary_values[b];
    }
    for (int d = 0; d < n; ++d) {
        const Cell stride = cell_count(n - 1 - d, 3);
        for (Cell c = 0; c < total; ++c) {
            if ((c / stride) % 3 == 2) {
                a[c] = -(a[c - stride] + a[c - 2 * stride]);
            }
        }
    }
    std::vector<std::int8_t> v(total);
    for (Cell c = 0; c < total; ++c) {
        if (a[c] < -1 || a[c] > 1) {
            return std::nullopt;
        }
        v[c] = static_cast<std::int8_t>(a[c]);
    }
    return TernFn(n, std::move(v));
}

} // namespace tritrade
