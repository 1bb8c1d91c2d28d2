#pragma once

#include <tritrade/cube.hpp>

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tritrade {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Subset of Q_k^n with cached per-line incidence counts.
class TradeSet {
  public:
    TradeSet() : TradeSet(0, 3) {}

    TradeSet(int n, int k) : TradeSet(n, k, Bits(cell_count_checked(n, k))) {}

    TradeSet(int n, int k, Bits support) : n_(n), k_(k), support_(std::move(support)) {
        if (support_.size() != cell_count_checked(n, k)) {
            throw error(errc::invalid_argument, "support length must be k^n");
        }
        const auto &table = line_table(n, k);
        incidence_.resize(table.size());
        for (std::size_t l = 0; l < table.size(); ++l) {
            std::uint8_t c = 0;
            for (auto cell : table.cells(l)) {
                c += static_cast<std::uint8_t>(support_.test(cell));
            }
            incidence_[l] = c;
        }
    }

    static TradeSet from_cells(int n, int k, std::span<const Cell> cells) {
        Bits b(cell_count_checked(n, k));
        for (auto c : cells) {
            if (c >= b.size()) {
                throw error(errc::invalid_argument, "cell out of range");
            }
            b.set(c);
        }
        return TradeSet(n, k, std::move(b));
    }

    static TradeSet from_words(int n, int k, std::span<const Word> words) {
        std::vector<Cell> cells;
        for (const auto &w : words) {
            if (w.n() != n || w.k() != k) {
                throw error(errc::invalid_argument, "word shape mismatch");
            }
            cells.push_back(w.cell());
        }
        return from_cells(n, k, cells);
    }

    /// Text form: k^n characters over {0,1} in cell order.
    static TradeSet parse(std::string_view text, int k) {
        int n = 0;
        std::uint64_t len = 1;
        while (len < text.size()) {
            len *= static_cast<std::uint64_t>(k);
            ++n;
        }
        if (len != text.size()) {
            throw error(errc::invalid_argument, "support string length is not a power of k");
        }
        Bits b(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                b.set(i);
            } else if (text[i] != '0') {
                throw error(errc::invalid_argument, "support string must be over {0,1}");
            }
        }
        return TradeSet(n, k, std::move(b));
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const Bits &support() const noexcept { return support_; }
    std::size_t size() const { return support_.count(); }
    bool empty() const { return support_.none(); }
    bool contains(Cell c) const { return support_.test(c); }
    std::span<const std::uint8_t> line_incidence() const noexcept { return incidence_; }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(size());
        for (auto i = support_.find_first(); i != Bits::npos; i = support_.find_next(i)) {
            out.push_back(static_cast<Cell>(i));
        }
        return out;
    }

    std::string str() const {
        std::string s(support_.size(), '0');
        for (auto i = support_.find_first(); i != Bits::npos; i = support_.find_next(i)) {
            s[i] = '1';
        }
        return s;
    }

    /// Symmetric difference.
    friend TradeSet operator^(const TradeSet &a, const TradeSet &b) {
        a.check_same_shape(b);
        return TradeSet(a.n_, a.k_, a.support_ ^ b.support_);
    }

    friend bool operator==(const TradeSet &a, const TradeSet &b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.support_ == b.support_;
    }

    void check_same_shape(const TradeSet &other) const {
        if (n_ != other.n_ || k_ != other.k_) {
            throw error(errc::invalid_argument, "trade shape mismatch");
        }
    }

  private:
    static std::size_t cell_count_checked(int n, int k) {
        check_shape(n, k);
        return cell_count(n, k);
    }

    int n_;
    int k_;
    Bits support_;
    std::vector<std::uint8_t> incidence_;
};

/// A bitrade together with its two legs.
class BipartiteTrade {
  public:
    BipartiteTrade() = default;

    BipartiteTrade(TradeSet base, Bits part0, Bits part1)
        : base_(std::move(base)), part0_(std::move(part0)), part1_(std::move(part1)) {
        if (part0_.size() != base_.support().size() || part1_.size() != base_.support().size() ||
            part0_.intersects(part1_) || (part0_ | part1_) != base_.support()) {
            throw error(errc::invalid_argument, "parts must split the support");
        }
        const auto &table = line_table(base_.n(), base_.k());
        for (std::size_t l = 0; l < table.size(); ++l) {
            int in0 = 0;
            int in1 = 0;
            for (auto c : table.cells(l)) {
                in0 += part0_.test(c);
                in1 += part1_.test(c);
            }
            if (in0 > 1 || in1 > 1) {
                throw error(errc::invalid_argument, "parts must be independent sets");
            }
        }
    }

    const TradeSet &base() const noexcept { return base_; }
    const Bits &part0() const noexcept { return part0_; }
    const Bits &part1() const noexcept { return part1_; }
    int n() const noexcept { return base_.n(); }
    int k() const noexcept { return base_.k(); }
    std::size_t size() const { return base_.size(); }

    /// Swap the legs.
    BipartiteTrade flipped() const { return BipartiteTrade(base_, part1_, part0_); }

  private:
    TradeSet base_;
    Bits part0_;
    Bits part1_;
};

/// Restriction to the hyperface x_coord = value, viewed in dimension n-1.
inline TradeSet retract(const TradeSet &s, int coord, int value) {
    const auto cells = hyperface_cells(s.n(), s.k(), coord, value);
    Bits b(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        b[i] = s.contains(cells[i]);
    }
    return TradeSet(s.n() - 1, s.k(), std::move(b));
}

inline Bits permute_bits(const Bits &b, const std::vector<Cell> &image) {
    Bits out(b.size());
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
        out.set(image[i]);
    }
    return out;
}

inline TradeSet apply_isometry(const Isometry &g, const TradeSet &s) {
    if (g.n() != s.n() || g.k() != s.k()) {
        throw error(errc::invalid_argument, "isometry/trade shape mismatch");
    }
    return TradeSet(s.n(), s.k(), permute_bits(s.support(), g.cell_map()));
}

/// Image of a bitrade; a sign flip in g swaps the legs.
inline BipartiteTrade apply_isometry(const Isometry &g, const BipartiteTrade &b) {
    const auto image = g.cell_map();
    TradeSet base(b.n(), b.k(), permute_bits(b.base().support(), image));
    auto p0 = permute_bits(b.part0(), image);
    auto p1 = permute_bits(b.part1(), image);
    if (g.sign_flip()) {
        std::swap(p0, p1);
    }
    return BipartiteTrade(std::move(base), std::move(p0), std::move(p1));
}

} // namespace tritrade
