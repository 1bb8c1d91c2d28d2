#pragma once

// Exhaustive enumeration of line-sum-zero {-1,0,+1} functions on Q_3^n.
//
// The search assigns the 2^n binary cells in lex order. Every other cell y is
// forced: f(y) = (-1)^s * (sum of f over the binary cells below y), s = number
// of 2s in y. Each forced cell is checked as soon as the last binary cell
// below it (y with 2s read as 1s) is assigned.

#include <tritrade/symmetry.hpp>
#include <tritrade/testsets.hpp>

#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <vector>

namespace tritrade {

/// Allowed values per cell as a bit mask: 1 = -1, 2 = 0, 4 = +1.
using CellDomains = std::vector<std::uint8_t>;

inline constexpr std::uint8_t domain_bit(int value) { return static_cast<std::uint8_t>(1U << (value + 1)); }
inline constexpr std::uint8_t domain_all = 7;

inline constexpr std::string_view checkpoint_schema = "tritrade/1";

struct EnumOptions {
    std::optional<CellDomains> domains;
    int workers = 1;
    int prefix_depth = -1;                       // binary cells fixed per job; -1 = first plane
    const std::atomic<bool> *stop = nullptr;     // checked between jobs
    std::optional<std::uint64_t> job_budget;     // stop after this many jobs in this run
    std::optional<std::filesystem::path> checkpoint;
    bool allow_n6 = false;
};

struct EnumResult {
    int n = 0;
    BigInt count = 0;
    std::map<std::size_t, BigInt> by_support; // functions per support size
    std::uint64_t jobs = 0;
};

namespace detail {

struct ForcedCell {
    Cell y;
    Cell lo; // y with one 2 replaced by 0 (assigned earlier)
    Cell hi; // y with the same 2 replaced by 1 (same top, fewer 2s)
    bool negative;
};

class Enumerator {
  public:
    Enumerator(int n, const CellDomains *domains) : n_(n), domains_(domains) {
        const auto bin = binary_cells(n);
        binary_ = bin;
        plan_.resize(bin.size());
        const Cell total = cell_count(n, 3);
        // group every cell by its top binary cell, fewer 2s first
        std::vector<std::vector<std::pair<int, Cell>>> by_top(bin.size());
        std::vector<Cell> weight(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            weight[static_cast<std::size_t>(i)] = cell_count(n - 1 - i, 3);
        }
        for (Cell y = 0; y < total; ++y) {
            const auto d = digits_of(y, n, 3);
            std::size_t top = 0;
            int twos = 0;
            for (int i = 0; i < n; ++i) {
                const auto di = d[static_cast<std::size_t>(i)];
                top = top * 2 + (di == 0 ? 0 : 1);
                twos += di == 2;
            }
            by_top[top].emplace_back(twos, y);
        }
        for (std::size_t b = 0; b < bin.size(); ++b) {
            auto &cells = by_top[b];
            std::sort(cells.begin(), cells.end());
            for (const auto &[twos, y] : cells) {
                if (twos == 0) {
                    continue;
                }
                const auto d = digits_of(y, n, 3);
                int i = 0;
                while (d[static_cast<std::size_t>(i)] != 2) {
                    ++i;
                }
                const Cell w = weight[static_cast<std::size_t>(i)];
                plan_[b].push_back(ForcedCell{y, y - 2 * w, y - w, twos % 2 == 1});
            }
        }
        sums_.assign(total, 0);
        values_.assign(total, 0);
    }

    int n() const noexcept { return n_; }
    std::size_t depth() const noexcept { return binary_.size(); }

    /// Assigns binary cell number b; returns false (and leaves state usable
    /// for the next try) when a forced cell leaves its domain.
    bool assign(std::size_t b, int v, int &nonzero) {
        const Cell x = binary_[b];
        if (!allowed(x, v)) {
            return false;
        }
        sums_[x] = static_cast<std::int8_t>(v);
        values_[x] = static_cast<std::int8_t>(v);
        nonzero = v != 0;
        for (const auto &fc : plan_[b]) {
            const int s = sums_[fc.lo] + sums_[fc.hi];
            if (s < -1 || s > 1) {
                return false;
            }
            const int val = fc.negative ? -s : s;
            if (!allowed(fc.y, val)) {
                return false;
            }
            sums_[fc.y] = static_cast<std::int8_t>(s);
            values_[fc.y] = static_cast<std::int8_t>(val);
            nonzero += val != 0;
        }
        return true;
    }

    std::span<const std::int8_t> values() const noexcept { return values_; }

    /// Binary-cell values packed two bits per cell (value + 1), first cell
    /// most significant; increasing keys follow the stream order. n <= 5.
    std::uint64_t binary_key() const noexcept {
        std::uint64_t key = 0;
        for (auto c : binary_) {
            key = key << 2 | static_cast<std::uint64_t>(values_[c] + 1);
        }
        return key;
    }

    /// Depth-first search from binary cell `from`; leaf(nonzero) per solution.
    template <class Leaf>
    void search(std::size_t from, int nonzero, Leaf &leaf) {
        if (from == binary_.size()) {
            leaf(nonzero);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            int added = 0;
            if (assign(from, v, added)) {
                search(from + 1, nonzero + added, leaf);
            }
        }
    }

    /// Replays a fixed prefix; returns the nonzero count or nullopt.
    std::optional<int> replay(std::span<const std::int8_t> prefix) {
        int nonzero = 0;
        for (std::size_t b = 0; b < prefix.size(); ++b) {
            int added = 0;
            if (!assign(b, prefix[b], added)) {
                return std::nullopt;
            }
            nonzero += added;
        }
        return nonzero;
    }

    /// All valid assignments of the first `d` binary cells, lex order.
    std::vector<std::vector<std::int8_t>> prefixes(std::size_t d) {
        std::vector<std::vector<std::int8_t>> out;
        std::vector<std::int8_t> cur;
        const std::function<void(std::size_t)> rec = [&](std::size_t b) {
            if (b == d) {
                out.push_back(cur);
                return;
            }
            for (int v = -1; v <= 1; ++v) {
                int added = 0;
                if (assign(b, v, added)) {
                    cur.push_back(static_cast<std::int8_t>(v));
                    rec(b + 1);
                    cur.pop_back();
                }
            }
        };
        rec(0);
        return out;
    }

  private:
    bool allowed(Cell c, int v) const {
        return domains_ == nullptr || ((*domains_)[c] & domain_bit(v)) != 0;
    }

    int n_;
    const CellDomains *domains_;
    std::vector<Cell> binary_;
    std::vector<std::vector<ForcedCell>> plan_;
    std::vector<std::int8_t> sums_;
    std::vector<std::int8_t> values_;
};

inline void check_enum_shape(int n, const EnumOptions &opt) {
    if (n < 0 || n > (opt.allow_n6 ? 6 : 5)) {
        throw error(errc::dimension_too_large, "enumeration supports n <= 5 (n = 6 only when enabled)");
    }
    if (opt.domains && opt.domains->size() != cell_count(n, 3)) {
        throw error(errc::invalid_argument, "cell domain list must have 3^n entries");
    }
}

inline std::size_t default_prefix_depth(int n) { return n == 0 ? 0 : (std::size_t{1} << (n - 1)); }

inline std::string domains_digest(const std::optional<CellDomains> &d) {
    if (!d) {
        return "all";
    }
    std::string s;
    for (auto x : *d) {
        s.push_back(static_cast<char>('0' + x));
    }
    return s;
}

struct JobTotals {
    std::uint64_t count = 0;
    std::map<std::size_t, std::uint64_t> by_support;
};

inline nlohmann::json checkpoint_json(int n, std::size_t depth, std::size_t jobs, const std::optional<CellDomains> &domains,
                                      const std::set<std::size_t> &done, const EnumResult &acc) {
    nlohmann::json j;
    j["schema"] = checkpoint_schema;
    j["n"] = n;
    j["prefix_depth"] = depth;
    j["jobs"] = jobs;
    j["domains"] = domains_digest(domains);
    j["completed"] = std::vector<std::size_t>(done.begin(), done.end());
    j["count"] = acc.count.str();
    nlohmann::json hist = nlohmann::json::object();
    for (const auto &[size, c] : acc.by_support) {
        hist[std::to_string(size)] = c.str();
    }
    j["by_support"] = hist;
    return j;
}

} // namespace detail

/// Counts (and histograms by support size) every solution; jobs are the
/// valid assignments of the first prefix_depth binary cells.
inline EnumResult enumerate_count(int n, const EnumOptions &opt = {}) {
    detail::check_enum_shape(n, opt);
    const CellDomains *dom = opt.domains ? &*opt.domains : nullptr;
    const std::size_t depth = opt.prefix_depth < 0 ? detail::default_prefix_depth(n)
                                                   : std::min<std::size_t>(static_cast<std::size_t>(opt.prefix_depth), std::size_t{1} << n);
    detail::Enumerator root(n, dom);
    const auto prefixes = root.prefixes(depth);

    EnumResult acc;
    acc.n = n;
    acc.jobs = prefixes.size();
    std::set<std::size_t> done;
    if (opt.checkpoint && std::filesystem::exists(*opt.checkpoint)) {
        std::ifstream in(*opt.checkpoint);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception &e) {
            throw error(errc::checkpoint_mismatch, std::string("unreadable checkpoint: ") + e.what());
        }
        if (j.value("schema", "") != checkpoint_schema || j.value("n", -1) != n || j.value("prefix_depth", std::size_t{0}) != depth ||
            j.value("jobs", std::size_t{0}) != prefixes.size() || j.value("domains", "") != detail::domains_digest(opt.domains)) {
            throw error(errc::checkpoint_mismatch, "checkpoint does not match this run");
        }
        for (auto i : j["completed"]) {
            done.insert(i.get<std::size_t>());
        }
        acc.count = BigInt(j["count"].get<std::string>());
        for (const auto &[size, c] : j["by_support"].items()) {
            acc.by_support[std::stoul(size)] = BigInt(c.get<std::string>());
        }
    }

    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (!done.contains(i)) {
            todo.push_back(i);
        }
    }
    const std::uint64_t budget = opt.job_budget.value_or(todo.size());

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> interrupted{false};
    const auto worker = [&]() {
        detail::Enumerator e(n, dom);
        while (true) {
            if (opt.stop && opt.stop->load()) {
                interrupted = true;
                return;
            }
            const auto slot = next.fetch_add(1);
            if (slot >= todo.size()) {
                return;
            }
            if (slot >= budget) {
                interrupted = true;
                return;
            }
            const auto job = todo[slot];
            detail::JobTotals t;
            const auto start = e.replay(prefixes[job]);
            auto leaf = [&](int nonzero) {
                ++t.count;
                ++t.by_support[static_cast<std::size_t>(nonzero)];
            };
            e.search(depth, *start, leaf);
            std::lock_guard lock(mu);
            acc.count += t.count;
            for (const auto &[size, c] : t.by_support) {
                acc.by_support[size] += c;
            }
            done.insert(job);
        }
    };
    const int w = std::max(1, opt.workers);
    if (w == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < w; ++i) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    const bool finished = done.size() == prefixes.size();
    if (opt.checkpoint) {
        if (finished) {
            std::filesystem::remove(*opt.checkpoint);
        } else {
            std::ofstream out(*opt.checkpoint);
            out << detail::checkpoint_json(n, depth, prefixes.size(), opt.domains, done, acc).dump();
        }
    }
    if (!finished) {
        throw error(errc::interrupted, "stopped after " + std::to_string(done.size()) + " of " + std::to_string(prefixes.size()) + " jobs");
    }
    return acc;
}

/// Calls visit(TernFn) for every solution in lex order of the value vector.
template <class Visit>
BigInt enumerate_functions(int n, Visit &&visit, const std::optional<CellDomains> &domains = std::nullopt) {
    EnumOptions opt;
    opt.domains = domains;
    detail::check_enum_shape(n, opt);
    detail::Enumerator e(n, opt.domains ? &*opt.domains : nullptr);
    BigInt count = 0;
    std::vector<std::int8_t> buf;
    auto leaf = [&](int) {
        ++count;
        const auto v = e.values();
        buf.assign(v.begin(), v.end());
        visit(TernFn(n, buf));
    };
    e.search(0, 0, leaf);
    return count;
}

inline std::vector<TernFn> all_functions(int n) {
    std::vector<TernFn> out;
    enumerate_functions(n, [&](TernFn f) { out.push_back(std::move(f)); });
    return out;
}

/// N(n) from the classes of dimension n-1: fix the layer x_n = 0 to a class
/// representative, count the admissible layers x_n = 1 (x_n = 2 is forced to
/// -(f0 + f1), so cells with f0 = +1 exclude +1 and vice versa), and weight by
/// the orbit size.
inline BigInt count_by_retract_classes(int n, std::span<const ClassRecord> lower) {
    if (n < 1) {
        throw error(errc::invalid_argument, "need n >= 1");
    }
    BigInt total = 0;
    for (const auto &c : lower) {
        const auto &f0 = c.representative;
        if (f0.n() != n - 1) {
            throw error(errc::invalid_argument, "class representative has the wrong dimension");
        }
        CellDomains dom(f0.values().size(), domain_all);
        for (std::size_t i = 0; i < dom.size(); ++i) {
            if (f0.values()[i] == 1) {
                dom[i] = domain_bit(-1) | domain_bit(0);
            } else if (f0.values()[i] == -1) {
                dom[i] = domain_bit(0) | domain_bit(1);
            }
        }
        EnumOptions opt;
        opt.domains = std::move(dom);
        opt.allow_n6 = true;
        total += enumerate_count(n - 1, opt).count * c.orbit_size;
    }
    return total;
}

struct SpectrumTable {
    int n = 0;
    BigInt total_functions = 0;
    std::map<std::size_t, BigInt> entries; // cardinality -> number of bitrades

    /// Counts at 2^n, 2^n + 2, ..., 2 * 3^{n-1}.
    std::vector<BigInt> padded_list() const {
        std::vector<BigInt> out;
        if (n < 1) {
            return out;
        }
        const std::size_t lo = std::size_t{1} << n;
        const std::size_t hi = 2 * static_cast<std::size_t>(ipow(3, static_cast<unsigned>(n - 1)));
        for (std::size_t s = lo; s <= hi; s += 2) {
            const auto it = entries.find(s);
            out.push_back(it == entries.end() ? BigInt(0) : it->second);
        }
        return out;
    }
};

inline SpectrumTable spectrum_from(const EnumResult &r) {
    SpectrumTable t;
    t.n = r.n;
    t.total_functions = r.count;
    for (const auto &[size, c] : r.by_support) {
        if (size > 0) {
            t.entries[size] = c / 2;
        }
    }
    return t;
}

inline SpectrumTable spectrum(int n, const EnumOptions &opt = {}) { return spectrum_from(enumerate_count(n, opt)); }

namespace detail {

/// Orbit sweep over the whole solution set with functions stored as packed
/// binary-cell keys. Automorphism orders come from orbit-stabilizer.
inline std::vector<ClassRecord> classify_compact(int n) {
    if (n < 0 || n > 5) {
        throw error(errc::dimension_too_large, "compact classification needs n <= 5");
    }
    Enumerator e(n, nullptr);
    std::vector<std::uint64_t> keys;
    auto leaf = [&](int) { keys.push_back(e.binary_key()); };
    e.search(0, 0, leaf);

    const auto bin = binary_cells(n);
    const std::size_t nb = bin.size();
    const int shift = 2 * static_cast<int>(nb) > 20 ? 2 * static_cast<int>(nb) - 20 : 0;
    std::vector<std::uint32_t> bucket((std::size_t{1} << (2 * nb - static_cast<std::size_t>(shift))) + 1, 0);
    for (auto k : keys) {
        ++bucket[(k >> shift) + 1];
    }
    for (std::size_t i = 1; i < bucket.size(); ++i) {
        bucket[i] += bucket[i - 1];
    }
    const auto index_of = [&](std::uint64_t k) {
        const auto lo = keys.begin() + bucket[k >> shift];
        const auto hi = keys.begin() + bucket[(k >> shift) + 1];
        const auto it = std::lower_bound(lo, hi, k);
        if (it == hi || *it != k) {
            throw error(errc::invalid_argument, "image of a solution is not a solution");
        }
        return static_cast<std::size_t>(it - keys.begin());
    };

    // g = f o m^{-1}: g at binary cell b is f at the preimage of b
    std::vector<std::vector<Cell>> pre;
    for (const auto &g : group_generators(n)) {
        const auto m = g.cell_map();
        std::vector<Cell> inv(m.size());
        for (Cell c = 0; c < m.size(); ++c) {
            inv[m[c]] = c;
        }
        std::vector<Cell> p;
        for (auto b : bin) {
            p.push_back(inv[b]);
        }
        pre.push_back(std::move(p));
    }
    std::uint64_t flip_mask = 0;
    for (std::size_t i = 0; i < nb; ++i) {
        flip_mask = flip_mask << 2 | 2;
    }

    std::vector<bool> seen(keys.size(), false);
    std::vector<std::size_t> queue;
    std::vector<std::int8_t> prefix(nb);
    std::vector<ClassRecord> out;
    const auto order = group_order(n);
    for (std::size_t start = 0; start < keys.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        seen[start] = true;
        queue.assign(1, start);
        std::optional<TernFn> first;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto k = keys[queue[head]];
            for (std::size_t i = 0; i < nb; ++i) {
                prefix[i] = static_cast<std::int8_t>(((k >> (2 * (nb - 1 - i))) & 3) - 1);
            }
            e.replay(prefix);
            const auto v = e.values();
            if (!first) {
                first = TernFn(n, std::vector<std::int8_t>(v.begin(), v.end()));
            }
            const auto visit = [&](std::uint64_t img) {
                const auto j = index_of(img);
                if (!seen[j]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            };
            for (const auto &p : pre) {
                std::uint64_t img = 0;
                for (auto c : p) {
                    img = img << 2 | static_cast<std::uint64_t>(v[c] + 1);
                }
                visit(img);
            }
            // value + 1 -> 1 - value is 2 - code on every cell
            visit(flip_mask - k);
        }
        ClassRecord rec;
        rec.representative = canonical_form(*first).function();
        rec.orbit_size = queue.size();
        rec.aut_order = order / queue.size();
        out.push_back(std::move(rec));
    }
    sort_classes(out);
    return out;
}

} // namespace detail

struct Classification {
    std::uint64_t class_count = 0;
    std::vector<ClassRecord> classes;
    BigInt total_functions = 0;
    bool double_count_ok = false;
};

/// n <= 4 classifies the function stream directly (brute automorphism
/// orders); n = 5 uses the compact sweep and needs a few hundred MB.
inline Classification classify_all(int n, std::size_t orbit_limit = default_orbit_limit) {
    if (n == 5) {
        Classification out;
        out.classes = detail::classify_compact(n);
        out.class_count = out.classes.size();
        for (const auto &c : out.classes) {
            out.total_functions += c.orbit_size;
        }
        out.double_count_ok = out.total_functions == enumerate_count(n).count &&
                              double_count_check(out.classes, out.total_functions.convert_to<std::uint64_t>());
        return out;
    }
    const auto fs = all_functions(n);
    Classification out;
    out.classes = classify(fs, orbit_limit);
    out.class_count = out.classes.size();
    out.total_functions = fs.size();
    out.double_count_ok = double_count_check(out.classes, fs.size());
    return out;
}

} // namespace tritrade
