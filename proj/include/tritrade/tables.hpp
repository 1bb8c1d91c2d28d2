#pragma once

// Shipped reference tables (data/reference_tables.json) and their internal
// consistency checks. Nothing here recomputes the tables.

#include <tritrade/reference.hpp>
#include <tritrade/symmetry.hpp>
#include <tritrade/testsets.hpp>
#include <tritrade/trade.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace tritrade {

struct ReferenceTables {
    struct Row {
        BigInt functions;
        BigInt classes;
        bool classes_lower_bound = false;
    };
    struct Spectrum {
        std::uint64_t first_size = 0;
        std::uint64_t step = 2;
        std::vector<BigInt> sets;
        std::uint64_t size_at(std::size_t i) const { return first_size + step * i; }
    };
    std::map<int, Row> counts;
    std::map<int, Spectrum> spectra;
    std::map<int, MeanStd> half_cardinality;
};

inline std::filesystem::path default_reference_path() {
#ifdef TRITRADE_DATA_DIR
    return std::filesystem::path(TRITRADE_DATA_DIR) / "reference_tables.json";
#else
    return "data/reference_tables.json";
#endif
}

inline ReferenceTables load_reference_tables(const std::filesystem::path &path = default_reference_path()) {
    std::ifstream in(path);
    if (!in) {
        throw error(errc::invalid_argument, "cannot open " + path.string());
    }
    const auto j = nlohmann::json::parse(in);
    if (j.value("schema", "") != "tritrade/1") {
        throw error(errc::invalid_argument, "unexpected schema in " + path.string());
    }
    ReferenceTables t;
    for (const auto &c : j.at("counts")) {
        t.counts[c.at("n").get<int>()] = {BigInt(c.at("N").get<std::string>()), BigInt(c.at("N_classes").get<std::string>()),
                                          c.at("N_classes_lower_bound_only").get<bool>()};
    }
    for (const auto &s : j.at("spectra")) {
        ReferenceTables::Spectrum sp;
        sp.first_size = s.at("first_size").get<std::uint64_t>();
        sp.step = s.at("step").get<std::uint64_t>();
        for (const auto &v : s.at("sets")) {
            sp.sets.emplace_back(v.get<std::string>());
        }
        t.spectra[s.at("n").get<int>()] = std::move(sp);
    }
    for (const auto &h : j.at("half_cardinality")) {
        t.half_cardinality[h.at("n").get<int>()] = MeanStd{h.at("mean").get<double>(), h.at("std").get<double>()};
    }
    return t;
}

struct TableCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Consistency of the shipped tables, per dimension:
///   sum       1 + 2 * (bitrade count) = N(n)
///   mod3      zero entry at every size that is neither 0 nor 2^n mod 3
///   double    zero entry at 2^{n+1}
///   head      entry at 2^n is 3^n
///   tail      largest size is 2 * 3^{n-1} with 3 * 2^{n-1} sets
///   gap       zero entries strictly between 14 * 3^{n-3} and 2 * 3^{n-1}
///   stats     half-size mean and std from the spectrum match the stats table
///             to the printed precision
///   classes   N(n) / group order <= N'(n) <= N(n)
///   header    compiled-in tables equal the data file
inline std::vector<TableCheck> check_reference_tables(const ReferenceTables &t) {
    std::vector<TableCheck> out;
    const auto add = [&](std::string name, bool pass, std::string detail = {}) {
        out.push_back({std::move(name), pass, std::move(detail)});
    };
    for (const auto &[n, sp] : t.spectra) {
        const std::string tag = "n=" + std::to_string(n) + " ";
        BigInt sets = 0;
        bool mod3 = true;
        bool gap = true;
        std::string bad;
        BigInt at_double = 0;
        std::vector<std::uint64_t> hist;
        for (std::size_t i = 0; i < sp.sets.size(); ++i) {
            const auto size = sp.size_at(i);
            const auto &v = sp.sets[i];
            sets += v;
            if (v != 0 && !mod3_admissible(n, size)) {
                mod3 = false;
                bad = std::to_string(size);
            }
            if (size == (std::uint64_t{1} << (n + 1))) {
                at_double = v;
            }
            if (n >= 3 && v != 0 && 14 * ipow(3, static_cast<unsigned>(n - 3)) < size && size < 2 * ipow(3, static_cast<unsigned>(n - 1))) {
                gap = false;
            }
            if (hist.size() <= size) {
                hist.resize(size + 1, 0);
            }
            hist[size] = v.convert_to<std::uint64_t>();
        }
        const auto row = t.counts.find(n);
        add(tag + "sum", row != t.counts.end() && 1 + 2 * sets == row->second.functions);
        add(tag + "mod3", mod3, bad.empty() ? "" : "nonzero at size " + bad);
        add(tag + "double", at_double == 0);
        add(tag + "head", !sp.sets.empty() && sp.first_size == (std::uint64_t{1} << n) && sp.sets.front() == ipow(3, static_cast<unsigned>(n)));
        add(tag + "tail", !sp.sets.empty() && sp.size_at(sp.sets.size() - 1) == 2 * ipow(3, static_cast<unsigned>(n - 1)) &&
                              sp.sets.back() == 3 * (std::uint64_t{1} << (n - 1)));
        if (n >= 3) {
            add(tag + "gap", gap);
        }
        if (const auto h = t.half_cardinality.find(n); h != t.half_cardinality.end()) {
            const auto s = half_cardinality_stats(hist);
            const bool ok = std::abs(s.mean - h->second.mean) <= 0.005 && std::abs(s.stddev - h->second.stddev) <= 0.005;
            add(tag + "stats", ok, std::to_string(s.mean) + " " + std::to_string(s.stddev));
        }
    }
    for (const auto &[n, row] : t.counts) {
        const BigInt g = group_order(n);
        add("n=" + std::to_string(n) + " classes", row.classes * g >= row.functions && row.classes <= row.functions);
    }
    bool header = true;
    for (const auto &[n, row] : t.counts) {
        if (n < 0 || n >= static_cast<int>(reference::function_counts.size())) {
            header = false;
            continue;
        }
        header = header && row.functions == reference::function_counts[static_cast<std::size_t>(n)] &&
                 row.classes == reference::class_counts[static_cast<std::size_t>(n)] &&
                 row.classes_lower_bound == (n > reference::class_count_exact_max_n);
    }
    for (const auto &[n, sp] : t.spectra) {
        const auto ref = reference::spectrum(n);
        header = header && ref.size() == sp.sets.size();
        for (std::size_t i = 0; header && i < ref.size(); ++i) {
            header = sp.sets[i] == ref[i];
        }
    }
    for (const auto &[n, h] : t.half_cardinality) {
        bool found = false;
        for (const auto &r : reference::half_cardinality) {
            found = found || (r.n == n && r.mean == h.mean && r.stddev == h.stddev);
        }
        header = header && found;
    }
    add("header", header);
    return out;
}

} // namespace tritrade
