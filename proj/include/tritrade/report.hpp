#pragma once

// Report serialization (JSON and CSV) and the run manifest embedded in every
// CLI output.

#include <tritrade/construct.hpp>
#include <tritrade/enumerate.hpp>

#include <boost/crc.hpp>
#include <boost/version.hpp>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace tritrade {

inline constexpr std::string_view version = "0.1.0";

inline std::string crc32_hex(std::string_view data) {
    boost::crc_32_type crc;
    crc.process_bytes(data.data(), data.size());
    std::ostringstream os;
    os << std::hex;
    os.width(8);
    os.fill('0');
    os << crc.checksum();
    return os.str();
}

/// Wall time and versions vary between runs; the checksum covers only the
/// payload, so equal inputs give equal checksums.
struct RunManifest {
    std::vector<std::string> command_line;
    std::uint64_t seed = 0;
    int workers = 1;
    double wall_seconds = 0;
    std::string payload_crc32;

    nlohmann::json to_json() const {
        return {{"command_line", command_line},
                {"seed", seed},
                {"versions", {{"tritrade", version}, {"boost", BOOST_LIB_VERSION}, {"compiler", __VERSION__}}},
                {"wall_seconds", wall_seconds},
                {"workers", workers},
                {"checksums", {{"payload_crc32", payload_crc32}}}};
    }
};

enum class Format { json, csv };

/// A payload plus the manifest; JSON embeds it under "manifest", CSV as a
/// leading comment line.
struct Report {
    nlohmann::json payload;
    std::vector<std::vector<std::string>> rows; // CSV, header first
    RunManifest manifest;

    std::string payload_text(Format f) const {
        if (f == Format::json) {
            return payload.dump();
        }
        std::string out;
        for (const auto &r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                out += (i ? "," : "") + r[i];
            }
            out += '\n';
        }
        return out;
    }

    std::string render(Format f) {
        const auto body = payload_text(f);
        manifest.payload_crc32 = crc32_hex(body);
        if (f == Format::json) {
            auto j = payload;
            j["manifest"] = manifest.to_json();
            return j.dump(1) + "\n";
        }
        return "# manifest " + manifest.to_json().dump() + "\n" + body;
    }
};

inline Report count_report(const EnumResult &r) {
    Report rep;
    rep.payload = {{"schema", checkpoint_schema}, {"kind", "count"}, {"n", r.n}, {"N", r.count.str()}};
    rep.rows = {{"n", "N"}, {std::to_string(r.n), r.count.str()}};
    return rep;
}

inline Report spectrum_report(const SpectrumTable &t) {
    Report rep;
    nlohmann::json entries = nlohmann::json::array();
    rep.rows.push_back({"size", "sets"});
    for (const auto &[size, c] : t.entries) {
        entries.push_back({{"size", size}, {"sets", c.str()}});
        rep.rows.push_back({std::to_string(size), c.str()});
    }
    rep.payload = {{"schema", checkpoint_schema}, {"kind", "spectrum"}, {"n", t.n}, {"N", t.total_functions.str()}, {"entries", entries}};
    return rep;
}

inline Report classes_report(int n, const Classification &c) {
    Report rep;
    nlohmann::json classes = nlohmann::json::array();
    rep.rows.push_back({"key", "orbit", "aut", "cardinality"});
    for (const auto &r : c.classes) {
        const auto key = r.key().bytes;
        classes.push_back({{"key", key}, {"orbit", r.orbit_size}, {"aut", r.aut_order}, {"cardinality", r.cardinality()}});
        rep.rows.push_back({key, std::to_string(r.orbit_size), std::to_string(r.aut_order), std::to_string(r.cardinality())});
    }
    rep.payload = {{"schema", checkpoint_schema},
                   {"kind", "classes"},
                   {"n", n},
                   {"N", c.total_functions.str()},
                   {"classes_count", c.class_count},
                   {"double_count_ok", c.double_count_ok},
                   {"classes", classes}};
    return rep;
}

inline nlohmann::json trade_json(const BipartiteTrade &b) {
    return {{"n", b.n()},
            {"k", b.k()},
            {"size", b.size()},
            {"support", b.base().str()},
            {"part0", TradeSet(b.n(), b.k(), b.part0()).str()},
            {"part1", TradeSet(b.n(), b.k(), b.part1()).str()}};
}

inline nlohmann::json code_json(const TernaryCode &c) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < c.rows().size(); ++i) {
        rows.push_back(c.row(i).str());
    }
    return {{"length", c.length()}, {"dimension", c.dimension()}, {"words", c.words().size()}, {"generator", rows}};
}

} // namespace tritrade
