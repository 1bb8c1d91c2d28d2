#include <tritrade/checks.hpp>
#include <tritrade/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>

using namespace tritrade;

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop = true; }

enum exit_code : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_bad_args = 2,
    exit_resource = 3,
    exit_checkpoint = 4,
    exit_interrupted = 130,
};

int code_for(errc e) {
    switch (e) {
    case errc::dimension_too_large:
    case errc::orbit_too_large:
    case errc::too_many_monomials:
        return exit_resource;
    case errc::checkpoint_mismatch:
        return exit_checkpoint;
    case errc::interrupted:
        return g_stop ? exit_interrupted : exit_resource;
    default:
        return exit_bad_args;
    }
}

struct Common {
    std::string out;
    std::string format;
    int jobs = 1;
    std::uint64_t seed = 0;
};

void emit(Report rep, const Common &c, Format f, std::chrono::steady_clock::time_point start, const std::vector<std::string> &argv) {
    rep.manifest.command_line = argv;
    rep.manifest.seed = c.seed;
    rep.manifest.workers = c.jobs;
    rep.manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto text = rep.render(f);
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(c.out);
    if (!os) {
        throw error(errc::invalid_argument, "cannot write " + c.out);
    }
    os << text;
}

Format parse_format(const std::string &s) { return s == "csv" ? Format::csv : Format::json; }

BipartiteTrade bitrade_arg(const std::string &support, int k) {
    const auto s = TradeSet::parse(support, k);
    const auto b = bipartition(s);
    if (!is_unitrade(s) || !b) {
        throw error(errc::not_a_unitrade, "'" + support + "' is not a bitrade");
    }
    return *b;
}

} // namespace

int main(int argc, char **argv) {
    const std::vector<std::string> args(argv, argv + argc);
    const auto start = std::chrono::steady_clock::now();
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);

    CLI::App app{"Latin unitrades and bitrades in H(n,3)"};
    app.require_subcommand(1);
    Common common;

    auto *en = app.add_subcommand("enumerate", "count, spectrum or classes of line-sum-zero functions");
    int en_n = 0;
    std::string mode = "count";
    std::string checkpoint;
    int prefix_depth = -1;
    std::optional<std::uint64_t> max_jobs;
    bool allow_n6 = false;
    en->add_option("--n", en_n, "dimension")->required()->check(CLI::NonNegativeNumber);
    en->add_option("--mode", mode, "count | spectrum | classes")->check(CLI::IsMember({"count", "spectrum", "classes"}));
    en->add_option("--checkpoint", checkpoint, "checkpoint file (count and spectrum)");
    en->add_option("--prefix-depth", prefix_depth, "binary cells fixed per job (default: first plane)");
    en->add_option("--max-jobs", max_jobs, "stop after this many jobs, keeping the checkpoint");
    en->add_flag("--allow-n6", allow_n6, "permit n = 6 in count mode");

    auto *ve = app.add_subcommand("verify", "run a named check");
    std::string check;
    int ve_n = 0;
    ve->add_option("--check", check, "check name, or 'all'")->required();
    ve->add_option("--n", ve_n, "dimension (t for hprime)")->required();
    ve->add_option("--seed", common.seed, "seed for sampled checks");

    auto *co = app.add_subcommand("construct", "build a trade or code");
    std::string what;
    int co_n = 0, co_s = 0, co_t = 2, co_m = 1, co_k = 3;
    std::string left, right, base, fn;
    co->add_option("--what", what)->required()->check(CLI::IsMember({"maximal", "rank2", "bitrade14", "product", "kext", "hprime", "pot12"}));
    co->add_option("--n", co_n, "dimension");
    co->add_option("--s", co_s, "rank2 parameter");
    co->add_option("--t", co_t, "code parameter");
    co->add_option("--m", co_m, "k-extension power");
    co->add_option("--k", co_k, "alphabet size of --left/--right/--base");
    co->add_option("--left", left, "first factor, support string");
    co->add_option("--right", right, "second factor, support string");
    co->add_option("--base", base, "k-extension base, support string");
    co->add_option("--f", fn, "pot12 input, truth table string");

    for (auto *sub : {en, ve, co}) {
        sub->add_option("--out", common.out, "output file (default stdout)");
        sub->add_option("--format", common.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--jobs", common.jobs, "worker threads")->envname("TRITRADE_JOBS")->check(CLI::Range(1, 1024));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_bad_args;
    }

    try {
        if (en->parsed()) {
            if (en_n == 6 && (mode != "count" || !allow_n6)) {
                throw error(errc::dimension_too_large, "n = 6 needs --mode count --allow-n6");
            }
            if (mode == "classes") {
                const auto c = classify_all(en_n);
                emit(classes_report(en_n, c), common, parse_format(common.format), start, args);
                return exit_ok;
            }
            EnumOptions opt;
            opt.workers = common.jobs;
            opt.prefix_depth = prefix_depth;
            opt.stop = &g_stop;
            opt.job_budget = max_jobs;
            opt.allow_n6 = allow_n6;
            if (!checkpoint.empty()) {
                opt.checkpoint = checkpoint;
            }
            const auto r = enumerate_count(en_n, opt);
            if (mode == "spectrum") {
                emit(spectrum_report(spectrum_from(r)), common, parse_format(common.format), start, args);
            } else if (common.format.empty() && common.out.empty()) {
                std::cout << r.count << "\n";
            } else {
                emit(count_report(r), common, parse_format(common.format), start, args);
            }
            return exit_ok;
        }

        if (ve->parsed()) {
            std::vector<std::string> names;
            if (check == "all") {
                for (const auto &c : check_registry()) {
                    if (ve_n >= c.min_n && ve_n <= c.max_n) {
                        names.push_back(c.name);
                    }
                }
            } else {
                names.push_back(find_check(check).name);
            }
            bool all_pass = true;
            nlohmann::json results = nlohmann::json::array();
            Report rep;
            rep.rows.push_back({"check", "n", "pass"});
            for (const auto &name : names) {
                const auto r = run_check(name, CheckArgs{ve_n, common.seed, common.jobs});
                all_pass = all_pass && r.pass;
                results.push_back({{"check", name}, {"n", ve_n}, {"pass", r.pass}, {"detail", r.detail}, {"counterexample", r.counterexample}});
                rep.rows.push_back({name, std::to_string(ve_n), r.pass ? "pass" : "fail"});
            }
            rep.payload = {{"schema", checkpoint_schema}, {"kind", "verify"}, {"pass", all_pass}, {"results", results}};
            emit(std::move(rep), common, parse_format(common.format), start, args);
            return all_pass ? exit_ok : exit_check_failed;
        }

        Report rep;
        nlohmann::json params = {{"what", what}};
        std::optional<BipartiteTrade> trade;
        nlohmann::json self_check = nlohmann::json::object();
        if (what == "maximal") {
            trade = maximal_bitrade(co_n);
            params["n"] = co_n;
            self_check["expected_size"] = 2 * ipow(3, static_cast<unsigned>(co_n - 1));
            self_check["complement_is_mds"] = complement_is_mds(trade->base());
        } else if (what == "rank2") {
            trade = rank2_family(co_n, co_s);
            params["n"] = co_n;
            params["s"] = co_s;
            self_check["expected_size"] = (std::uint64_t{1} << (co_n + 1)) - (std::uint64_t{1} << (co_s + 1));
            self_check["rank"] = rank(trade->base(), true);
        } else if (what == "bitrade14") {
            trade = bitrade14(co_n);
            params["n"] = co_n;
            self_check["expected_size"] = 14 * ipow(3, static_cast<unsigned>(co_n - 3));
        } else if (what == "product") {
            const auto a = bitrade_arg(left, co_k);
            const auto b = bitrade_arg(right, co_k);
            trade = product(a, b);
            params["left"] = left;
            params["right"] = right;
            params["k"] = co_k;
            self_check["expected_size"] = a.size() * b.size();
        } else if (what == "kext") {
            const auto b = bitrade_arg(base, co_k);
            trade = k_extension(b, co_m);
            params["base"] = base;
            params["m"] = co_m;
            params["k"] = co_k;
            self_check["expected_size"] = b.size() * ipow(static_cast<std::uint64_t>(co_k), static_cast<unsigned>(co_m));
        } else if (what == "pot12") {
            const auto f = BoolFn::parse(fn);
            trade = pot12(f);
            params["f"] = fn;
        } else {
            const auto code = hprime(co_t);
            const auto report = verify_odd_distance_bound(code.words());
            params["t"] = co_t;
            bool unique = true;
            for (int i = 0; i < code.dimension(); ++i) {
                unique = unique && code.row_composition_unique(static_cast<std::size_t>(i));
            }
            self_check = {{"pairwise_odd", report.pairwise_odd}, {"within_bound", report.within_bound}, {"unique_compositions", unique}};
            rep.payload = {{"schema", checkpoint_schema}, {"kind", "code"}, {"params", params}, {"code", code_json(code)}, {"self_check", self_check}};
            rep.rows = {{"row"}};
            for (std::size_t i = 0; i < code.rows().size(); ++i) {
                rep.rows.push_back({code.row(i).str()});
            }
        }
        if (trade) {
            self_check["is_unitrade"] = is_unitrade(trade->base());
            self_check["bipartite"] = bipartition(trade->base()).has_value();
            if (self_check.contains("expected_size")) {
                self_check["size_matches"] = self_check["expected_size"].get<std::uint64_t>() == trade->size();
            }
            rep.payload = {{"schema", checkpoint_schema}, {"kind", "trade"}, {"params", params}, {"trade", trade_json(*trade)}, {"self_check", self_check}};
            rep.rows = {{"n", "k", "size", "support"},
                        {std::to_string(trade->n()), std::to_string(trade->k()), std::to_string(trade->size()), trade->base().str()}};
        }
        emit(std::move(rep), common, parse_format(common.format), start, args);
        return exit_ok;
    } catch (const error &e) {
        std::cerr << "tritrade: " << e.what() << "\n";
        return code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "tritrade: " << e.what() << "\n";
        return exit_bad_args;
    }
}
