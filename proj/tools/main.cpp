#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>

#include "ghn/bernoulli.hpp"
#include "ghn/harmonic.hpp"
#include "ghn/oracle.hpp"
#include "ghn/registry.hpp"
#include "ghn/report.hpp"
#include "ghn/rhs.hpp"
#include "ghn/sweep.hpp"

namespace {

struct CliConfig {
    std::uint64_t n = 0;
    long r = 1;
    long a = 1;
    long b = 0;
    long k = 1;
    long m = 0;
    std::uint64_t p = 0;
    std::uint64_t pmin = 5;
    std::uint64_t pmax = 199;
    unsigned exp = 1;
    std::string checks = "all";
    long amax = 8;
    long bmax = 12;
    long kmax = 2;
    std::string format = "text";
    std::string out;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    bool timing = false;
    std::string id;
};

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

int cmd_bernoulli(const CliConfig& cfg) {
    ghn::BernoulliTable table(cfg.n);
    fmt::print("B_{} = {}\n", cfg.n, table.value(cfg.n).str());
    if (cfg.p != 0) {
        ghn::Modulus m(cfg.p, cfg.exp);
        auto res = ghn::bernoulli_residue(table, cfg.n, m);
        fmt::print("B_{} = {} (mod {})\n", cfg.n, res.residue(), m.value());
    }
    return 0;
}

int cmd_harmonic(const CliConfig& cfg) {
    ghn::HarmonicSpec spec{cfg.n, cfg.r};
    fmt::print("H_{}^({}) = {}\n", cfg.n, cfg.r, ghn::ghn_exact(spec).str());
    if (cfg.p != 0) {
        ghn::Modulus m(cfg.p, cfg.exp);
        auto res = ghn::ghn_residue(spec, m);
        fmt::print("H_{}^({}) = {} (mod {})\n", cfg.n, cfg.r, res.residue(), m.value());
    }
    return 0;
}

int cmd_sum(const CliConfig& cfg) {
    ghn::SumSpec spec{cfg.b, std::vector<long>(static_cast<std::size_t>(cfg.k), cfg.a), cfg.p,
                      cfg.exp};
    auto res = ghn::oracle_sum(spec);
    fmt::print("{} (mod {})\n", res.residue(), res.modulus().value());
    if (cfg.p <= 311) fmt::print("exact: {}\n", ghn::oracle_sum_exact(spec).str());
    return 0;
}

int cmd_check(const CliConfig& cfg) {
    const ghn::CheckSpec* spec = ghn::find_check(cfg.id);
    if (!spec) {
        fmt::print(stderr, "unknown check id '{}'; see `ghn list`\n", cfg.id);
        return 2;
    }
    if (spec->prime_indexed && cfg.p == 0) {
        fmt::print(stderr, "check '{}' needs --p\n", cfg.id);
        return 2;
    }
    ghn::GridBounds bounds;
    bounds.pmax = std::max<std::uint64_t>(cfg.p, 5);
    bounds.bmax = std::max({cfg.b, cfg.m, bounds.bmax});
    ghn::BernoulliTable bern(ghn::required_table_size(bounds));
    ghn::CheckContext ctx{bern};
    ghn::Params params;
    auto grid = spec->grid(ghn::GridBounds{});
    for (const auto& [name, value] : grid.front()) {
        (void)value;
        if (name == "a") params.emplace_back("a", cfg.a);
        else if (name == "b") params.emplace_back("b", cfg.b);
        else if (name == "m") params.emplace_back("m", cfg.m);
        else if (name == "n") params.emplace_back("n", static_cast<long>(cfg.n));
    }
    ghn::CheckReport rep = ghn::run_check(*spec, params, cfg.p, ctx);
    fmt::print("{}\n", ghn::report_line(rep));
    return rep.skipped ? 0 : (rep.pass ? 0 : 1);
}

int cmd_sweep(const CliConfig& cfg) {
    ghn::SweepConfig sc;
    sc.bounds.pmin = cfg.pmin;
    sc.bounds.pmax = cfg.pmax;
    sc.bounds.amax = cfg.amax;
    sc.bounds.bmax = cfg.bmax;
    sc.bounds.kmax = cfg.kmax;
    sc.threads = cfg.threads;
    sc.timing = cfg.timing;
    sc.seed = cfg.seed;
    if (cfg.checks != "all" && !cfg.checks.empty()) {
        std::string cur;
        for (char c : cfg.checks + ",") {
            if (c == ',') {
                if (!cur.empty()) sc.check_ids.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    ghn::SweepResult result = ghn::sweep(sc);
    std::string rendered;
    if (cfg.format == "json")
        rendered = ghn::report_json(result);
    else if (cfg.format == "csv")
        rendered = ghn::report_csv(result);
    else
        rendered = ghn::report_text(result);
    emit(cfg.out, rendered);
    if (!cfg.out.empty())
        fmt::print("pass {}, fail {}, skip {} -> {}\n", result.summary.pass, result.summary.fail,
                   result.summary.skip, cfg.out);
    return result.summary.fail == 0 ? 0 : 1;
}

int cmd_list() {
    for (const auto& spec : ghn::registry()) {
        std::string names;
        auto grid = spec.grid(ghn::GridBounds{});
        for (const auto& [name, value] : grid.front()) {
            (void)value;
            if (!names.empty()) names += ",";
            names += name;
        }
        fmt::print("{:<24} mod p^{}  params({})  {}\n", spec.id, spec.modulus_exponent,
                   names.empty() ? "-" : names, spec.hypothesis_text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"generalized harmonic number sums: exact values, residues, and congruence sweeps"};
    app.require_subcommand(1);

    auto* c_bern = app.add_subcommand("bernoulli", "exact Bernoulli number, optional residue");
    c_bern->add_option("--n", cfg.n, "index")->required();
    c_bern->add_option("--p", cfg.p, "prime for the residue");
    c_bern->add_option("--exp", cfg.exp, "modulus exponent e");

    auto* c_harm = app.add_subcommand("harmonic", "H_n^(r), exact and optional residue");
    c_harm->add_option("--n", cfg.n, "upper limit")->required();
    c_harm->add_option("--r", cfg.r, "order (any sign)");
    c_harm->add_option("--p", cfg.p, "prime for the residue");
    c_harm->add_option("--exp", cfg.exp, "modulus exponent e");

    auto* c_sum = app.add_subcommand("sum", "oracle sum of i^b (H_i^(a))^k over i < p");
    c_sum->add_option("--a", cfg.a, "GHN order")->required();
    c_sum->add_option("--b", cfg.b, "weight exponent")->required();
    c_sum->add_option("--k", cfg.k, "GHN power");
    c_sum->add_option("--p", cfg.p, "prime")->required();
    c_sum->add_option("--exp", cfg.exp, "modulus exponent e");

    auto* c_check = app.add_subcommand("check", "run one registry check");
    c_check->add_option("--id", cfg.id, "check id")->required();
    c_check->add_option("--a", cfg.a, "parameter a");
    c_check->add_option("--b", cfg.b, "parameter b");
    c_check->add_option("--m", cfg.m, "parameter m");
    c_check->add_option("--n", cfg.n, "parameter n");
    c_check->add_option("--p", cfg.p, "prime");

    auto* c_sweep = app.add_subcommand("sweep", "run checks over parameter and prime ranges");
    c_sweep->add_option("--checks", cfg.checks, "all or comma-separated ids");
    c_sweep->add_option("--pmin", cfg.pmin, "smallest prime");
    c_sweep->add_option("--pmax", cfg.pmax, "largest prime");
    c_sweep->add_option("--amax", cfg.amax, "largest a");
    c_sweep->add_option("--bmax", cfg.bmax, "largest b");
    c_sweep->add_option("--kmax", cfg.kmax, "largest GHN power");
    c_sweep->add_option("--format", cfg.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    c_sweep->add_option("--out", cfg.out, "output path (default stdout)");
    c_sweep->add_option("--threads", cfg.threads, "worker threads");
    c_sweep->add_option("--seed", cfg.seed, "recorded in the report; sweeps are exhaustive");
    c_sweep->add_flag("--timing", cfg.timing, "include per-check micros in reports");

    app.add_subcommand("list", "print the check registry with hypotheses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("bernoulli")) return cmd_bernoulli(cfg);
        if (app.got_subcommand("harmonic")) return cmd_harmonic(cfg);
        if (app.got_subcommand("sum")) return cmd_sum(cfg);
        if (app.got_subcommand("check")) return cmd_check(cfg);
        if (app.got_subcommand("sweep")) return cmd_sweep(cfg);
        if (app.got_subcommand("list")) return cmd_list();
    } catch (const std::invalid_argument& e) {
        // bad p, bad check id, bad bounds: caller input, not arithmetic
        fmt::print(stderr, "usage error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
    return 2;
}
