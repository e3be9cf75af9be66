#include "ghn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "ghn/primes.hpp"

namespace ghn {

namespace {

bool params_less(const Params& a, const Params& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

}  // namespace

SweepResult sweep_checks(const SweepConfig& config, const std::vector<CheckSpec>& checks) {
    std::vector<const CheckSpec*> selected;
    for (const auto& spec : checks) {
        if (!config.check_ids.empty() &&
            std::find(config.check_ids.begin(), config.check_ids.end(), spec.id) ==
                config.check_ids.end())
            continue;
        if (spec.k_order > config.bounds.kmax) continue;
        selected.push_back(&spec);
    }

    SweepResult result;
    result.config = config;

    std::vector<std::uint64_t> primes = primes_in_range(config.bounds.pmin, config.bounds.pmax);
    if (primes.empty()) return result;

    BernoulliTable bern(required_table_size(config.bounds));
    CheckContext ctx{bern};

    struct Item {
        const CheckSpec* spec;
        Params params;
        std::uint64_t p;
    };
    std::vector<Item> items;
    for (const CheckSpec* spec : selected) {
        for (const Params& params : spec->grid(config.bounds)) {
            if (spec->prime_indexed)
                for (std::uint64_t p : primes) items.push_back({spec, params, p});
            else
                items.push_back({spec, params, 0});
        }
    }

    std::vector<CheckReport> reports(items.size());
    unsigned threads = std::max(1u, config.threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) break;
            reports[i] = run_check(*items[i].spec, items[i].params, items[i].p, ctx);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& rep : reports) {
        if (rep.skipped) {
            ++result.summary.skip;
            continue;
        }
        rep.pass ? ++result.summary.pass : ++result.summary.fail;
        result.results.push_back(std::move(rep));
    }
    std::sort(result.results.begin(), result.results.end(),
              [](const CheckReport& a, const CheckReport& b) {
                  if (a.id != b.id) return a.id < b.id;
                  if (a.params != b.params) return params_less(a.params, b.params);
                  return a.p < b.p;
              });
    return result;
}

SweepResult sweep(const SweepConfig& config) {
    if (!config.check_ids.empty())
        for (const auto& id : config.check_ids)
            if (!find_check(id)) throw std::invalid_argument("unknown check id '" + id + "'");
    return sweep_checks(config, registry());
}

}  // namespace ghn
