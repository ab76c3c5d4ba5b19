/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The d2dsim Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "d2dsim/config.hpp"
#include "d2dsim/engine.hpp"
#include "d2dsim/error.hpp"

namespace fs = std::filesystem;
using namespace d2dsim;

namespace {

struct Options {
    std::string config_path;
    std::string preset = "desk";
    std::string scheduler = "both";
    std::optional<long long> steps;
    std::vector<std::uint64_t> seeds;
    std::optional<double> granularity;
    std::optional<int> horizon;
    std::vector<std::string> overrides;
    std::string out = "d2dsim-out";
    bool describe = false;
    bool quiet = false;
};

SimConfig resolve(const Options& o) {
    SimConfig cfg = make_preset(parse_preset(o.preset));
    if (!o.config_path.empty()) cfg = load_config(o.config_path, cfg);
    for (const auto& kv : o.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError(fmt::format("--set expects key=value, got '{}'", kv));
        set_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (o.steps) cfg.engine.steps = *o.steps;
    if (o.granularity) cfg.adp.alpha_granularity = *o.granularity;
    if (o.horizon) cfg.adp.horizon = *o.horizon;
    validate(cfg);
    return cfg;
}

void write_run(const fs::path& dir, const RunResult& r) {
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "metrics.csv");
        write_metrics(os, r.metrics);
    }
    {
        std::ofstream os(dir / "events.csv");
        write_events(os, r.metrics);
    }
    auto j = to_json(r.summary);
    j["scheduler"] = std::string(to_string(r.scheduler));
    j["scheduler_seconds"] = r.scheduler_seconds;
    j["invariant_violations"] = r.violations.size();
    std::ofstream(dir / "summary.json") << j.dump(2) << '\n';
}

std::string fmt_opt(const std::optional<double>& v, const char* spec = "{:.4g}") {
    return v ? fmt::format(fmt::runtime(spec), *v) : std::string("n/a");
}

struct Row {
    std::uint64_t seed;
    const RunResult* adp;
    const RunResult* pf;
};

void comparison(std::ostream& os, const std::vector<Row>& rows) {
    fmt::print(os, "| seed | metric | ADP | PF |\n|---|---|---|---|\n");
    for (const auto& r : rows) {
        auto line = [&](std::string_view name, auto get) {
            fmt::print(os, "| {} | {} | {} | {} |\n", r.seed, name, r.adp ? get(*r.adp) : "-", r.pf ? get(*r.pf) : "-");
        };
        line("delivered Mbit", [](const RunResult& x) { return fmt::format("{:.3f}", x.summary.total_bits / 1e6); });
        line("macro / micro / D2D Mbit", [](const RunResult& x) {
            return fmt::format("{:.2f} / {:.2f} / {:.2f}", x.summary.bits[0] / 1e6, x.summary.bits[1] / 1e6,
                               x.summary.bits[2] / 1e6);
        });
        line("energy J", [](const RunResult& x) { return fmt::format("{:.1f}", x.summary.total_energy_j); });
        line("energy per bit uJ", [](const RunResult& x) {
            return x.summary.total_energy_per_bit ? fmt::format("{:.3f}", *x.summary.total_energy_per_bit * 1e6)
                                                  : std::string("n/a");
        });
        line("completed / failed / active", [](const RunResult& x) {
            return fmt::format("{} / {} / {}", x.summary.completed, x.summary.failed, x.summary.still_active);
        });
        line("bits per RB", [](const RunResult& x) { return fmt_opt(x.summary.mean_bits_per_rb); });
        line("RB reuse", [](const RunResult& x) { return fmt_opt(x.summary.mean_rb_reuse); });
        line("viral D2D share", [](const RunResult& x) {
            return fmt::format("{:.3f}", x.summary.d2d_share(ContentCategory::Viral));
        });
    }
}

int run_all(const Options& o) {
    SimConfig cfg = resolve(o);
    if (o.describe) {
        std::cout << dump_config(cfg);
        const auto sc = build_scenario(cfg.scenario);
        fmt::print("# layout: {} macro, {} micro, {} ue\n", sc.n_macro, sc.n_micro, sc.n_ue);
        return 0;
    }
    std::vector<SchedulerKind> kinds;
    if (o.scheduler == "both") kinds = {SchedulerKind::Adp, SchedulerKind::Pf};
    else kinds = {parse_scheduler(o.scheduler)};

    std::vector<std::uint64_t> seeds = o.seeds;
    if (seeds.empty()) seeds.push_back(cfg.scenario.seed);

    const fs::path out(o.out);
    fs::create_directories(out);
    std::vector<RunResult> results;
    results.reserve(seeds.size() * kinds.size());
    std::vector<Row> rows;
    bool clean = true;
    for (auto seed : seeds) {
        SimConfig c = cfg;
        c.scenario.seed = seed;
        const Instance inst = make_instance(c);
        Row row{seed, nullptr, nullptr};
        for (auto k : kinds) {
            if (!o.quiet) fmt::print(std::cerr, "seed {} {}...\n", seed, to_string(k));
            results.push_back(run(inst, k));
            const auto& r = results.back();
            write_run(out / fmt::format("{}_seed{}", to_string(k), seed), r);
            for (const auto& v : r.violations) fmt::print(std::cerr, "invariant: {}\n", v);
            clean = clean && r.violations.empty();
            (k == SchedulerKind::Adp ? row.adp : row.pf) = &r;
        }
        rows.push_back(row);
    }
    std::ofstream(out / "config.txt") << dump_config(cfg);
    {
        std::ofstream os(out / "comparison.md");
        comparison(os, rows);
    }
    comparison(std::cout, rows);
    return clean ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time D2D / HetNet downlink simulator (ADP and PF+eICIC schedulers)"};
    Options o;
    app.add_option("-c,--config", o.config_path, "Config file (d2dsim-config v1)")->check(CLI::ExistingFile);
    app.add_option("-p,--preset", o.preset, "Base preset: desk or paper-scale")->capture_default_str();
    app.add_option("-s,--scheduler", o.scheduler, "adp, pf or both")
        ->check(CLI::IsMember({"adp", "pf", "both"}))
        ->capture_default_str();
    app.add_option("--steps", o.steps, "Number of 1 ms steps")->check(CLI::PositiveNumber);
    app.add_option("--seed,--seeds", o.seeds, "Seed or list of seeds")->delimiter(',');
    app.add_option("-g,--alpha-granularity", o.granularity, "ADP alpha grid step");
    app.add_option("-H,--horizon", o.horizon, "ADP rollout horizon");
    app.add_option("--set", o.overrides, "Override a config key (key=value), repeatable");
    app.add_option("-o,--out", o.out, "Output directory")->capture_default_str();
    app.add_flag("--describe", o.describe, "Print the resolved config and exit");
    app.add_flag("-q,--quiet", o.quiet, "No progress output");
    CLI11_PARSE(app, argc, argv);

    try {
        return run_all(o);
    } catch (const ConfigError& e) {
        fmt::print(std::cerr, "config error: {}\n", e.what());
        return 2;
    } catch (const PlacementError& e) {
        fmt::print(std::cerr, "placement error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return 1;
    }
}
