// Copyright 2026 The allpass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "allpass/commands.h"
#include "allpass/config.h"
#include "allpass/csv.h"
#include "allpass/error.h"

namespace {

void write_text(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw allpass::Error("cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw allpass::Error("failed writing " + path);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"All-pass readout resonator modelling: figure datasets, fits and yield estimates."};
    app.set_version_flag("--version", "allpass 0.1.0");

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::string out_path;
    bool validate_only = false;
    bool include_loss = false;
    app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "Override the Monte Carlo seed");
    app.add_option("--threads", threads, "Worker threads; results do not depend on this")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "Output file (fig2: path prefix); stdout when omitted");
    app.add_flag("--validate", validate_only, "Check the configuration and exit");
    app.add_flag("--include-loss", include_loss, "Apply the package insertion loss to model traces");

    // Global flags may also follow the subcommand name.
    app.fallthrough();
    auto *fig1b = app.add_subcommand("fig1b", "Linewidth spread versus output reflection");
    auto *fig2 = app.add_subcommand("fig2", "Linewidth histograms and fabrication yield curves");
    int state = 0;
    auto *s21 = app.add_subcommand("s21", "Model transmission trace for one qubit state");
    s21->add_option("--state", state, "Qubit state (0, 1, 2, ...)")->check(CLI::NonNegativeNumber);
    auto *fluxmap = app.add_subcommand("fluxmap", "|S21| versus flux bias and frequency");
    auto *chikappa = app.add_subcommand("chikappa", "|S21| at the operating point versus chi / kappa");
    std::string input_path;
    auto *fit = app.add_subcommand("fit", "Fit phi, g_total and loss to a measured trace");
    fit->add_option("--input", input_path, "CSV with freq_mhz,s21_re,s21_im")->required()->check(CLI::ExistingFile);
    auto *yield = app.add_subcommand("yield", "Probability that every resonator is within tolerance");
    app.require_subcommand(0, 1);

    CLI11_PARSE(app, argc, argv);

    try {
        allpass::RunConfig cfg;
        if (!config_path.empty()) {
            cfg = allpass::load_config(config_path);
        }
        if (seed) {
            cfg.yield.seed = *seed;
        }
        if (threads) {
            cfg.threads = *threads;
        }
        if (include_loss) {
            cfg.include_package_loss = true;
        }
        if (!out_path.empty()) {
            cfg.output_path = out_path;
        }
        cfg.validate();
        if (validate_only) {
            std::cout << "config ok\n";
            return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 1;
        }

        const std::string &out = cfg.output_path;
        if (*fig1b) {
            write_text(out, allpass::cmd_fig1b(cfg));
        } else if (*fig2) {
            const std::string prefix = out.empty() ? "fig2" : out;
            const auto result = allpass::cmd_fig2(cfg);
            write_text(prefix + "_histogram.csv", result.histogram_csv);
            write_text(prefix + "_yield.csv", result.yield_csv);
        } else if (*s21) {
            write_text(out, allpass::cmd_s21(cfg, state));
        } else if (*fluxmap) {
            write_text(out, allpass::cmd_fluxmap(cfg));
        } else if (*chikappa) {
            write_text(out, allpass::cmd_chikappa(cfg));
        } else if (*fit) {
            std::ifstream in(input_path, std::ios::binary);
            const auto trace = allpass::read_trace_csv(in);
            write_text(out, allpass::cmd_fit(trace, cfg).dump(2) + "\n");
        } else if (*yield) {
            write_text(out, allpass::cmd_yield(cfg).dump(2) + "\n");
        }
    } catch (const allpass::ConvergenceError &e) {
        std::cerr << "fit failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
