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

#include "allpass/config.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "allpass/error.h"

namespace allpass {

namespace {

using nlohmann::json;

// Reads keys from one JSON object and remembers which ones were consumed so
// that typos surface as errors instead of silently using defaults.
class Section {
   public:
    Section(const json &doc, std::string path) : doc_(doc), path_(std::move(path)) {
        if (!doc_.is_object()) {
            throw ParseError("config section '" + path_ + "' must be a JSON object");
        }
    }

    bool has(const std::string &key) {
        seen_.insert(key);
        return doc_.contains(key);
    }

    template <typename T>
    void get(const std::string &key, T &out) {
        if (!has(key)) {
            return;
        }
        try {
            out = doc_.at(key).get<T>();
        } catch (const json::exception &e) {
            throw ParseError("config key '" + qualified(key) + "': " + e.what());
        }
    }

    Section child(const std::string &key) { return Section(doc_.at(key), qualified(key)); }

    void finish() const {
        for (const auto &item : doc_.items()) {
            if (!seen_.contains(item.key())) {
                throw ParseError("unknown config key '" + qualified(item.key()) + "'");
            }
        }
    }

   private:
    std::string qualified(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

    const json &doc_;
    std::string path_;
    std::set<std::string> seen_;
};

void read_grid(Section &parent, const std::string &key, GridSpec &grid) {
    if (!parent.has(key)) {
        return;
    }
    Section s = parent.child(key);
    s.get("start", grid.start);
    s.get("stop", grid.stop);
    s.get("points", grid.points);
    s.finish();
}

void read_device(Section &s, AllPassModel &device) {
    s.get("omega_r_mhz", device.omega_r_mhz);
    s.get("kappa_r_mhz", device.kappa_r_mhz);
    if (s.has("phi_over_pi")) {
        double v = 0.0;
        s.get("phi_over_pi", v);
        device.phi_rad = v * std::numbers::pi;
    }
    s.get("phi_rad", device.phi_rad);
    s.get("g_total_mhz", device.g_total_mhz);
    s.get("g_mhz", device.g_mhz);
    s.get("package_loss_db", device.package_loss_db);
    if (s.has("coupling")) {
        std::string form;
        s.get("coupling", form);
        if (form == "rwa") {
            device.coupling = CouplingForm::kRotatingWave;
        } else if (form == "full") {
            device.coupling = CouplingForm::kFull;
        } else {
            throw ParseError("device.coupling must be \"rwa\" or \"full\"");
        }
    }
    if (s.has("transmon")) {
        Section t = s.child("transmon");
        t.get("e_c_mhz", device.transmon.e_c_mhz);
        t.get("n_levels_qubit", device.transmon.n_levels_qubit);
        t.get("n_levels_res", device.transmon.n_levels_res);
        const bool bare = t.has("omega_01_mhz");
        const bool dressed = t.has("omega_01_dressed_mhz");
        if (bare && dressed) {
            throw ParseError("give either device.transmon.omega_01_mhz or omega_01_dressed_mhz, not both");
        }
        if (bare) {
            t.get("omega_01_mhz", device.transmon.omega_01_mhz);
        } else if (dressed) {
            double value = 0.0;
            t.get("omega_01_dressed_mhz", value);
            device.transmon.omega_01_mhz = bare_qubit_from_dressed(value, device.omega_r_mhz, device.g_mhz);
        }
        t.finish();
    }
}

}  // namespace

std::vector<double> GridSpec::values() const {
    std::vector<double> out(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) {
        out[static_cast<size_t>(i)] = points == 1 ? start : start + (stop - start) * i / (points - 1);
    }
    return out;
}

void GridSpec::validate(const std::string &name) const {
    if (points < 1) {
        throw DomainError("grid '" + name + "' needs at least one point");
    }
    if (points > 1 && !(stop > start)) {
        throw DomainError("grid '" + name + "' must have stop > start");
    }
}

AllPassModel RunConfig::effective_device() const {
    AllPassModel model = device;
    if (!include_package_loss) {
        model.package_loss_db = 0.0;
    }
    return model;
}

void RunConfig::validate() const {
    device.validate();
    squid.validate();
    yield.validate();
    for (double tol : yield_tolerances) {
        if (!(tol > 0.0 && tol < 1.0)) {
            throw DomainError("yield tolerances must lie in (0, 1)");
        }
    }
    if (yield_max_resonators < 1) {
        throw DomainError("yield max_resonators must be >= 1");
    }
    for (double x : histogram_positions) {
        if (!(x >= 0.0)) {
            throw DomainError("histogram positions must be non-negative");
        }
    }
    if (histogram_bins < 1) {
        throw DomainError("histogram_bins must be >= 1");
    }
    gamma_db_grid.validate("gamma_db");
    s21_grid.validate("s21");
    flux_grid.validate("flux");
    fluxmap_freq_grid.validate("fluxmap_freq");
    chikappa_grid.validate("chikappa");
    if (s21_grid.points < 2 || fluxmap_freq_grid.points < 2) {
        throw DomainError("frequency grids need at least two points");
    }
    if (!(std::abs(flux_grid.start) < 0.5 && std::abs(flux_grid.stop) < 0.5)) {
        throw DomainError("flux grid must stay inside (-0.5, 0.5)");
    }
    if (fit_qubit_state < 0 || fit_qubit_state >= device.transmon.n_levels_qubit) {
        throw DomainError("fit qubit_state outside the qubit truncation");
    }
    if (threads < 1) {
        throw DomainError("threads must be >= 1");
    }
}

RunConfig config_from_json(const json &doc) {
    RunConfig cfg;
    Section root(doc, "");
    root.get("threads", cfg.threads);
    root.get("seed", cfg.yield.seed);

    if (root.has("device")) {
        Section s = root.child("device");
        read_device(s, cfg.device);
        s.finish();
    }
    cfg.fit_bounds = default_fit_bounds(cfg.device);

    if (root.has("squid")) {
        Section s = root.child("squid");
        s.get("e_j_max_ghz", cfg.squid.e_j_max_ghz);
        s.get("e_c_mhz", cfg.squid.e_c_mhz);
        s.get("flux", cfg.squid.flux);
        s.finish();
    }
    if (root.has("yield")) {
        Section s = root.child("yield");
        s.get("sigma_rel", cfg.yield.sigma_rel);
        s.get("tolerance_rel", cfg.yield.tolerance_rel);
        s.get("n_resonators", cfg.yield.n_resonators);
        s.get("resonators_per_half_lambda", cfg.yield.resonators_per_half_lambda);
        s.get("trials", cfg.yield.trials);
        s.get("tolerances", cfg.yield_tolerances);
        s.get("max_resonators", cfg.yield_max_resonators);
        s.get("histogram_positions", cfg.histogram_positions);
        s.get("histogram_bins", cfg.histogram_bins);
        s.finish();
    }
    if (root.has("grids")) {
        Section s = root.child("grids");
        read_grid(s, "gamma_db", cfg.gamma_db_grid);
        read_grid(s, "s21", cfg.s21_grid);
        read_grid(s, "flux", cfg.flux_grid);
        read_grid(s, "fluxmap_freq", cfg.fluxmap_freq_grid);
        read_grid(s, "chikappa", cfg.chikappa_grid);
        s.get("chikappa_marker", cfg.chikappa_marker);
        s.finish();
    }
    if (root.has("fit")) {
        Section s = root.child("fit");
        auto over_pi = [&](const char *key, double &out) {
            if (s.has(key)) {
                double v = 0.0;
                s.get(key, v);
                out = v * std::numbers::pi;
            }
        };
        over_pi("phi_min_over_pi", cfg.fit_bounds.phi_min_rad);
        over_pi("phi_max_over_pi", cfg.fit_bounds.phi_max_rad);
        s.get("g_total_min_mhz", cfg.fit_bounds.g_total_min_mhz);
        s.get("g_total_max_mhz", cfg.fit_bounds.g_total_max_mhz);
        s.get("loss_min_db", cfg.fit_bounds.loss_min_db);
        s.get("loss_max_db", cfg.fit_bounds.loss_max_db);
        s.get("qubit_state", cfg.fit_qubit_state);
        if (s.has("init")) {
            Section init = s.child("init");
            if (init.has("phi_over_pi")) {
                double v = 0.0;
                init.get("phi_over_pi", v);
                cfg.fit_init.phi_rad = v * std::numbers::pi;
            }
            init.get("g_total_mhz", cfg.fit_init.g_total_mhz);
            init.get("loss_db", cfg.fit_init.loss_db);
            init.finish();
        }
        s.finish();
    }
    if (root.has("output")) {
        Section s = root.child("output");
        s.get("path", cfg.output_path);
        s.get("include_package_loss", cfg.include_package_loss);
        s.finish();
    }
    root.finish();
    return cfg;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError("config " + path.string() + ": " + e.what());
    }
    return config_from_json(doc);
}

json config_to_json(const RunConfig &cfg) {
    auto grid = [](const GridSpec &g) { return json{{"start", g.start}, {"stop", g.stop}, {"points", g.points}}; };
    const AllPassModel &d = cfg.device;
    return json{
        {"seed", cfg.yield.seed},
        {"threads", cfg.threads},
        {"device",
         {{"omega_r_mhz", d.omega_r_mhz},
          {"kappa_r_mhz", d.kappa_r_mhz},
          {"phi_rad", d.phi_rad},
          {"g_total_mhz", d.g_total_mhz},
          {"g_mhz", d.g_mhz},
          {"package_loss_db", d.package_loss_db},
          {"coupling", d.coupling == CouplingForm::kFull ? "full" : "rwa"},
          {"transmon",
           {{"omega_01_mhz", d.transmon.omega_01_mhz},
            {"e_c_mhz", d.transmon.e_c_mhz},
            {"n_levels_qubit", d.transmon.n_levels_qubit},
            {"n_levels_res", d.transmon.n_levels_res}}}}},
        {"squid", {{"e_j_max_ghz", cfg.squid.e_j_max_ghz}, {"e_c_mhz", cfg.squid.e_c_mhz}, {"flux", cfg.squid.flux}}},
        {"yield",
         {{"sigma_rel", cfg.yield.sigma_rel},
          {"tolerance_rel", cfg.yield.tolerance_rel},
          {"n_resonators", cfg.yield.n_resonators},
          {"resonators_per_half_lambda", cfg.yield.resonators_per_half_lambda},
          {"trials", cfg.yield.trials},
          {"tolerances", cfg.yield_tolerances},
          {"max_resonators", cfg.yield_max_resonators},
          {"histogram_positions", cfg.histogram_positions},
          {"histogram_bins", cfg.histogram_bins}}},
        {"grids",
         {{"gamma_db", grid(cfg.gamma_db_grid)},
          {"s21", grid(cfg.s21_grid)},
          {"flux", grid(cfg.flux_grid)},
          {"fluxmap_freq", grid(cfg.fluxmap_freq_grid)},
          {"chikappa", grid(cfg.chikappa_grid)},
          {"chikappa_marker", cfg.chikappa_marker}}},
        {"fit",
         {{"phi_min_over_pi", cfg.fit_bounds.phi_min_rad / std::numbers::pi},
          {"phi_max_over_pi", cfg.fit_bounds.phi_max_rad / std::numbers::pi},
          {"g_total_min_mhz", cfg.fit_bounds.g_total_min_mhz},
          {"g_total_max_mhz", cfg.fit_bounds.g_total_max_mhz},
          {"loss_min_db", cfg.fit_bounds.loss_min_db},
          {"loss_max_db", cfg.fit_bounds.loss_max_db},
          {"qubit_state", cfg.fit_qubit_state},
          {"init",
           {{"phi_over_pi", cfg.fit_init.phi_rad / std::numbers::pi},
            {"g_total_mhz", cfg.fit_init.g_total_mhz},
            {"loss_db", cfg.fit_init.loss_db}}}}},
        {"output", {{"path", cfg.output_path}, {"include_package_loss", cfg.include_package_loss}}},
    };
}

}  // namespace allpass
