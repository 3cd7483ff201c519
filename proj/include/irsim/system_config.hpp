// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "irsim/common.hpp"

namespace irsim {

// Physical and protocol constants of one scenario. Defaults are the
// desk-scale profile; paper_profile() switches to the full-size setup.
struct SystemConfig {
    int M = 4;    // BS antenna count
    int N_H = 4;  // IRS grid, horizontal
    int N_V = 4;  // IRS grid, vertical
    double d_H = 0.5;        // BS antenna spacing, wavelengths
    double d_r = 0.25;       // IRS element spacing, wavelengths
    double lambda_c = 0.1;   // carrier wavelength, meters
    double d_br = 292.0;     // BS-IRS distance, meters
    int L_d = 5;             // paths, BS-UE channel
    int L_ru = 5;            // paths, IRS-UE channel
    double pathloss_exponent = 3.8;
    double beta_0_dB = -20.4; // reference pathloss at d_0
    double d_0 = 1.0;         // reference distance, meters
    double noise_dBm = -94.0;
    double pilot_dBm = 41.0;
    double downlink_dBm = 10.0;
    int T = 17; // pilot length
    // UE sampling region: square room of side room_size at height ue_height,
    // near edge room_offset meters from the IRS plane on the BS side.
    double room_offset = 7.0;
    double room_size = 10.0;
    double ue_height = 1.5;
    double d_ru_min = 7.0;
    std::uint64_t seed = 1;

    int N() const { return N_H * N_V; }
    double f_c() const { return kSpeedOfLight / lambda_c; }
    double beta_0() const { return db_to_linear(beta_0_dB); }

    // Throws ConfigError when an invariant is violated.
    void validate() const;
};

// Training recipe. Hidden widths depend on the active profile; everything
// else is shared between the two network variants.
struct TrainConfig {
    double lr0 = 5e-4;
    int batch = 32;
    int max_epochs = 200;
    int plateau_patience = 5;
    double plateau_factor = 0.5;
    int early_stop_patience = 10;
    double train_fraction = 0.8;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    double min_lr = 1e-6;
    double min_improve = 1e-8; // absolute val-MSE drop that counts as improvement
    std::uint64_t seed = 1;
    std::vector<int> hidden_method1 = {128, 128, 64};
    std::vector<int> hidden_method2 = {128, 96, 96, 64};

    void validate() const;
};

struct RunConfig {
    SystemConfig sys;
    TrainConfig train;
};

RunConfig desk_profile();
RunConfig paper_profile();
RunConfig profile_by_name(const std::string& name); // "desk" | "paper"

// Applies one `key = value` assignment. Unknown keys raise ConfigError
// naming the offending key.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

// Flat `key = value` file, '#' comments, blank lines ignored.
void load_config_file(RunConfig& cfg, const std::string& path);

// Canonical key/value dump; parse/print round-trips exactly.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);
std::string config_text(const RunConfig& cfg);
RunConfig parse_config_text(const std::string& text, RunConfig base);

} // namespace irsim
