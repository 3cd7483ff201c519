// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "irsim/channel.hpp"
#include "irsim/common.hpp"
#include "irsim/system_config.hpp"

namespace irsim {

// Reflection schedule for the estimation period: T rows, N+1 columns.
// Column 1 is all ones (direct channel); columns 2..N+1 drive the IRS
// elements slot by slot.
struct PilotMatrix {
    arma::cx_mat Phi; // T x (N+1)
    int T = 0;
    int N = 0;
};

// Stacked noisy uplink observation for one realization, length T*M.
struct PilotObservation {
    arma::cx_vec y;
    double pilot_amplitude = 0.0;
    std::uint64_t realization_id = 0;
};

// [Phi]_{t,n} = exp(-j 2 pi (t-1)(n-1) / (N+1)); for T < N+1 the first T
// rows of the square schedule.
PilotMatrix dft_phase_matrix(int T, int N);

// Constant pilot symbol amplitude: sqrt of the linear pilot-to-noise ratio.
// Noise is normalized to unit variance, so powers enter only as this scale.
double pilot_amplitude(const SystemConfig& cfg);

// h = [h_d; v_1; ...; v_N], length (N+1)*M.
arma::cx_vec stack_channels(const ChannelRealization& ch);

// P = amp * (Phi kron I_M), the TM x (N+1)M observation matrix. Built
// explicitly only for the LS path.
arma::cx_mat observation_matrix(const PilotMatrix& pm, int M, double amp);

// Received pilots computed slot by slot; the Kronecker product is never
// materialized here. Noise is CN(0, I) per slot unless disabled.
PilotObservation simulate_pilot_rx(const ChannelRealization& ch, const PilotMatrix& pm,
                                   const SystemConfig& cfg, std::mt19937_64& rng,
                                   bool with_noise = true);

// One row per slot, each complex entry as a re,im pair.
void export_pilot_csv(const PilotMatrix& pm, const std::string& path);

} // namespace irsim
