// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#pragma once

#include <utility>

#include "irsim/common.hpp"
#include "irsim/pilot.hpp"

namespace irsim {

// IRS phase vector (unit-modulus entries e^{j phi_n}) paired with a
// unit-norm transmit beamforming vector.
struct PhaseBeamSolution {
    arma::cx_vec phi; // N
    arma::cx_vec w;   // M
};

double linear_snr(double tx_dBm, double noise_dBm);

// Least-squares recovery of the stacked channel from y = P h + n via the
// normal equations. Requires an overdetermined system (T >= N+1) and a
// well-conditioned Gram matrix; no silent pseudo-inverse.
arma::cx_vec ls_estimate(const arma::cx_vec& y, const arma::cx_mat& P);

// Caches the observation matrix and Cholesky factor of its Gram matrix so
// many observations can be solved against one pilot schedule.
class LsEstimator {
public:
    LsEstimator(const PilotMatrix& pm, int M, double amp);
    arma::cx_vec estimate(const arma::cx_vec& y) const;
    const arma::cx_mat& observation() const { return P_; }

private:
    arma::cx_mat P_;
    arma::cx_mat chol_upper_;
};

// Inverse of stack_channels: splits into (h_d, V).
std::pair<arma::cx_vec, arma::cx_mat> unstack_channels(const arma::cx_vec& h, int M, int N);

// Alternating optimization of IRS phases and the transmit beamformer,
// starting from the uniform beamformer. Each round phase-aligns the
// cascaded columns with the direct channel for the current beamformer,
// then sets the beamformer to the matched filter of the combined channel.
// The combined-channel norm is non-decreasing across rounds.
PhaseBeamSolution optimize_phases(const arma::cx_vec& h_d, const arma::cx_mat& V, int iters = 10);

// |(h_d^H + phi^T V^H) w|, the combined downlink channel gain under the
// given solution.
double effective_gain(const arma::cx_vec& h_d, const arma::cx_mat& V, const PhaseBeamSolution& sol);

// R = log2(1 + gamma * |(h_d^H + phi^T V^H) w|^2), bits/s/Hz.
double downlink_rate(const arma::cx_vec& h_d, const arma::cx_mat& V, const PhaseBeamSolution& sol,
                     double gamma);

} // namespace irsim
