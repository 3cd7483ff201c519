// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#pragma once

#include <random>
#include <vector>

#include "irsim/common.hpp"
#include "irsim/system_config.hpp"

namespace irsim {

// One draw of all channels between BS, IRS and UE. V is the cascaded
// BS-IRS-UE channel; its column n scales with IRS element n.
struct ChannelRealization {
    arma::cx_vec h_d;  // M, BS-UE
    arma::cx_mat H_br; // M x N, BS-IRS (rank-1 LoS)
    arma::cx_vec h_ru; // N, IRS-UE
    arma::cx_mat V;    // M x N, H_br * diag(h_ru)
    arma::vec3 ue_position;
};

// One multipath component: arrival angles plus excess delay in seconds.
struct PathComponent {
    double azimuth;
    double elevation;
    double delay;
};

// Fixed scenario geometry: BS ULA along the x-axis at the origin, IRS on
// the yz-plane centered at (d_br, 0, 0).
arma::vec3 bs_position();
arma::vec3 irs_position(const SystemConfig& cfg);

// (azimuth, elevation) of the unit vector pointing from `from` to `to`.
std::pair<double, double> direction_angles(const arma::vec3& from, const arma::vec3& to);

// k(az, el) = (2*pi/lambda) [cos(az)cos(el), sin(az)cos(el), sin(el)].
arma::vec3 wave_vector(double azimuth, double elevation, double lambda_c);

// Position of IRS element n (1-based, row-major grid on the yz-plane).
arma::vec3 irs_element_position(int n, int N_H, double d_r, double lambda_c);

arma::cx_vec array_response_irs(double azimuth, double elevation, const SystemConfig& cfg);
arma::cx_vec array_response_bs(double azimuth, double elevation, int M, double d_H);

// beta_br = N * (d_r * lambda_c)^2 / (4 * pi * d_br^2), linear power gain.
double pathloss_br(const SystemConfig& cfg);

// Complex per-path gain: magnitude from the distance pathloss law, phase
// from the excess delay at the carrier frequency.
cxd path_gain(double d, double tau, const SystemConfig& cfg);

// Saleh-Valenzuela mixtures over explicit path lists; draw_channel_at uses
// these with randomly drawn paths.
arma::cx_vec sv_channel_bs(const std::vector<PathComponent>& paths, double link_distance,
                           const SystemConfig& cfg);
arma::cx_vec sv_channel_irs(const std::vector<PathComponent>& paths, double link_distance,
                            const SystemConfig& cfg);

// V = H_br * diag(h_ru).
arma::cx_mat cascade(const arma::cx_mat& H_br, const arma::cx_vec& h_ru);

// Full channel draw at a fixed UE position.
ChannelRealization draw_channel_at(const SystemConfig& cfg, const arma::vec3& ue_position,
                                   std::mt19937_64& rng);

// UE position uniform over the room, rejecting d_ru < d_ru_min (bounded
// attempt budget), followed by draw_channel_at.
ChannelRealization draw_channel(const SystemConfig& cfg, std::mt19937_64& rng);

} // namespace irsim
