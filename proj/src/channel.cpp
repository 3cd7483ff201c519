// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#include "irsim/channel.hpp"

namespace irsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kUePlacementAttempts = 1000;

// Multipath angle spread: front-hemisphere scattering, symmetric.
constexpr double kAzimuthSpread = kPi / 2.0;   // U[-pi/2, pi/2]
constexpr double kElevationSpread = kPi / 4.0; // U[-pi/4, pi/4]

constexpr double kDelayMaxDirect = 10e-9; // s
constexpr double kDelayMaxIrsUe = 5e-9;   // s

} // namespace

arma::vec3 bs_position()
{
    return arma::vec3(arma::fill::zeros);
}

arma::vec3 irs_position(const SystemConfig& cfg)
{
    arma::vec3 p(arma::fill::zeros);
    p(0) = cfg.d_br;
    return p;
}

std::pair<double, double> direction_angles(const arma::vec3& from, const arma::vec3& to)
{
    const arma::vec3 d = to - from;
    const double r = arma::norm(d);
    if (r == 0.0)
        throw DimensionError("direction_angles: coincident points");
    const double elevation = std::asin(d(2) / r);
    const double azimuth = std::atan2(d(1), d(0));
    return {azimuth, elevation};
}

arma::vec3 wave_vector(double azimuth, double elevation, double lambda_c)
{
    if (lambda_c <= 0.0)
        throw DimensionError("wave_vector: lambda_c must be > 0");
    const double scale = 2.0 * kPi / lambda_c;
    arma::vec3 k;
    k(0) = scale * std::cos(azimuth) * std::cos(elevation);
    k(1) = scale * std::sin(azimuth) * std::cos(elevation);
    k(2) = scale * std::sin(elevation);
    return k;
}

arma::vec3 irs_element_position(int n, int N_H, double d_r, double lambda_c)
{
    if (n < 1)
        throw DimensionError("irs_element_position: index must be >= 1");
    if (N_H < 1)
        throw DimensionError("irs_element_position: N_H must be >= 1");
    const int i = (n - 1) % N_H;
    const int j = (n - 1) / N_H;
    arma::vec3 u(arma::fill::zeros);
    u(1) = i * d_r * lambda_c;
    u(2) = j * d_r * lambda_c;
    return u;
}

arma::cx_vec array_response_irs(double azimuth, double elevation, const SystemConfig& cfg)
{
    const int N = cfg.N();
    const arma::vec3 k = wave_vector(azimuth, elevation, cfg.lambda_c);
    arma::cx_vec a(N);
    for (int n = 1; n <= N; ++n) {
        const arma::vec3 u = irs_element_position(n, cfg.N_H, cfg.d_r, cfg.lambda_c);
        a(n - 1) = std::polar(1.0, arma::dot(k, u));
    }
    return a;
}

arma::cx_vec array_response_bs(double azimuth, double elevation, int M, double d_H)
{
    if (M < 1)
        throw DimensionError("array_response_bs: M must be >= 1");
    const double phase_step = 2.0 * kPi * d_H * std::cos(azimuth) * std::cos(elevation);
    arma::cx_vec a(M);
    for (int m = 0; m < M; ++m)
        a(m) = std::polar(1.0, phase_step * m);
    return a;
}

double pathloss_br(const SystemConfig& cfg)
{
    const double element_area = (cfg.d_r * cfg.lambda_c) * (cfg.d_r * cfg.lambda_c);
    return cfg.N() * element_area / (4.0 * kPi * cfg.d_br * cfg.d_br);
}

cxd path_gain(double d, double tau, const SystemConfig& cfg)
{
    if (d <= 0.0)
        throw DimensionError("path_gain: distance must be > 0");
    const double magnitude =
        std::sqrt(cfg.beta_0() * std::pow(d / cfg.d_0, -cfg.pathloss_exponent));
    return std::polar(magnitude, -2.0 * kPi * cfg.f_c() * tau);
}

namespace {

template <typename Steering>
arma::cx_vec sv_mixture(const std::vector<PathComponent>& paths, double link_distance,
                        const SystemConfig& cfg, arma::uword dim, Steering&& steer)
{
    if (paths.empty())
        throw DimensionError("sv channel: at least one path required");
    arma::cx_vec h(dim, arma::fill::zeros);
    for (const PathComponent& p : paths)
        h += path_gain(link_distance, p.delay, cfg) * steer(p.azimuth, p.elevation);
    return std::sqrt(1.0 / static_cast<double>(paths.size())) * h;
}

std::vector<PathComponent> draw_paths(int count, double delay_max, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> az(-kAzimuthSpread, kAzimuthSpread);
    std::uniform_real_distribution<double> el(-kElevationSpread, kElevationSpread);
    std::uniform_real_distribution<double> tau(0.0, delay_max);
    std::vector<PathComponent> paths(count);
    for (PathComponent& p : paths) {
        p.azimuth = az(rng);
        p.elevation = el(rng);
        p.delay = tau(rng);
    }
    return paths;
}

} // namespace

arma::cx_vec sv_channel_bs(const std::vector<PathComponent>& paths, double link_distance,
                           const SystemConfig& cfg)
{
    return sv_mixture(paths, link_distance, cfg, cfg.M, [&](double az, double el) {
        return array_response_bs(az, el, cfg.M, cfg.d_H);
    });
}

arma::cx_vec sv_channel_irs(const std::vector<PathComponent>& paths, double link_distance,
                            const SystemConfig& cfg)
{
    return sv_mixture(paths, link_distance, cfg, cfg.N(), [&](double az, double el) {
        return array_response_irs(az, el, cfg);
    });
}

arma::cx_mat cascade(const arma::cx_mat& H_br, const arma::cx_vec& h_ru)
{
    if (H_br.n_cols != h_ru.n_elem)
        throw DimensionError("cascade: H_br column count must match h_ru length");
    arma::cx_mat V = H_br;
    V.each_row() %= h_ru.st();
    return V;
}

ChannelRealization draw_channel_at(const SystemConfig& cfg, const arma::vec3& ue_position,
                                   std::mt19937_64& rng)
{
    const arma::vec3 bs = bs_position();
    const arma::vec3 irs = irs_position(cfg);
    const double d_bu = arma::norm(ue_position - bs);
    const double d_ru = arma::norm(ue_position - irs);

    ChannelRealization ch;
    ch.ue_position = ue_position;
    ch.h_d = sv_channel_bs(draw_paths(cfg.L_d, kDelayMaxDirect, rng), d_bu, cfg);
    ch.h_ru = sv_channel_irs(draw_paths(cfg.L_ru, kDelayMaxIrsUe, rng), d_ru, cfg);

    const auto [az_bs, el_bs] = direction_angles(bs, irs);
    const auto [az_irs, el_irs] = direction_angles(irs, bs);
    ch.H_br = std::sqrt(pathloss_br(cfg)) * array_response_bs(az_bs, el_bs, cfg.M, cfg.d_H) *
              array_response_irs(az_irs, el_irs, cfg).t();

    ch.V = cascade(ch.H_br, ch.h_ru);
    return ch;
}

ChannelRealization draw_channel(const SystemConfig& cfg, std::mt19937_64& rng)
{
    const arma::vec3 irs = irs_position(cfg);
    const double x_hi = cfg.d_br - cfg.room_offset;
    const double x_lo = x_hi - cfg.room_size;
    std::uniform_real_distribution<double> ux(x_lo, x_hi);
    std::uniform_real_distribution<double> uy(-cfg.room_size / 2.0, cfg.room_size / 2.0);

    for (int attempt = 0; attempt < kUePlacementAttempts; ++attempt) {
        arma::vec3 ue;
        ue(0) = ux(rng);
        ue(1) = uy(rng);
        ue(2) = cfg.ue_height;
        if (arma::norm(ue - irs) >= cfg.d_ru_min)
            return draw_channel_at(cfg, ue, rng);
    }
    throw NumericalError("draw_channel: no UE position with d_ru >= d_ru_min found in " +
                         std::to_string(kUePlacementAttempts) + " attempts");
}

} // namespace irsim
