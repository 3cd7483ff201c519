// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#include "irsim/pilot.hpp"

#include <cstdio>
#include <fstream>

#include "irsim/rng.hpp"

namespace irsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

PilotMatrix dft_phase_matrix(int T, int N)
{
    if (T < 1)
        throw DimensionError("dft_phase_matrix: T must be >= 1");
    if (N < 0)
        throw DimensionError("dft_phase_matrix: N must be >= 0");
    PilotMatrix pm;
    pm.T = T;
    pm.N = N;
    pm.Phi.set_size(T, N + 1);
    const double step = 2.0 * kPi / static_cast<double>(N + 1);
    for (int t = 0; t < T; ++t)
        for (int n = 0; n <= N; ++n)
            pm.Phi(t, n) = std::polar(1.0, -step * static_cast<double>(t) * n);
    return pm;
}

double pilot_amplitude(const SystemConfig& cfg)
{
    return std::sqrt(db_to_linear(cfg.pilot_dBm - cfg.noise_dBm));
}

arma::cx_vec stack_channels(const ChannelRealization& ch)
{
    return arma::join_cols(ch.h_d, arma::vectorise(ch.V));
}

arma::cx_mat observation_matrix(const PilotMatrix& pm, int M, double amp)
{
    if (M < 1)
        throw DimensionError("observation_matrix: M must be >= 1");
    return amp * arma::kron(pm.Phi, arma::cx_mat(arma::eye(M, M), arma::mat(M, M, arma::fill::zeros)));
}

PilotObservation simulate_pilot_rx(const ChannelRealization& ch, const PilotMatrix& pm,
                                   const SystemConfig& cfg, std::mt19937_64& rng,
                                   bool with_noise)
{
    const int M = cfg.M;
    const int N = cfg.N();
    if (pm.N != N)
        throw DimensionError("simulate_pilot_rx: pilot matrix N does not match config");
    if (static_cast<int>(ch.h_d.n_elem) != M || static_cast<int>(ch.V.n_rows) != M ||
        static_cast<int>(ch.V.n_cols) != N)
        throw DimensionError("simulate_pilot_rx: channel dimensions do not match config");

    const double amp = pilot_amplitude(cfg);
    PilotObservation obs;
    obs.pilot_amplitude = amp;
    obs.y.set_size(static_cast<arma::uword>(pm.T) * M);

    for (int t = 0; t < pm.T; ++t) {
        // IRS pattern for slot t: columns 2..N+1 of the schedule.
        const arma::cx_vec phi_t = pm.Phi.row(t).subvec(1, N).st();
        arma::cx_vec y_t = amp * (ch.h_d + ch.V * phi_t);
        if (with_noise)
            for (int m = 0; m < M; ++m)
                y_t(m) += randcn(rng);
        obs.y.subvec(static_cast<arma::uword>(t) * M, static_cast<arma::uword>(t) * M + M - 1) = y_t;
    }
    return obs;
}

void export_pilot_csv(const PilotMatrix& pm, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot open '" + path + "' for writing");
    out << "t";
    for (int n = 0; n <= pm.N; ++n)
        out << ",re_" << n << ",im_" << n;
    out << "\n";
    char buf[64];
    for (int t = 0; t < pm.T; ++t) {
        out << (t + 1);
        for (int n = 0; n <= pm.N; ++n) {
            std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", pm.Phi(t, n).real(), pm.Phi(t, n).imag());
            out << buf;
        }
        out << "\n";
    }
}

} // namespace irsim
