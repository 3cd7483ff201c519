// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#pragma once

#include <armadillo>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace irsim {

using cxd = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

// Error categories map onto CLI exit codes (see tools/irsim_main.cpp):
// ConfigError -> 2, DimensionError -> 3, NumericalError -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition / shape violations.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Singular systems, failed factorizations, exhausted sampling budgets.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double db_to_linear(double x_dB)
{
    return std::pow(10.0, x_dB / 10.0);
}

} // namespace irsim
