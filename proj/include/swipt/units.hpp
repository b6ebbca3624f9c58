#pragma once

#include <cmath>

// Decibel conversions. The library computes in linear watts and linear
// gains; dB/dBm appear only at I/O boundaries.
namespace swipt::units {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// x dBm = 10^((x - 30)/10) watts
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

// rate threshold R (bits/s/Hz) to the linear SNR that achieves it
inline double rate_to_snr(double rate_bps_hz) { return std::exp2(rate_bps_hz) - 1.0; }

inline double snr_to_rate(double snr) { return std::log2(1.0 + snr); }

}  // namespace swipt::units
