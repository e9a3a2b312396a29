#pragma once

#include <vector>

#include <Eigen/Dense>

#include "keydec/common.hpp"

namespace keydec::dsp {

// One biquad, direct form II transposed coefficients (a0 normalized to 1).
struct Biquad {
    double b0, b1, b2;
    double a1, a2;
};

// Butterworth band-pass as cascaded second-order sections. `order` is the
// low-pass prototype order, so the band-pass has 2*order poles. Unity gain at
// the geometric center frequency.
std::vector<Biquad> butter_bandpass(int order, double lo_hz, double hi_hz, double sfreq);

// |H(e^{i 2 pi f / fs})| of the cascade.
double sos_gain_at(const std::vector<Biquad>& sos, double f_hz, double sfreq);

// Zero-phase (forward-backward) filtering with odd-reflection padding of
// 3*(2*sections+1) samples and steady-state initial conditions.
std::vector<double> filtfilt(const std::vector<Biquad>& sos, const std::vector<double>& x);

// Rational polyphase resampler, downsampling only. Anti-alias FIR is a
// Kaiser-windowed sinc cut at 0.9*(target/2) Hz; group delay is compensated
// so input and output are time-aligned. Rates must be integer-valued Hz.
std::vector<double> resample_poly(const std::vector<double>& x, double sfreq, double target);

// Output length contract of resample_poly: ceil(n * L / M).
size_t resampled_length(size_t n, double sfreq, double target);

}  // namespace keydec::dsp
