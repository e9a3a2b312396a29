#include "keydec/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace keydec::dsp {

namespace {

using cplx = std::complex<double>;

// zeroth-order modified Bessel function, power series
double bessel_i0(double x) {
    double sum = 1.0, term = 1.0;
    const double hx = x / 2.0;
    for (int k = 1; k < 200; ++k) {
        term *= (hx / k) * (hx / k);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = M_PI * x;
    return std::sin(px) / px;
}

struct Ratio {
    long up, down;
};

Ratio rational_rate(double sfreq, double target) {
    const double rs = std::round(sfreq), rt = std::round(target);
    if (std::abs(sfreq - rs) > 1e-9 || std::abs(target - rt) > 1e-9) {
        throw ConfigError("resample expects integer-valued rates, got " +
                          std::to_string(sfreq) + " -> " + std::to_string(target));
    }
    const long a = static_cast<long>(rt), b = static_cast<long>(rs);
    const long g = std::gcd(a, b);
    return {a / g, b / g};
}

}  // namespace

std::vector<Biquad> butter_bandpass(int order, double lo_hz, double hi_hz, double sfreq) {
    if (order < 1) throw ConfigError("filter order must be >= 1");
    if (!(lo_hz > 0.0 && lo_hz < hi_hz)) throw ConfigError("bandpass requires 0 < lo < hi");
    if (hi_hz >= sfreq / 2.0) {
        throw ConfigError("bandpass high edge " + std::to_string(hi_hz) +
                          " Hz is at or above Nyquist (" + std::to_string(sfreq / 2.0) + " Hz)");
    }

    // prewarped analog edges
    const double wlo = 2.0 * sfreq * std::tan(M_PI * lo_hz / sfreq);
    const double whi = 2.0 * sfreq * std::tan(M_PI * hi_hz / sfreq);
    const double w0 = std::sqrt(wlo * whi);
    const double bw = whi - wlo;

    // analog low-pass prototype poles -> band-pass poles (each pole splits in two)
    std::vector<cplx> poles;
    poles.reserve(2 * static_cast<size_t>(order));
    for (int k = 1; k <= order; ++k) {
        const double theta = M_PI * (2.0 * k + order - 1.0) / (2.0 * order);
        const cplx p(std::cos(theta), std::sin(theta));
        const cplx bp = bw * p / 2.0;
        const cplx disc = std::sqrt(bp * bp - w0 * w0);
        poles.push_back(bp + disc);
        poles.push_back(bp - disc);
    }

    // bilinear transform; band-pass zeros land at z = +1 (order of them) and z = -1
    const double fs2 = 2.0 * sfreq;
    std::vector<cplx> zpoles;
    zpoles.reserve(poles.size());
    for (const cplx& s : poles) zpoles.push_back((fs2 + s) / (fs2 - s));

    // pair each pole with its conjugate partner
    std::vector<Biquad> sos;
    std::vector<bool> used(zpoles.size(), false);
    for (size_t i = 0; i < zpoles.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const cplx p = zpoles[i];
        size_t best = zpoles.size();
        double best_d = 1e300;
        for (size_t j = i + 1; j < zpoles.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(zpoles[j] - std::conj(p));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == zpoles.size()) throw NumericError("unpaired filter pole");
        used[best] = true;
        const cplx q = zpoles[best];
        Biquad s{};
        s.b0 = 1.0;
        s.b1 = 0.0;
        s.b2 = -1.0;  // (z-1)(z+1)
        s.a1 = -(p + q).real();
        s.a2 = (p * q).real();
        sos.push_back(s);
    }

    // normalize to unity gain at the (digital) center frequency
    const double f0 = sfreq / (2.0 * M_PI) * 2.0 * std::atan(w0 / fs2);
    const double g = sos_gain_at(sos, f0, sfreq);
    if (!(g > 0.0) || !std::isfinite(g)) throw NumericError("degenerate bandpass gain");
    const double k = 1.0 / g;
    sos.front().b0 *= k;
    sos.front().b1 *= k;
    sos.front().b2 *= k;
    return sos;
}

double sos_gain_at(const std::vector<Biquad>& sos, double f_hz, double sfreq) {
    const cplx z = std::polar(1.0, 2.0 * M_PI * f_hz / sfreq);
    const cplx zi = 1.0 / z;
    cplx h(1.0, 0.0);
    for (const auto& s : sos) {
        h *= (s.b0 + s.b1 * zi + s.b2 * zi * zi) / (1.0 + s.a1 * zi + s.a2 * zi * zi);
    }
    return std::abs(h);
}

namespace {

// single-section steady-state unit step response
double section_dc(const Biquad& s) {
    return (s.b0 + s.b1 + s.b2) / (1.0 + s.a1 + s.a2);
}

void sos_filter_inplace(const std::vector<Biquad>& sos, std::vector<double>& x) {
    double level = x.empty() ? 0.0 : x.front();
    for (const auto& s : sos) {
        const double dc = section_dc(s);
        // initial state that makes a constant input transient-free
        double z1 = (dc - s.b0) * level;
        double z2 = (s.b2 - s.a2 * dc) * level;
        for (double& v : x) {
            const double in = v;
            const double out = s.b0 * in + z1;
            z1 = s.b1 * in - s.a1 * out + z2;
            z2 = s.b2 * in - s.a2 * out;
            v = out;
        }
        level *= dc;
    }
}

}  // namespace

std::vector<double> filtfilt(const std::vector<Biquad>& sos, const std::vector<double>& x) {
    const size_t pad = 3 * (2 * sos.size() + 1);
    if (x.size() <= pad) {
        throw DataError("signal too short for zero-phase filtering: " +
                        std::to_string(x.size()) + " samples, need > " + std::to_string(pad));
    }
    const size_t n = x.size();
    std::vector<double> ext(n + 2 * pad);
    for (size_t i = 0; i < pad; ++i) ext[i] = 2.0 * x[0] - x[pad - i];
    std::copy(x.begin(), x.end(), ext.begin() + static_cast<long>(pad));
    for (size_t i = 0; i < pad; ++i) ext[pad + n + i] = 2.0 * x[n - 1] - x[n - 2 - i];

    sos_filter_inplace(sos, ext);
    std::reverse(ext.begin(), ext.end());
    sos_filter_inplace(sos, ext);
    std::reverse(ext.begin(), ext.end());

    return {ext.begin() + static_cast<long>(pad), ext.begin() + static_cast<long>(pad + n)};
}

size_t resampled_length(size_t n, double sfreq, double target) {
    const Ratio r = rational_rate(sfreq, target);
    return (n * static_cast<size_t>(r.up) + static_cast<size_t>(r.down) - 1) /
           static_cast<size_t>(r.down);
}

std::vector<double> resample_poly(const std::vector<double>& x, double sfreq, double target) {
    if (target > sfreq) {
        throw ConfigError("no upsampling path: target " + std::to_string(target) +
                          " > sfreq " + std::to_string(sfreq));
    }
    const Ratio r = rational_rate(sfreq, target);
    if (r.up == r.down) return x;

    const long L = r.up, M = r.down;
    const double fs_up = sfreq * static_cast<double>(L);
    const double cutoff = 0.9 * (target / 2.0);
    const double fc = cutoff / fs_up;  // cycles per upsampled sample

    const long half = 10 * std::max(L, M);
    const long ntaps = 2 * half + 1;
    const double beta = 8.6;
    const double i0b = bessel_i0(beta);
    std::vector<double> h(static_cast<size_t>(ntaps));
    for (long k = 0; k < ntaps; ++k) {
        const double t = static_cast<double>(k - half);
        const double w = bessel_i0(beta * std::sqrt(std::max(
                             0.0, 1.0 - (t / half) * (t / half)))) / i0b;
        h[static_cast<size_t>(k)] = 2.0 * fc * sinc(2.0 * fc * t) * w * static_cast<double>(L);
    }

    const long n = static_cast<long>(x.size());
    const size_t out_n = resampled_length(x.size(), sfreq, target);
    std::vector<double> y(out_n, 0.0);
    for (size_t j = 0; j < out_n; ++j) {
        // center tap aligned: upsampled-domain index of output j is j*M + half
        const long t0 = static_cast<long>(j) * M + half;
        double acc = 0.0;
        // only taps hitting a non-zero (stuffed) sample contribute
        const long kmin = std::max<long>(0, t0 - (n - 1) * L);
        const long kmax = std::min<long>(ntaps - 1, t0);
        long k = kmin + ((t0 - kmin) % L);
        for (; k <= kmax; k += L) {
            acc += h[static_cast<size_t>(k)] * x[static_cast<size_t>((t0 - k) / L)];
        }
        y[j] = acc;
    }
    return y;
}

}  // namespace keydec::dsp
