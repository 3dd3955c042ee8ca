#include "qbsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbsim/errors.hpp"

namespace qbsim {

double chi(double nbar) {
    if (nbar < 0.0) throw std::invalid_argument("chi: nbar must be >= 0");
    return 1.0 + 2.0 * nbar;
}

RabiFrequency rabi_frequency(double amplitude, double gamma, double nbar) {
    const double x = chi(nbar);
    const double radicand = amplitude * amplitude - 0.25 * gamma * gamma * x * x;
    if (radicand >= 0.0) return {std::sqrt(radicand), false};
    return {std::sqrt(-radicand), true};
}

double sigma_z_closed_form(double tau, double amplitude, double gamma, double nbar, double alpha) {
    if (alpha < -1.0 || alpha > 1.0)
        throw std::invalid_argument("sigma_z_closed_form: alpha must lie in [-1, 1]");
    if (gamma < 0.0) throw std::invalid_argument("sigma_z_closed_form: gamma must be >= 0");
    if (amplitude < 0.0) throw std::invalid_argument("sigma_z_closed_form: amplitude must be >= 0");
    const double x = chi(nbar);
    if (gamma == 0.0 && amplitude == 0.0) return alpha;

    const double denom = 2.0 * gamma * gamma * x * x + amplitude * amplitude;
    const double sz_ss = -2.0 * gamma * gamma * x / denom;
    const double c0 = alpha - sz_ss;
    const double dz0 = -2.0 * gamma * (x * alpha + 1.0); // dsz/dtau at tau = 0
    const double lambda = 1.5 * gamma * x;               // envelope rate
    const double env = std::exp(-lambda * tau);

    const double radicand = amplitude * amplitude - 0.25 * gamma * gamma * x * x;
    if (radicand > 0.0) {
        const double omega = std::sqrt(radicand);
        const double d0 = (dz0 + lambda * c0) / omega;
        return sz_ss + env * (c0 * std::cos(omega * tau) + d0 * std::sin(omega * tau));
    }
    if (radicand < 0.0) {
        const double kappa = std::sqrt(-radicand);
        const double d0 = (dz0 + lambda * c0) / kappa;
        return sz_ss + env * (c0 * std::cosh(kappa * tau) + d0 * std::sinh(kappa * tau));
    }
    return sz_ss + env * (c0 + (dz0 + lambda * c0) * tau); // critically damped
}

double energy_zero_temp(double tau, double amplitude, double gamma, double omega0) {
    if (gamma < 0.0) throw std::invalid_argument("energy_zero_temp: gamma must be >= 0");
    if (!(amplitude > 0.5 * gamma)) {
        throw std::invalid_argument("energy_zero_temp: requires A > gamma/2 (underdamped)");
    }
    if (gamma == 0.0) return -0.5 * omega0 * std::cos(amplitude * tau);
    const double g2 = gamma * gamma;
    const double a2 = amplitude * amplitude;
    const double omega = std::sqrt(a2 - 0.25 * g2);
    return -4.0 * omega0 * g2 / (8.0 * g2 + a2) *
           (1.0 + a2 / (8.0 * g2) * std::exp(-1.5 * gamma * tau) *
                      (std::cos(omega * tau) + 1.5 * gamma / omega * std::sin(omega * tau)));
}

BlochTrajectory integrate_bloch(const SimulationParams& p, double alpha) {
    p.validate();
    if (p.omega != p.omega0) {
        throw std::invalid_argument("integrate_bloch: requires resonance omega = omega0");
    }
    if (alpha < -1.0 || alpha > 1.0)
        throw std::invalid_argument("integrate_bloch: alpha must lie in [-1, 1]");

    const double a = p.amplitude;
    const double gx = p.gamma * chi(p.nbar);
    const double g2 = 2.0 * p.gamma;
    const double dt = p.resolved_dt();
    const long n_steps = std::lround(p.t_max / dt);

    struct State {
        double z;
        Complex sp;
    };
    auto rhs = [&](const State& s) -> State {
        // iA(s- - s+) = 2A Im(s+)
        return {2.0 * a * s.sp.imag() - g2 * (chi(p.nbar) * s.z + 1.0) - 0.0,
                Complex(0.0, -0.5 * a) * Complex(s.z, 0.0) - gx * s.sp};
    };

    State s{alpha, Complex(0.0, 0.0)};
    BlochTrajectory traj;
    auto push = [&](double t) {
        traj.times.push_back(t);
        traj.states.push_back({s.z, s.sp});
    };
    push(0.0);
    for (long step = 0; step < n_steps; ++step) {
        const State k1 = rhs(s);
        const State s2{s.z + 0.5 * dt * k1.z, s.sp + 0.5 * dt * k1.sp};
        const State k2 = rhs(s2);
        const State s3{s.z + 0.5 * dt * k2.z, s.sp + 0.5 * dt * k2.sp};
        const State k3 = rhs(s3);
        const State s4{s.z + dt * k3.z, s.sp + dt * k3.sp};
        const State k4 = rhs(s4);
        s.z += dt / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
        s.sp += dt / 6.0 * (k1.sp + 2.0 * k2.sp + 2.0 * k3.sp + k4.sp);
        const long done = step + 1;
        if (done % p.record_stride == 0 || done == n_steps) push(done * dt);
    }
    return traj;
}

namespace {

struct Extremum {
    double t;
    bool is_max;
};

std::vector<double> smooth_one_period(std::span<const double> times, std::span<const double> values,
                                      double period, std::vector<double>& out_times) {
    const size_t n = values.size();
    const double h = times[1] - times[0];
    const int m = static_cast<int>(std::lround(period / h));
    std::vector<double> sm;
    if (m < 2 || static_cast<size_t>(m) + 1 > n) {
        out_times.assign(times.begin(), times.end());
        sm.assign(values.begin(), values.end());
        return sm;
    }
    const int half = m / 2;
    for (size_t i = half; i + (m - half) < n; ++i) {
        double acc = 0.5 * (values[i - half] + values[i - half + m]);
        for (int k = 1; k < m; ++k) acc += values[i - half + k];
        sm.push_back(acc / m);
        out_times.push_back(0.5 * (times[i - half] + times[i - half + m]));
    }
    return sm;
}

} // namespace

std::optional<double> estimate_peak_frequency(std::span<const double> times,
                                              std::span<const double> values,
                                              double drive_period) {
    if (times.size() != values.size() || times.size() < 8) return std::nullopt;

    std::vector<double> st;
    const std::vector<double> sx = smooth_one_period(times, values, drive_period, st);
    const size_t n = sx.size();
    if (n < 8) return std::nullopt;

    const auto [lo, hi] = std::minmax_element(sx.begin(), sx.end());
    const double range = *hi - *lo;
    if (range <= 0.0) return std::nullopt;
    const double delta = 0.02 * range;
    const double h = st[1] - st[0];

    auto refined = [&](size_t i) {
        if (i == 0 || i + 1 >= n) return st[i];
        const double d2 = sx[i - 1] - 2.0 * sx[i] + sx[i + 1];
        if (d2 == 0.0) return st[i];
        return st[i] + 0.5 * (sx[i - 1] - sx[i + 1]) / d2 * h;
    };

    // alternating extrema with hysteresis delta
    std::vector<Extremum> extrema;
    int mode = 0; // +1 tracking a maximum, -1 tracking a minimum
    size_t ext = 0;
    for (size_t i = 1; i < n; ++i) {
        if (mode >= 0) {
            if (sx[i] > sx[ext]) {
                ext = i;
            } else if (sx[ext] - sx[i] > delta) {
                extrema.push_back({refined(ext), true});
                mode = -1;
                ext = i;
                continue;
            }
        }
        if (mode < 0) {
            if (sx[i] < sx[ext]) {
                ext = i;
            } else if (sx[i] - sx[ext] > delta) {
                extrema.push_back({refined(ext), false});
                mode = 1;
                ext = i;
            }
        }
    }
    if (extrema.size() < 2) return std::nullopt;

    std::vector<double> spacing;
    for (size_t i = 1; i < extrema.size(); ++i) spacing.push_back(extrema[i].t - extrema[i - 1].t);
    std::sort(spacing.begin(), spacing.end());
    const size_t mid = spacing.size() / 2;
    const double med = (spacing.size() % 2 == 1) ? spacing[mid] : 0.5 * (spacing[mid - 1] + spacing[mid]);
    if (med <= 0.0) return std::nullopt;
    return std::numbers::pi / med;
}

} // namespace qbsim
