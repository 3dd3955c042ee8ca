#include "qbsim/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qbsim/eigen.hpp"
#include "qbsim/errors.hpp"

namespace qbsim {

namespace {

constexpr double kStepTraceGuard = 1e-8;

// Banded kernel for a single-ladder open system: diagonal static Hamiltonian,
// drive through (L+ + L-), raising/lowering dissipators on the same ladder.
// Covers both the Dicke-sector master equation and its Holstein-Primakoff
// bosonic analogue; everything it does is O(n^2) per evaluation.
struct LadderKernel {
    int n = 0;
    double omega0 = 0.0;
    double omega = 0.0;
    double drive_amp = 0.0;
    double rate_down = 0.0;
    double rate_up = 0.0;
    std::vector<double> h_diag; // static Hamiltonian diagonal (energy units)
    std::vector<double> ladder; // (L+)[k+1][k], size n-1
    std::vector<double> lplm;   // (L+ L-) diagonal
    std::vector<double> lmlp;   // (L- L+) diagonal

    // out = -i[H(t), rho] + D[rho]; also reports dW/dt = Tr(dH/dt rho) and
    // dQ/dt = -Tr(D[rho] H(t)) for in-step accumulation.
    void stage(const Complex* rho, double t, Complex* out, double& work_rate,
               double& heat_rate) const {
        const double ht = drive_amp * std::cos(omega * t);
        auto at = [&](int i, int j) -> const Complex& { return rho[static_cast<size_t>(i) * n + j]; };

        Complex ladder_exp(0.0, 0.0); // <L+ + L->
        for (int k = 0; k + 1 < n; ++k) ladder_exp += ladder[k] * (at(k, k + 1) + at(k + 1, k));

        double heat_diag = 0.0;
        Complex heat_off(0.0, 0.0);

        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Complex u = (h_diag[i] - h_diag[j]) * at(i, j);
                if (ht != 0.0) {
                    Complex acc(0.0, 0.0);
                    if (i > 0) acc += ladder[i - 1] * at(i - 1, j);
                    if (i + 1 < n) acc += ladder[i] * at(i + 1, j);
                    if (j > 0) acc -= at(i, j - 1) * ladder[j - 1];
                    if (j + 1 < n) acc -= at(i, j + 1) * ladder[j];
                    u += ht * acc;
                }
                Complex d(0.0, 0.0);
                if (rate_down != 0.0) {
                    Complex v = -(lplm[i] + lplm[j]) * at(i, j);
                    if (i + 1 < n && j + 1 < n) v += 2.0 * ladder[i] * ladder[j] * at(i + 1, j + 1);
                    d += rate_down * v;
                }
                if (rate_up != 0.0) {
                    Complex v = -(lmlp[i] + lmlp[j]) * at(i, j);
                    if (i > 0 && j > 0) v += 2.0 * ladder[i - 1] * ladder[j - 1] * at(i - 1, j - 1);
                    d += rate_up * v;
                }
                out[static_cast<size_t>(i) * n + j] = Complex(u.imag(), -u.real()) + d; // -i*u + d

                if (i == j) heat_diag += d.real() * h_diag[i];
                else if (j == i + 1) heat_off += ladder[i] * d;
                else if (i == j + 1) heat_off += ladder[j] * d;
            }
        }
        work_rate = -drive_amp * omega * std::sin(omega * t) * ladder_exp.real();
        heat_rate = -(heat_diag + ht * heat_off.real());
    }
};

// RK4 on the density matrix augmented with the work/heat accumulators; both
// scalars ride the same stage weights, so the first-law bookkeeping carries
// the integrator's O(dt^4) accuracy.
class Rk4Engine {
public:
    explicit Rk4Engine(const LadderKernel& kern)
        : k_(kern), sz_(static_cast<size_t>(kern.n) * kern.n),
          k1_(sz_), k2_(sz_), k3_(sz_), k4_(sz_), tmp_(sz_) {}

    // Advances (rho, work, heat) by dt; returns the pre-renormalization trace
    // drift of this step. Throws NumericalError when the drift exceeds the
    // per-step guard (too-large dt).
    double step(std::vector<Complex>& rho, double& work, double& heat, double t, double dt) {
        double w1, w2, w3, w4, q1, q2, q3, q4;
        k_.stage(rho.data(), t, k1_.data(), w1, q1);
        axpy(rho, 0.5 * dt, k1_);
        k_.stage(tmp_.data(), t + 0.5 * dt, k2_.data(), w2, q2);
        axpy(rho, 0.5 * dt, k2_);
        k_.stage(tmp_.data(), t + 0.5 * dt, k3_.data(), w3, q3);
        axpy(rho, dt, k3_);
        k_.stage(tmp_.data(), t + dt, k4_.data(), w4, q4);

        const double h6 = dt / 6.0;
        for (size_t i = 0; i < sz_; ++i)
            rho[i] += h6 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
        work += h6 * (w1 + 2.0 * w2 + 2.0 * w3 + w4);
        heat += h6 * (q1 + 2.0 * q2 + 2.0 * q3 + q4);

        hermitize(rho, k_.n);
        double tr = 0.0;
        for (int i = 0; i < k_.n; ++i) tr += rho[static_cast<size_t>(i) * k_.n + i].real();
        const double drift = std::abs(tr - 1.0);
        if (drift > kStepTraceGuard) {
            throw NumericalError("integrate: trace drift " + std::to_string(drift) +
                                 " in one step exceeds 1e-8; reduce dt");
        }
        const double inv = 1.0 / tr;
        for (Complex& z : rho) z *= inv;
        return drift;
    }

    static void hermitize(std::vector<Complex>& rho, int n) {
        for (int i = 0; i < n; ++i) {
            rho[static_cast<size_t>(i) * n + i] = Complex(rho[static_cast<size_t>(i) * n + i].real(), 0.0);
            for (int j = i + 1; j < n; ++j) {
                const Complex avg =
                    0.5 * (rho[static_cast<size_t>(i) * n + j] + std::conj(rho[static_cast<size_t>(j) * n + i]));
                rho[static_cast<size_t>(i) * n + j] = avg;
                rho[static_cast<size_t>(j) * n + i] = std::conj(avg);
            }
        }
    }

private:
    void axpy(const std::vector<Complex>& rho, double a, const std::vector<Complex>& k) {
        for (size_t i = 0; i < sz_; ++i) tmp_[i] = rho[i] + a * k[i];
    }

    const LadderKernel& k_;
    size_t sz_;
    std::vector<Complex> k1_, k2_, k3_, k4_, tmp_;
};

ComplexMatrix to_matrix(const std::vector<Complex>& data, int n) {
    ComplexMatrix m(n);
    std::copy(data.begin(), data.end(), m.data());
    return m;
}

// Incremental drive-period window averaging of Delta F used for early
// stopping; mirrors detect_steady_state exactly.
class SteadyMonitor {
public:
    SteadyMonitor(double period, double tolerance) : period_(period), tol_(tolerance) {}

    // Returns true once two consecutive pairs of adjacent window averages
    // agree within tolerance.
    bool push_record(double t, double delta_f) {
        const int w = static_cast<int>(std::floor(t / period_ + 1e-9));
        if (w > window_) {
            if (count_ > 0) finalize_window();
            window_ = w;
        }
        sum_ += delta_f;
        ++count_;
        return steady_;
    }

private:
    void finalize_window() {
        const double avg = sum_ / count_;
        if (have_prev_ && std::abs(avg - prev_) < tol_) {
            if (++hits_ >= 2) steady_ = true;
        } else if (have_prev_) {
            hits_ = 0;
        }
        prev_ = avg;
        have_prev_ = true;
        sum_ = 0.0;
        count_ = 0;
    }

    double period_, tol_;
    int window_ = 0;
    double sum_ = 0.0;
    int count_ = 0;
    double prev_ = 0.0;
    bool have_prev_ = false;
    int hits_ = 0;
    bool steady_ = false;
};

Trajectory run_ladder(const LadderKernel& kern, const SimulationParams& p,
                      std::vector<Complex> rho, const IntegrationOptions& opt,
                      bool check_truncation) {
    const double dt = p.resolved_dt();
    const long n_steps = std::lround(p.t_max / dt);
    if (n_steps < 1) throw ConfigError("invalid parameter 't_max': shorter than one time step");
    const int n = kern.n;
    const double temperature = p.bath_temperature();

    Rk4Engine engine(kern);
    SteadyMonitor monitor(p.drive_period(), p.ss_tolerance * p.omega0);

    Trajectory traj;
    double work = 0.0, heat = 0.0;
    double h_total0 = 0.0;
    bool stop = false;

    auto record = [&](long step) {
        const double t = step * dt;
        const ComplexMatrix m = to_matrix(rho, n);
        const std::vector<double> evs = hermitian_eigenvalues(m);
        if (evs.front() < -p.positivity_tolerance) {
            throw NumericalError("integrate: smallest eigenvalue " + std::to_string(evs.front()) +
                                 " below -positivity_tolerance at t=" + std::to_string(t));
        }
        if (check_truncation) {
            const double top2 = rho[static_cast<size_t>(n - 1) * n + (n - 1)].real() +
                                rho[static_cast<size_t>(n - 2) * n + (n - 2)].real();
            if (top2 > 1e-8) {
                throw NumericalError("integrate_hp: top two Fock populations " + std::to_string(top2) +
                                     " exceed 1e-8; increase the truncation dimension");
            }
        }

        double tr = 0.0, energy = 0.0;
        for (int i = 0; i < n; ++i) {
            const double pii = rho[static_cast<size_t>(i) * n + i].real();
            tr += pii;
            energy += kern.h_diag[i] * pii;
        }
        Complex ladder_exp(0.0, 0.0);
        for (int k = 0; k + 1 < n; ++k)
            ladder_exp += kern.ladder[k] *
                          (rho[static_cast<size_t>(k) * n + k + 1] + rho[static_cast<size_t>(k + 1) * n + k]);
        const double drive = kern.drive_amp * std::cos(kern.omega * t);
        const double h_total = energy + drive * ladder_exp.real();

        ThermoRecord r;
        r.t = t;
        r.energy = energy;
        r.entropy = von_neumann_entropy(evs);
        r.free_energy = free_energy(energy, r.entropy, temperature);
        r.work = work;
        r.heat = heat;
        r.total_energy = h_total;
        if (traj.records.empty()) {
            h_total0 = h_total;
        } else {
            const ThermoRecord& r0 = traj.records.front();
            r.delta_f = r.free_energy - r0.free_energy;
            r.delta_e = r.energy - r0.energy;
            r.delta_s = r.entropy - r0.entropy;
        }
        r.eta = efficiency(r.delta_f, work, p.omega0);
        r.first_law_residual = work - heat - (h_total - h_total0);

        traj.times.push_back(t);
        traj.records.push_back(r);
        traj.diagnostics.push_back({std::abs(tr - 1.0), evs.front()});
        if (opt.store_states) traj.states.push_back(m);

        if (opt.stop_when_steady && monitor.push_record(t, r.delta_f)) stop = true;
    };

    record(0);
    for (long step = 0; step < n_steps && !stop; ++step) {
        engine.step(rho, work, heat, step * dt, dt);
        const long done = step + 1;
        if (done % p.record_stride == 0 || done == n_steps) record(done);
    }
    return traj;
}

std::vector<Complex> density_data(const ComplexMatrix& rho) {
    return {rho.data(), rho.data() + rho.size()};
}

void validate_initial_state(const ComplexMatrix& rho0, int dim, const SimulationParams& p) {
    if (rho0.dim() != dim) {
        throw std::invalid_argument("integrate: initial state dimension " + std::to_string(rho0.dim()) +
                                    " does not match operator dimension " + std::to_string(dim));
    }
    if (std::abs(trace(rho0).real() - 1.0) > 1e-8 || std::abs(trace(rho0).imag()) > 1e-10) {
        throw std::invalid_argument("integrate: initial state trace is not 1");
    }
    if (rho0.hermiticity_defect() > 1e-10) {
        throw std::invalid_argument("integrate: initial state is not Hermitian");
    }
    const std::vector<double> evs = hermitian_eigenvalues(rho0);
    if (evs.front() < -p.positivity_tolerance) {
        throw std::invalid_argument("integrate: initial state has eigenvalue " +
                                    std::to_string(evs.front()) + " below -positivity_tolerance");
    }
}

} // namespace

ComplexMatrix liouvillian_rhs(const ComplexMatrix& rho, double t, const SimulationParams& p,
                              const CollectiveOperators& ops) {
    if (rho.dim() != ops.dim()) {
        throw std::invalid_argument("liouvillian_rhs: dimension mismatch (rho " +
                                    std::to_string(rho.dim()) + ", operators " +
                                    std::to_string(ops.dim()) + ")");
    }
    ComplexMatrix out = commutator(hamiltonian(ops, p, t), rho) * Complex(0.0, -1.0);
    if (p.gamma > 0.0) out += dissipator(rho, ops, p);
    return out;
}

ComplexMatrix rk4_step(const ComplexMatrix& rho, double t, double dt, const RhsFunction& rhs) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be > 0");
    const Complex half(0.5 * dt, 0.0);
    const ComplexMatrix k1 = rhs(rho, t);
    const ComplexMatrix k2 = rhs(rho + k1 * half, t + 0.5 * dt);
    const ComplexMatrix k3 = rhs(rho + k2 * half, t + 0.5 * dt);
    const ComplexMatrix k4 = rhs(rho + k3 * Complex(dt, 0.0), t + dt);

    ComplexMatrix next = rho;
    ComplexMatrix incr = k1;
    incr += k2 * Complex(2.0, 0.0);
    incr += k3 * Complex(2.0, 0.0);
    incr += k4;
    next += incr * Complex(dt / 6.0, 0.0);

    std::vector<Complex> data = density_data(next);
    Rk4Engine::hermitize(data, next.dim());
    double tr = 0.0;
    for (int i = 0; i < next.dim(); ++i) tr += data[static_cast<size_t>(i) * next.dim() + i].real();
    if (std::abs(tr - 1.0) > kStepTraceGuard) {
        throw NumericalError("rk4_step: trace drift " + std::to_string(std::abs(tr - 1.0)) +
                             " exceeds 1e-8; reduce dt");
    }
    for (Complex& z : data) z *= 1.0 / tr;
    return to_matrix(data, next.dim());
}

Trajectory integrate(const SimulationParams& p, const CollectiveOperators& ops,
                     const ComplexMatrix& rho0, const IntegrationOptions& options) {
    p.validate();
    const int n = ops.dim();
    validate_initial_state(rho0, n, p);

    LadderKernel kern;
    kern.n = n;
    kern.omega0 = p.omega0;
    kern.omega = p.omega;
    kern.drive_amp = p.amplitude;
    kern.rate_down = p.gamma * (p.nbar + 1.0);
    kern.rate_up = p.gamma * p.nbar;
    kern.h_diag.resize(n);
    kern.lplm.resize(n);
    kern.lmlp.resize(n);
    kern.ladder.resize(n - 1);
    for (int i = 0; i < n; ++i) {
        kern.h_diag[i] = p.omega0 * ops.jz(i, i).real();
        kern.lplm[i] = ops.jpjm(i, i).real();
        kern.lmlp[i] = ops.jmjp(i, i).real();
    }
    for (int k = 0; k + 1 < n; ++k) kern.ladder[k] = ops.jplus(k + 1, k).real();

    return run_ladder(kern, p, density_data(rho0), options, false);
}

Trajectory integrate_hp(const SimulationParams& p, int truncation_dim,
                        const IntegrationOptions& options) {
    p.validate();
    if (truncation_dim < 2) throw std::invalid_argument("integrate_hp: truncation_dim must be >= 2");
    const int n = truncation_dim;

    LadderKernel kern;
    kern.n = n;
    kern.omega0 = p.omega0;
    kern.omega = p.omega;
    kern.drive_amp = p.amplitude * std::sqrt(static_cast<double>(p.n_atoms));
    kern.rate_down = p.gamma * p.n_atoms * (p.nbar + 1.0);
    kern.rate_up = p.gamma * p.n_atoms * p.nbar;
    kern.h_diag.resize(n);
    kern.lplm.resize(n);
    kern.lmlp.resize(n);
    kern.ladder.resize(n - 1);
    for (int k = 0; k + 1 < n; ++k) kern.ladder[k] = std::sqrt(k + 1.0);
    for (int i = 0; i < n; ++i) {
        kern.h_diag[i] = p.omega0 * (i - 0.5 * p.n_atoms);
        kern.lplm[i] = (i > 0) ? kern.ladder[i - 1] * kern.ladder[i - 1] : 0.0;
        kern.lmlp[i] = (i + 1 < n) ? kern.ladder[i] * kern.ladder[i] : 0.0;
    }

    const BosonOperators bops = build_boson(n);
    const ComplexMatrix rho0 = thermal_boson_state(bops, p.omega0, p.bath_temperature());
    return run_ladder(kern, p, density_data(rho0), options, true);
}

Trajectory integrate_hp_auto(const SimulationParams& p, const IntegrationOptions& options,
                             int& truncation_dim) {
    std::string last;
    for (int m : {16, 24, 32, 48, 64}) {
        try {
            Trajectory traj = integrate_hp(p, m, options);
            truncation_dim = m;
            return traj;
        } catch (const NumericalError& e) {
            last = e.what();
            if (last.find("truncation") == std::string::npos) throw;
        }
    }
    throw NumericalError("integrate_hp_auto: truncation overflow even at 64 Fock levels (" + last +
                         ")");
}

SteadyStateResult detect_steady_state(const Trajectory& traj, const SimulationParams& p) {
    if (traj.records.empty()) throw std::invalid_argument("detect_steady_state: empty trajectory");
    const double period = p.drive_period();
    const double t_last = traj.records.back().t;
    if (t_last < 3.0 * period - 1e-9) {
        throw std::invalid_argument("detect_steady_state: trajectory spans fewer than 3 drive periods");
    }

    const int n_windows = static_cast<int>(std::floor(t_last / period + 1e-9));
    std::vector<double> f_avg(n_windows, 0.0), s_avg(n_windows, 0.0), e_avg(n_windows, 0.0);
    std::vector<int> count(n_windows, 0);
    for (const ThermoRecord& r : traj.records) {
        const int w = static_cast<int>(std::floor(r.t / period + 1e-9));
        if (w >= n_windows) continue;
        f_avg[w] += r.delta_f;
        s_avg[w] += r.delta_s;
        e_avg[w] += r.delta_e;
        ++count[w];
    }
    for (int w = 0; w < n_windows; ++w) {
        if (count[w] == 0) {
            throw std::invalid_argument("detect_steady_state: record_stride leaves a drive period "
                                        "without records");
        }
        f_avg[w] /= count[w];
        s_avg[w] /= count[w];
        e_avg[w] /= count[w];
    }

    SteadyStateResult res;
    res.n_atoms = p.n_atoms;
    res.delta_f_ss = f_avg.back();
    res.delta_s_ss = s_avg.back();
    res.delta_e_ss = e_avg.back();

    const double tol = p.ss_tolerance * p.omega0;
    int hits = 0;
    for (int m = 1; m < n_windows; ++m) {
        if (std::abs(f_avg[m] - f_avg[m - 1]) < tol) {
            if (++hits >= 2) {
                res.converged = true;
                res.t_steady = (m + 1) * period;
                break;
            }
        } else {
            hits = 0;
        }
    }
    if (!res.converged) res.t_steady = t_last;
    return res;
}

} // namespace qbsim
