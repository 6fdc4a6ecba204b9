#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tem/numerics.hpp"

namespace tem {

/// Finite sum of shifted sinc pulses: x(t) = sum_m c_m sinc((t - m*Ts)/Ts),
/// with pulse spacing Ts = 2*pi/omega_m. The spectral content of such a sum
/// reaches only pi/Ts = omega_m/2; omega_m is the nominal (loose) band edge.
class BandlimitedSignal {
public:
    BandlimitedSignal(std::vector<double> coeffs, double omega_m, std::uint64_t seed = 0);

    double eval(double t) const;

    /// Antiderivative \int_0^t x(s) ds, in closed form via the sine integral.
    double antiderivative(double t) const;

    const std::vector<double>& coeffs() const { return coeffs_; }
    int m_half() const { return (static_cast<int>(coeffs_.size()) - 1) / 2; }
    double omega_m() const { return omega_m_; }
    double pulse_spacing() const { return pulse_spacing_; }
    /// Tightest band actually occupied by the sinc sum: pi / pulse_spacing.
    double content_band_limit() const;
    double amplitude_bound() const { return amplitude_bound_; }
    /// Exact signal energy \int x^2 = Ts * sum c_m^2 (pulse orthogonality).
    double energy() const;
    std::uint64_t seed() const { return seed_; }

    /// Simulation window [-4*Ts, (2M+4)*Ts]; encoders clamp to it.
    double eval_begin() const;
    double eval_end() const;

private:
    std::vector<double> coeffs_;
    double omega_m_;
    double pulse_spacing_;
    double amplitude_bound_;
    std::uint64_t seed_;
};

/// Random-coefficient signal, c_m uniform in [-1, 1), bit-reproducible from the seed.
/// RNG stream: mt19937_64, top-53-bit mapping ("mt19937_64-u53-v1").
BandlimitedSignal generate_signal(int m_half, double omega_m, std::uint64_t seed);

inline constexpr const char* kCoeffRngAlgorithm = "mt19937_64-u53-v1";

/// Nyquist interval tolerated by the recovery theory for band limit omega: pi/omega.
/// Distinct from the generator pulse spacing 2*pi/omega; never alias the two.
inline double recovery_nyquist(double omega) { return M_PI / omega; }
inline double generator_pulse_spacing(double omega) { return 2.0 * M_PI / omega; }

/// Amplitude bound sqrt(E * omega / pi) implied by an energy budget.
double analytic_amplitude_bound(double energy, double omega);

/// Adaptive-Simpson integral of the signal over [a, b]; error <= tol*(1+|I|).
double integrate(const BandlimitedSignal& signal, double a, double b, double tol = 1e-12);

/// Sine-integral closed form of the same quantity (validation route).
double integrate_closed_form(const BandlimitedSignal& signal, double a, double b);

/// Reconstruction kernel g(t) = sin(band*t)/(pi*t), g(0) = band/pi.
struct SincKernel {
    double band = 0.0;
    double operator()(double t) const;
};

/// \int_a^b g(s - center) ds for the kernel, via the sine integral.
double kernel_pulse_integral(const SincKernel& kernel, double a, double b, double center);

}  // namespace tem
