#include "tem/signal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tem {

namespace {

double grid_max_abs(const BandlimitedSignal& s) {
    // >= 64 points per pulse spacing over the padded support
    const double ts = s.pulse_spacing();
    const double lo = s.eval_begin();
    const double hi = s.eval_end();
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / ts)) * 64 + 1;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        best = std::max(best, std::abs(s.eval(t)));
    }
    return best;
}

}  // namespace

BandlimitedSignal::BandlimitedSignal(std::vector<double> coeffs, double omega_m, std::uint64_t seed)
    : coeffs_(std::move(coeffs)),
      omega_m_(omega_m),
      pulse_spacing_(2.0 * M_PI / omega_m),
      amplitude_bound_(0.0),
      seed_(seed) {
    if (omega_m <= 0.0) throw std::invalid_argument("BandlimitedSignal: omega_m must be positive");
    if (coeffs_.empty() || coeffs_.size() % 2 == 0)
        throw std::invalid_argument("BandlimitedSignal: need 2M+1 coefficients");
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw std::invalid_argument("BandlimitedSignal: non-finite coefficient");
    amplitude_bound_ = grid_max_abs(*this);
}

double BandlimitedSignal::eval(double t) const {
    double acc = 0.0;
    const double ts = pulse_spacing_;
    for (std::size_t m = 0; m < coeffs_.size(); ++m)
        acc += coeffs_[m] * sinc((t - static_cast<double>(m) * ts) / ts);
    return acc;
}

double BandlimitedSignal::antiderivative(double t) const {
    // int_0^t sinc((s - m Ts)/Ts) ds = (Ts/pi) [Si(pi (t - m Ts)/Ts) + Si(pi m)]
    double acc = 0.0;
    const double ts = pulse_spacing_;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        const double md = static_cast<double>(m);
        acc += coeffs_[m] *
               (sine_integral(M_PI * (t - md * ts) / ts) + sine_integral(M_PI * md));
    }
    return acc * ts / M_PI;
}

double BandlimitedSignal::content_band_limit() const { return M_PI / pulse_spacing_; }

double BandlimitedSignal::energy() const {
    double acc = 0.0;
    for (double c : coeffs_) acc += c * c;
    return acc * pulse_spacing_;
}

double BandlimitedSignal::eval_begin() const { return -4.0 * pulse_spacing_; }

double BandlimitedSignal::eval_end() const {
    return (static_cast<double>(2 * m_half()) + 4.0) * pulse_spacing_;
}

BandlimitedSignal generate_signal(int m_half, double omega_m, std::uint64_t seed) {
    if (m_half < 1) throw std::invalid_argument("generate_signal: M must be >= 1");
    if (omega_m <= 0.0) throw std::invalid_argument("generate_signal: omega_m must be positive");
    std::mt19937_64 rng(seed);
    std::vector<double> coeffs(static_cast<std::size_t>(2 * m_half + 1));
    for (double& c : coeffs) c = unit_symmetric_from_bits(rng());
    return BandlimitedSignal(std::move(coeffs), omega_m, seed);
}

double analytic_amplitude_bound(double energy, double omega) {
    if (energy < 0.0 || omega <= 0.0)
        throw std::invalid_argument("analytic_amplitude_bound: bad arguments");
    return std::sqrt(energy * omega / M_PI);
}

double integrate(const BandlimitedSignal& signal, double a, double b, double tol) {
    if (a > b) throw std::invalid_argument("integrate: a > b");
    return adaptive_simpson([&](double t) { return signal.eval(t); }, a, b, tol, 40);
}

double integrate_closed_form(const BandlimitedSignal& signal, double a, double b) {
    return signal.antiderivative(b) - signal.antiderivative(a);
}

double SincKernel::operator()(double t) const {
    if (t == 0.0) return band / M_PI;
    return std::sin(band * t) / (M_PI * t);
}

double kernel_pulse_integral(const SincKernel& kernel, double a, double b, double center) {
    return (sine_integral(kernel.band * (b - center)) -
            sine_integral(kernel.band * (a - center))) / M_PI;
}

}  // namespace tem
