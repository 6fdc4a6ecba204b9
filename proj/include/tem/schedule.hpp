#pragma once

#include <cstdint>
#include <vector>

namespace tem {

/// Known circuit specification limits for the drifting parameters.
struct MismatchBounds {
    double kappa_inf = 0.0, kappa_sup = 0.0;      // integration time constant range (s)
    double gamma_inf = 1.0, gamma_sup = 1.0;      // averaged nonlinearity gain range
    double delta_dis_inf = 0.0, delta_dis_sup = 0.0;  // discharge dead-time range (s)

    double sigma_inf() const { return kappa_inf / gamma_sup; }
    double sigma_sup() const { return kappa_sup / gamma_inf; }
    void validate() const;
};

/// Piecewise-constant per-segment realization of (kappa, xi, delta_dis).
/// Segments are half-open wall-clock intervals [start + i*len, start + (i+1)*len).
/// An integration reads the segment active at its start and holds the values.
class MismatchSchedule {
public:
    MismatchSchedule(double start, double segment_length, std::vector<double> kappa,
                     std::vector<double> xi, std::vector<double> delta_dis,
                     MismatchBounds bounds);

    int segment_index(double t) const;             // throws std::out_of_range outside coverage
    double sigma_at(double t) const;               // kappa/xi of the active segment
    double kappa_at(double t) const;
    double xi_at(double t) const;
    double delta_dis_at(double t) const;

    double start() const { return start_; }
    double end() const;
    double segment_length() const { return segment_length_; }
    int num_segments() const { return static_cast<int>(kappa_.size()); }
    const MismatchBounds& bounds() const { return bounds_; }
    const std::vector<double>& kappa() const { return kappa_; }
    const std::vector<double>& xi() const { return xi_; }
    const std::vector<double>& delta_dis() const { return delta_dis_; }

private:
    double start_;
    double segment_length_;
    std::vector<double> kappa_, xi_, delta_dis_;
    MismatchBounds bounds_;
};

/// Bias and firing threshold of the encoder.
struct EncoderConfig {
    double bias = 0.0;       // b, volts; must exceed the signal amplitude bound
    double threshold = 1.0;  // delta, volt-seconds after scaling
};

}  // namespace tem
