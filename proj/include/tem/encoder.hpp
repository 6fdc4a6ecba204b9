#pragma once

#include <span>
#include <vector>

#include "tem/schedule.hpp"
#include "tem/signal.hpp"

namespace tem {

enum class EventKind { window_start, signal_firing, calibration_firing };

struct SpikeEvent {
    double time = 0.0;
    EventKind kind = EventKind::signal_firing;
};

/// One measurement interval between consecutive signal-relevant events
/// (window start or signal firings). Calibration firings inside the interval
/// extend its non-sampling duration; the signal is integrated only over
/// [t_begin + t_ns, t_end].
struct MeasureInterval {
    double t_begin = 0.0;
    double t_end = 0.0;
    double t_ns = 0.0;       // true non-sampling duration
    double sigma = 0.0;      // sigma held during the signal integration
    double delta_dis = 0.0;  // discharge preceding the signal integration
    double t_v = 0.0;        // calibration firing interval inside (0 when none)
    int segment = 0;         // schedule segment at the signal-integration start
    bool calibrated = false;

    double sample_begin() const { return t_begin + t_ns; }
    double sample_end() const { return t_end; }
    double midpoint() const { return 0.5 * (t_begin + t_end); }
};

struct SpikeTrain {
    std::vector<SpikeEvent> events;
    std::vector<MeasureInterval> intervals;
    double window_begin = 0.0;
    double window_end = 0.0;
    bool truncated_final = false;  // window closed during an unfinished integration
};

/// A scheduled reference-voltage injection: switch the input to `level` and
/// the threshold to `threshold` for exactly one firing, starting right after
/// the `ordinal`-th signal firing (1-based) inside `segment`.
struct InjectionSpec {
    int segment = 0;
    int ordinal = 1;
    double level = 0.0;
    double threshold = 0.0;
};

/// Simulate the drifting integrate-and-fire encoder over [window_begin, window_end].
/// Each firing solves (1/sigma_n) \int_{t+dd}^{t+T} (input + b) = delta by bracketed
/// root finding; the integrator idles during discharges and resets fully.
SpikeTrain encode(const BandlimitedSignal& signal, const EncoderConfig& config,
                  const MismatchSchedule& schedule, double window_begin, double window_end,
                  std::span<const InjectionSpec> injections = {});

}  // namespace tem
