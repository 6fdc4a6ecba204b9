#include "tem/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tem {

SpikeTrain encode(const BandlimitedSignal& signal, const EncoderConfig& config,
                  const MismatchSchedule& schedule, double window_begin, double window_end,
                  std::span<const InjectionSpec> injections) {
    if (config.bias <= signal.amplitude_bound())
        throw std::invalid_argument("encode: bias must exceed the signal amplitude bound");
    if (config.threshold <= 0.0) throw std::invalid_argument("encode: threshold must be positive");
    if (window_begin >= window_end) throw std::invalid_argument("encode: empty window");
    if (window_begin < signal.eval_begin() || window_end > signal.eval_end())
        throw std::invalid_argument("encode: window outside the signal evaluation window");
    if (window_begin < schedule.start() || window_end > schedule.end())
        throw std::invalid_argument("encode: schedule does not cover the window");

    std::map<std::pair<int, int>, InjectionSpec> planned;
    for (const auto& inj : injections) {
        if (inj.ordinal < 1) throw std::invalid_argument("encode: injection ordinal must be >= 1");
        if (inj.segment < 0 || inj.segment >= schedule.num_segments())
            throw std::invalid_argument("encode: injection segment out of range");
        if (inj.level + config.bias <= 0.0)
            throw std::invalid_argument("encode: injection level + bias must be positive");
        if (inj.threshold <= 0.0)
            throw std::invalid_argument("encode: injection threshold must be positive");
        if (!planned.emplace(std::make_pair(inj.segment, inj.ordinal), inj).second)
            throw std::invalid_argument("encode: duplicate injection slot");
    }

    SpikeTrain train;
    train.window_begin = window_begin;
    train.window_end = window_end;
    train.events.push_back({window_begin, EventKind::window_start});

    const double b = config.bias;
    const double delta = config.threshold;
    const double far_limit = window_end + (window_end - window_begin);

    std::map<int, int> firings_in_segment;

    double t = window_begin;               // last event time
    double interval_begin = window_begin;  // left endpoint of the open interval
    double interval_tv = 0.0;              // calibration sub-interval inside the open interval
    bool has_cal = false;

    while (t < window_end) {
        const double dd = schedule.delta_dis_at(t);
        const double t_start = t + dd;
        if (t_start >= window_end) {
            train.truncated_final = true;
            break;
        }
        const double sigma = schedule.sigma_at(t_start);

        // the input returns to x(t) for at least one firing after a calibration firing
        const InjectionSpec* pending = nullptr;
        if (train.events.back().kind != EventKind::calibration_firing) {
            const int seg = schedule.segment_index(t);
            auto it = planned.find(std::make_pair(seg, firings_in_segment[seg]));
            if (it != planned.end()) {
                pending = &it->second;
            }
        }

        RootOptions ropts;
        ropts.x_tol = 1e-15;

        if (pending != nullptr) {
            const InjectionSpec inj = *pending;
            ropts.f_tol = 1e-12 * sigma * inj.threshold;
            auto f = [&](double u) {
                return (inj.level + b) * (u - t_start) - sigma * inj.threshold;
            };
            const double hi_u = t_start + 2.0 * sigma * inj.threshold / (inj.level + b);
            const double t_fire = brent_root(f, t_start, hi_u, ropts);
            if (t_fire > window_end) {
                train.truncated_final = true;
                break;
            }
            planned.erase(std::make_pair(inj.segment, inj.ordinal));
            train.events.push_back({t_fire, EventKind::calibration_firing});
            interval_tv = t_fire - t;
            has_cal = true;
            t = t_fire;
            continue;
        }

        const double phi0 = signal.antiderivative(t_start);
        auto f = [&](double u) {
            return (signal.antiderivative(u) - phi0) + b * (u - t_start) - sigma * delta;
        };
        ropts.f_tol = 1e-12 * sigma * delta;
        double hi_u = t_start + sigma * delta / b;  // zero-signal period as the first guess
        while (f(hi_u) < 0.0 && hi_u <= far_limit) hi_u = t_start + 2.0 * (hi_u - t_start);
        if (f(hi_u) < 0.0) {
            train.truncated_final = true;
            break;
        }
        const double t_fire = brent_root(f, t_start, hi_u, ropts);
        if (t_fire > window_end) {
            train.truncated_final = true;
            break;
        }

        train.events.push_back({t_fire, EventKind::signal_firing});
        MeasureInterval mi;
        mi.t_begin = interval_begin;
        mi.t_end = t_fire;
        mi.t_v = interval_tv;
        mi.calibrated = has_cal;
        mi.delta_dis = dd;
        mi.sigma = sigma;
        mi.t_ns = interval_tv + dd;
        mi.segment = schedule.segment_index(t_start);
        train.intervals.push_back(mi);

        firings_in_segment[schedule.segment_index(t_fire)] += 1;
        interval_begin = t_fire;
        interval_tv = 0.0;
        has_cal = false;
        t = t_fire;
    }
    return train;
}

}  // namespace tem
