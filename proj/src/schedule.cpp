#include "tem/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tem {

void MismatchBounds::validate() const {
    if (!(kappa_inf > 0.0) || kappa_inf > kappa_sup)
        throw std::invalid_argument("MismatchBounds: bad kappa range");
    if (!(gamma_inf > 0.0) || gamma_inf > gamma_sup)
        throw std::invalid_argument("MismatchBounds: bad gamma range");
    if (delta_dis_inf < 0.0 || delta_dis_inf > delta_dis_sup)
        throw std::invalid_argument("MismatchBounds: bad delta_dis range");
}

MismatchSchedule::MismatchSchedule(double start, double segment_length,
                                   std::vector<double> kappa, std::vector<double> xi,
                                   std::vector<double> delta_dis, MismatchBounds bounds)
    : start_(start),
      segment_length_(segment_length),
      kappa_(std::move(kappa)),
      xi_(std::move(xi)),
      delta_dis_(std::move(delta_dis)),
      bounds_(bounds) {
    if (segment_length_ <= 0.0)
        throw std::invalid_argument("MismatchSchedule: segment_length must be positive");
    if (kappa_.empty() || kappa_.size() != xi_.size() || kappa_.size() != delta_dis_.size())
        throw std::invalid_argument("MismatchSchedule: per-segment arrays must match and be nonempty");
    bounds_.validate();
    for (std::size_t i = 0; i < kappa_.size(); ++i) {
        if (kappa_[i] < bounds_.kappa_inf || kappa_[i] > bounds_.kappa_sup)
            throw std::invalid_argument("MismatchSchedule: kappa[" + std::to_string(i) +
                                        "] outside bounds");
        if (xi_[i] < bounds_.gamma_inf || xi_[i] > bounds_.gamma_sup)
            throw std::invalid_argument("MismatchSchedule: xi[" + std::to_string(i) +
                                        "] outside bounds");
        if (delta_dis_[i] < bounds_.delta_dis_inf || delta_dis_[i] > bounds_.delta_dis_sup)
            throw std::invalid_argument("MismatchSchedule: delta_dis[" + std::to_string(i) +
                                        "] outside bounds");
    }
}

int MismatchSchedule::segment_index(double t) const {
    if (t < start_ || t >= end())
        throw std::out_of_range("MismatchSchedule: t outside schedule coverage");
    const auto i = static_cast<int>(std::floor((t - start_) / segment_length_));
    return std::min(i, num_segments() - 1);
}

double MismatchSchedule::end() const {
    return start_ + segment_length_ * static_cast<double>(num_segments());
}

double MismatchSchedule::sigma_at(double t) const {
    const int i = segment_index(t);
    return kappa_[static_cast<std::size_t>(i)] / xi_[static_cast<std::size_t>(i)];
}

double MismatchSchedule::kappa_at(double t) const {
    return kappa_[static_cast<std::size_t>(segment_index(t))];
}

double MismatchSchedule::xi_at(double t) const {
    return xi_[static_cast<std::size_t>(segment_index(t))];
}

double MismatchSchedule::delta_dis_at(double t) const {
    return delta_dis_[static_cast<std::size_t>(segment_index(t))];
}

}  // namespace tem
