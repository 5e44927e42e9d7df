#include "zzi/angles.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "zzi/errors.hpp"

namespace zzi {

double theta_from_x(double x) { return 2.0 * std::atan(x); }

double x_from_theta(double theta) { return std::tan(0.5 * theta); }

double betaj_from_theta(double theta) {
    return -0.5 * std::log(std::tan(0.5 * theta));
}

void check_angle(double theta, std::size_t index) {
    constexpr double half_pi = 1.5707963267948966;
    if (!(theta > 0.0) || !(theta < half_pi)) {
        throw domain_error("angle theta_" + std::to_string(index) + " = " +
                           std::to_string(theta) +
                           " is outside the open interval (0, pi/2)");
    }
}

AngleSequence::AngleSequence(AngleKind kind, std::vector<double> data)
    : kind_(kind), data_(std::move(data)) {}

AngleSequence AngleSequence::explicit_list(std::vector<double> thetas) {
    if (thetas.empty())
        throw size_error("explicit angle list must be non-empty");
    for (std::size_t i = 0; i < thetas.size(); ++i)
        check_angle(thetas[i], i + 1);
    return AngleSequence(AngleKind::ExplicitList, std::move(thetas));
}

AngleSequence AngleSequence::periodic(std::vector<double> block) {
    if (block.empty() || block.size() % 2 != 0)
        throw size_error("periodic block must have even, positive length");
    for (std::size_t i = 0; i < block.size(); ++i)
        check_angle(block[i], i + 1);
    return AngleSequence(AngleKind::Periodic, std::move(block));
}

AngleSequence AngleSequence::homogeneous(double theta) {
    check_angle(theta, 1);
    return AngleSequence(AngleKind::Homogeneous, {theta});
}

AngleSequence AngleSequence::homogeneous_with_first(double theta1,
                                                    double theta) {
    check_angle(theta1, 1);
    check_angle(theta, 2);
    return AngleSequence(AngleKind::HomogeneousWithFirst, {theta1, theta});
}

AngleSequence AngleSequence::explicit_list_x(const std::vector<double>& xs) {
    std::vector<double> thetas(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        thetas[i] = theta_from_x(xs[i]);
    return explicit_list(std::move(thetas));
}

AngleSequence AngleSequence::homogeneous_x(double x) {
    return homogeneous(theta_from_x(x));
}

double AngleSequence::theta(std::size_t k) const {
    if (k == 0)
        return 0.0;
    switch (kind_) {
    case AngleKind::ExplicitList:
        if (k > data_.size())
            throw size_error("angle index " + std::to_string(k) +
                             " exceeds explicit list of length " +
                             std::to_string(data_.size()));
        return data_[k - 1];
    case AngleKind::Periodic:
        return data_[(k - 1) % data_.size()];
    case AngleKind::Homogeneous:
        return data_[0];
    case AngleKind::HomogeneousWithFirst:
        return k == 1 ? data_[0] : data_[1];
    }
    return 0.0; // unreachable
}

std::size_t AngleSequence::max_index() const {
    return kind_ == AngleKind::ExplicitList
               ? data_.size()
               : std::numeric_limits<std::size_t>::max();
}

std::size_t AngleSequence::max_truncation() const {
    return kind_ == AngleKind::ExplicitList
               ? data_.size() / 2
               : std::numeric_limits<std::size_t>::max();
}

} // namespace zzi
