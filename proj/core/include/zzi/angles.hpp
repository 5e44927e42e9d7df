#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace zzi {

// Conversion between the interaction angle theta in (0, pi/2) and the
// high-temperature weight x = tan(theta/2) = exp(-2*beta*J).
double theta_from_x(double x);
double x_from_theta(double theta);
double betaj_from_theta(double theta); // beta*J = -0.5*ln tan(theta/2)

enum class AngleKind {
    ExplicitList,         // finite list theta_1..theta_L
    Periodic,             // infinite repetition of an even-length block
    Homogeneous,          // theta_k = theta for all k
    HomogeneousWithFirst, // theta_1 = theta1, theta_k = theta for k >= 2
};

// Stream of interaction angles theta_1, theta_2, ... in (0, pi/2), with the
// convention theta_0 = 0.  Explicit lists are finite; the generator kinds
// extend to arbitrary index.
class AngleSequence {
  public:
    static AngleSequence explicit_list(std::vector<double> thetas);
    static AngleSequence periodic(std::vector<double> block);
    static AngleSequence homogeneous(double theta);
    static AngleSequence homogeneous_with_first(double theta1, double theta);
    // Same factories with x = tan(theta/2) parameters.
    static AngleSequence explicit_list_x(const std::vector<double>& xs);
    static AngleSequence homogeneous_x(double x);

    AngleKind kind() const { return kind_; }

    // theta_k; k = 0 returns the conventional theta_0 = 0.
    double theta(std::size_t k) const;

    // Largest usable index (SIZE_MAX for generator kinds).
    std::size_t max_index() const;

    // Largest N such that a size-N operator truncation (needing theta up to
    // index 2N) can be built.
    std::size_t max_truncation() const;

    const std::vector<double>& data() const { return data_; }

  private:
    AngleSequence(AngleKind kind, std::vector<double> data);

    AngleKind kind_;
    std::vector<double> data_; // list, block, {theta} or {theta1, theta}
};

// Throws zzi::domain_error naming `index` (1-based) unless theta is strictly
// inside (0, pi/2).
void check_angle(double theta, std::size_t index);

} // namespace zzi
