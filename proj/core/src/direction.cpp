#include "eprgame/direction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eprgame {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double reduce_phi(double phi) {
    double reduced = std::fmod(phi, two_pi);
    if (reduced < 0.0) reduced += two_pi;
    // A tiny negative input can round back up to exactly 2*pi.
    if (reduced >= two_pi) reduced = 0.0;
    return reduced;
}

}  // namespace

Direction::Direction(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("Direction: angles must be finite");
    }
    if (theta < 0.0 || theta > std::numbers::pi) {
        throw std::invalid_argument("Direction: theta must lie in [0, pi]");
    }
    theta_ = theta;
    phi_ = reduce_phi(phi);
    const double sin_theta = std::sin(theta_);
    x_ = sin_theta * std::cos(phi_);
    y_ = sin_theta * std::sin(phi_);
    z_ = std::cos(theta_);
}

Direction Direction::z_axis() { return Direction(0.0, 0.0); }

Direction Direction::minus_z_axis() { return Direction(std::numbers::pi, 0.0); }

Direction Direction::x_axis() { return Direction(std::numbers::pi / 2.0, 0.0); }

std::array<double, 3> polar_to_cartesian(const Direction& d) {
    return {d.x(), d.y(), d.z()};
}

}  // namespace eprgame
