// Measurement directions on the unit sphere, stored in polar form.
#pragma once

#include <array>

namespace eprgame {

// A unit vector parameterized by the polar angle theta in [0, pi] and the
// azimuth phi, reduced modulo 2*pi into [0, 2*pi) at construction.
// Polar form is the source of truth; the Cartesian components are derived.
class Direction {
public:
    // Throws std::invalid_argument if theta lies outside [0, pi] or either
    // angle is not finite. phi is folded into [0, 2*pi).
    Direction(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

    // Cartesian components (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)).
    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    double z() const noexcept { return z_; }

    static Direction z_axis();        // theta = 0
    static Direction minus_z_axis();  // theta = pi
    static Direction x_axis();        // theta = pi/2, phi = 0

private:
    double theta_;
    double phi_;
    double x_;
    double y_;
    double z_;
};

// Cartesian unit vector of a direction; the result has unit Euclidean norm.
std::array<double, 3> polar_to_cartesian(const Direction& d);

}  // namespace eprgame
