// Independent reference computations the tests validate the library against.
// Everything here is built from first principles (explicit eigenvector solve
// of the 2x2 observable, dense tensor products, direct inner products) rather
// than the library's half-angle or factored closed forms, so the two routes
// fail independently.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace oracle {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;
using Vec4 = std::array<Complex, 4>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;

inline Mat2 spin_matrix(double theta, double phi) {
    const double ax = std::sin(theta) * std::cos(phi);
    const double ay = std::sin(theta) * std::sin(phi);
    const double az = std::cos(theta);
    return {{{Complex(az, 0.0), Complex(ax, -ay)}, {Complex(ax, ay), Complex(-az, 0.0)}}};
}

// Eigenvector of spin_matrix for the eigenvalue +1 or -1, from the null-space
// of (matrix - outcome * I): (1 + az, ax + i ay) for +1 and
// (-(1 - az), ax + i ay) for -1, normalized, with the degenerate pole handled
// by an explicit branch. Differs from the half-angle construction by at most a
// global phase.
inline Vec2 eigenstate(double theta, double phi, int outcome) {
    const double ax = std::sin(theta) * std::cos(phi);
    const double ay = std::sin(theta) * std::sin(phi);
    const double az = std::cos(theta);
    Vec2 v;
    if (outcome == 1) {
        if (1.0 + az < 1e-14) return {Complex(0.0, 0.0), Complex(1.0, 0.0)};
        v = {Complex(1.0 + az, 0.0), Complex(ax, ay)};
    } else {
        if (1.0 - az < 1e-14) return {Complex(0.0, 0.0), Complex(1.0, 0.0)};
        v = {Complex(-(1.0 - az), 0.0), Complex(ax, ay)};
    }
    const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    return {v[0] / norm, v[1] / norm};
}

inline Vec4 tensor(const Vec2& a, const Vec2& b) {
    return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

inline Complex inner(const Vec4& a, const Vec4& b) {
    Complex total(0.0, 0.0);
    for (std::size_t i = 0; i < 4; ++i) total += std::conj(a[i]) * b[i];
    return total;
}

// Joint outcome probabilities by direct projection, in the order
// (+1,+1), (+1,-1), (-1,+1), (-1,-1).
inline std::array<double, 4> quad(const Vec4& psi, double theta_a, double phi_a,
                                  double theta_b, double phi_b) {
    std::array<double, 4> out{};
    int index = 0;
    for (const int m : {1, -1}) {
        for (const int n : {1, -1}) {
            const Vec4 joint =
                tensor(eigenstate(theta_a, phi_a, m), eigenstate(theta_b, phi_b, n));
            out[index++] = std::norm(inner(joint, psi));
        }
    }
    return out;
}

// ---- deterministic random sampling ------------------------------------------

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// A random normalized four-amplitude state (Gaussian components).
inline Vec4 random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec4 amps;
    double total = 0.0;
    for (Complex& amp : amps) {
        amp = Complex(gauss(rng), gauss(rng));
        total += std::norm(amp);
    }
    const double norm = std::sqrt(total);
    for (Complex& amp : amps) amp /= norm;
    return amps;
}

}  // namespace oracle
