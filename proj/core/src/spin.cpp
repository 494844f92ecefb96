#include "eprgame/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace eprgame {

HermitianObservable sigma_dot_n(const Direction& d) {
    const Complex off_diag(d.x(), d.y());
    return {{{Complex(d.z(), 0.0), std::conj(off_diag)},
             {off_diag, Complex(-d.z(), 0.0)}}};
}

QubitState spin_eigenstate(const Direction& d, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("spin_eigenstate: outcome must be +1 or -1");
    }
    const double half = d.theta() / 2.0;
    const Complex phase = std::polar(1.0, d.phi());
    if (outcome == 1) {
        return {Complex(std::cos(half), 0.0), phase * std::sin(half)};
    }
    return {Complex(std::sin(half), 0.0), -phase * std::cos(half)};
}

}  // namespace eprgame
