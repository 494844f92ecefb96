#include "eprgame/two_qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace eprgame {

namespace {

double squared_norm(const TwoQubitAmplitudes& amps) {
    double total = 0.0;
    for (const Complex& amp : amps) total += std::norm(amp);
    return total;
}

}  // namespace

TwoQubitState::TwoQubitState(const TwoQubitAmplitudes& amps) : amps_(amps) {
    if (std::fabs(squared_norm(amps_) - 1.0) > 1e-10) {
        throw std::invalid_argument("TwoQubitState: amplitudes must have unit norm");
    }
}

TwoQubitState TwoQubitState::renormalized(const TwoQubitAmplitudes& amps) {
    const double norm = std::sqrt(squared_norm(amps));
    if (!(norm > 1e-8)) {
        throw std::invalid_argument("TwoQubitState: norm too small to renormalize");
    }
    TwoQubitAmplitudes scaled = amps;
    for (Complex& amp : scaled) amp /= norm;
    return TwoQubitState(scaled);
}

Complex inner_product(const TwoQubitAmplitudes& a, const TwoQubitAmplitudes& b) {
    Complex total(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) total += std::conj(a[i]) * b[i];
    return total;
}

TwoQubitAmplitudes tensor_product(const QubitState& a, const QubitState& b) {
    return {a.amp0 * b.amp0, a.amp0 * b.amp1, a.amp1 * b.amp0, a.amp1 * b.amp1};
}

TwoQubitState joint_eigenstate(const Direction& a, int m, const Direction& b, int n) {
    return TwoQubitState(tensor_product(spin_eigenstate(a, m), spin_eigenstate(b, n)));
}

double projection_probability(const TwoQubitState& psi, const TwoQubitState& basis_ket) {
    return std::norm(inner_product(basis_ket.amplitudes(), psi.amplitudes()));
}

}  // namespace eprgame
