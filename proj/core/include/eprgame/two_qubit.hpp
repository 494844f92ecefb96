// Two-qubit pure states: amplitudes, tensor products, and projections.
#pragma once

#include <array>
#include <cstddef>

#include "eprgame/spin.hpp"

namespace eprgame {

// Amplitudes on the computational basis in the order |00>, |01>, |10>, |11>.
using TwoQubitAmplitudes = std::array<Complex, 4>;

// A normalized two-qubit pure state.
class TwoQubitState {
public:
    // Rejects amplitude vectors whose squared norm deviates from 1 by more
    // than 1e-10 (throws std::invalid_argument).
    explicit TwoQubitState(const TwoQubitAmplitudes& amps);

    // Rescales to unit norm before constructing; throws std::invalid_argument
    // when the input norm is too close to zero to renormalize meaningfully.
    static TwoQubitState renormalized(const TwoQubitAmplitudes& amps);

    const TwoQubitAmplitudes& amplitudes() const noexcept { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_.at(index); }

private:
    TwoQubitAmplitudes amps_;
};

// Hermitian inner product <a|b>, conjugating the first argument.
Complex inner_product(const TwoQubitAmplitudes& a, const TwoQubitAmplitudes& b);

// Tensor product a (x) b with amplitude ordering |00>, |01>, |10>, |11>.
TwoQubitAmplitudes tensor_product(const QubitState& a, const QubitState& b);

// Joint eigenstate spin_eigenstate(a, m) (x) spin_eigenstate(b, n). Over
// (m, n) in {+1, -1}^2 the four joint states form an orthonormal basis.
TwoQubitState joint_eigenstate(const Direction& a, int m, const Direction& b, int n);

// Squared modulus of <basis_ket|psi>; invariant under a global phase on
// either argument.
double projection_probability(const TwoQubitState& psi, const TwoQubitState& basis_ket);

}  // namespace eprgame
