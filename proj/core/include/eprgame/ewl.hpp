// Quantum-circuit baseline for the same 2x2 game: entangle, act locally,
// disentangle, measure in the computational basis.
#pragma once

#include "eprgame/payoffs.hpp"

namespace eprgame {

// Two-parameter local strategy: theta in [0, pi], phi in [0, pi/2].
struct EwlStrategy {
    double theta;
    double phi;
};

// The local strategy unitary
//   [  e^{ i phi} cos(theta/2)   sin(theta/2)            ]
//   [ -sin(theta/2)              e^{-i phi} cos(theta/2) ].
// Throws std::invalid_argument when a parameter leaves its range.
Matrix2 ewl_strategy_unitary(const EwlStrategy& s);

// The shared state after the entangling stage acts on |00>:
// cos(ent/2)|00> + i sin(ent/2)|11>. ent ranges over [0, pi/2] (0 = product
// play, pi/2 = maximal entanglement); values outside throw
// std::invalid_argument.
TwoQubitState ewl_entangled_initial(double ent);

// Final state J^dag (U_A (x) U_B) J |00>, where the entangler J is generated
// by the tensor square of the second-strategy unitary D = U(pi, 0):
// J = cos(ent/2) I + i sin(ent/2) (D (x) D).
TwoQubitState ewl_final_state(const EwlStrategy& sa, const EwlStrategy& sb, double ent);

// Payoffs from the squared projections of the final state onto the
// computational basis (|00> pays alpha/alpha, |01> beta/gamma, |10>
// gamma/beta, |11> delta/delta).
PayoffPair ewl_payoffs(const GameMatrix& game, const EwlStrategy& sa, const EwlStrategy& sb,
                       double ent);

// Largest payoff improvement available to the player on the restricted
// strategy grid theta_i = i*pi/(R-1), phi_j = (pi/2) j/(R-1) for
// i, j = 0..R-1 (endpoints included); floored at 0. Throws
// std::invalid_argument when resolution < 2.
double ewl_best_response_gain(const GameMatrix& game, const EwlStrategy& sa,
                              const EwlStrategy& sb, double ent, Player player,
                              int resolution);

}  // namespace eprgame
