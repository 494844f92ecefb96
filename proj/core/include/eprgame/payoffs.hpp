// Classical and quantum payoff evaluation for 2x2 games played through spin
// measurements on a shared two-qubit state.
#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "eprgame/game.hpp"
#include "eprgame/two_qubit.hpp"

namespace eprgame {

// ---- initial-state presets -------------------------------------------------

// A named initial state covered by the analyses.
struct StatePreset {
    std::string_view name;
    TwoQubitState state;
};

// The built-in presets:
//   "product-uniform"  (1, 1, 1, 1) / 2
//   "maxent-i"         (1, 0, 0, i) / sqrt(2)
//   "entangled-asym"   (1, 1, -1, 1) / 2
const std::array<StatePreset, 3>& state_presets();

// Looks a preset up by name; empty for unknown names.
std::optional<TwoQubitState> find_state_preset(std::string_view name);

// ---- payoff evaluation -----------------------------------------------------

// Expected payoffs of the classical mixed-strategy game in which the players
// pick their first action with probabilities p and q. Throws
// std::invalid_argument unless both probabilities lie in [0, 1].
PayoffPair classical_mixed(const GameMatrix& game, double p, double q);

// Joint outcome probabilities |<joint_eigenstate(a, m, b, n)|psi>|^2.
OutcomeProbabilities joint_probabilities(const TwoQubitState& psi, const Direction& a,
                                         const Direction& b);

// Contracts a probability quad with the game coefficients:
//   pi_a = alpha p11 + beta p12 + gamma p21 + delta p22,
//   pi_b swaps beta and gamma.
PayoffPair payoff_pair(const GameMatrix& game, const OutcomeProbabilities& probs);

// payoff_pair(joint_probabilities(...)): the general evaluation route every
// closed form below is validated against.
PayoffPair quantum_payoffs(const TwoQubitState& psi, const GameMatrix& game,
                           const StrategyProfile& profile);

// Mixed-strategy probabilities (p, q) a profile realizes on the
// product-uniform state: p = (1 + sin(theta_a) cos(phi_a)) / 2, same shape
// for q.
std::pair<double, double> product_state_mixed_probabilities(const StrategyProfile& profile);

// Closed-form payoffs for the product-uniform preset; equals classical_mixed
// at product_state_mixed_probabilities(profile).
PayoffPair closed_payoff_product(const GameMatrix& game, const StrategyProfile& profile);

// Closed-form payoffs for the maxent-i preset; the two components are always
// equal.
PayoffPair closed_payoff_maxent(const GameMatrix& game, const StrategyProfile& profile);

// Closed-form payoffs for the entangled-asym preset; the two components are
// always equal.
PayoffPair closed_payoff_state3(const GameMatrix& game, const StrategyProfile& profile);

// How far the profile sits from the classical-strategy trajectory for (p, q):
//   (sin(theta_a) cos(phi_a) - (2p - 1), sin(theta_b) cos(phi_b) - (2q - 1)).
// Both components vanish exactly when the profile realizes (p, q). Throws
// std::invalid_argument for probabilities outside [0, 1].
std::pair<double, double> embedding_trajectory_residual(const StrategyProfile& profile,
                                                        double p, double q);

// ---- expanded-term equivalence checks ---------------------------------------

// States whose payoff terms exist both as an expanded quotient form (dividing
// by 1 +- cos(theta)) and as a factored closed form.
enum class ReductionState { product_uniform, entangled_asym };

// Evaluates one payoff term (1-based index in coefficient order alpha, beta,
// gamma, delta) in both forms and returns {expanded, closed}. The two agree
// away from the poles; the expanded quotient is undefined at theta in {0, pi},
// so pole angles (within 1e-12) are rejected with std::invalid_argument, as is
// an index outside 1..4.
std::pair<double, double> verify_term_reduction(ReductionState state, int term_index,
                                                const StrategyProfile& profile,
                                                const GameMatrix& game);

}  // namespace eprgame
