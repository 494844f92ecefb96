// Nash-equilibrium certification and discovery over directional strategies.
#pragma once

#include <functional>
#include <vector>

#include "eprgame/payoffs.hpp"

namespace eprgame {

// A payoff evaluator bound to a fixed state and game.
using PayoffFunction = std::function<PayoffPair(const StrategyProfile&)>;

// The general projection-route evaluator for (psi, game).
PayoffFunction make_payoff_function(const TwoQubitState& psi, const GameMatrix& game);

// Deviation grid: theta_i = i*pi/R for i = 0..R (both endpoints; contains
// pi/2 for even R) and phi_j = 2*pi*j/R for j = 0..R-1 (the azimuth wraps).
// Doubling R refines onto a superset of the points, so certified deviation
// gains never decrease under refinement.
std::vector<double> grid_thetas(int resolution);
std::vector<double> grid_phis(int resolution);

// Largest payoff improvement the player can reach by deviating to any grid
// direction while the opponent stays fixed; floored at 0. Throws
// std::invalid_argument when resolution < 8.
double best_response_gain(const PayoffFunction& payoff_fn, const StrategyProfile& profile,
                          Player player, int resolution);

// Grid-global equilibrium certificate for one profile.
struct NashCertificate {
    StrategyProfile profile;
    PayoffPair payoffs;
    double max_gain_a;
    double max_gain_b;
    double epsilon;
    int grid_resolution;

    bool is_epsilon_nash() const noexcept {
        return max_gain_a <= epsilon && max_gain_b <= epsilon;
    }
};

// Certifies one profile by exhaustive grid best responses for both players.
// Throws std::invalid_argument when epsilon <= 0 or resolution < 8.
NashCertificate certify_nash(const TwoQubitState& psi, const GameMatrix& game,
                             const StrategyProfile& profile, double epsilon, int resolution);

// Enumerates every profile on the coarse grid, certifies each at that same
// resolution, and returns the passing ones ordered lexicographically by
// (theta_a, phi_a, theta_b, phi_b).
std::vector<NashCertificate> scan_nash(const TwoQubitState& psi, const GameMatrix& game,
                                       int coarse_resolution, double epsilon);

// A mixed-strategy equilibrium of the classical 2x2 game.
struct MixedNash {
    double p_star;
    double q_star;
};

// Equilibria of the classical game. When payoffs do not depend on the owner's
// own action (alpha == gamma and beta == delta) every profile is an
// equilibrium; that is reported through the degenerate flag instead of a list.
struct ClassicalNashResult {
    bool degenerate = false;
    std::vector<MixedNash> equilibria;
};

// Checks the four pure corners (weak-inequality best responses) and the
// interior indifference point p* = q* = (delta - beta) / delta1 when it lies
// strictly inside (0, 1).
ClassicalNashResult classical_nash_2x2(const GameMatrix& game);

// Stationarity residuals of the maxent-i payoff form; all three vanish at an
// equilibrium candidate of that state's game.
std::array<double, 3> ne_conditions_maxent(const StrategyProfile& profile);

// Stationarity residuals of the entangled-asym payoff form (four equations).
std::array<double, 4> ne_conditions_state3(const StrategyProfile& profile);

// One member of the continuous equilibrium family of the entangled-asym state.
struct FamilySolution {
    double theta_a;
    double theta_b;
    PayoffPair payoffs;
};

// Solves the stationarity system at fixed azimuths:
//   theta_a* = arccot(-sin(phi_a) cot(phi_b)),
//   theta_b* = arccot( cot(phi_a) sin(phi_b)),
// with the arccot branch in (0, pi), and evaluates the payoffs there. Requires
// sin and cos of both azimuths to be nonzero; the excluded axis values throw
// std::invalid_argument.
FamilySolution ne_family_state3(double phi_a, double phi_b, const GameMatrix& game);

// For axis-aligned azimuths (sin(phi_a) = sin(phi_b) = 0) the stationarity
// system restricts cot(theta*) to +-1. Returns the (theta_a*, theta_b*) pairs
// from {pi/4, 3pi/4}^2 whose full residual system vanishes, in lexicographic
// order. Throws std::invalid_argument when either azimuth is off-axis.
std::vector<std::pair<double, double>> ne_axis_candidates_state3(double phi_a, double phi_b);

}  // namespace eprgame
