// Symmetric 2x2 bimatrix games and payoff containers.
#pragma once

#include <algorithm>

#include "eprgame/direction.hpp"

namespace eprgame {

// Row player's payoffs for the four dichotomic outcome pairs: alpha for
// (+1,+1), beta for (+1,-1), gamma for (-1,+1), delta for (-1,-1). The column
// player's matrix is the transpose (beta and gamma swapped).
struct GameMatrix {
    double alpha;
    double beta;
    double gamma;
    double delta;

    // alpha - beta - gamma + delta: the weight of the correlation term in the
    // entangled-state payoff forms.
    double delta1() const noexcept { return alpha - beta - gamma + delta; }
    // alpha + beta + gamma + delta.
    double delta2() const noexcept { return alpha + beta + gamma + delta; }

    double min_coefficient() const noexcept {
        return std::min(std::min(alpha, beta), std::min(gamma, delta));
    }
    double max_coefficient() const noexcept {
        return std::max(std::max(alpha, beta), std::max(gamma, delta));
    }

    // The Prisoners' Dilemma instance used throughout the analyses.
    static GameMatrix prisoners_dilemma() noexcept { return {3.0, 0.0, 5.0, 1.0}; }
};

// Joint outcome probabilities in the order (+1,+1), (+1,-1), (-1,+1), (-1,-1).
struct OutcomeProbabilities {
    double p11;
    double p12;
    double p21;
    double p22;

    double sum() const noexcept { return p11 + p12 + p21 + p22; }
};

// Expected payoffs of the two players.
struct PayoffPair {
    double pi_a;
    double pi_b;
};

// One measurement direction per player.
struct StrategyProfile {
    Direction a;
    Direction b;
};

// Selects whose payoff (and whose deviation) an operation refers to.
enum class Player { a, b };

}  // namespace eprgame
