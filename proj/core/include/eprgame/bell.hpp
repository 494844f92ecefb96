// Outcome correlators, the CHSH statistic, and the classical-embedding solver.
#pragma once

#include <optional>
#include <string_view>

#include "eprgame/payoffs.hpp"

namespace eprgame {

// Measurement directions for a CHSH run: two settings per party.
struct ChshSetting {
    Direction a;
    Direction a_prime;
    Direction b;
    Direction b_prime;
};

// Outcome correlator E(a, b) = p11 + p22 - p12 - p21.
double correlator(const TwoQubitState& psi, const Direction& a, const Direction& b);

// CHSH statistic assembled from the eight joint probabilities,
//   2 [ Pr(a+, b+) + Pr(a-, b-) + Pr(a+, b'+) + Pr(a-, b'-)
//     + Pr(a'+, b+) + Pr(a'-, b-) + Pr(a'+, b'-) + Pr(a'-, b'+) - 2 ],
// where the primed-primed pair enters anti-correlated. Algebraically equal to
// E(a,b) + E(a,b') + E(a',b) - E(a',b'). |lambda| <= 2 for any product state;
// entangled states reach up to 2*sqrt(2).
double chsh_lambda(const TwoQubitState& psi, const ChshSetting& setting);

// Products a classical mixed pair (p, q) must reproduce:
// c1 = p q, c2 = p + q - 2 p q, c3 = (1 - p)(1 - q).
struct EmbeddingTargets {
    double c1;
    double c2;
    double c3;
};

// Why no classical pair exists for a target triple.
enum class EmbeddingFailure { negative_discriminant, out_of_range, inconsistent };

// Stable token for a failure: "negative-discriminant", "out-of-range",
// "inconsistent".
std::string_view to_string(EmbeddingFailure failure) noexcept;

struct MixedPair {
    double p;
    double q;
};

// Result of an embedding solve: a mixed pair with p >= q, or a failure reason.
struct EmbeddingResult {
    std::optional<MixedPair> mixed;
    std::optional<EmbeddingFailure> failure;

    bool present() const noexcept { return mixed.has_value(); }
};

// Solves p + q = c2 + 2 c1, p q = c1. Fails with negative_discriminant when
// (p+q)^2 < 4 pq, with out_of_range when a root leaves [0, 1] by more than
// 1e-9 (roots inside the tolerance band are clamped), and with inconsistent
// when (1-p)(1-q) misses c3 by more than 1e-9.
EmbeddingResult classical_embedding_solve(const EmbeddingTargets& targets);

// Embedding targets read off a measured probability quad:
// (p11, p12 + p21, p22).
EmbeddingTargets embedding_targets_from_quad(const OutcomeProbabilities& quad);

// Tries to reproduce the profile's quantum outcome statistics with a classical
// mixed pair. The game must satisfy beta == gamma (otherwise the two players'
// payoffs cannot both match any classical pair); other games throw
// std::invalid_argument.
EmbeddingResult embedding_check_profile(const GameMatrix& game, const TwoQubitState& psi,
                                        const StrategyProfile& profile);

}  // namespace eprgame
