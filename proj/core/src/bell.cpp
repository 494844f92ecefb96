#include "eprgame/bell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eprgame {

double correlator(const TwoQubitState& psi, const Direction& a, const Direction& b) {
    const OutcomeProbabilities quad = joint_probabilities(psi, a, b);
    return quad.p11 + quad.p22 - quad.p12 - quad.p21;
}

double chsh_lambda(const TwoQubitState& psi, const ChshSetting& setting) {
    const OutcomeProbabilities ab = joint_probabilities(psi, setting.a, setting.b);
    const OutcomeProbabilities ab_prime = joint_probabilities(psi, setting.a, setting.b_prime);
    const OutcomeProbabilities a_prime_b = joint_probabilities(psi, setting.a_prime, setting.b);
    const OutcomeProbabilities a_prime_b_prime =
        joint_probabilities(psi, setting.a_prime, setting.b_prime);
    // Correlated pairs for (a,b), (a,b'), (a',b); anti-correlated for (a',b').
    const double probability_sum = ab.p11 + ab.p22 + ab_prime.p11 + ab_prime.p22 +
                                   a_prime_b.p11 + a_prime_b.p22 + a_prime_b_prime.p12 +
                                   a_prime_b_prime.p21;
    return 2.0 * (probability_sum - 2.0);
}

std::string_view to_string(EmbeddingFailure failure) noexcept {
    switch (failure) {
        case EmbeddingFailure::negative_discriminant: return "negative-discriminant";
        case EmbeddingFailure::out_of_range: return "out-of-range";
        case EmbeddingFailure::inconsistent: return "inconsistent";
    }
    return "unknown";
}

EmbeddingResult classical_embedding_solve(const EmbeddingTargets& targets) {
    constexpr double range_tolerance = 1e-9;
    constexpr double consistency_tolerance = 1e-9;

    const double sum = targets.c2 + 2.0 * targets.c1;
    const double discriminant = sum * sum - 4.0 * targets.c1;
    if (discriminant < 0.0) {
        return {std::nullopt, EmbeddingFailure::negative_discriminant};
    }
    const double root = std::sqrt(discriminant);
    double p = (sum + root) / 2.0;
    double q = (sum - root) / 2.0;
    if (p > 1.0 + range_tolerance || p < -range_tolerance || q > 1.0 + range_tolerance ||
        q < -range_tolerance) {
        return {std::nullopt, EmbeddingFailure::out_of_range};
    }
    // The third product must agree with what the first two force.
    if (std::fabs(1.0 - sum + targets.c1 - targets.c3) > consistency_tolerance) {
        return {std::nullopt, EmbeddingFailure::inconsistent};
    }
    p = std::clamp(p, 0.0, 1.0);
    q = std::clamp(q, 0.0, 1.0);
    return {MixedPair{p, q}, std::nullopt};
}

EmbeddingTargets embedding_targets_from_quad(const OutcomeProbabilities& quad) {
    return {quad.p11, quad.p12 + quad.p21, quad.p22};
}

EmbeddingResult embedding_check_profile(const GameMatrix& game, const TwoQubitState& psi,
                                        const StrategyProfile& profile) {
    if (game.beta != game.gamma) {
        throw std::invalid_argument(
            "embedding_check_profile: requires a game with beta == gamma");
    }
    const OutcomeProbabilities quad = joint_probabilities(psi, profile.a, profile.b);
    return classical_embedding_solve(embedding_targets_from_quad(quad));
}

}  // namespace eprgame
