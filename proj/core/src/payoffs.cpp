#include "eprgame/payoffs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eprgame {

namespace {

constexpr double half_sqrt2 = 0.70710678118654752440;

TwoQubitState make_product_uniform() {
    return TwoQubitState({Complex(0.5, 0.0), Complex(0.5, 0.0), Complex(0.5, 0.0),
                          Complex(0.5, 0.0)});
}

TwoQubitState make_maxent_i() {
    return TwoQubitState({Complex(half_sqrt2, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
                          Complex(0.0, half_sqrt2)});
}

TwoQubitState make_entangled_asym() {
    return TwoQubitState({Complex(0.5, 0.0), Complex(0.5, 0.0), Complex(-0.5, 0.0),
                          Complex(0.5, 0.0)});
}

void require_probability(double value, const char* label) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument(std::string(label) + " must lie in [0, 1]");
    }
}

// Trigonometric values of one profile, shared by the closed forms.
struct ProfileTrig {
    double sin_ta, cos_ta, sin_tb, cos_tb;
    double sin_fa, cos_fa, sin_fb, cos_fb;
    double sin_sum, cos_sum;  // of phi_a + phi_b

    explicit ProfileTrig(const StrategyProfile& profile)
        : sin_ta(std::sin(profile.a.theta())),
          cos_ta(std::cos(profile.a.theta())),
          sin_tb(std::sin(profile.b.theta())),
          cos_tb(std::cos(profile.b.theta())),
          sin_fa(std::sin(profile.a.phi())),
          cos_fa(std::cos(profile.a.phi())),
          sin_fb(std::sin(profile.b.phi())),
          cos_fb(std::cos(profile.b.phi())),
          sin_sum(std::sin(profile.a.phi() + profile.b.phi())),
          cos_sum(std::cos(profile.a.phi() + profile.b.phi())) {}
};

// Correlation bracket of the entangled-asym closed form.
double asym_bracket(const ProfileTrig& t) {
    return t.sin_ta * t.sin_tb * t.sin_fa * t.sin_fb + t.sin_ta * t.cos_tb * t.cos_fa -
           t.cos_ta * t.sin_tb * t.cos_fb;
}

double term_coefficient(const GameMatrix& game, int term_index) {
    switch (term_index) {
        case 1: return game.alpha;
        case 2: return game.beta;
        case 3: return game.gamma;
        case 4: return game.delta;
        default: throw std::invalid_argument("verify_term_reduction: term index must be 1..4");
    }
}

}  // namespace

const std::array<StatePreset, 3>& state_presets() {
    static const std::array<StatePreset, 3> presets = {
        StatePreset{"product-uniform", make_product_uniform()},
        StatePreset{"maxent-i", make_maxent_i()},
        StatePreset{"entangled-asym", make_entangled_asym()},
    };
    return presets;
}

std::optional<TwoQubitState> find_state_preset(std::string_view name) {
    for (const StatePreset& preset : state_presets()) {
        if (preset.name == name) return preset.state;
    }
    return std::nullopt;
}

PayoffPair classical_mixed(const GameMatrix& game, double p, double q) {
    require_probability(p, "classical_mixed: p");
    require_probability(q, "classical_mixed: q");
    const double w11 = p * q;
    const double w12 = p * (1.0 - q);
    const double w21 = (1.0 - p) * q;
    const double w22 = (1.0 - p) * (1.0 - q);
    return {game.alpha * w11 + game.beta * w12 + game.gamma * w21 + game.delta * w22,
            game.alpha * w11 + game.gamma * w12 + game.beta * w21 + game.delta * w22};
}

OutcomeProbabilities joint_probabilities(const TwoQubitState& psi, const Direction& a,
                                         const Direction& b) {
    const QubitState a_plus = spin_eigenstate(a, 1);
    const QubitState a_minus = spin_eigenstate(a, -1);
    const QubitState b_plus = spin_eigenstate(b, 1);
    const QubitState b_minus = spin_eigenstate(b, -1);
    const TwoQubitAmplitudes& amps = psi.amplitudes();

    const auto probability = [&amps](const QubitState& ea, const QubitState& eb) {
        const Complex amplitude =
            std::conj(ea.amp0) * (std::conj(eb.amp0) * amps[0] + std::conj(eb.amp1) * amps[1]) +
            std::conj(ea.amp1) * (std::conj(eb.amp0) * amps[2] + std::conj(eb.amp1) * amps[3]);
        return std::norm(amplitude);
    };

    return {probability(a_plus, b_plus), probability(a_plus, b_minus),
            probability(a_minus, b_plus), probability(a_minus, b_minus)};
}

PayoffPair payoff_pair(const GameMatrix& game, const OutcomeProbabilities& probs) {
    return {game.alpha * probs.p11 + game.beta * probs.p12 + game.gamma * probs.p21 +
                game.delta * probs.p22,
            game.alpha * probs.p11 + game.gamma * probs.p12 + game.beta * probs.p21 +
                game.delta * probs.p22};
}

PayoffPair quantum_payoffs(const TwoQubitState& psi, const GameMatrix& game,
                           const StrategyProfile& profile) {
    return payoff_pair(game, joint_probabilities(psi, profile.a, profile.b));
}

std::pair<double, double> product_state_mixed_probabilities(const StrategyProfile& profile) {
    return {(1.0 + profile.a.x()) / 2.0, (1.0 + profile.b.x()) / 2.0};
}

PayoffPair closed_payoff_product(const GameMatrix& game, const StrategyProfile& profile) {
    // x and y are sin(theta) cos(phi) for the two players.
    const double x = profile.a.x();
    const double y = profile.b.x();
    const double w11 = (1.0 + x) * (1.0 + y) / 4.0;
    const double w12 = (1.0 + x) * (1.0 - y) / 4.0;
    const double w21 = (1.0 - x) * (1.0 + y) / 4.0;
    const double w22 = (1.0 - x) * (1.0 - y) / 4.0;
    return {game.alpha * w11 + game.beta * w12 + game.gamma * w21 + game.delta * w22,
            game.alpha * w11 + game.gamma * w12 + game.beta * w21 + game.delta * w22};
}

PayoffPair closed_payoff_maxent(const GameMatrix& game, const StrategyProfile& profile) {
    const ProfileTrig t(profile);
    const double correlation = t.sin_ta * t.sin_tb * t.sin_sum + t.cos_ta * t.cos_tb;
    const double value = (game.delta2() + game.delta1() * correlation) / 4.0;
    return {value, value};
}

PayoffPair closed_payoff_state3(const GameMatrix& game, const StrategyProfile& profile) {
    const ProfileTrig t(profile);
    const double value = (game.delta2() - game.delta1() * asym_bracket(t)) / 4.0;
    return {value, value};
}

std::pair<double, double> embedding_trajectory_residual(const StrategyProfile& profile,
                                                        double p, double q) {
    require_probability(p, "embedding_trajectory_residual: p");
    require_probability(q, "embedding_trajectory_residual: q");
    return {profile.a.x() - (2.0 * p - 1.0), profile.b.x() - (2.0 * q - 1.0)};
}

std::pair<double, double> verify_term_reduction(ReductionState state, int term_index,
                                                const StrategyProfile& profile,
                                                const GameMatrix& game) {
    const double coefficient = term_coefficient(game, term_index);
    // Sign of the (1 + e * cos(theta)) factor per player for this term.
    const double ea = (term_index == 1 || term_index == 2) ? 1.0 : -1.0;
    const double eb = (term_index == 1 || term_index == 3) ? 1.0 : -1.0;

    const ProfileTrig t(profile);
    const double denom_a = 1.0 + ea * t.cos_ta;
    const double denom_b = 1.0 + eb * t.cos_tb;
    if (std::fabs(1.0 - std::fabs(t.cos_ta)) < 1e-12 ||
        std::fabs(1.0 - std::fabs(t.cos_tb)) < 1e-12) {
        throw std::invalid_argument(
            "verify_term_reduction: expanded form is undefined at theta in {0, pi}");
    }

    double real_part = 0.0;
    double imag_part = 0.0;
    double closed = 0.0;
    if (state == ReductionState::product_uniform) {
        real_part = denom_a * denom_b + eb * denom_a * t.sin_tb * t.cos_fb +
                    ea * denom_b * t.sin_ta * t.cos_fa +
                    ea * eb * t.sin_ta * t.sin_tb * t.cos_sum;
        imag_part = denom_a * t.sin_tb * t.sin_fb + ea * eb * denom_b * t.sin_ta * t.sin_fa +
                    ea * t.sin_ta * t.sin_tb * t.sin_sum;
        closed = coefficient / 4.0 * (1.0 + ea * t.sin_ta * t.cos_fa) *
                 (1.0 + eb * t.sin_tb * t.cos_fb);
    } else {
        real_part = denom_a * denom_b + eb * denom_a * t.sin_tb * t.cos_fb -
                    ea * denom_b * t.sin_ta * t.cos_fa +
                    ea * eb * t.sin_ta * t.sin_tb * t.cos_sum;
        imag_part = denom_a * t.sin_tb * t.sin_fb - ea * eb * denom_b * t.sin_ta * t.sin_fa +
                    ea * t.sin_ta * t.sin_tb * t.sin_sum;
        closed = coefficient / 4.0 * (1.0 - ea * eb * asym_bracket(t));
    }
    const double expanded = coefficient * (real_part * real_part + imag_part * imag_part) /
                            (16.0 * denom_a * denom_b);
    return {expanded, closed};
}

}  // namespace eprgame
