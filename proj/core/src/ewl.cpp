#include "eprgame/ewl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eprgame {

namespace {

constexpr double pi = std::numbers::pi;

void require_ent(double ent) {
    if (!(ent >= 0.0 && ent <= pi / 2.0)) {
        throw std::invalid_argument("ewl: entanglement parameter must lie in [0, pi/2]");
    }
}

// Applies (U_A (x) U_B) to a two-qubit amplitude vector.
TwoQubitAmplitudes apply_local(const Matrix2& ua, const Matrix2& ub,
                               const TwoQubitAmplitudes& amps) {
    TwoQubitAmplitudes out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex value(0.0, 0.0);
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    value += ua[i][k] * ub[j][l] * amps[2 * k + l];
                }
            }
            out[2 * i + j] = value;
        }
    }
    return out;
}

// Applies the tensor square (D (x) D) of the second-strategy unitary
// D = U(pi, 0) = [[0, 1], [-1, 0]]: it maps |kl> to (-1)^(2-k-l) |(1-k)(1-l)>.
TwoQubitAmplitudes apply_dd(const TwoQubitAmplitudes& amps) {
    return {amps[3], -amps[2], -amps[1], amps[0]};
}

// J = cos(ent/2) I + i sin(ent/2) (D (x) D); the conjugate flag applies J^dag.
TwoQubitAmplitudes apply_entangler(const TwoQubitAmplitudes& amps, double ent,
                                   bool conjugate) {
    const double c = std::cos(ent / 2.0);
    const Complex is = Complex(0.0, conjugate ? -1.0 : 1.0) * std::sin(ent / 2.0);
    const TwoQubitAmplitudes flipped = apply_dd(amps);
    TwoQubitAmplitudes out{};
    for (std::size_t i = 0; i < amps.size(); ++i) out[i] = c * amps[i] + is * flipped[i];
    return out;
}

}  // namespace

Matrix2 ewl_strategy_unitary(const EwlStrategy& s) {
    if (!(s.theta >= 0.0 && s.theta <= pi)) {
        throw std::invalid_argument("ewl: strategy theta must lie in [0, pi]");
    }
    if (!(s.phi >= 0.0 && s.phi <= pi / 2.0)) {
        throw std::invalid_argument("ewl: strategy phi must lie in [0, pi/2]");
    }
    const double c = std::cos(s.theta / 2.0);
    const double sn = std::sin(s.theta / 2.0);
    const Complex phase = std::polar(1.0, s.phi);
    return {{{phase * c, Complex(sn, 0.0)}, {Complex(-sn, 0.0), std::conj(phase) * c}}};
}

TwoQubitState ewl_entangled_initial(double ent) {
    require_ent(ent);
    const TwoQubitAmplitudes start{Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
                                   Complex(0.0, 0.0)};
    return TwoQubitState(apply_entangler(start, ent, false));
}

TwoQubitState ewl_final_state(const EwlStrategy& sa, const EwlStrategy& sb, double ent) {
    require_ent(ent);
    const Matrix2 ua = ewl_strategy_unitary(sa);
    const Matrix2 ub = ewl_strategy_unitary(sb);
    const TwoQubitAmplitudes start{Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
                                   Complex(0.0, 0.0)};
    const TwoQubitAmplitudes entangled = apply_entangler(start, ent, false);
    const TwoQubitAmplitudes acted = apply_local(ua, ub, entangled);
    return TwoQubitState(apply_entangler(acted, ent, true));
}

PayoffPair ewl_payoffs(const GameMatrix& game, const EwlStrategy& sa, const EwlStrategy& sb,
                       double ent) {
    const TwoQubitState final_state = ewl_final_state(sa, sb, ent);
    const TwoQubitAmplitudes& amps = final_state.amplitudes();
    const OutcomeProbabilities quad{std::norm(amps[0]), std::norm(amps[1]),
                                    std::norm(amps[2]), std::norm(amps[3])};
    return payoff_pair(game, quad);
}

double ewl_best_response_gain(const GameMatrix& game, const EwlStrategy& sa,
                              const EwlStrategy& sb, double ent, Player player,
                              int resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("ewl_best_response_gain: resolution must be at least 2");
    }
    const PayoffPair at_profile = ewl_payoffs(game, sa, sb, ent);
    const double base = player == Player::a ? at_profile.pi_a : at_profile.pi_b;
    double best = base;
    for (int i = 0; i < resolution; ++i) {
        const double theta = pi * static_cast<double>(i) / (resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            const double phi = (pi / 2.0) * static_cast<double>(j) / (resolution - 1);
            const EwlStrategy deviation{theta, phi};
            const PayoffPair payoffs = player == Player::a
                                           ? ewl_payoffs(game, deviation, sb, ent)
                                           : ewl_payoffs(game, sa, deviation, ent);
            best = std::max(best, player == Player::a ? payoffs.pi_a : payoffs.pi_b);
        }
    }
    return std::max(0.0, best - base);
}

}  // namespace eprgame
