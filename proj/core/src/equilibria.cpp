#include "eprgame/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eprgame {

namespace {

constexpr double pi = std::numbers::pi;

void require_resolution(int resolution, int minimum, const char* where) {
    if (resolution < minimum) {
        throw std::invalid_argument(std::string(where) + ": resolution too small");
    }
}

// arccot with the branch in (0, pi), matching the theta domain.
double arccot(double value) { return std::atan2(1.0, value); }

// Evaluates the stationarity residuals shared by ne_conditions_state3 and the
// axis-candidate enumeration.
std::array<double, 4> state3_residuals(double theta_a, double phi_a, double theta_b,
                                       double phi_b) {
    const double sin_ta = std::sin(theta_a), cos_ta = std::cos(theta_a);
    const double sin_tb = std::sin(theta_b), cos_tb = std::cos(theta_b);
    const double sin_fa = std::sin(phi_a), cos_fa = std::cos(phi_a);
    const double sin_fb = std::sin(phi_b), cos_fb = std::cos(phi_b);
    return {
        sin_tb * (cos_ta * sin_fa * sin_fb + sin_ta * cos_fb) + cos_ta * cos_tb * cos_fa,
        sin_ta * (cos_tb * sin_fa * sin_fb - sin_tb * cos_fa) - cos_ta * cos_tb * cos_fb,
        sin_ta * (sin_tb * cos_fa * sin_fb - cos_tb * sin_fa),
        sin_tb * (sin_ta * sin_fa * cos_fb + cos_ta * sin_fb),
    };
}

}  // namespace

PayoffFunction make_payoff_function(const TwoQubitState& psi, const GameMatrix& game) {
    return [psi, game](const StrategyProfile& profile) {
        return quantum_payoffs(psi, game, profile);
    };
}

std::vector<double> grid_thetas(int resolution) {
    require_resolution(resolution, 1, "grid_thetas");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(resolution) + 1);
    for (int i = 0; i <= resolution; ++i) {
        values.push_back(static_cast<double>(i) * pi / resolution);
    }
    return values;
}

std::vector<double> grid_phis(int resolution) {
    require_resolution(resolution, 1, "grid_phis");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(resolution));
    for (int j = 0; j < resolution; ++j) {
        values.push_back(2.0 * pi * static_cast<double>(j) / resolution);
    }
    return values;
}

double best_response_gain(const PayoffFunction& payoff_fn, const StrategyProfile& profile,
                          Player player, int resolution) {
    require_resolution(resolution, 8, "best_response_gain");
    const double base = player == Player::a ? payoff_fn(profile).pi_a : payoff_fn(profile).pi_b;
    double best = base;
    for (const double theta : grid_thetas(resolution)) {
        for (const double phi : grid_phis(resolution)) {
            const Direction deviation(theta, phi);
            const StrategyProfile candidate =
                player == Player::a ? StrategyProfile{deviation, profile.b}
                                    : StrategyProfile{profile.a, deviation};
            const PayoffPair payoffs = payoff_fn(candidate);
            best = std::max(best, player == Player::a ? payoffs.pi_a : payoffs.pi_b);
        }
    }
    return std::max(0.0, best - base);
}

NashCertificate certify_nash(const TwoQubitState& psi, const GameMatrix& game,
                             const StrategyProfile& profile, double epsilon, int resolution) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("certify_nash: epsilon must be positive");
    }
    const PayoffFunction payoff_fn = make_payoff_function(psi, game);
    const PayoffPair payoffs = payoff_fn(profile);
    return {profile,
            payoffs,
            best_response_gain(payoff_fn, profile, Player::a, resolution),
            best_response_gain(payoff_fn, profile, Player::b, resolution),
            epsilon,
            resolution};
}

std::vector<NashCertificate> scan_nash(const TwoQubitState& psi, const GameMatrix& game,
                                       int coarse_resolution, double epsilon) {
    require_resolution(coarse_resolution, 8, "scan_nash");
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("scan_nash: epsilon must be positive");
    }

    // Grid directions in lexicographic (theta, phi) order.
    std::vector<Direction> directions;
    for (const double theta : grid_thetas(coarse_resolution)) {
        for (const double phi : grid_phis(coarse_resolution)) {
            directions.emplace_back(theta, phi);
        }
    }
    const std::size_t count = directions.size();

    // Every profile is certified against the same grid it lives on, so all the
    // pairwise payoffs can be shared: payoffs[ia * count + ib] is the pair for
    // (directions[ia], directions[ib]).
    std::vector<PayoffPair> payoffs(count * count);
    for (std::size_t ia = 0; ia < count; ++ia) {
        for (std::size_t ib = 0; ib < count; ++ib) {
            payoffs[ia * count + ib] =
                quantum_payoffs(psi, game, {directions[ia], directions[ib]});
        }
    }

    // Best response values: for a fixed opponent direction, the deviating
    // player's maximum over the whole grid.
    std::vector<double> best_a(count, -std::numeric_limits<double>::infinity());
    std::vector<double> best_b(count, -std::numeric_limits<double>::infinity());
    for (std::size_t ia = 0; ia < count; ++ia) {
        for (std::size_t ib = 0; ib < count; ++ib) {
            const PayoffPair& pair = payoffs[ia * count + ib];
            best_a[ib] = std::max(best_a[ib], pair.pi_a);
            best_b[ia] = std::max(best_b[ia], pair.pi_b);
        }
    }

    std::vector<NashCertificate> passing;
    for (std::size_t ia = 0; ia < count; ++ia) {
        for (std::size_t ib = 0; ib < count; ++ib) {
            const PayoffPair& pair = payoffs[ia * count + ib];
            const double gain_a = std::max(0.0, best_a[ib] - pair.pi_a);
            const double gain_b = std::max(0.0, best_b[ia] - pair.pi_b);
            if (gain_a <= epsilon && gain_b <= epsilon) {
                passing.push_back({{directions[ia], directions[ib]},
                                   pair,
                                   gain_a,
                                   gain_b,
                                   epsilon,
                                   coarse_resolution});
            }
        }
    }
    return passing;
}

ClassicalNashResult classical_nash_2x2(const GameMatrix& game) {
    ClassicalNashResult result;
    if (game.alpha == game.gamma && game.beta == game.delta) {
        // Payoffs do not depend on the owner's own action: every profile is an
        // equilibrium.
        result.degenerate = true;
        return result;
    }

    // Advantage of the first action over the second against an opponent who
    // plays their first action with probability q; the symmetric game gives
    // both players the same advantage function.
    const auto first_action_advantage = [&game](double q) {
        return (game.alpha - game.gamma) * q + (game.beta - game.delta) * (1.0 - q);
    };
    const auto is_best = [&first_action_advantage](double own, double opponent) {
        const double advantage = first_action_advantage(opponent);
        return own == 1.0 ? advantage >= 0.0 : advantage <= 0.0;
    };
    for (const double p : {0.0, 1.0}) {
        for (const double q : {0.0, 1.0}) {
            if (is_best(p, q) && is_best(q, p)) result.equilibria.push_back({p, q});
        }
    }

    const double d1 = game.delta1();
    if (d1 != 0.0) {
        const double interior = (game.delta - game.beta) / d1;
        if (interior > 0.0 && interior < 1.0) result.equilibria.push_back({interior, interior});
    }
    return result;
}

std::array<double, 3> ne_conditions_maxent(const StrategyProfile& profile) {
    const double sin_ta = std::sin(profile.a.theta()), cos_ta = std::cos(profile.a.theta());
    const double sin_tb = std::sin(profile.b.theta()), cos_tb = std::cos(profile.b.theta());
    const double sum = profile.a.phi() + profile.b.phi();
    const double sin_sum = std::sin(sum), cos_sum = std::cos(sum);
    return {
        cos_ta * sin_tb * sin_sum - sin_ta * cos_tb,
        sin_ta * cos_tb * sin_sum - cos_ta * sin_tb,
        sin_ta * sin_tb * cos_sum,
    };
}

std::array<double, 4> ne_conditions_state3(const StrategyProfile& profile) {
    return state3_residuals(profile.a.theta(), profile.a.phi(), profile.b.theta(),
                            profile.b.phi());
}

FamilySolution ne_family_state3(double phi_a, double phi_b, const GameMatrix& game) {
    const double sin_fa = std::sin(phi_a), cos_fa = std::cos(phi_a);
    const double sin_fb = std::sin(phi_b), cos_fb = std::cos(phi_b);
    if (std::fabs(sin_fa) < 1e-12 || std::fabs(sin_fb) < 1e-12 || std::fabs(cos_fa) < 1e-12 ||
        std::fabs(cos_fb) < 1e-12) {
        throw std::invalid_argument(
            "ne_family_state3: azimuths on the coordinate axes fall outside the family");
    }
    const double theta_a = arccot(-sin_fa * cos_fb / sin_fb);
    const double theta_b = arccot(cos_fa / sin_fa * sin_fb);
    const StrategyProfile profile{Direction(theta_a, phi_a), Direction(theta_b, phi_b)};
    return {theta_a, theta_b, closed_payoff_state3(game, profile)};
}

std::vector<std::pair<double, double>> ne_axis_candidates_state3(double phi_a, double phi_b) {
    if (std::fabs(std::sin(phi_a)) > 1e-12 || std::fabs(std::sin(phi_b)) > 1e-12) {
        throw std::invalid_argument(
            "ne_axis_candidates_state3: azimuths must lie on the coordinate axes");
    }
    std::vector<std::pair<double, double>> matches;
    for (const double theta_a : {pi / 4.0, 3.0 * pi / 4.0}) {
        for (const double theta_b : {pi / 4.0, 3.0 * pi / 4.0}) {
            const std::array<double, 4> residuals =
                state3_residuals(theta_a, phi_a, theta_b, phi_b);
            const double worst = std::max(
                std::max(std::fabs(residuals[0]), std::fabs(residuals[1])),
                std::max(std::fabs(residuals[2]), std::fabs(residuals[3])));
            if (worst < 1e-10) matches.emplace_back(theta_a, theta_b);
        }
    }
    return matches;
}

}  // namespace eprgame
