// Command-line interface: joint-probability queries, payoff surfaces,
// equilibrium reports, Bell statistics, classical-embedding checks, the EWL
// baseline, and the closed-form verification sampler.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data error.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eprgame/eprgame.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// A problem with input data (as opposed to flag usage).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- formatting ---------------------------------------------------------------

// All numbers are printed with 17 significant digits so JSON output
// round-trips doubles exactly and repeated runs are byte-identical.
std::string fmt(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string fmt(bool value) { return value ? "true" : "false"; }

// ---- parsing ------------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::string current;
    for (const char c : text) {
        if (c == separator) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::string strip(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t");
    return text.substr(begin, end - begin + 1);
}

double parse_number(const std::string& token, const char* what) {
    const std::string cleaned = strip(token);
    if (cleaned.empty()) throw std::invalid_argument(std::string("empty ") + what);
    char* end = nullptr;
    const double value = std::strtod(cleaned.c_str(), &end);
    if (end != cleaned.c_str() + cleaned.size() || !std::isfinite(value))
        throw std::invalid_argument(std::string("cannot parse ") + what + " '" + token + "'");
    return value;
}

// Angles are radians by default; a `deg` suffix selects degrees.
double parse_angle(const std::string& token) {
    std::string cleaned = strip(token);
    bool degrees = false;
    if (cleaned.size() > 3 && cleaned.substr(cleaned.size() - 3) == "deg") {
        degrees = true;
        cleaned = strip(cleaned.substr(0, cleaned.size() - 3));
    }
    const double value = parse_number(cleaned, "angle");
    return degrees ? value * kPi / 180.0 : value;
}

std::vector<double> parse_angle_list(const std::string& text, std::size_t expected,
                                     const char* what) {
    const auto parts = split(text, ',');
    if (parts.size() != expected)
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(expected) +
                                    " comma-separated angles, got " +
                                    std::to_string(parts.size()));
    std::vector<double> values;
    values.reserve(expected);
    for (const auto& part : parts) values.push_back(parse_angle(part));
    return values;
}

eprgame::GameMatrix parse_game(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4)
        throw std::invalid_argument("--game needs alpha,beta,gamma,delta");
    return {parse_number(parts[0], "game coefficient"), parse_number(parts[1], "game coefficient"),
            parse_number(parts[2], "game coefficient"), parse_number(parts[3], "game coefficient")};
}

// ---- state resolution -----------------------------------------------------------

struct LoadedState {
    eprgame::TwoQubitState state;
    bool renormalized = false;
};

// A state is either a preset name or a path to a whitespace-separated file of
// eight numbers (re, im for each amplitude over |00>,|01>,|10>,|11>). File
// states off normalization by at most 1e-6 are renormalized with a warning;
// anything further off is rejected.
LoadedState resolve_state(const std::string& name) {
    if (const auto preset = eprgame::find_state_preset(name)) return {*preset, false};

    std::ifstream input(name);
    if (!input) throw DataError("state '" + name + "' is neither a preset nor a readable file");
    std::vector<double> numbers;
    double value = 0.0;
    while (input >> value) numbers.push_back(value);
    if (!input.eof() || numbers.size() != 8)
        throw DataError("state file '" + name +
                        "' must hold exactly 8 numbers (re im per amplitude)");

    eprgame::TwoQubitAmplitudes amps;
    for (std::size_t i = 0; i < 4; ++i)
        amps[i] = eprgame::Complex(numbers[2 * i], numbers[2 * i + 1]);
    double norm2 = 0.0;
    for (const auto& amp : amps) norm2 += std::norm(amp);
    const double norm = std::sqrt(norm2);
    if (std::fabs(norm - 1.0) > 1e-6)
        throw DataError("state file '" + name + "' norm " + fmt(norm) +
                        " is too far from 1 (tolerance 1e-6)");
    const bool adjusted = std::fabs(norm - 1.0) > 1e-12;
    if (adjusted)
        std::cerr << "warning: state file renormalized (|norm-1| = " << fmt(std::fabs(norm - 1.0))
                  << ")\n";
    return {eprgame::TwoQubitState::renormalized(amps), adjusted};
}

// ---- output ---------------------------------------------------------------------

struct OutputConfig {
    std::string format = "json";
    std::string path;  // empty means stdout
};

void emit(const OutputConfig& output, const std::string& text) {
    if (output.path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream file(output.path, std::ios::binary);
    if (!file) throw DataError("cannot open output file '" + output.path + "'");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string renormalized_line(bool flag) {
    return flag ? ",\n  \"state_renormalized\": true" : "";
}

std::string certificate_json(const eprgame::NashCertificate& cert, const std::string& indent) {
    std::ostringstream out;
    out << indent << "{\n"
        << indent << "  \"profile\": {\"theta_a\": " << fmt(cert.profile.a.theta())
        << ", \"phi_a\": " << fmt(cert.profile.a.phi())
        << ", \"theta_b\": " << fmt(cert.profile.b.theta())
        << ", \"phi_b\": " << fmt(cert.profile.b.phi()) << "},\n"
        << indent << "  \"payoffs\": {\"pi_a\": " << fmt(cert.payoffs.pi_a)
        << ", \"pi_b\": " << fmt(cert.payoffs.pi_b) << "},\n"
        << indent << "  \"max_gain_a\": " << fmt(cert.max_gain_a) << ",\n"
        << indent << "  \"max_gain_b\": " << fmt(cert.max_gain_b) << ",\n"
        << indent << "  \"epsilon\": " << fmt(cert.epsilon) << ",\n"
        << indent << "  \"grid_resolution\": " << cert.grid_resolution << ",\n"
        << indent << "  \"is_nash\": " << fmt(cert.is_epsilon_nash()) << "\n"
        << indent << "}";
    return out.str();
}

constexpr const char* kCertificateCsvHeader =
    "theta_a,phi_a,theta_b,phi_b,pi_a,pi_b,max_gain_a,max_gain_b,epsilon,grid_resolution,is_nash";

std::string certificate_csv_row(const eprgame::NashCertificate& cert) {
    std::ostringstream out;
    out << fmt(cert.profile.a.theta()) << ',' << fmt(cert.profile.a.phi()) << ','
        << fmt(cert.profile.b.theta()) << ',' << fmt(cert.profile.b.phi()) << ','
        << fmt(cert.payoffs.pi_a) << ',' << fmt(cert.payoffs.pi_b) << ','
        << fmt(cert.max_gain_a) << ',' << fmt(cert.max_gain_b) << ',' << fmt(cert.epsilon)
        << ',' << cert.grid_resolution << ',' << fmt(cert.is_epsilon_nash());
    return out.str();
}

// ---- commands -------------------------------------------------------------------

int run_probs(const OutputConfig& output, const std::string& state_name,
              const std::string& alice, const std::string& bob) {
    const LoadedState loaded = resolve_state(state_name);
    const auto a = parse_angle_list(alice, 2, "--alice");
    const auto b = parse_angle_list(bob, 2, "--bob");
    const auto quad = eprgame::joint_probabilities(loaded.state, eprgame::Direction(a[0], a[1]),
                                                   eprgame::Direction(b[0], b[1]));
    std::ostringstream out;
    if (output.format == "csv") {
        out << "p11,p12,p21,p22,sum\n"
            << fmt(quad.p11) << ',' << fmt(quad.p12) << ',' << fmt(quad.p21) << ','
            << fmt(quad.p22) << ',' << fmt(quad.sum()) << '\n';
    } else {
        out << "{\n  \"p11\": " << fmt(quad.p11) << ",\n  \"p12\": " << fmt(quad.p12)
            << ",\n  \"p21\": " << fmt(quad.p21) << ",\n  \"p22\": " << fmt(quad.p22)
            << ",\n  \"sum\": " << fmt(quad.sum()) << renormalized_line(loaded.renormalized)
            << "\n}\n";
    }
    emit(output, out.str());
    return 0;
}

int run_surface(const OutputConfig& output, const std::string& mode, const std::string& vary,
                const std::string& game_spec, int resolution) {
    const eprgame::GameMatrix game = parse_game(game_spec);
    if (resolution < 2) throw std::invalid_argument("--resolution must be at least 2");

    std::vector<std::array<double, 4>> rows;
    if (mode == "classical" && vary == "pq") {
        rows.reserve(static_cast<std::size_t>(resolution + 1) *
                     static_cast<std::size_t>(resolution + 1));
        for (int i = 0; i <= resolution; ++i) {
            for (int j = 0; j <= resolution; ++j) {
                const double p = static_cast<double>(i) / resolution;
                const double q = static_cast<double>(j) / resolution;
                const auto pay = eprgame::classical_mixed(game, p, q);
                rows.push_back({p, q, pay.pi_a, pay.pi_b});
            }
        }
    } else if (mode == "quantum" && vary == "angles") {
        // Cell-centered azimuth grid; a multiple of 4 keeps every sample off
        // the excluded axes where the equilibrium family is undefined.
        if (resolution < 4 || resolution % 4 != 0)
            throw std::invalid_argument(
                "--resolution must be a positive multiple of 4 for --vary angles");
        rows.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
        for (int i = 0; i < resolution; ++i) {
            for (int j = 0; j < resolution; ++j) {
                const double fa = 2.0 * kPi * (i + 0.5) / resolution;
                const double fb = 2.0 * kPi * (j + 0.5) / resolution;
                const auto member = eprgame::ne_family_state3(fa, fb, game);
                rows.push_back({fa, fb, member.payoffs.pi_a, member.payoffs.pi_b});
            }
        }
    } else {
        throw std::invalid_argument(
            "unsupported surface: use --mode classical --vary pq or --mode quantum --vary angles");
    }

    std::ostringstream out;
    if (output.format == "csv") {
        out << "x,y,pi_a,pi_b\n";
        for (const auto& row : rows)
            out << fmt(row[0]) << ',' << fmt(row[1]) << ',' << fmt(row[2]) << ',' << fmt(row[3])
                << '\n';
    } else {
        out << "{\n  \"mode\": \"" << mode << "\",\n  \"vary\": \"" << vary
            << "\",\n  \"resolution\": " << resolution
            << ",\n  \"columns\": [\"x\", \"y\", \"pi_a\", \"pi_b\"],\n  \"rows\": [\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out << "    [" << fmt(rows[r][0]) << ", " << fmt(rows[r][1]) << ", "
                << fmt(rows[r][2]) << ", " << fmt(rows[r][3]) << ']'
                << (r + 1 < rows.size() ? ",\n" : "\n");
        }
        out << "  ]\n}\n";
    }
    emit(output, out.str());
    return 0;
}

int run_nash_scan(const OutputConfig& output, const std::string& state_name,
                  const std::string& game_spec, int resolution, double epsilon) {
    const LoadedState loaded = resolve_state(state_name);
    const eprgame::GameMatrix game = parse_game(game_spec);
    const auto certificates = eprgame::scan_nash(loaded.state, game, resolution, epsilon);

    std::ostringstream out;
    if (output.format == "csv") {
        out << kCertificateCsvHeader << '\n';
        for (const auto& cert : certificates) out << certificate_csv_row(cert) << '\n';
    } else {
        out << "{\n  \"resolution\": " << resolution << ",\n  \"epsilon\": " << fmt(epsilon)
            << ",\n  \"count\": " << certificates.size() << ",\n  \"certificates\": [";
        for (std::size_t i = 0; i < certificates.size(); ++i) {
            out << (i == 0 ? "\n" : ",\n") << certificate_json(certificates[i], "    ");
        }
        out << (certificates.empty() ? "]" : "\n  ]") << renormalized_line(loaded.renormalized)
            << "\n}\n";
    }
    emit(output, out.str());
    return 0;
}

int run_nash_certify(const OutputConfig& output, const std::string& state_name,
                     const std::string& game_spec, const std::string& profile_spec,
                     int resolution, double epsilon) {
    const LoadedState loaded = resolve_state(state_name);
    const eprgame::GameMatrix game = parse_game(game_spec);
    const auto angles = parse_angle_list(profile_spec, 4, "--profile");
    const eprgame::StrategyProfile profile{eprgame::Direction(angles[0], angles[1]),
                                           eprgame::Direction(angles[2], angles[3])};
    const auto cert = eprgame::certify_nash(loaded.state, game, profile, epsilon, resolution);

    std::ostringstream out;
    if (output.format == "csv") {
        out << kCertificateCsvHeader << '\n' << certificate_csv_row(cert) << '\n';
    } else {
        std::string body = certificate_json(cert, "");
        // Splice the optional renormalization flag before the closing brace.
        if (loaded.renormalized)
            body.insert(body.rfind("\n}"), ",\n  \"state_renormalized\": true");
        out << body << '\n';
    }
    emit(output, out.str());
    return 0;
}

int run_nash_family(const OutputConfig& output, const std::string& game_spec,
                    const std::string& phi_a, const std::string& phi_b) {
    const eprgame::GameMatrix game = parse_game(game_spec);
    const auto member =
        eprgame::ne_family_state3(parse_angle(phi_a), parse_angle(phi_b), game);

    std::ostringstream out;
    if (output.format == "csv") {
        out << "phi_a,phi_b,theta_a,theta_b,pi_a,pi_b\n"
            << fmt(parse_angle(phi_a)) << ',' << fmt(parse_angle(phi_b)) << ','
            << fmt(member.theta_a) << ',' << fmt(member.theta_b) << ','
            << fmt(member.payoffs.pi_a) << ',' << fmt(member.payoffs.pi_b) << '\n';
    } else {
        out << "{\n  \"phi_a\": " << fmt(parse_angle(phi_a)) << ",\n  \"phi_b\": "
            << fmt(parse_angle(phi_b)) << ",\n  \"theta_a\": " << fmt(member.theta_a)
            << ",\n  \"theta_b\": " << fmt(member.theta_b)
            << ",\n  \"payoffs\": {\"pi_a\": " << fmt(member.payoffs.pi_a)
            << ", \"pi_b\": " << fmt(member.payoffs.pi_b) << "}\n}\n";
    }
    emit(output, out.str());
    return 0;
}

int run_nash_classical(const OutputConfig& output, const std::string& game_spec) {
    const eprgame::GameMatrix game = parse_game(game_spec);
    const auto result = eprgame::classical_nash_2x2(game);

    std::ostringstream out;
    if (output.format == "csv") {
        out << "p_star,q_star,pi_a,pi_b\n";
        for (const auto& eq : result.equilibria) {
            const auto pay = eprgame::classical_mixed(game, eq.p_star, eq.q_star);
            out << fmt(eq.p_star) << ',' << fmt(eq.q_star) << ',' << fmt(pay.pi_a) << ','
                << fmt(pay.pi_b) << '\n';
        }
    } else {
        out << "{\n  \"degenerate\": " << fmt(result.degenerate) << ",\n  \"equilibria\": [";
        for (std::size_t i = 0; i < result.equilibria.size(); ++i) {
            const auto& eq = result.equilibria[i];
            const auto pay = eprgame::classical_mixed(game, eq.p_star, eq.q_star);
            out << (i == 0 ? "\n" : ",\n") << "    {\"p_star\": " << fmt(eq.p_star)
                << ", \"q_star\": " << fmt(eq.q_star) << ", \"pi_a\": " << fmt(pay.pi_a)
                << ", \"pi_b\": " << fmt(pay.pi_b) << '}';
        }
        out << (result.equilibria.empty() ? "]" : "\n  ]") << "\n}\n";
    }
    emit(output, out.str());
    return 0;
}

int run_chsh(const OutputConfig& output, const std::string& state_name,
             const std::string& dirs_spec) {
    const LoadedState loaded = resolve_state(state_name);
    const auto d = parse_angle_list(dirs_spec, 8, "--dirs");
    const eprgame::ChshSetting setting{
        eprgame::Direction(d[0], d[1]), eprgame::Direction(d[2], d[3]),
        eprgame::Direction(d[4], d[5]), eprgame::Direction(d[6], d[7])};
    const double lambda = eprgame::chsh_lambda(loaded.state, setting);
    // Guard band keeps round-off at the classical boundary from reporting a
    // spurious violation.
    const bool violated = std::fabs(lambda) > 2.0 + 1e-12;

    std::ostringstream out;
    if (output.format == "csv") {
        out << "lambda,violated\n" << fmt(lambda) << ',' << fmt(violated) << '\n';
    } else {
        out << "{\n  \"lambda\": " << fmt(lambda) << ",\n  \"violated\": " << fmt(violated)
            << renormalized_line(loaded.renormalized) << "\n}\n";
    }
    emit(output, out.str());
    return 0;
}

int run_embed(const OutputConfig& output, const std::string& state_name,
              const std::string& game_spec, const std::string& profile_spec) {
    const LoadedState loaded = resolve_state(state_name);
    const eprgame::GameMatrix game = parse_game(game_spec);
    const auto angles = parse_angle_list(profile_spec, 4, "--profile");
    const eprgame::StrategyProfile profile{eprgame::Direction(angles[0], angles[1]),
                                           eprgame::Direction(angles[2], angles[3])};
    const auto result = eprgame::embedding_check_profile(game, loaded.state, profile);

    std::ostringstream out;
    if (output.format == "csv") {
        if (result.present())
            out << "present,p,q\ntrue," << fmt(result.mixed->p) << ',' << fmt(result.mixed->q)
                << '\n';
        else
            out << "present,reason\nfalse," << eprgame::to_string(*result.failure) << '\n';
    } else {
        if (result.present())
            out << "{\n  \"present\": true,\n  \"p\": " << fmt(result.mixed->p)
                << ",\n  \"q\": " << fmt(result.mixed->q)
                << renormalized_line(loaded.renormalized) << "\n}\n";
        else
            out << "{\n  \"present\": false,\n  \"reason\": \""
                << eprgame::to_string(*result.failure) << '"'
                << renormalized_line(loaded.renormalized) << "\n}\n";
    }
    emit(output, out.str());
    return 0;
}

int run_ewl(const OutputConfig& output, const std::string& game_spec, const std::string& sa_spec,
            const std::string& sb_spec, const std::string& ent_spec) {
    const eprgame::GameMatrix game = parse_game(game_spec);
    const auto sa = parse_angle_list(sa_spec, 2, "--sa");
    const auto sb = parse_angle_list(sb_spec, 2, "--sb");
    const double ent = parse_angle(ent_spec);
    const auto pay =
        eprgame::ewl_payoffs(game, {sa[0], sa[1]}, {sb[0], sb[1]}, ent);

    std::ostringstream out;
    if (output.format == "csv") {
        out << "ent,pi_a,pi_b\n"
            << fmt(ent) << ',' << fmt(pay.pi_a) << ',' << fmt(pay.pi_b) << '\n';
    } else {
        out << "{\n  \"ent\": " << fmt(ent) << ",\n  \"payoffs\": {\"pi_a\": " << fmt(pay.pi_a)
            << ", \"pi_b\": " << fmt(pay.pi_b) << "}\n}\n";
    }
    emit(output, out.str());
    return 0;
}

int run_verify_appendix(const OutputConfig& output, const std::string& game_spec, int samples,
                        double tolerance, std::uint64_t seed) {
    const eprgame::GameMatrix game = parse_game(game_spec);
    if (samples < 1) throw std::invalid_argument("--samples must be at least 1");
    if (!(tolerance > 0.0)) throw std::invalid_argument("--tol must be positive");

    struct TermRecord {
        eprgame::ReductionState state;
        const char* label;
        int term;
        double max_discrepancy = 0.0;
    };
    std::vector<TermRecord> records;
    for (int term = 1; term <= 4; ++term)
        records.push_back({eprgame::ReductionState::product_uniform, "product-uniform", term});
    for (int term = 1; term <= 4; ++term)
        records.push_back({eprgame::ReductionState::entangled_asym, "entangled-asym", term});

    // Keep sampled polar angles away from the poles where the expanded forms
    // are undefined.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> theta_dist(0.05, kPi - 0.05);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
    double overall = 0.0;
    for (int sample = 0; sample < samples; ++sample) {
        const eprgame::StrategyProfile profile{
            eprgame::Direction(theta_dist(rng), phi_dist(rng)),
            eprgame::Direction(theta_dist(rng), phi_dist(rng))};
        for (auto& record : records) {
            const auto [expanded, closed] =
                eprgame::verify_term_reduction(record.state, record.term, profile, game);
            const double discrepancy = std::fabs(expanded - closed);
            record.max_discrepancy = std::max(record.max_discrepancy, discrepancy);
            overall = std::max(overall, discrepancy);
        }
    }
    const bool pass = overall <= tolerance;

    std::ostringstream out;
    if (output.format == "csv") {
        out << "state,term,max_discrepancy\n";
        for (const auto& record : records)
            out << record.label << ',' << record.term << ',' << fmt(record.max_discrepancy)
                << '\n';
    } else {
        out << "{\n  \"samples\": " << samples << ",\n  \"tolerance\": " << fmt(tolerance)
            << ",\n  \"seed\": " << seed << ",\n  \"max_discrepancy\": " << fmt(overall)
            << ",\n  \"pass\": " << fmt(pass) << ",\n  \"terms\": [\n";
        for (std::size_t i = 0; i < records.size(); ++i) {
            out << "    {\"state\": \"" << records[i].label
                << "\", \"term\": " << records[i].term
                << ", \"max_discrepancy\": " << fmt(records[i].max_discrepancy) << '}'
                << (i + 1 < records.size() ? ",\n" : "\n");
        }
        out << "  ]\n}\n";
    }
    emit(output, out.str());
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EPR-setting quantum game analyzer"};
    app.require_subcommand(1);

    OutputConfig output;
    std::string state_name = "maxent-i";
    std::string game_spec = "3,0,5,1";

    const auto add_common = [&](CLI::App* cmd, bool with_state, bool with_game) {
        if (with_state)
            cmd->add_option("--state", state_name,
                            "Preset (product-uniform, maxent-i, entangled-asym) or amplitude file");
        if (with_game)
            cmd->add_option("--game", game_spec, "Payoff coefficients alpha,beta,gamma,delta");
        cmd->add_option("--format", output.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", output.path, "Write the report to this file instead of stdout");
    };

    int rc = 0;

    // probs
    std::string alice_spec = "0,0";
    std::string bob_spec = "0,0";
    auto* probs = app.add_subcommand("probs", "Joint outcome probabilities for a profile");
    add_common(probs, true, false);
    probs->add_option("--alice", alice_spec, "Alice's direction theta,phi (radians; `deg` suffix)");
    probs->add_option("--bob", bob_spec, "Bob's direction theta,phi (radians; `deg` suffix)");
    probs->callback([&]() { rc = run_probs(output, state_name, alice_spec, bob_spec); });

    // surface
    std::string surface_mode = "classical";
    std::string surface_vary = "pq";
    int surface_resolution = 64;
    auto* surface = app.add_subcommand("surface", "Payoff surface grid (x,y,pi_a,pi_b)");
    add_common(surface, false, true);
    surface->add_option("--mode", surface_mode, "classical or quantum")
        ->check(CLI::IsMember({"classical", "quantum"}));
    surface->add_option("--vary", surface_vary, "pq (classical mixed) or angles (equilibrium family)")
        ->check(CLI::IsMember({"pq", "angles"}));
    surface->add_option("--resolution", surface_resolution, "Grid resolution");
    surface->callback([&]() {
        rc = run_surface(output, surface_mode, surface_vary, game_spec, surface_resolution);
    });

    // nash
    auto* nash = app.add_subcommand("nash", "Equilibrium reports");
    nash->require_subcommand(1);

    int scan_resolution = 16;
    double scan_epsilon = 1e-6;
    auto* scan = nash->add_subcommand("scan", "Certify every profile on a coarse grid");
    add_common(scan, true, true);
    scan->add_option("--resolution", scan_resolution, "Coarse grid resolution");
    scan->add_option("--epsilon", scan_epsilon, "Best-response tolerance");
    scan->callback(
        [&]() { rc = run_nash_scan(output, state_name, game_spec, scan_resolution, scan_epsilon); });

    std::string certify_profile = "0,0,0,0";
    int certify_resolution = 64;
    double certify_epsilon = 1e-6;
    auto* certify = nash->add_subcommand("certify", "Best-response certificate for one profile");
    add_common(certify, true, true);
    certify->add_option("--profile", certify_profile, "theta_a,phi_a,theta_b,phi_b");
    certify->add_option("--resolution", certify_resolution, "Deviation grid resolution");
    certify->add_option("--epsilon", certify_epsilon, "Best-response tolerance");
    certify->callback([&]() {
        rc = run_nash_certify(output, state_name, game_spec, certify_profile, certify_resolution,
                              certify_epsilon);
    });

    std::string phi_a_spec;
    std::string phi_b_spec;
    auto* family = nash->add_subcommand("family", "Azimuth-parameterized equilibrium family member");
    add_common(family, false, true);
    family->add_option("--phiA", phi_a_spec, "Alice's azimuth (radians; `deg` suffix)")->required();
    family->add_option("--phiB", phi_b_spec, "Bob's azimuth (radians; `deg` suffix)")->required();
    family->callback([&]() { rc = run_nash_family(output, game_spec, phi_a_spec, phi_b_spec); });

    auto* classical = nash->add_subcommand("classical", "Mixed equilibria of the 2x2 game");
    add_common(classical, false, true);
    classical->callback([&]() { rc = run_nash_classical(output, game_spec); });

    // chsh
    std::string dirs_spec;
    auto* chsh = app.add_subcommand("chsh", "Bell statistic for four measurement directions");
    add_common(chsh, true, false);
    chsh->add_option("--dirs", dirs_spec,
                     "Eight angles: theta_a,phi_a,theta_a',phi_a',theta_b,phi_b,theta_b',phi_b'")
        ->required();
    chsh->callback([&]() { rc = run_chsh(output, state_name, dirs_spec); });

    // embed
    std::string embed_profile = "0,0,0,0";
    auto* embed = app.add_subcommand("embed", "Classical embedding check for a profile");
    add_common(embed, true, true);
    embed->add_option("--profile", embed_profile, "theta_a,phi_a,theta_b,phi_b");
    embed->callback([&]() { rc = run_embed(output, state_name, game_spec, embed_profile); });

    // ewl
    std::string sa_spec = "0,0";
    std::string sb_spec = "0,0";
    std::string ent_spec = "1.5707963267948966";
    auto* ewl = app.add_subcommand("ewl", "Payoffs under the unitary-strategy baseline protocol");
    add_common(ewl, false, true);
    ewl->add_option("--sa", sa_spec, "Alice's strategy theta,phi (theta in [0,pi], phi in [0,pi/2])");
    ewl->add_option("--sb", sb_spec, "Bob's strategy theta,phi");
    ewl->add_option("--ent", ent_spec, "Entangling parameter in [0,pi/2]");
    ewl->callback([&]() { rc = run_ewl(output, game_spec, sa_spec, sb_spec, ent_spec); });

    // verify
    auto* verify = app.add_subcommand("verify", "Numerical verification suites");
    verify->require_subcommand(1);
    int verify_samples = 1000;
    double verify_tol = 1e-9;
    std::uint64_t verify_seed = 12345;
    auto* appendix = verify->add_subcommand(
        "appendix", "Check expanded payoff terms against their closed forms on random profiles");
    add_common(appendix, false, true);
    appendix->add_option("--samples", verify_samples, "Number of random profiles");
    appendix->add_option("--tol", verify_tol, "Maximum allowed discrepancy");
    appendix->add_option("--seed", verify_seed, "Random seed");
    appendix->callback(
        [&]() { rc = run_verify_appendix(output, game_spec, verify_samples, verify_tol, verify_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
