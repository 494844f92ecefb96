// End-to-end tests for the command-line tool: flag handling, output shapes,
// exit codes, state-file handling, and byte-level determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with the given argument string, capturing stdout (stderr is
// discarded) and the exit code.
RunResult run(const std::string& args) {
    const std::string command = std::string(EPRGAME_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t count = 0;
    while ((count = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0)
        result.out.append(buffer, count);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

// Pulls the first numeric value stored under `"key":` out of a JSON report.
double json_number(const std::string& text, const std::string& key) {
    const auto pos = text.find('"' + key + "\":");
    REQUIRE_MESSAGE(pos != std::string::npos, "missing key " << key << " in: " << text);
    return std::strtod(text.c_str() + pos + key.size() + 3, nullptr);
}

bool json_bool(const std::string& text, const std::string& key) {
    const auto pos = text.find('"' + key + "\":");
    REQUIRE_MESSAGE(pos != std::string::npos, "missing key " << key << " in: " << text);
    const auto value_pos = text.find_first_not_of(" ", pos + key.size() + 3);
    return text[value_pos] == 't';
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    REQUIRE(file.good());
    file << content;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("probs reports the outcome distribution") {
    const auto result = run("probs --state maxent-i --alice 0,0 --bob 0,0");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "p11") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(json_number(result.out, "p22") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(json_number(result.out, "p12") == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(json_number(result.out, "p21") == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(json_number(result.out, "sum") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(contains(result.out, "state_renormalized"));
}

TEST_CASE("probs concentrates on (+1,+1) for aligned product measurements") {
    const auto result = run("probs --state product-uniform --alice 1.5707963,0 --bob 1.5707963,0");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "p11") == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("probs accepts degree-suffixed angles") {
    const auto result = run("probs --state product-uniform --alice 90deg,0 --bob 90deg,0");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "p11") == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("probs csv layout") {
    const auto result = run("probs --state maxent-i --alice 0,0 --bob 0,0 --format csv");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "p11,p12,p21,p22,sum");
    CHECK(contains(lines[1], "0.5"));
}

TEST_CASE("state files are read, renormalized within tolerance, and rejected beyond it") {
    const std::string good = "/tmp/eprgame_state_good.txt";
    const std::string slightly_off = "/tmp/eprgame_state_off.txt";
    const std::string bad = "/tmp/eprgame_state_bad.txt";
    write_file(good, "0.7071067811865476 0 0 0 0 0 0 0.7071067811865476\n");
    write_file(slightly_off, "0.70710713474 0 0 0 0 0 0 0.70710713474\n");
    write_file(bad, "0.78 0 0 0 0 0 0 0.78\n");

    const auto from_file = run("probs --state " + good + " --alice 0,0 --bob 0,0");
    CHECK(from_file.exit_code == 0);
    CHECK(json_number(from_file.out, "p11") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(json_number(from_file.out, "p22") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK_FALSE(contains(from_file.out, "state_renormalized"));

    const auto renormalized = run("probs --state " + slightly_off + " --alice 0,0 --bob 0,0");
    CHECK(renormalized.exit_code == 0);
    CHECK(json_bool(renormalized.out, "state_renormalized"));
    CHECK(json_number(renormalized.out, "p11") == doctest::Approx(0.5).epsilon(1e-9));

    const auto rejected = run("probs --state " + bad + " --alice 0,0 --bob 0,0");
    CHECK(rejected.exit_code == 3);
}

TEST_CASE("malformed state files exit with the data-error code") {
    const std::string garbage = "/tmp/eprgame_state_garbage.txt";
    const std::string short_file = "/tmp/eprgame_state_short.txt";
    write_file(garbage, "not numbers at all\n");
    write_file(short_file, "1 0 0 0 0 0 0\n");
    CHECK(run("probs --state " + garbage + " --alice 0,0 --bob 0,0").exit_code == 3);
    CHECK(run("probs --state " + short_file + " --alice 0,0 --bob 0,0").exit_code == 3);
    CHECK(run("probs --state /tmp/eprgame_no_such_file --alice 0,0 --bob 0,0").exit_code == 3);
}

TEST_CASE("surface classical grid emits the documented csv layout") {
    const auto result =
        run("surface --mode classical --vary pq --game 3,0,5,1 --resolution 2 --format csv");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 10);  // header + 3x3 grid
    CHECK(lines[0] == "x,y,pi_a,pi_b");
    CHECK(lines[1] == "0,0,1,1");
    CHECK(lines.back() == "1,1,3,3");
}

TEST_CASE("surface quantum grid stays on the two family payoff plateaus") {
    const auto result =
        run("surface --mode quantum --vary angles --game 3,0,5,1 --resolution 4 --format csv");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 17);  // header + 4x4 grid
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = lines[i];
        const auto last_comma = fields.rfind(',');
        const double pi_b = std::strtod(fields.c_str() + last_comma + 1, nullptr);
        const bool on_plateau = std::fabs(pi_b - 2.0) < 1e-9 || std::fabs(pi_b - 2.5) < 1e-9;
        CHECK(on_plateau);
    }
}

TEST_CASE("surface rejects invalid mode/vary/resolution combinations") {
    CHECK(run("surface --mode classical --vary angles").exit_code == 2);
    CHECK(run("surface --mode quantum --vary pq").exit_code == 2);
    CHECK(run("surface --mode quantum --vary angles --resolution 6").exit_code == 2);
    CHECK(run("surface --mode classical --vary pq --resolution 1").exit_code == 2);
    CHECK(run("surface --mode sideways --vary pq").exit_code == 2);
}

TEST_CASE("nash classical reports the dominant-strategy equilibrium") {
    const auto result = run("nash classical --game 3,0,5,1");
    CHECK(result.exit_code == 0);
    CHECK_FALSE(json_bool(result.out, "degenerate"));
    CHECK(json_number(result.out, "p_star") == doctest::Approx(0.0).scale(1).epsilon(1e-15));
    CHECK(json_number(result.out, "q_star") == doctest::Approx(0.0).scale(1).epsilon(1e-15));
    CHECK(json_number(result.out, "pi_a") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(json_number(result.out, "pi_b") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nash certify reports the mirror-defection profile as stable") {
    const auto result = run(
        "nash certify --state product-uniform --game 3,0,5,1 "
        "--profile 1.5707963267948966,3.1415926535897931,1.5707963267948966,3.1415926535897931");
    CHECK(result.exit_code == 0);
    CHECK(json_bool(result.out, "is_nash"));
    CHECK(json_number(result.out, "pi_a") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(json_number(result.out, "pi_b") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nash certify reports the gain that destabilizes mirrored cooperation") {
    const auto result =
        run("nash certify --state maxent-i --game 3,0,5,1 --profile 0,0,0,0 --resolution 32");
    CHECK(result.exit_code == 0);
    CHECK_FALSE(json_bool(result.out, "is_nash"));
    CHECK(json_number(result.out, "max_gain_a") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(json_number(result.out, "max_gain_b") == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("nash family solves the stationary polar angles") {
    const auto result = run("nash family --phiA 0.7853982 --phiB 2.3561945");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "theta_a") == doctest::Approx(0.95532).epsilon(1e-4));
    CHECK(json_number(result.out, "theta_b") == doctest::Approx(0.95532).epsilon(1e-4));
    CHECK(json_number(result.out, "pi_a") == doctest::Approx(2.5).epsilon(1e-6));
}

TEST_CASE("nash family rejects coordinate-axis azimuths") {
    CHECK(run("nash family --phiA 0 --phiB 0.785").exit_code == 2);
}

TEST_CASE("nash scan finds the lone coarse-grid equilibrium of the product preset") {
    const auto result = run("nash scan --state product-uniform --game 3,0,5,1 --resolution 16");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "count") == doctest::Approx(1.0));
    CHECK(json_number(result.out, "theta_a") == doctest::Approx(1.5707963267948966).epsilon(1e-12));
    CHECK(json_number(result.out, "phi_a") == doctest::Approx(3.1415926535897931).epsilon(1e-12));
}

TEST_CASE("chsh reproduces the textbook violation value") {
    const auto result = run(
        "chsh --state maxent-i --dirs 0.785,0.785,2.356,0.785,1.571,0.785,0.785,0.785");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "lambda") == doctest::Approx(2.4142135).epsilon(5e-3));
    CHECK(json_bool(result.out, "violated"));
}

TEST_CASE("chsh with identical directions stays on the classical boundary") {
    const auto result = run("chsh --state maxent-i --dirs 0,0,0,0,0,0,0,0");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "lambda") == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(json_bool(result.out, "violated"));
}

TEST_CASE("embed reports the non-embeddable tilted profile") {
    const auto result = run(
        "embed --state maxent-i --game 3,0,0,1 --profile 0.785,0.785,1.571,0.785");
    CHECK(result.exit_code == 0);
    CHECK_FALSE(json_bool(result.out, "present"));
    CHECK(contains(result.out, "negative-discriminant"));
}

TEST_CASE("embed recovers the mixture behind a product-state profile") {
    const auto result = run(
        "embed --state product-uniform --game 3,0,0,1 --profile 1.047,0,2.618,0");
    CHECK(result.exit_code == 0);
    CHECK(json_bool(result.out, "present"));
    // The solver reports the larger marginal first.
    const double p = json_number(result.out, "p");
    const double q = json_number(result.out, "q");
    CHECK(p == doctest::Approx((1.0 + std::sin(1.047)) / 2.0).epsilon(1e-6));
    CHECK(q == doctest::Approx((1.0 + std::sin(2.618)) / 2.0).epsilon(1e-6));
}

TEST_CASE("embed requires a symmetric off-diagonal game") {
    CHECK(run("embed --state maxent-i --game 3,0,5,1 --profile 0,0,0,0").exit_code == 2);
}

TEST_CASE("ewl reports the quantum-strategy payoff pair") {
    const auto result =
        run("ewl --game 3,0,5,1 --sa 0,1.5707963267948966 --sb 0,1.5707963267948966");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "pi_a") == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(json_number(result.out, "pi_b") == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("ewl at zero entanglement reproduces the classical corner") {
    const auto result = run("ewl --game 3,0,5,1 --sa 3.1415926535897931,0 --sb 0,0 --ent 0");
    CHECK(result.exit_code == 0);
    CHECK(json_number(result.out, "pi_a") == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(json_number(result.out, "pi_b") == doctest::Approx(0.0).scale(1).epsilon(1e-10));
}

TEST_CASE("verify appendix passes at the documented tolerance and fails at an impossible one") {
    const auto pass = run("verify appendix --samples 300 --tol 1e-9 --seed 12345");
    CHECK(pass.exit_code == 0);
    CHECK(json_bool(pass.out, "pass"));
    CHECK(json_number(pass.out, "max_discrepancy") < 1e-9);

    const auto fail = run("verify appendix --samples 300 --tol 1e-30 --seed 12345");
    CHECK(fail.exit_code == 1);
    CHECK_FALSE(json_bool(fail.out, "pass"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("probs --no-such-flag 1").exit_code == 2);
    CHECK(run("probs --state maxent-i --alice abc,0 --bob 0,0").exit_code == 2);
    CHECK(run("probs --state maxent-i --alice 0 --bob 0,0").exit_code == 2);
    CHECK(run("probs --state maxent-i --alice 9,0 --bob 0,0").exit_code == 2);
    CHECK(run("nash").exit_code == 2);
    CHECK(run("nash certify --epsilon 0").exit_code == 2);
    CHECK(run("ewl --sa 0,9 --sb 0,0").exit_code == 2);
    CHECK(run("--game 1,2,3,4").exit_code == 2);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string commands[] = {
        "probs --state maxent-i --alice 0.3,1.1 --bob 2.2,4.0",
        "nash scan --state maxent-i --game 3,0,5,1 --resolution 8",
        "verify appendix --samples 200 --seed 777",
        "surface --mode quantum --vary angles --resolution 8 --format csv",
    };
    for (const auto& command : commands) {
        CAPTURE(command);
        const auto first = run(command);
        const auto second = run(command);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
        CHECK(first.out.back() == '\n');
    }
}

TEST_CASE("--output writes the same bytes to a file") {
    const std::string path = "/tmp/eprgame_cli_output.json";
    const std::string command = "nash certify --state maxent-i --game 3,0,5,1 --profile 0,0,0,0";
    const auto direct = run(command);
    const auto redirected = run(command + " --output " + path);
    CHECK(redirected.exit_code == 0);
    CHECK(redirected.out.empty());
    CHECK(read_file(path) == direct.out);
}
