// Drives the installed CLI binary against the fixture files: exit codes,
// JSON fields, and the byte-identical-output determinism contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(MESHMAT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer;
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string fixture(const std::string& name) {
    return std::string(MESHMAT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("count-trees") {
    const RunResult r = run_cli("count-trees " + fixture("k3.graph") + " --json");
    CHECK(r.exit_code == 0);
    const auto body = nlohmann::json::parse(r.output);
    CHECK(body["count"] == 3);

    const RunResult petersen = run_cli("count-trees " + fixture("petersen.graph") + " --json");
    CHECK(nlohmann::json::parse(petersen.output)["count"] == 2000);
}

TEST_CASE("verify reports the identities") {
    const RunResult r = run_cli("verify " + fixture("k4.graph") + " --json");
    CHECK(r.exit_code == 0);
    const auto body = nlohmann::json::parse(r.output);
    CHECK(body["charpoly_identity"] == true);
    CHECK(body["determinant_identity"] == true);
    CHECK(body["minor_expansion"] == true);
    CHECK(body["det"] == 16);
    CHECK(body["ok"] == true);
}

TEST_CASE("mesh with an explicit tree") {
    const RunResult r = run_cli("mesh " + fixture("k4.graph") + " --tree 0,1,2 --json");
    CHECK(r.exit_code == 0);
    const auto body = nlohmann::json::parse(r.output);
    CHECK(body["determinant"] == 16);
    CHECK(body["mesh"][0][0] == 3);

    const RunResult bad_tree = run_cli("mesh " + fixture("k4.graph") + " --tree 0,1,3");
    CHECK(bad_tree.exit_code == 2);
}

TEST_CASE("stpoly rejects unknown subgraph edges") {
    const RunResult bad = run_cli("stpoly " + fixture("k3.graph") + " --subgraph 0,9");
    CHECK(bad.exit_code == 2);

    const RunResult good = run_cli("stpoly " + fixture("k3.graph") + " --subgraph 0,1 --json");
    CHECK(good.exit_code == 0);
    const auto body = nlohmann::json::parse(good.output);
    CHECK(body["coefficients"] == nlohmann::json::array({-2, 1}));
}

TEST_CASE("flux on the 4-cycle") {
    const RunResult r = run_cli("flux " + fixture("c4.graph") + " --partition 0 --json");
    CHECK(r.exit_code == 0);
    const auto body = nlohmann::json::parse(r.output);
    CHECK(body["Lambda"].get<double>() == doctest::Approx(3.0));
    CHECK(body["lambda"].get<double>() == doctest::Approx(2.0));
    CHECK(body["inequality_holds"] == false);
    CHECK(body["cheeger_estimate"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("allminors and torsion and kirchhoff") {
    CHECK(run_cli("allminors " + fixture("multi.graph")).exit_code == 0);

    const RunResult torsion = run_cli("torsion " + fixture("k4.graph") + " --json");
    CHECK(nlohmann::json::parse(torsion.output)["order"] == 16);

    const RunResult kirchhoff = run_cli("kirchhoff " + fixture("k3.graph") + " --json");
    const auto body = nlohmann::json::parse(kirchhoff.output);
    CHECK(body["charpoly"] == nlohmann::json::array({0, 9, -6, 1}));
}

TEST_CASE("cw checks") {
    const RunResult star = run_cli("cw " + fixture("deg23.complex") + " --forest 0 --check star --json");
    CHECK(star.exit_code == 0);
    const auto body = nlohmann::json::parse(star.output);
    CHECK(body["determinant"] == "13/4");
    CHECK(body["ok"] == true);

    CHECK(run_cli("cw " + fixture("deg23.complex") + " --forest 0 --check higher").exit_code == 0);
    const RunResult integral =
        run_cli("cw " + fixture("deg23.complex") + " --forest 0 --check integral --json");
    const auto integral_body = nlohmann::json::parse(integral.output);
    CHECK(integral_body["integral_determinant"] == 13);
    CHECK(integral_body["ratio"] == "4");

    CHECK(run_cli("cw " + fixture("rp2.complex") + " --check star").exit_code == 0);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("count-trees " + fixture("bad.graph")).exit_code == 2);
    CHECK(run_cli("count-trees /nonexistent.graph").exit_code == 2);
    CHECK(run_cli("nonsense-command").exit_code == 2);
    CHECK(run_cli("mesh").exit_code == 2);
}

TEST_CASE("json output is byte identical across runs") {
    const std::string commands[] = {
        "verify " + fixture("k4.graph") + " --json",
        "mesh " + fixture("petersen.graph") + " --json",
        "flux " + fixture("c4.graph") + " --json",
        "charpoly " + fixture("multi.graph") + " --json",
        "cw " + fixture("deg23.complex") + " --check higher --json",
        "torsion " + fixture("multi.graph") + " --json",
    };
    for (const std::string& command : commands) {
        const RunResult first = run_cli(command);
        const RunResult second = run_cli(command);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
        CHECK(!first.output.empty());
    }
}
