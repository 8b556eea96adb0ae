#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(XLQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("report envelope and exit code", "[cli]") {
    const auto r = run("potential --g 1 --ell 1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["meta"]["version"] == "1.0.0");
    CHECK(j["meta"]["command"] == "potential");
    CHECK(j["meta"]["params"]["g"] == 1.0);
    CHECK(j["meta"]["seed"] == 42);
    CHECK(j["meta"].contains("timestamp"));
    REQUIRE(j["results"].is_array());
    CHECK(j["results"].size() == 30);
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("byte determinism apart from the timestamp", "[cli]") {
    auto strip = [](const std::string& text) {
        json j = json::parse(text);
        j["meta"].erase("timestamp");
        return j.dump();
    };
    const auto a = run("potential --g 2.5 --ell 1 --seed 9");
    const auto b = run("potential --g 2.5 --ell 1 --seed 9");
    REQUIRE(a.exit_code == 0);
    CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("csv output is a flat table", "[cli]") {
    const auto r = run("eigen --g 1 --ell 1 --n-max 2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,energy,energy_coarse,energy_fine,node_count,delta_vs_4n\n", 0) == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 4);  // header + one row per level
}

TEST_CASE("quantization integral rows carry the deviation", "[cli]") {
    const auto r = run("swkb --g 1 --ell 1 --n 1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    const auto& row = j["results"][0];
    const double dev = row["deviation"].get<double>();
    CHECK(std::abs(dev) > 1e-4);
    CHECK(std::abs(dev) < 5e-3);
    CHECK(row["energy_solve"].get<double>() != 4.0);
}

TEST_CASE("ledger reconstructs the level index from the contour pieces", "[cli]") {
    const auto r = run("ledger --g 1 --ell 1 --energy 8");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    double recon = 1e300, osum = 1e300;
    for (const auto& row : j["results"]) {
        if (row["term"] == "reconstructed_n") recon = row["re"].get<double>();
        if (row["term"] == "omega_sum") osum = row["re"].get<double>();
    }
    CHECK(std::abs(recon - 2.0) < 1e-6);
    CHECK(std::abs(osum) > 1e-4);  // the off-axis contributions do NOT vanish here
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("momentum-function subcommand passes its invariants", "[cli]") {
    const auto r = run("qhj --g 1 --ell 1 --n 1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["results"].size() == 1 + 2 + 4);  // origin + fixed + moving poles
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("failed check exits with status 2", "[cli]") {
    const auto r = run("potential --g 1 --ell 1 --tol-identity 1e-30");
    CHECK(r.exit_code == 2);
    const json j = json::parse(r.out);
    bool any_fail = false;
    for (const auto& c : j["checks"])
        if (c["pass"] == false) any_fail = true;
    CHECK(any_fail);
}

TEST_CASE("module errors exit with status 1 and a structured record", "[cli]") {
    const auto bad = run("potential --g 0.2 --ell 1");
    CHECK(bad.exit_code == 1);
    const json j = json::parse(bad.out);
    CHECK(j["error"]["type"] == "Error");
    CHECK(j["error"].contains("message"));

    const auto no_energy = run("ledger --g 1 --ell 1");
    CHECK(no_energy.exit_code == 1);
}

TEST_CASE("unknown subcommand is a usage error", "[cli]") {
    CHECK(run("frobnicate").exit_code != 0);
}
