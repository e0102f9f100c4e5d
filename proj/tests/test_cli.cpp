#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    std::string output;
    int exit_code = -1;
};

// Runs the tool through the shell, capturing stdout only.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TUTTE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_graph(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << body;
    return path.string();
}

}  // namespace

TEST_CASE("polynomial subcommands") {
    std::string k2 = write_graph("cli_k2.json",
                                 R"({"vertices":["a","b"],"edges":[["a","b"]]})");
    CHECK(run_cli("z --graph " + k2).output == "q^2 + q*v:0\n");
    CHECK(run_cli("zhat --graph " + k2).output == "q + v:0\n");
    CHECK(run_cli("connected --graph " + k2).output == "v:0\n");
    CHECK(run_cli("z --graph " + k2 + " --set v:0=-1").output == "q^2 - q\n");

    std::string tri = write_graph(
        "cli_tri.json",
        R"({"vertices":["1","2","3"],"edges":[["1","2"],["1","3"],["2","3"]]})");
    CHECK(run_cli("chromatic --graph " + tri).output == "q^3 - 3*q^2 + 2*q\n");

    std::string dbl = write_graph(
        "cli_dbl.json", R"({"vertices":["a","b"],"edges":[["a","b"],["a","b"]]})");
    CHECK(run_cli("lambda --graph " + dbl).output ==
          "lambda*v:0*v:1 + v:0 + v:1\n");

    // graphs also arrive on stdin
    RunResult piped = run_cli("z --graph - < " + k2);
    CHECK(piped.output == "q^2 + q*v:0\n");
    CHECK(piped.exit_code == 0);

    RunResult js = run_cli("z --json --graph " + k2);
    auto parsed = nlohmann::json::parse(js.output);
    CHECK(parsed["vars"] == nlohmann::json({"q", "v:0"}));
}

TEST_CASE("sequence subcommand") {
    CHECK(run_cli("seq cn --n 4 --set v=1").output == R"(["1","1","4","38"])"
                                                      "\n");
    CHECK(run_cli("seq inv --n 3").output == R"(["1","1","y + 2"])"
                                             "\n");
    CHECK(run_cli("seq zn --n 2").output == R"(["1","q","q^2 + q*v"])"
                                            "\n");
    CHECK(run_cli("seq zn --n 3 --route two-point").output ==
          run_cli("seq zn --n 3 --route direct").output);
    CHECK(run_cli("seq ync --n 3 --coeffs ones").output ==
          R"(["1","q","q^2 + q","q^3 + 3*q^2 + q"])"
          "\n");
    CHECK(run_cli("seq zna --n 2 --coeffs 1,1").output ==
          R"(["1","q","q^2"])"
          "\n");

    CHECK(run_cli("seq bogus --n 2").exit_code == 2);
    CHECK(run_cli("seq zna --n 2").exit_code == 2);   // missing coefficients
    CHECK(run_cli("seq cn").exit_code == 2);          // missing length
}

TEST_CASE("family and mobius subcommands") {
    RunResult fam = run_cli("family exp --cap 2");
    auto table = nlohmann::json::parse(fam.output);
    REQUIRE(table.size() == 3);
    CHECK(table[2]["a"] == "q^2");
    CHECK(table[2]["ahat"] == "q");

    RunResult mob = run_cli("mobius --m 2");
    auto lattice = nlohmann::json::parse(mob.output);
    CHECK(lattice["size"] == 2);
    CHECK(lattice["weights"].size() == 3);
    CHECK(lattice["weights"][1]["value"] == "-q1 + q2");

    RunResult mobNum = run_cli("mobius --m 3 --q1 1 --q2 0");
    auto numeric = nlohmann::json::parse(mobNum.output);
    // bottom-to-top entry carries the signed factorial
    bool found = false;
    for (const auto& w : numeric["weights"])
        if (w["sigma"] == numeric["size"].get<int>() - 1 && w["pi"] == 0) {
            CHECK(w["value"] == "2");
            found = true;
        }
    CHECK(found);

    CHECK(run_cli("mobius --m 9").exit_code == 2);
}

TEST_CASE("blowup subcommand") {
    std::string k2 = write_graph("cli_k2w.json",
                                 R"({"vertices":["a","b"],"edges":[["a","b","v"]]})");
    RunResult r = run_cli("blowup --graph " + k2 + " --counts 2,1");
    auto g = nlohmann::json::parse(r.output);
    CHECK(g["vertices"] == nlohmann::json({"a#1", "a#2", "b#1"}));
    CHECK(g["edges"].size() == 2);
    CHECK(run_cli("blowup --graph " + k2 + " --counts 2").exit_code == 2);
    CHECK(run_cli("blowup --graph " + k2 + " --counts 2,x").exit_code == 2);
}

TEST_CASE("check subcommand") {
    RunResult lass = run_cli("check lass --text");
    CHECK(lass.exit_code == 0);
    CHECK(lass.output.find("passed 12/12 checks") != std::string::npos);

    // JSON lines are the default report format
    RunResult js = run_cli("check abel");
    CHECK(js.exit_code == 0);
    std::istringstream lines(js.output);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["status"] == "PASS");
        ++count;
    }
    CHECK(count == 6);
    CHECK(js.output == run_cli("check abel --json").output);

    // identical bytes on repeat runs, with and without worker threads
    CHECK(js.output == run_cli("check abel").output);
    CHECK(js.output == run_cli("check abel --threads 4").output);

    CHECK(run_cli("check nope").exit_code == 2);
    CHECK(run_cli("check abel --json --text").exit_code == 2);
}

TEST_CASE("check subcommand corpus and size cap") {
    std::string k4 = write_graph(
        "cli_chk_k4.json",
        R"({"vertices":["1","2","3","4"],"edges":[["1","2"],["1","3"],)"
        R"(["1","4"],["2","3"],["2","4"],["3","4"]]})");
    RunResult r = run_cli("check nonlinear --corpus " + k4);
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    int count = 0;
    bool named = false;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["status"] == "PASS");
        if (j["check"].get<std::string>().find(k4) != std::string::npos)
            named = true;
        ++count;
    }
    CHECK(count == 2);  // two-point peeling plus the sign checks
    CHECK(named);

    // a corpus every check skips produces an empty, passing report
    std::string loop = write_graph(
        "cli_chk_loop.json", R"({"vertices":["a"],"edges":[["a","a"]]})");
    RunResult skipped = run_cli("check partitions --corpus " + loop);
    CHECK(skipped.exit_code == 0);
    CHECK(skipped.output.empty());

    CHECK(run_cli("check nonlinear --corpus /nonexistent.json").exit_code == 2);

    // --max-n trims the ladders: fewer lattice sizes, all still passing
    RunResult capped = run_cli("check mobius --max-n 3");
    CHECK(capped.exit_code == 0);
    std::istringstream capLines(capped.output);
    int capCount = 0;
    while (std::getline(capLines, line)) {
        CHECK(nlohmann::json::parse(line)["status"] == "PASS");
        ++capCount;
    }
    CHECK(capCount == 17);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("z --graph /nonexistent.json").exit_code == 2);
    CHECK(run_cli("z --graph - < /dev/null").exit_code == 2);
}
