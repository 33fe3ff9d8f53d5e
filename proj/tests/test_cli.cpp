#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HST_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(HST_FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("enumerate prints the count and canonical list") {
    const RunResult r = run_cli("enumerate --m 7 --delta 4");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "7 triangulations");
    CHECK(r.out.find("T0: 12345 12356 12367 13456 13467 14567") != std::string::npos);

    CHECK(first_line(run_cli("enumerate --m 5 --delta 3").out) == "2 triangulations");
    CHECK(first_line(run_cli("enumerate --m 4 --delta 2").out) == "2 triangulations");
    CHECK(first_line(run_cli("enumerate --m 6 --delta 2").out) == "14 triangulations");
}

TEST_CASE("exit codes") {
    CHECK(run_cli("enumerate").exit_code == 2);                       // missing parameters
    CHECK(run_cli("enumerate --m 2 --delta 4").exit_code == 2);       // invalid spec
    CHECK(run_cli("bogus").exit_code == 2);                           // unknown subcommand
    CHECK(run_cli("enumerate --m 6 --delta 2 --max-states 5").exit_code == 3);
    CHECK(run_cli("export --m 5 --delta 2 --output /nonexistent/x.json").exit_code == 2);
    CHECK(run_cli("verify --m 5 --delta 2 --d 1 --n 2").exit_code == 2);
    CHECK(run_cli("green --d 0 --n 2").exit_code == 2);
    CHECK(run_cli("export --m 5 --delta 2 --format bogus").exit_code == 2);
}

TEST_CASE("verify reports one line per check") {
    const RunResult r = run_cli("verify --m 5 --delta 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("orders equal: pass") != std::string::npos);
    CHECK(r.out.find("hst1 lattice: pass") != std::string::npos);
    CHECK(r.out.find("flips match left mutations: pass") != std::string::npos);

    const RunResult g = run_cli("verify --green --d 1 --n 2");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("green class count: pass") != std::string::npos);
    CHECK(g.out.find("green orders match: pass") != std::string::npos);
    CHECK(g.out.find("green lattice: pass") != std::string::npos);

    const RunResult e = run_cli("verify --m 6 --delta 4");
    CHECK(e.exit_code == 0);
    CHECK(e.out.find("flips match left mutations: pass") != std::string::npos);
    CHECK(e.out.find("green class count: pass") != std::string::npos);
    CHECK(e.out.find("green orders match: pass") != std::string::npos);
}

TEST_CASE("export output equals the frozen fixtures byte for byte") {
    CHECK(run_cli("export --m 5 --delta 2 --format json").out ==
          read_fixture("c5d2_poset.json"));
    CHECK(run_cli("export --m 5 --delta 2 --format dot").out ==
          read_fixture("c5d2_hasse.dot"));
    CHECK(run_cli("export --green --d 1 --n 2 --format json").out ==
          read_fixture("green_d1_n2.json"));
    CHECK(run_cli("export --m 7 --delta 4 --format json").out ==
          read_fixture("c7d4_poset.json"));
}

TEST_CASE("green command summarizes sequences and classes") {
    const RunResult r = run_cli("green --d 1 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "d=1 n=2: 2 green sequences, 2 classes");
    CHECK(r.out.find("G0: length 3, flips 1234 1245 2345") != std::string::npos);
    CHECK(r.out.find("G1: length 2, flips 1345 1235") != std::string::npos);
}
