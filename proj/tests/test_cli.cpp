// End-to-end checks of the installed command-line surface: exact CSV bytes,
// exit codes, and determinism.  The binary path comes from the build system.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ORDSTAT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("table: reference pareto run") {
    const RunResult r =
        run_cli("table --dist pareto:a=1,v=0.75 --k 2 --side top --n 2..4");
    CHECK(r.exit_code == 0);
    REQUIRE(r.out.substr(0, 30) == "n,mu,first_diff,second_diff\n2,");
    // parse the mu column and the centred second difference at n = 3
    const auto row = [&r](int want_n) {
        const std::string tag = "\n" + std::to_string(want_n) + ",";
        const size_t at = r.out.find(tag);
        REQUIRE(at != std::string::npos);
        return r.out.substr(at + tag.size());
    };
    CHECK(std::stod(row(2)) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(std::stod(row(3)) == doctest::Approx(5.4).epsilon(1e-6));
    CHECK(std::stod(row(4)) == doctest::Approx(8.1).epsilon(1e-6));
    const std::string n3 = row(3);
    const size_t last_comma = n3.find_last_of(',', n3.find('\n'));
    CHECK(std::stod(n3.substr(last_comma + 1)) ==
          doctest::Approx(0.3).epsilon(1e-5));
}

TEST_CASE("table: uniform minimum and a single-row range") {
    const RunResult r =
        run_cli("table --dist uniform:lo=0,hi=1 --k 1 --side bottom --n 1..5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\n1,0.5,,\n") != std::string::npos);
    CHECK(r.out.find("\n3,0.25,") != std::string::npos);
    CHECK(r.out.find("\n5,0.166666666667,") != std::string::npos);

    const RunResult single =
        run_cli("table --dist uniform:lo=0,hi=1 --k 3 --side bottom --n 3");
    CHECK(single.exit_code == 0);
    CHECK(single.out == "n,mu,first_diff,second_diff\n3,0.75,,\n");
}

TEST_CASE("verify: matches and mismatches the expected shape") {
    CHECK(run_cli("verify --dist exponential:rate=1 --k 2 --side top --n 2..10")
              .exit_code == 0);
    const RunResult bad =
        run_cli("verify --dist pareto:a=1,v=0.75 --k 2 --side top --n 2..4");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("violations=1") != std::string::npos);
    // k = 1 passes for any family with finite moments
    CHECK(run_cli("verify --dist pareto:a=1,v=0.75 --k 1 --side bottom --n 2..8")
              .exit_code == 0);
    CHECK(run_cli("verify --dist negatedpareto:a=1,v=0.75 --k 1 --side top --n 2..8")
              .exit_code == 0);
}

TEST_CASE("optimize: documented instances") {
    const RunResult a =
        run_cli("optimize --dist uniform:lo=0,hi=1 --cost poly:0,0,0.01 --n-max 50");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("n_star=4") != std::string::npos);
    CHECK(a.out.find("shortcut=true") != std::string::npos);

    const RunResult b =
        run_cli("optimize --dist uniform:lo=0,hi=1 --cost poly:0,0.1 --n-max 50");
    CHECK(b.exit_code == 0);
    CHECK(b.out.find("n_star=3") != std::string::npos);
    CHECK(b.out.find("tie_broken=true") != std::string::npos);

    // reserve at the support minimum must not change a single byte
    const RunResult plain =
        run_cli("optimize --dist uniform:lo=0,hi=1 --cost poly:0,0.05 --n-max 40");
    const RunResult zero_r = run_cli(
        "optimize --dist uniform:lo=0,hi=1 --cost poly:0,0.05 --n-max 40 --reserve 0");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out == zero_r.out);
}

TEST_CASE("reserve: single-row diagnostics") {
    const RunResult r =
        run_cli("reserve --dist uniform:lo=0,hi=1 --reserve 0.5 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("r,n,F_r,revenue,condition_ok,reserve_j,second_diff_I\n") == 0);
    CHECK(r.out.find("0.5,2,0.5,0.416666666667,false,") != std::string::npos);
    // n >= 3 fills the second-difference cell; condition flips true at n = 4
    const RunResult ok =
        run_cli("reserve --dist uniform:lo=0,hi=1 --reserve 0.25 --n 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find(",true,") != std::string::npos);
}

TEST_CASE("simulate: deterministic bytes, sane sigma") {
    const std::string cmd =
        "simulate --dist uniform:lo=0,hi=1 --k 2 --n 3 --trials 200000 --seed 42";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("estimate,std_error,trials,seed,quadrature_value,"
                     "sigma_distance\n") == 0);
    CHECK(a.out.find(",200000,42,0.5,") != std::string::npos);

    // one trial: no standard error, empty trailing cells
    const RunResult one =
        run_cli("simulate --dist uniform:lo=0,hi=1 --k 1 --n 1 --trials 1 --seed 9");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find(",,1,9,0.5,\n") != std::string::npos);
}

TEST_CASE("--out writes the CSV to a file, stdout stays clean") {
    const std::string path = "/tmp/ordstat_cli_out_test.csv";
    std::remove(path.c_str());
    const RunResult r = run_cli(
        "table --dist uniform:lo=0,hi=1 --k 1 --side bottom --n 1..3 --out " +
        path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::array<char, 512> buf{};
    const size_t got = fread(buf.data(), 1, buf.size(), f);
    fclose(f);
    std::remove(path.c_str());
    const std::string content(buf.data(), got);
    CHECK(content.find("n,mu,first_diff,second_diff\n") == 0);
    CHECK(content.find("\n2,0.333333333333,") != std::string::npos);
}

TEST_CASE("exit codes: parse, moment, verification") {
    CHECK(run_cli("table --dist nonsense --k 1 --side bottom --n 1..3").exit_code == 2);
    CHECK(run_cli("table --dist uniform:lo=0,hi=1,x=2 --k 1 --side bottom --n 1..3")
              .exit_code == 2);
    CHECK(run_cli("table --dist uniform:lo=0,hi=1 --k 1 --side bottom --n 5..3")
              .exit_code == 2);
    CHECK(run_cli("table --dist pareto:a=1,v=0.75 --k 1 --side top --n 2..4")
              .exit_code == 3);
    CHECK(run_cli("reserve --dist normal:mean=0,stddev=1 --reserve 0.5 --n 3")
              .exit_code == 2);
    CHECK(run_cli("optimize --dist uniform:lo=0,hi=1 --cost poly:0 --n-max 30")
              .exit_code == 5);
    CHECK(run_cli("optimize --dist uniform:lo=0,hi=1 --cost poly:0,1,-1 --n-max 30")
              .exit_code == 2);
}

TEST_SUITE_END();
