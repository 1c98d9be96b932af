#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

namespace {

const std::string kBin = OPENPH_BIN;
const std::string kGolden = GOLDEN_DIR;

std::string golden(const std::string& name) { return testutil::read_file(kGolden + "/" + name); }

}  // namespace

TEST_CASE("every golden run reproduces its frozen output byte for byte") {
    const std::vector<std::pair<std::string, std::string>> runs = {
        {"photo --freq 1.5e15 --threshold 1e15", "photo.csv"},
        {"decay --n0 10000 --half-life 1200 --dt 10 --tmax 6000 --seed 1", "decay.csv"},
        {"schrodinger --potential square --n 41 --levels 2", "schrodinger.csv"},
        {"circular --radius 1 --omega 1 --samples 5 --t1 6.283185307179586", "circular.csv"},
        {"oscillator --dt 0.05 --tmax 5", "oscillator.csv"},
        {"pendulum --dt 0.01 --tmax 1", "pendulum.csv"},
        {"string --frames 5 --points 9", "string.csv"},
        {"tables", "tables_fahrenheit.csv"},
        {"tables --kind stirling --nmax 20", "tables_stirling.csv"},
        {"schrodinger --potential square --n 41 --levels 2 --format svg", "schrodinger.svg"},
        {"string --frames 5 --points 9 --format svg", "string.svg"},
    };
    for (const auto& [args, file] : runs) {
        CAPTURE(args);
        const auto r = testutil::run_cli(kBin, args);
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden(file));
        CHECK(r.err.find("data=0x") != std::string::npos);
    }
}

TEST_CASE("repeated runs are byte-identical") {
    for (const std::string args :
         {std::string("decay --n0 2000 --half-life 300 --dt 5 --tmax 900 --seed 42"),
          std::string("schrodinger --potential doublewell --n 201 --levels 3 --format svg"),
          std::string("oscillator --compare --dt 0.01 --tmax 10")}) {
        const auto a = testutil::run_cli(kBin, args);
        const auto b = testutil::run_cli(kBin, args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("csv and svg runs hash the same data") {
    const std::string base = "pendulum --dt 0.01 --tmax 2";
    const auto csv = testutil::run_cli(kBin, base);
    const auto svg = testutil::run_cli(kBin, base + " --format svg");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(svg.exit_code == 0);
    CHECK(csv.out != svg.out);
    CHECK(testutil::data_hash(csv.err) == testutil::data_hash(svg.err));
}

TEST_CASE("--output writes exactly what stdout would carry") {
    const std::string path = "/tmp/openph_cli_out.csv";
    const auto direct = testutil::run_cli(kBin, "string --frames 3 --points 5");
    const auto filed = testutil::run_cli(kBin, "string --frames 3 --points 5 -o " + path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(testutil::read_file(path) == direct.out);
    CHECK(testutil::data_hash(filed.err) == testutil::data_hash(direct.err));
    std::remove(path.c_str());
}

TEST_CASE("csv output reparses cleanly") {
    const auto r = testutil::run_cli(kBin, "pendulum --dt 0.01 --tmax 1");
    REQUIRE(r.exit_code == 0);
    const auto parsed = testutil::parse_csv(r.out);
    CHECK(parsed.labels ==
          std::vector<std::string>{"t", "theta", "omega", "theta_small_angle"});
    REQUIRE(parsed.rows.size() == 101);
    CHECK(parsed.rows[0][0] == 0.0);
    CHECK(parsed.rows[100][0] == 1.0);
}

TEST_CASE("svg output is well formed for every subcommand that plots") {
    for (const std::string args :
         {std::string("photo --freq 2e15 --threshold 1e15 --format svg"),
          std::string("decay --n0 500 --half-life 50 --dt 1 --tmax 200 --format svg"),
          std::string("circular --format svg"),
          std::string("oscillator --compare --dt 0.05 --tmax 20 --format svg"),
          std::string("tables --kind stirling --format svg")}) {
        CAPTURE(args);
        const auto r = testutil::run_cli(kBin, args);
        CHECK(r.exit_code == 0);
        CHECK(testutil::xml_well_formed(r.out));
    }
}

TEST_CASE("seeds change the decay sample path") {
    const std::string base = "decay --n0 1000 --half-life 100 --dt 2 --tmax 300 --seed ";
    const auto one = testutil::run_cli(kBin, base + "1");
    const auto two = testutil::run_cli(kBin, base + "2");
    REQUIRE(one.exit_code == 0);
    REQUIRE(two.exit_code == 0);
    CHECK(one.out != two.out);
}

TEST_CASE("help exits zero") {
    CHECK(testutil::run_cli(kBin, "--help").exit_code == 0);
    CHECK(testutil::run_cli(kBin, "decay --help").exit_code == 0);
    CHECK(testutil::run_cli(kBin, "schrodinger --help").exit_code == 0);
}

TEST_CASE("usage mistakes exit 2 with a usage message") {
    const std::vector<std::string> bad = {
        "",
        "bogus",
        "photo",
        "photo --freq 1.5e15",
        "tables --kind nope",
        "decay --n0 -5 --half-life 10 --dt 1 --tmax 5",
        "decay --n0 10 --lambda 0.1 --half-life 10 --dt 1 --tmax 5",
        "pendulum --precision 0",
        "schrodinger --potential tabulated",
        "circular --radius 1 --omega 1 --t1 0",
    };
    for (const auto& args : bad) {
        CAPTURE(args);
        const auto r = testutil::run_cli(kBin, args);
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("usage error:") != std::string::npos);
    }
}

TEST_CASE("domain failures exit 1 with the module's message") {
    const auto below = testutil::run_cli(kBin, "photo --freq 0.9e15 --threshold 1e15");
    CHECK(below.exit_code == 1);
    CHECK(below.err.find("below the threshold frequency") != std::string::npos);
    CHECK(below.err.find("9e+14") != std::string::npos);

    const auto resonant =
        testutil::run_cli(kBin, "oscillator --compare --r 0 --omega-d 1 --k 1 --m 1");
    CHECK(resonant.exit_code == 1);
    CHECK(resonant.err.find("undamped resonance") != std::string::npos);

    const auto unwritable = testutil::run_cli(kBin, "tables -o /nonexistent/x.csv");
    CHECK(unwritable.exit_code == 1);
    CHECK(unwritable.err.find("cannot open output file") != std::string::npos);
}

TEST_CASE("tabulated potential file is read and validated") {
    const std::string path = "/tmp/openph_cli_pot.csv";
    {
        std::ofstream f(path);
        f << "# quartic-ish bump\n";
        for (int i = 0; i <= 40; ++i) {
            const double x = i / 40.0;
            f << x << "," << 100.0 * (x - 0.5) * (x - 0.5) << "\n";
        }
    }
    const auto ok = testutil::run_cli(
        kBin, "schrodinger --potential tabulated --file " + path + " --n 401 --levels 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.err.find("E_0") != std::string::npos);

    {
        std::ofstream f(path);
        f << "0,0\n0.5,broken\n";
    }
    const auto broken = testutil::run_cli(
        kBin, "schrodinger --potential tabulated --file " + path + " --n 401 --levels 2");
    CHECK(broken.exit_code == 2);
    CHECK(broken.err.find("line 2") != std::string::npos);
    std::remove(path.c_str());
}
