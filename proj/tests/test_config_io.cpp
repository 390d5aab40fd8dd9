#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bohmrad/config.hpp"
#include "bohmrad/io.hpp"

using namespace bohmrad;

TEST_CASE("parses the worked-example config") {
    const auto cfg =
        parse_config("a_cm=1e-4\nb_cm=1e-6\nvx_cm_s=1.3e10\nT_s=1e-8\nscreen_x_cm=13\n");
    CHECK(cfg.a == 1e-4);
    CHECK(cfg.b == 1e-6);
    CHECK(cfg.v_x == 1.3e10);
    CHECK(cfg.T == 1e-8);
    CHECK(cfg.screen_x == 13.0);
    CHECK(cfg.X == doctest::Approx(130.0));  // defaults to v_x * T
    CHECK(cfg.t_at(13.0) == doctest::Approx(1e-9));
}

TEST_CASE("validation errors name the violated invariant") {
    CHECK_THROWS_WITH_AS(
        parse_config("a_cm=-1\nb_cm=1e-6\nvx_cm_s=1.3e10\nT_s=1e-8\nscreen_x_cm=13\n"),
        doctest::Contains("a > 0"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("a_cm=1e-7\nb_cm=1e-6\nvx_cm_s=1.3e10\nT_s=1e-8\nscreen_x_cm=13\n"),
        doctest::Contains("a > b"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("a_cm=1e-4\nb_cm=1e-6\nvx_cm_s=0\nT_s=1e-8\nscreen_x_cm=13\n"),
        doctest::Contains("v_x > 0"), ConfigError);
}

TEST_CASE("parse errors carry line numbers; unknown keys rejected") {
    CHECK_THROWS_WITH_AS(parse_config("a_cm=1e-4\nwhat_is_this=3\n"),
                         doctest::Contains("line 2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("a_cm=1e-4\nb_cm=oops\n"),
                         doctest::Contains("line 2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("a_cm=1e-4\na_cm=2e-4\n"),
                         doctest::Contains("duplicate"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("a_cm=1e-4\n"), doctest::Contains("missing"),
                         ConfigError);
}

TEST_CASE("serialize/parse round trip is the identity") {
    const auto cfg = parse_config(
        "a_cm=1.25e-4\nb_cm=1e-6\nvx_cm_s=1.3e10\nT_s=1e-8\nscreen_x_cm=13\nX_cm=97\n");
    const auto again = parse_config(serialize_config(cfg));
    CHECK(again.a == cfg.a);
    CHECK(again.b == cfg.b);
    CHECK(again.X == cfg.X);
    CHECK(again.T == cfg.T);
    CHECK(again.v_x == cfg.v_x);
    CHECK(again.screen_x == cfg.screen_x);
    // idempotence of the text form
    CHECK(serialize_config(again) == serialize_config(cfg));
}

TEST_CASE("comments and blank lines are ignored") {
    const auto cfg = parse_config(
        "# geometry\na_cm=1e-4\n\nb_cm=1e-6 # half-width\nvx_cm_s=1.3e10\nT_s=1e-8\n"
        "screen_x_cm=13\n");
    CHECK(cfg.b == 1e-6);
}

TEST_CASE("csv writer emits 12 significant digits and a header") {
    const char* path = "io_test_tmp.csv";
    {
        io::CsvWriter csv(path, {"x_cm", "y_cm"});
        csv.row({1.0 / 3.0, 2.5e-13});
    }
    std::ifstream in(path);
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    CHECK(header == "x_cm,y_cm");
    CHECK(line == "3.33333333333e-01,2.50000000000e-13");
    std::remove(path);
}

TEST_CASE("report writer emits key=value lines") {
    const char* path = "io_test_tmp.txt";
    {
        io::ReportWriter rep(path);
        rep.field("answer", 42.0);
    }
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "answer=4.20000000000e+01");
    std::remove(path);
}
