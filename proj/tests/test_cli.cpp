#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "srtrunc_cli/app.hpp"
#include "srtrunc_cli/verify.hpp"

using namespace fixture;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = srtrunc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SRTRUNC_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("closed-form betti table of the three-generator ideal") {
    auto r = run({"betti", "--method", "closed-form", "--k", "5", data("three_generators.ideal")});
    CHECK(r.code == 0);
    CHECK(r.out.find("20 50 55 29 6") != std::string::npos);
  }

  TEST_CASE("JSON betti output parses back to the library table") {
    auto r = run({"betti", "--json", data("three_generators.ideal")});
    REQUIRE(r.code == 0);
    CHECK(srtrunc::betti_from_json(r.out) == srtrunc::hochster_betti(three_generator_ideal(), Characteristic()));
  }

  TEST_CASE("thread count does not change output") {
    auto one = run({"betti", "--threads", "1", data("three_generators.ideal")});
    auto four = run({"betti", "--threads", "4", data("three_generators.ideal")});
    CHECK(one.out == four.out);
  }

  TEST_CASE("hilbert numerator of the truncated squares") {
    auto r = run({"hilbert", "--k", "5", data("eight_squares.ideal")});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 - 736t^5 + 4200t^6") != std::string::npos);
  }

  TEST_CASE("fvector and truncate") {
    auto f = run({"fvector", "--k", "5", data("three_generators.ideal")});
    CHECK(f.code == 0);
    CHECK(f.out.find("84") != std::string::npos);
    auto t = run({"truncate", "--mode", "geq", "--k", "5", data("eight_squares.ideal")});
    CHECK(t.code == 0);
    CHECK(srtrunc::parse_ideal(t.out).size() == 736);
  }

  TEST_CASE("regularity, linearity, index and componentwise linearity") {
    CHECK(run({"reg", data("three_generators.ideal")}).out.find('7') != std::string::npos);
    CHECK(run({"linear", "--k", "3", data("three_generators.ideal")}).code == 0);
    CHECK(run({"index", "--k", "2", data("eight_squares.ideal")}).code == 0);
    auto cwl = run({"cwl", data("mixed_powers.ideal")});
    CHECK(cwl.code == 0);
    CHECK(cwl.out.find("not componentwise linear") != std::string::npos);
  }

  TEST_CASE("polarize output parses as an ideal") {
    auto r = run({"polarize", data("mixed_powers.ideal")});
    REQUIRE(r.code == 0);
    CHECK(srtrunc::parse_ideal(r.out) == three_generator_ideal());
  }

  TEST_CASE("input errors exit with one") {
    CHECK(run({"betti", data("does-not-exist.ideal")}).code == srtrunc::cli::kInputError);
    CHECK(run({"bogus"}).code == srtrunc::cli::kInputError);
    CHECK(run({"betti", "--char", "4", data("three_generators.ideal")}).code == srtrunc::cli::kInputError);
    CHECK(run({"betti", "--method", "closed-form", "--k", "2", data("three_generators.ideal")}).code ==
          srtrunc::cli::kInputError);
    auto r = run({"betti", data("mixed_powers.ideal"), "--method", "closed-form", "--k", "5"});
    CHECK(r.code == srtrunc::cli::kInputError);
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("resource bounds exit with three") {
    setenv("SRTRUNC_MAX_POLARIZED_VARS", "5", 1);
    auto r = run({"betti", data("mixed_powers.ideal")});
    unsetenv("SRTRUNC_MAX_POLARIZED_VARS");
    CHECK(r.code == srtrunc::cli::kResourceBound);
  }

  TEST_CASE("verify output is deterministic in the seed") {
    std::vector<std::string> args{"verify", "--n", "5", "--trials", "20", "--seed", "9"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("result: PASS") != std::string::npos);
  }

  TEST_CASE("verify requires a seed") { CHECK(run({"verify", "--n", "5"}).code == srtrunc::cli::kInputError); }

  TEST_CASE("verify library report") {
    srtrunc::cli::VerifyOptions options;
    options.n = 5;
    options.trials = 15;
    options.seed = 3;
    auto report = srtrunc::cli::verify_sweep(options);
    CHECK(report.ok());
    CHECK(report.property("closed-form-vs-oracle").checked > 0);
    CHECK(srtrunc::cli::format_report(report) == srtrunc::cli::format_report(srtrunc::cli::verify_sweep(options)));
  }
}
