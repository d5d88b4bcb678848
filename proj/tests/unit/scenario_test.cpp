#include <doctest.h>

#include <stdexcept>

#include "../support/random_instances.hpp"
#include "infomarket/examples.hpp"
#include "infomarket/report.hpp"
#include "infomarket/scenario.hpp"
#include "infomarket/value.hpp"

using namespace infomarket;

TEST_CASE("bundled scenarios serialize canonically and re-parse identically") {
    for (const std::string& name : builtin_example_names()) {
        const std::string& text = builtin_example_text(name);
        ScenarioFile parsed = parse_scenario(text);
        CHECK(serialize_scenario(parsed) == text);
        // parsing is also value-faithful, not just text-faithful
        CHECK(exante_payoff(parsed.signals[1], parsed.problem) ==
              exante_payoff(builtin_example(name).signals[1], builtin_example(name).problem));
    }
}

TEST_CASE("scenario grammar accepts comments and mixed interval syntax") {
    const char* text =
        "# a tiny scenario\n"
        "problem\n"
        "  states: w1 w2\n"
        "  actions: a1 a2   # two actions\n"
        "  prior: 1/2 1/2\n"
        "  payoff a1: 3 0\n"
        "  payoff a2: 0 1\n"
        "\n"
        "signal split\n"
        "  message lo: w1 [0,1/2); w2 [0,1/4) [3/4,1)\n"
        "  message hi: w1 [1/2,1); w2 [1/4,3/4)\n"
        "\n"
        "signal coarse\n"
        "  message all: states w1 w2\n";
    ScenarioFile sc = parse_scenario(text);
    CHECK(sc.problem.num_states() == 2);
    CHECK(sc.signals.size() == 2);
    CHECK(conditional_probability(sc.signal("split").messages[0], 1) == Rational(1, 2));
    CHECK(sc.signal("split").messages[0].support[1].parts().size() == 2);
    CHECK(same_partition(sc.signal("coarse"), trivial_signal(2)));

    // adjacent intervals merge during parsing
    ScenarioFile merged = parse_scenario(
        "problem\n  states: w1\n  actions: a1\n  prior: 1\n  payoff a1: 1\n"
        "signal s\n  message m: w1 [0,1/2) [1/2,1)\n");
    CHECK(merged.signal("s").messages[0].support[0] == IntervalSet::full());
}

TEST_CASE("parse errors carry locations and the expected wording") {
    auto error_of = [](const char* text) {
        try {
            parse_scenario(text);
            return std::string("no error");
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
    };

    CHECK(error_of("problem\n  states: w1 w2\n  actions: a1 a2\n  prior: 1/2 1/2\n"
                   "  payoff a1: 3 0\n  payoff a2: 0 1\n"
                   "signal s\n  message m: w1 [0,1/2); w2 [0,1)\n") ==
          "line 7, column 1: signal 's': state w1 not fully covered");
    CHECK(error_of("problem\n  states: w1\n  actions: a1\n  prior: 1\n  payoff a1: 1\n"
                   "signal s\n  message m: w1 [0,1)\n  message m: w1 [0,1)\n")
              .find("duplicate message label 'm'") != std::string::npos);
    CHECK(error_of("problem\n  states: w1\n  actions: a1\n  prior: 2/3\n  payoff a1: 1\n")
              .find("invalid prior") != std::string::npos);
    CHECK(error_of("problem\n  states: w1\n  actions: a1\n  prior: 1\n  payoff a1: 1\n"
                   "signal s\n  message m: w9 [0,1)\n")
              .find("unknown state 'w9'") != std::string::npos);
    CHECK(error_of("nonsense\n") == "line 1, column 1: unknown directive 'nonsense'");
    CHECK(error_of("problem\n  states: w1\n  actions: a1\n  prior: 1\n  payoff a1: 1\n"
                   "signal s\n  message m: w1 [0,0.5)\n")
              .find("malformed rational") != std::string::npos);
    CHECK(error_of("") == "line 1, column 1: missing problem block");

    try {
        parse_scenario("problem\n  states: w1\n  actions: a1\n  prior: x\n  payoff a1: 1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 10);
    }
}

TEST_CASE("degenerate problems need the explicit flags") {
    const char* degenerate =
        "problem\n  states: w1\n  actions: a1 a2\n  prior: 1\n"
        "  payoff a1: 1\n  payoff a2: 1\n";
    CHECK_THROWS_AS(parse_scenario(degenerate), ParseError);
    ParseOptions lax;
    lax.allow_degenerate_states = true;
    CHECK(parse_scenario(degenerate, lax).problem.has_degenerate_states());

    const char* zero_prior =
        "problem\n  states: w1 w2\n  actions: a1 a2\n  prior: 1 0\n"
        "  payoff a1: 1 0\n  payoff a2: 0 1\n";
    CHECK_THROWS_AS(parse_scenario(zero_prior), ParseError);
    ParseOptions zeros;
    zeros.allow_zero_prior = true;
    CHECK(parse_scenario(zero_prior, zeros).problem.prior().weights[1] == Rational(0));
}

TEST_CASE("types and menus cross-reference and validate") {
    std::string base =
        "problem\n  states: w1 w2\n  actions: a1 a2\n  prior: 1/2 1/2\n"
        "  payoff a1: 3 0\n  payoff a2: 0 1\n"
        "signal trivial\n  message all: states w1 w2\n"
        "signal full\n  message w1: states w1\n  message w2: states w2\n";

    ScenarioFile ok = parse_scenario(base +
                                     "types\n  type u = trivial weight 1\n"
                                     "menu m\n  item u = full price 3/2\n");
    CHECK(ok.types->types.size() == 1);
    CHECK(ok.menu("m").find("u").price == Rational(3, 2));

    CHECK_THROWS_AS(parse_scenario(base + "types\n  type u = ghost weight 1\n"), ParseError);
    CHECK_THROWS_AS(parse_scenario(base + "types\n  type u = trivial weight 1/2\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_scenario(base + "types\n  type u = trivial weight 1\nmenu m\n"),
        ParseError);  // menu misses the type's item
    CHECK_THROWS_AS(parse_scenario(base + "menu m\n  item u = full price 1\n"), ParseError);
}

TEST_CASE("random scenarios round-trip through text") {
    testsupport::Rng rng(83);
    for (int round = 0; round < 25; ++round) {
        ScenarioFile sc;
        sc.problem = testsupport::random_problem(rng, std::size_t(rng.range(1, 4)),
                                                 std::size_t(rng.range(1, 3)));
        Signal a = testsupport::random_signal(rng, sc.problem.num_states());
        a.name = "a";
        Signal b = testsupport::random_signal(rng, sc.problem.num_states());
        b.name = "b";
        sc.signals = {a, b};
        std::string text = serialize_scenario(sc);
        ScenarioFile back = parse_scenario(text);
        CHECK(serialize_scenario(back) == text);
        CHECK(back.signals.size() == 2);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(same_partition(back.signals[i], sc.signals[i]));
        CHECK(back.problem.prior().weights == sc.problem.prior().weights);
        CHECK(back.problem.payoffs() == sc.problem.payoffs());
    }
}

TEST_CASE("report rationals survive the structured format") {
    Json doc = Json::object();
    doc["a"] = rational_json(Rational(-91, 232));
    doc["b"] = rational_json(Rational(10, 3));
    doc["c"] = rational_json(Rational(85));
    std::string rendered = render_report(doc, Format::json_like);
    Json parsed = Json::parse(rendered);
    for (const char* key : {"a", "b", "c"}) {
        CHECK(is_rational_json(parsed[key]));
        CHECK(Rational::parse(parsed[key]["exact"].get<std::string>()) ==
              Rational::parse(doc[key]["exact"].get<std::string>()));
    }
    CHECK(parsed["b"]["decimal"].get<std::string>().find("...") != std::string::npos);

    // the csv rendering carries both forms as well
    std::string csv = render_report(doc, Format::csv);
    CHECK(csv.find("a,-91/232,") != std::string::npos);
    CHECK(csv.find("c,85,85") != std::string::npos);
}

TEST_CASE("format names parse strictly") {
    CHECK(parse_format("text") == Format::text);
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("json-like") == Format::json_like);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}
