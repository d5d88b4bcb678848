#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infomarket/decision.hpp"
#include "infomarket/mechanism.hpp"
#include "infomarket/signal.hpp"

namespace infomarket {

/// Parse failure with a 1-based source location.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A scenario: one decision problem, named signals over its states, and
/// optionally a type space and named menus.
///
/// The text format is line oriented with `#` comments:
///
///   problem
///     states: w1 w2
///     actions: a1 a2
///     prior: 1/2 1/2
///     payoff a1: 3 0
///     payoff a2: 0 1
///
///   signal informed
///     message low: w1 [0,1/2); w2 [0,1/4) [3/4,1)
///     message high: states w2        # shorthand for full [0,1) support
///
///   types
///     type uninformed = trivial weight 1/2
///
///   menu surplus
///     item uninformed = full price 15
struct ScenarioFile {
    DecisionProblem problem;
    std::vector<Signal> signals;
    std::optional<TypeSpace> types;
    std::vector<Menu> menus;

    const Signal& signal(std::string_view name) const;
    bool has_signal(std::string_view name) const;
    const Menu& menu(std::string_view name) const;
};

struct ParseOptions {
    bool allow_degenerate_states = false;
    bool allow_zero_prior = false;
};

ScenarioFile parse_scenario(std::string_view text, const ParseOptions& options = {});

/// Canonical rendering: parse(serialize(x)) reproduces x, and serializing a
/// canonical file reproduces it byte for byte.
std::string serialize_scenario(const ScenarioFile& scenario);

}  // namespace infomarket
