#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "infomarket/report.hpp"
#include "infomarket/scenario.hpp"

namespace infomarket {

/// Names of the bundled scenarios: monopolist, clinical, triangular.
const std::vector<std::string>& builtin_example_names();

bool is_builtin_example(std::string_view name);

/// The bundled scenario itself. Throws on unknown names.
const ScenarioFile& builtin_example(std::string_view name);

/// Canonical text of the bundled scenario; this is also the content of the
/// corresponding file under scenarios/.
const std::string& builtin_example_text(std::string_view name);

/// One-line description per example.
std::string builtin_example_summary(std::string_view name);

/// Worked-value report: payoffs, incremental values, complements, and the
/// bundled menu's audit.
Json builtin_example_report(std::string_view name);

struct ExampleCheck {
    std::string label;
    bool pass = false;
    std::string detail;  // expected vs. actual on failure
};

/// Recomputes every pinned value of every bundled example and compares
/// exactly. Backs `examples --verify`.
std::vector<ExampleCheck> verify_builtin_examples();

}  // namespace infomarket
