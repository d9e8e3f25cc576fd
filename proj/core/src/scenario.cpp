#include "mwc/scenario.hpp"

#include <algorithm>
#include <map>

namespace mwc {

bool same_structure(const Scenario& a, const Scenario& b)
{
    auto same_binding = [](const Binding& x, const Binding& y) { return x.name == y.name && x.expr == y.expr; };
    auto same_wall = [](const WallTerm& x, const WallTerm& y) {
        return x.alpha == y.alpha && std::ranges::equal(x.plus, y.plus) && std::ranges::equal(x.minus, y.minus);
    };
    auto same_model = [](const Model& x, const Model& y) {
        return x.name == y.name && x.with_walls == y.with_walls && x.expr == y.expr;
    };
    auto same_expectation = [](const Expectation& x, const Expectation& y) {
        return x.model == y.model && x.expected == y.expected;
    };
    return std::ranges::equal(a.bindings, b.bindings, same_binding) &&
           std::ranges::equal(a.walls, b.walls, same_wall) && std::ranges::equal(a.models, b.models, same_model) &&
           std::ranges::equal(a.expectations, b.expectations, same_expectation);
}

CheckResult CheckResult::polynomial(std::string name, const Polynomial& expected, const Polynomial& computed)
{
    Polynomial residual = computed - expected;
    return {std::move(name), expected.to_string(), computed.to_string(), residual.to_string(), residual.is_zero(), {}};
}

CheckResult CheckResult::value(std::string name, std::string expected, std::string computed)
{
    const bool pass = expected == computed;
    return {std::move(name), std::move(expected), std::move(computed), std::nullopt, pass, {}};
}

CheckResult CheckResult::failure(std::string name, std::string expected, std::string error)
{
    return {std::move(name), std::move(expected), std::nullopt, std::nullopt, false, std::move(error)};
}

bool VerificationReport::all_passed() const
{
    return std::ranges::all_of(checks, &CheckResult::pass) &&
           std::ranges::all_of(models, [](const ModelResult& m) { return m.error.empty(); });
}

VerificationReport run_scenario(const Scenario& scenario)
{
    VerificationReport report;
    report.scenario = scenario.name;

    Environment env;
    for (const auto& b : scenario.bindings) {
        try {
            env.bind(b.name, eval_expr(b.expr, env));
        } catch (const std::exception& e) {
            env.bind_failure(b.name, e.what());
        }
    }

    std::map<std::string, const ModelResult*> by_name;
    report.models.reserve(scenario.models.size());
    for (const auto& m : scenario.models) {
        ModelResult result{m.name, std::nullopt, {}};
        try {
            Polynomial base = eval_expr(m.expr, env);
            result.value = m.with_walls ? assemble(base, scenario.walls, env) : std::move(base);
        } catch (const std::exception& e) {
            result.error = e.what();
        }
        report.models.push_back(std::move(result));
        by_name[m.name] = &report.models.back();
    }

    for (const auto& expectation : scenario.expectations) {
        auto it = by_name.find(expectation.model);
        if (it == by_name.end()) {
            report.checks.push_back(CheckResult::failure(expectation.model, expectation.expected.to_string(),
                                                         "unknown model " + expectation.model));
        } else if (!it->second->value) {
            report.checks.push_back(
                CheckResult::failure(expectation.model, expectation.expected.to_string(), it->second->error));
        } else {
            report.checks.push_back(CheckResult::polynomial(expectation.model, expectation.expected, *it->second->value));
        }
    }
    return report;
}

}  // namespace mwc
