#include "mwc/scenario.hpp"

#include <json.hpp>

namespace mwc {

using nlohmann::json;

namespace {

json optional_text(const std::optional<std::string>& text)
{
    return text ? json(*text) : json(nullptr);
}

std::optional<std::string> read_optional(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::string>();
}

}  // namespace

std::string report_to_json(const VerificationReport& report, int indent)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry = {
            {"name", c.name},
            {"expected", c.expected},
            {"computed", optional_text(c.computed)},
            {"residual", optional_text(c.residual)},
            {"pass", c.pass},
        };
        if (!c.error.empty()) entry["error"] = c.error;
        checks.push_back(std::move(entry));
    }
    json models = json::array();
    for (const auto& m : report.models) {
        json entry = {{"name", m.name}, {"value", m.value ? json(m.value->to_string()) : json(nullptr)}};
        if (!m.error.empty()) entry["error"] = m.error;
        models.push_back(std::move(entry));
    }
    json doc = {{"scenario", report.scenario}, {"checks", std::move(checks)}, {"models", std::move(models)}};
    return doc.dump(indent);
}

VerificationReport report_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
        VerificationReport report;
        report.scenario = doc.at("scenario").get<std::string>();
        for (const auto& c : doc.at("checks")) {
            CheckResult check;
            check.name = c.at("name").get<std::string>();
            check.expected = c.at("expected").get<std::string>();
            check.computed = read_optional(c, "computed");
            check.residual = read_optional(c, "residual");
            check.pass = c.at("pass").get<bool>();
            check.error = c.value("error", std::string{});
            report.checks.push_back(std::move(check));
        }
        if (doc.contains("models")) {
            for (const auto& m : doc.at("models")) {
                ModelResult model;
                model.name = m.at("name").get<std::string>();
                if (auto value = read_optional(m, "value")) model.value = Polynomial::parse(*value);
                model.error = m.value("error", std::string{});
                report.models.push_back(std::move(model));
            }
        }
        return report;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
}

}  // namespace mwc
