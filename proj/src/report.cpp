#include "legseq/report.hpp"

#include "legseq/error.hpp"

namespace legseq {

using json = nlohmann::ordered_json;

json to_json(const conditions::ConditionReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id}, {"passed", c.passed}, {"diagnostic", c.diagnostic}});
    return {{"overall", r.overall()}, {"checks", std::move(checks)}};
}

conditions::ConditionReport condition_report_from_json(const json& j)
{
    conditions::ConditionReport r;
    for (const auto& c : j.at("checks"))
        r.add(c.at("id").get<std::string>(), c.at("passed").get<bool>(), c.at("diagnostic").get<std::string>());
    return r;
}

namespace {

json witness_json(const measures::Witness& w)
{
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, measures::WellDistributionWitness>) {
                return {{"a", v.a}, {"b", v.b}, {"t", v.t}};
            } else if constexpr (std::is_same_v<T, measures::CorrelationWitness>) {
                return {{"d", v.d}, {"m", v.m}};
            } else {
                std::vector<std::size_t> members;
                for (auto i : v.members)
                    members.push_back(i + 1);
                return {{"members", members}, {"d", v.d}, {"m", v.m}};
            }
        },
        w);
}

measures::Witness witness_from_json(const std::string& name, const json& j)
{
    if (name == "W")
        return measures::WellDistributionWitness{j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>(),
                                                 j.at("t").get<std::int64_t>()};
    if (name == "C")
        return measures::CorrelationWitness{j.at("d").get<std::vector<std::int64_t>>(), j.at("m").get<std::int64_t>()};
    if (name == "Phi") {
        measures::CrossCorrelationWitness w;
        for (auto i : j.at("members").get<std::vector<std::size_t>>())
            w.members.push_back(i - 1);
        w.d = j.at("d").get<std::vector<std::int64_t>>();
        w.m = j.at("m").get<std::int64_t>();
        return w;
    }
    throw ParseError("unknown measure name: " + name);
}

measures::MethodKind method_from_name(const std::string& s)
{
    if (s == "exact")
        return measures::MethodKind::exact;
    if (s == "sampled")
        return measures::MethodKind::sampled;
    if (s == "oracle")
        return measures::MethodKind::oracle;
    throw ParseError("unknown method: " + s);
}

} // namespace

json to_json(const measures::MeasureResult& m)
{
    json j;
    j["name"] = m.name;
    j["order"] = m.order ? json(*m.order) : json(nullptr);
    j["value"] = m.value;
    j["method"] = measures::method_name(m.method.kind);
    const bool sampled = m.method.kind == measures::MethodKind::sampled;
    j["seed"] = sampled ? json(m.method.seed) : json(nullptr);
    j["samples"] = sampled ? json(m.method.samples) : json(nullptr);
    j["witness"] = witness_json(m.witness);
    return j;
}

measures::MeasureResult measure_from_json(const json& j)
{
    measures::MeasureResult m;
    m.name = j.at("name").get<std::string>();
    if (!j.at("order").is_null())
        m.order = j.at("order").get<int>();
    m.value = j.at("value").get<std::int64_t>();
    m.method.kind = method_from_name(j.at("method").get<std::string>());
    if (!j.at("seed").is_null())
        m.method.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("samples").is_null())
        m.method.samples = j.at("samples").get<std::uint64_t>();
    m.witness = witness_from_json(m.name, j.at("witness"));
    return m;
}

json to_json(const bounds::BoundReport& b)
{
    json j;
    j["name"] = b.name;
    j["k"] = b.k;
    j["order"] = b.order ? json(*b.order) : json(nullptr);
    j["p"] = b.p;
    j["value"] = b.value;
    j["measured"] = b.measured ? json(*b.measured) : json(nullptr);
    j["guaranteed"] = b.guaranteed;
    const auto s = b.slack();
    j["slack"] = s ? json(*s) : json(nullptr);
    return j;
}

bounds::BoundReport bound_from_json(const json& j)
{
    bounds::BoundReport b;
    b.name = j.at("name").get<std::string>();
    b.k = j.at("k").get<int>();
    if (!j.at("order").is_null())
        b.order = j.at("order").get<int>();
    b.p = j.at("p").get<std::uint64_t>();
    b.value = j.at("value").get<double>();
    if (!j.at("measured").is_null())
        b.measured = j.at("measured").get<std::int64_t>();
    b.guaranteed = j.at("guaranteed").get<bool>();
    return b;
}

json to_json(const RunReport& r)
{
    json j;
    j["version"] = r.version;
    j["p"] = r.p ? json(*r.p) : json(nullptr);
    json polys = json::object();
    for (const auto& [role, e] : r.polynomials)
        polys[role] = {{"text", e.text}, {"coeffs", e.coeffs}};
    j["polynomials"] = std::move(polys);
    j["n"] = r.n;
    j["conditions"] = r.conditions ? to_json(*r.conditions) : json(nullptr);
    json ms = json::array();
    for (const auto& m : r.measures)
        ms.push_back(to_json(m));
    j["measures"] = std::move(ms);
    json bs = json::array();
    for (const auto& b : r.bounds)
        bs.push_back(to_json(b));
    j["bounds"] = std::move(bs);
    json t = json::object();
    for (const auto& [k, v] : r.timing_ms)
        t[k] = v;
    j["timing_ms"] = std::move(t);
    return j;
}

RunReport run_report_from_json(const json& j)
{
    RunReport r;
    r.version = j.at("version").get<std::string>();
    if (!j.at("p").is_null())
        r.p = j.at("p").get<std::uint64_t>();
    for (const auto& [role, e] : j.at("polynomials").items())
        r.polynomials[role] = {e.at("text").get<std::string>(), e.at("coeffs").get<std::vector<std::uint64_t>>()};
    r.n = j.at("n").get<std::size_t>();
    if (!j.at("conditions").is_null())
        r.conditions = condition_report_from_json(j.at("conditions"));
    for (const auto& m : j.at("measures"))
        r.measures.push_back(measure_from_json(m));
    for (const auto& b : j.at("bounds"))
        r.bounds.push_back(bound_from_json(b));
    for (const auto& [k, v] : j.at("timing_ms").items())
        r.timing_ms[k] = v.get<double>();
    return r;
}

std::string deterministic_dump(json j)
{
    if (j.is_object())
        j.erase("timing_ms");
    return j.dump(2);
}

} // namespace legseq
