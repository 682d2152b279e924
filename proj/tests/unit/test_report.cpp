#include "legseq/report.hpp"

#include <doctest.h>

using namespace legseq;

namespace {

RunReport sample_report()
{
    RunReport r;
    r.p = 13;
    r.polynomials["f"] = {"x^2-2", {11, 0, 1}};
    r.n = 13;
    conditions::ConditionReport c;
    c.add("squarefree_f", true, "");
    r.conditions = c;

    measures::MeasureResult w;
    w.name = "W";
    w.value = 5;
    w.witness = measures::WellDistributionWitness{1, 2, 3};
    r.measures.push_back(w);

    measures::MeasureResult s;
    s.name = "C";
    s.order = 3;
    s.value = 7;
    s.method = {measures::MethodKind::sampled, 100, 1};
    s.witness = measures::CorrelationWitness{{0, 2, 5}, 4};
    r.measures.push_back(s);

    measures::MeasureResult ph;
    ph.name = "Phi";
    ph.order = 2;
    ph.value = 4;
    ph.witness = measures::CrossCorrelationWitness{{0, 1}, {0, 0}, 4};
    r.measures.push_back(ph);

    bounds::BoundReport b;
    b.name = "W_single";
    b.k = 2;
    b.p = 13;
    b.value = 100.5;
    b.measured = 5;
    b.guaranteed = true;
    r.bounds.push_back(b);
    r.timing_ms["W"] = 1.5;
    return r;
}

} // namespace

TEST_CASE("report layout")
{
    const auto j = to_json(sample_report());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"version", "p", "polynomials", "n", "conditions", "measures", "bounds",
                                           "timing_ms"});
    CHECK(j["measures"][0]["witness"]["a"] == 1);
    CHECK(j["measures"][1]["method"] == "sampled");
    CHECK(j["measures"][1]["seed"] == 1);
    CHECK(j["measures"][2]["witness"]["members"] == nlohmann::ordered_json::array({1, 2}));
    CHECK(j["bounds"][0]["slack"].get<double>() == doctest::Approx(5 / 100.5));
    CHECK(j["conditions"]["overall"] == true);
}

TEST_CASE("report round trip")
{
    const auto j = to_json(sample_report());
    const auto back = run_report_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(std::get<measures::CrossCorrelationWitness>(back.measures[2].witness).members ==
          std::vector<std::size_t>{0, 1});
}

TEST_CASE("deterministic dump ignores timing")
{
    auto a = sample_report();
    auto b = sample_report();
    b.timing_ms["W"] = 99.0;
    CHECK(deterministic_dump(to_json(a)) == deterministic_dump(to_json(b)));
    b.measures[0].value = 6;
    CHECK(deterministic_dump(to_json(a)) != deterministic_dump(to_json(b)));
}
