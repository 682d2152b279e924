#include "legseq/cli.hpp"
#include "legseq/report.hpp"
#include "legseq/rng.hpp"
#include "legseq/sequence.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace legseq;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "legseq");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name)
{
    return (fs::temp_directory_path() / ("legseq_cli_" + name)).string();
}

std::string write_body(const std::string& name, const std::string& body)
{
    const auto path = tmp(name);
    save_sequence(path, sequence_from_body(body));
    return path;
}

std::string body_of(const std::string& text)
{
    std::istringstream is(text);
    return read_sequence(is).body();
}

nlohmann::ordered_json parse(const std::string& s)
{
    return nlohmann::ordered_json::parse(s);
}

} // namespace

TEST_CASE("gen")
{
    auto r = run({"gen", "--p", "7", "--f", "x"});
    CHECK(r.code == cli::ok);
    CHECK(r.out == "#LEGSEQ v1 p=7 n=7\n++-+--+\n");

    r = run({"gen", "--p", "13", "--theorem2", "A=2", "B=5", "C=6"});
    CHECK(r.code == cli::ok);
    CHECK(body_of(r.out).size() == 13);

    const auto single = run({"gen", "--p", "13", "--f", "x^2-2"});
    const auto triple = run({"gen", "--p", "13", "--f", "x^2-2", "--g", "x^2-2", "--h", "x^2-5"});
    CHECK(triple.code == cli::ok);
    CHECK(body_of(triple.out) == body_of(single.out));

    r = run({"gen", "--p", "7", "--f", "x", "--truncate-half"});
    CHECK(body_of(r.out) == "++-+");
}

TEST_CASE("gen refuses failing conditions")
{
    auto r = run({"gen", "--p", "13", "--f", "x^2-2", "--g", "x^2-5", "--h", "x^2-2"});
    CHECK(r.code == cli::condition_failure);
    r = run({"gen", "--p", "13", "--f", "x^2-2", "--g", "x^2-5", "--h", "x^2-2", "--skip-checks"});
    CHECK(r.code == cli::ok);
    CHECK(run({"gen", "--p", "7", "--f", "x^2"}).code == cli::condition_failure);
    CHECK(run({"gen", "--p", "13", "--theorem2", "A=4", "B=5", "C=6"}).code == cli::condition_failure);
}

TEST_CASE("input errors")
{
    CHECK(run({"gen", "--p", "8", "--f", "x"}).code == cli::input_error);
    CHECK(run({"gen", "--p", "7", "--f", "x^^2"}).code == cli::input_error);
    CHECK(run({"check", "--p", "7", "--f", "x+"}).code == cli::input_error);
    CHECK(run({"gen", "--p", "7", "--f", "x", "--g", "x+1"}).code == cli::input_error);
    CHECK(run({"frobnicate"}).code == cli::input_error);
    CHECK(run({}).code == cli::input_error);
    CHECK(run({"measure", "--in", tmp("does_not_exist")}).code == cli::input_error);
}

TEST_CASE("check")
{
    auto r = run({"check", "--p", "13", "--f", "x^2-2", "--g", "x^2-5", "--h", "x^2-2"});
    CHECK(r.code == cli::condition_failure);
    CHECK(r.out.find("t=p shift reproduces f") != std::string::npos);

    r = run({"check", "--p", "13", "--theorem2", "A=2", "B=5", "C=6"});
    CHECK(r.code == cli::ok);
    CHECK(parse(r.out)["overall"] == true);

    r = run({"check", "--p", "5003", "--f", "x^2+1", "--g", "x^2+3x+1", "--h", "x^3-1", "--orders", "2,3",
             "--symmetric"});
    CHECK(r.code == cli::ok);
    const auto j = parse(r.out);
    CHECK(j["checks"][3]["id"] == "g_not_divides_shifts_fh");
    CHECK(j["correlation_orders"]["3"]["satisfied"].back() == "order_iii");
}

TEST_CASE("measure")
{
    auto r = run({"measure", "--p", "101", "--f", "x^2+1", "--orders", "2,3"});
    REQUIRE(r.code == cli::ok);
    auto j = parse(r.out);
    CHECK(j["n"] == 101);
    CHECK(j["measures"].size() == 3);
    CHECK(j["bounds"][0]["name"] == "W_single");
    CHECK(j["bounds"][1]["guaranteed"] == true);
    CHECK(j["polynomials"]["f"]["coeffs"] == nlohmann::ordered_json::array({1, 0, 1}));

    const auto a = run({"measure", "--p", "101", "--f", "x^2+1", "--g", "x^2+3x+1", "--h", "x^3-1", "--orders",
                        "3", "--method", "sampled", "--samples", "50", "--seed", "1"});
    const auto b = run({"measure", "--p", "101", "--f", "x^2+1", "--g", "x^2+3x+1", "--h", "x^3-1", "--orders",
                        "3", "--method", "sampled", "--samples", "50", "--seed", "1"});
    CHECK(a.code == cli::ok);
    CHECK(deterministic_dump(parse(a.out)) == deterministic_dump(parse(b.out)));

    CHECK(run({"measure", "--p", "2003", "--f", "x^2+1", "--orders", "5", "--budget", "1000"}).code ==
          cli::budget_exceeded);
}

TEST_CASE("measure exact equals oracle")
{
    SplitMix64 rng(40);
    std::string body;
    for (int i = 0; i < 40; ++i)
        body += rng.below(2) ? '+' : '-';
    const auto path = write_body("oracle40.seq", body);
    const auto a = parse(run({"measure", "--in", path, "--orders", "2,3"}).out);
    const auto b = parse(run({"measure", "--in", path, "--orders", "2,3", "--oracle"}).out);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a["measures"][i]["value"] == b["measures"][i]["value"]);
        CHECK(a["measures"][i]["witness"] == b["measures"][i]["witness"]);
    }
    fs::remove(path);
}

TEST_CASE("gen then measure equals inline measure")
{
    const auto path = tmp("roundtrip.seq");
    CHECK(run({"gen", "--p", "223", "--f", "x^2+1", "--g", "x^2+3x+1", "--h", "x^3-1", "--out", path}).code ==
          cli::ok);
    const auto from_file = parse(run({"measure", "--in", path}).out);
    const auto inline_ = parse(run({"measure", "--p", "223", "--f", "x^2+1", "--g", "x^2+3x+1", "--h", "x^3-1"}).out);
    CHECK(from_file["measures"] == inline_["measures"]);
    fs::remove(path);
}

TEST_CASE("combine")
{
    const auto f = write_body("F.seq", "++--+-+-");
    const auto g = write_body("G.seq", "-+-+-+-+");
    const auto h = write_body("H.seq", "++++++++");
    auto r = run({"combine", f, g, h});
    CHECK(r.code == cli::ok);
    CHECK(body_of(r.out) == "++--+-+-");

    const auto gneg = write_body("Gneg.seq", "--++-+-+");
    r = run({"combine", f, gneg, f});
    CHECK(body_of(r.out) == "++++++++");
    CHECK(run({"combine", f, gneg, f, "--check-distinct"}).code == cli::condition_failure);

    const auto short_ = write_body("S.seq", "+-+");
    CHECK(run({"combine", f, g, short_}).code == cli::input_error);
    for (const auto& p : {f, g, h, gneg, short_})
        fs::remove(p);
}

TEST_CASE("crosscorr")
{
    const auto a = write_body("cA.seq", "++++");
    const auto b = write_body("cB.seq", "----");
    auto r = run({"crosscorr", a, b, "--order", "2"});
    REQUIRE(r.code == cli::ok);
    CHECK(parse(r.out)["measures"][0]["value"] == 4);

    SplitMix64 rng(16);
    std::vector<std::string> paths;
    for (int k = 0; k < 3; ++k) {
        std::string body;
        for (int i = 0; i < 16; ++i)
            body += rng.below(2) ? '+' : '-';
        paths.push_back(write_body("t3_" + std::to_string(k) + ".seq", body));
    }
    r = run({"crosscorr", "--order", "2", "--theorem3", paths[0], paths[1], paths[2]});
    REQUIRE(r.code == cli::ok);
    const auto j = parse(r.out);
    const auto& bound = j["bounds"][0];
    CHECK(bound["name"] == "theorem3");
    CHECK(bound["measured"].get<double>() <= bound["value"].get<double>());

    CHECK(run({"crosscorr", "--order", "2", "--theorem3", paths[0], paths[0], paths[1]}).code ==
          cli::condition_failure);
    CHECK(run({"crosscorr", a, "--order", "6", "--budget", "10"}).code == cli::budget_exceeded);
    for (const auto& p : paths)
        fs::remove(p);
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("bounds")
{
    auto r = run({"bounds", "--p", "2003", "--k", "2"});
    REQUIRE(r.code == cli::ok);
    const auto j = parse(r.out);
    CHECK(j[0]["value"].get<double>() == doctest::Approx(6804.892406358014));
    CHECK(run({"bounds", "--p", "2003", "--k", "2", "--format", "text"}).out.find("C_triple") != std::string::npos);
    CHECK(run({"bounds", "--p", "2001", "--k", "2"}).code == cli::input_error);
}

TEST_CASE("table rejects bad selections")
{
    CHECK(run({"table", "--example", "5"}).code == cli::input_error);
    CHECK(run({"table", "--example", "1", "--format", "xml"}).code == cli::input_error);
}
