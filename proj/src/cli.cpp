#include "legseq/cli.hpp"

#include "legseq/bounds.hpp"
#include "legseq/conditions.hpp"
#include "legseq/constructions.hpp"
#include "legseq/error.hpp"
#include "legseq/measures.hpp"
#include "legseq/poly_parse.hpp"
#include "legseq/report.hpp"
#include "legseq/tables.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace legseq::cli {

namespace {

using json = nlohmann::ordered_json;
using conditions::ConditionReport;

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> parse_orders(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad order list: " + text);
        }
        if (used != item.size())
            throw ParseError("bad order list: " + text);
        if (v < 2)
            throw ParseError("correlation orders must be at least 2");
        out.push_back(v);
    }
    if (out.empty())
        throw ParseError("empty order list");
    return out;
}

/// "A=2,7" -> {2, 7}; the label must match.
std::set<ff::residue> parse_labeled_set(const std::string& text, char label)
{
    if (text.size() < 2 || text[0] != label || text[1] != '=')
        throw ParseError(std::string("expected ") + label + "=<n>[,<n>...], got '" + text + "'");
    std::set<ff::residue> out;
    std::stringstream ss(text.substr(2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad residue '" + item + "' in " + text);
        }
        if (used != item.size())
            throw ParseError("bad residue '" + item + "' in " + text);
        out.insert(v);
    }
    if (out.empty())
        throw ParseError(std::string("set ") + label + " is empty");
    return out;
}

void set_threads(int threads)
{
    if (threads > 0)
        omp_set_num_threads(threads);
}

/// Options shared by commands that build a sequence from polynomials.
struct SourceOptions {
    std::uint64_t p = 0;
    std::string f, g, h;
    std::vector<std::string> theorem2;
    std::string in;

    void add_to(CLI::App& app, bool allow_file)
    {
        app.add_option("--p", p, "odd prime modulus");
        app.add_option("--f", f, "polynomial f (text or [c0,c1,...])");
        app.add_option("--g", g, "polynomial g");
        app.add_option("--h", h, "polynomial h");
        app.add_option("--theorem2", theorem2, "non-residue sets A=.. B=.. C=..")->expected(3);
        if (allow_file)
            app.add_option("--in", in, "sequence file instead of polynomials");
    }
};

enum class SourceKind { single, triple, theorem2, file };

/// A resolved sequence source with everything known about its provenance.
struct Source {
    SourceKind kind = SourceKind::file;
    std::optional<ff::PrimeModulus> p;
    std::map<std::string, PolyEntry> polynomials;
    std::optional<ff::Poly> single;
    std::optional<PolyTriple> triple;
    std::optional<std::array<std::set<ff::residue>, 3>> sets;
    ConditionReport checks;
    bool checks_run = false;
};

PolyEntry entry(const std::string& text, const ff::Poly& poly)
{
    return {text, poly.coeffs()};
}

/// Parses the polynomial options and runs the precondition checks that apply.
/// Returns the report; never throws for failed conditions.
Source resolve_source(const SourceOptions& opt, bool symmetric = false)
{
    Source s;
    if (!opt.in.empty())
        return s;
    if (opt.p == 0)
        throw ParseError("--p is required");
    s.p = ff::PrimeModulus(opt.p);
    const auto& p = *s.p;

    if (!opt.theorem2.empty()) {
        if (!opt.f.empty() || !opt.g.empty() || !opt.h.empty())
            throw ParseError("--theorem2 cannot be combined with --f/--g/--h");
        s.kind = SourceKind::theorem2;
        std::array<std::set<ff::residue>, 3> sets{parse_labeled_set(opt.theorem2[0], 'A'),
                                                  parse_labeled_set(opt.theorem2[1], 'B'),
                                                  parse_labeled_set(opt.theorem2[2], 'C')};
        s.checks = conditions::check_theorem2_sets(p, sets[0], sets[1], sets[2]);
        s.checks_run = true;
        s.sets = sets;
        bool all_qnr = true;
        for (const auto& c : s.checks.checks)
            if (c.id.starts_with("qnr_") && !c.passed)
                all_qnr = false;
        if (all_qnr) {
            s.triple = build_theorem2_polys(QnrSet(p, sets[0]), QnrSet(p, sets[1]), QnrSet(p, sets[2]));
            s.polynomials["f"] = entry(opt.theorem2[0], s.triple->f);
            s.polynomials["g"] = entry(opt.theorem2[1], s.triple->g);
            s.polynomials["h"] = entry(opt.theorem2[2], s.triple->h);
            auto sq = conditions::check_squarefree_triple(*s.triple);
            s.checks.append(sq);
            if (sq.overall())
                s.checks.append(symmetric ? conditions::check_divisibility_condition_symmetric(*s.triple)
                                          : conditions::check_divisibility_condition(*s.triple));
        }
        return s;
    }

    if (opt.f.empty())
        throw ParseError("--f is required (or --theorem2, or --in)");
    const bool have_g = !opt.g.empty(), have_h = !opt.h.empty();
    if (have_g != have_h)
        throw ParseError("--g and --h must be given together");

    auto f = ff::parse_poly(opt.f, p);
    if (!have_g) {
        s.kind = SourceKind::single;
        s.polynomials["f"] = entry(opt.f, f);
        if (f.degree() < 1)
            throw Error("constant polynomial f");
        s.checks.add("squarefree_f", false, "");
        try {
            const bool ok = ff::is_squarefree(f);
            s.checks.checks.back() = {"squarefree_f", ok, ok ? "" : "f has a repeated factor"};
        } catch (const Error& e) {
            s.checks.checks.back().diagnostic = e.what();
        }
        s.checks_run = true;
        s.single = std::move(f);
        return s;
    }

    auto g = ff::parse_poly(opt.g, p);
    auto h = ff::parse_poly(opt.h, p);
    s.kind = SourceKind::triple;
    s.polynomials["f"] = entry(opt.f, f);
    s.polynomials["g"] = entry(opt.g, g);
    s.polynomials["h"] = entry(opt.h, h);
    s.triple = PolyTriple(f, g, h);
    auto sq = conditions::check_squarefree_triple(*s.triple);
    s.checks = sq;
    s.checks_run = true;
    if (f == g) {
        // The filter collapses to the single-polynomial construction.
        s.checks.add("f_equals_g", true, "f = g: sequence coincides with the single-polynomial construction");
        return s;
    }
    if (sq.overall())
        s.checks.append(symmetric ? conditions::check_divisibility_condition_symmetric(*s.triple)
                                  : conditions::check_divisibility_condition(*s.triple));
    return s;
}

BinarySequence build_sequence(const Source& s, const std::string& in_path)
{
    switch (s.kind) {
    case SourceKind::file:
        return load_sequence(in_path);
    case SourceKind::single:
        return construct_single(*s.single);
    case SourceKind::triple:
    case SourceKind::theorem2:
        if (!s.triple)
            throw Error("cannot build a sequence: invalid non-residue sets");
        return construct_triple(*s.triple);
    }
    throw Error("unreachable");
}

void attach_polynomial_meta(BinarySequence& seq, const Source& s)
{
    for (const auto& [role, e] : s.polynomials)
        seq.meta().polynomials[role] = e.text;
}

void write_output(const std::string& path, std::ostream& out, const std::string& text)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error("cannot open for writing: " + path);
    os << text;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
    SourceOptions src;
    bool truncate = false;
    bool skip_checks = false;
    std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err)
{
    auto s = resolve_source(o.src);
    if (s.kind == SourceKind::file)
        throw ParseError("gen needs polynomials");
    if (!o.skip_checks && !s.checks.overall()) {
        err << to_json(s.checks).dump(2) << '\n';
        err << "conditions failed; pass --skip-checks to generate anyway\n";
        return condition_failure;
    }
    auto seq = build_sequence(s, "");
    attach_polynomial_meta(seq, s);
    if (o.truncate)
        seq = truncate_half(seq);
    std::ostringstream os;
    write_sequence(os, seq);
    write_output(o.out, out, os.str());
    return ok;
}

// ---------------------------------------------------------------- check

struct CheckOptions {
    SourceOptions src;
    bool symmetric = false;
    std::string orders;
};

int cmd_check(const CheckOptions& o, std::ostream& out)
{
    auto s = resolve_source(o.src, o.symmetric);
    if (s.kind == SourceKind::file)
        throw ParseError("check needs polynomials");
    json j = to_json(s.checks);
    if (!o.orders.empty()) {
        int k = s.triple ? s.triple->k() : s.single->degree();
        json orders = json::object();
        for (int l : parse_orders(o.orders)) {
            auto r = conditions::check_correlation_order(l, k, *s.p);
            orders[std::to_string(l)] = {{"satisfied", r.satisfied}, {"checks", to_json(r.report).at("checks")}};
        }
        j["correlation_orders"] = std::move(orders);
    }
    out << j.dump(2) << '\n';
    return s.checks.overall() ? ok : condition_failure;
}

// ---------------------------------------------------------------- measure

struct MeasureOptions {
    SourceOptions src;
    std::string orders = "2";
    std::string method = "exact";
    std::uint64_t samples = 10000;
    std::uint64_t seed = measures::default_seed;
    std::uint64_t budget = measures::default_budget;
    bool oracle = false;
    std::string out;
};

void attach_bounds(RunReport& report, const Source& s, const std::vector<int>& orders)
{
    if (!s.p || s.kind == SourceKind::file)
        return;
    const auto p = s.p->value();
    const bool collapsed = s.triple && s.triple->f == s.triple->g;
    const bool single_like = s.kind == SourceKind::single || collapsed;
    const int k = single_like ? (s.single ? s.single->degree() : s.triple->f.degree()) : s.triple->k();
    const bool base_ok = s.checks.overall();

    auto measured = [&](const std::string& name, std::optional<int> order) -> std::optional<std::int64_t> {
        for (const auto& m : report.measures)
            if (m.name == name && m.order == order && m.method.kind != measures::MethodKind::sampled)
                return m.value;
        return std::nullopt;
    };

    bounds::BoundReport w;
    w.name = single_like ? "W_single" : "W_triple";
    w.k = k;
    w.p = p;
    w.value = bounds::bound_W(k, p);
    w.measured = measured("W", std::nullopt);
    w.guaranteed = base_ok;
    report.bounds.push_back(w);

    for (int l : orders) {
        const auto ord = conditions::check_correlation_order(l, k, *s.p);
        bounds::BoundReport c;
        c.name = single_like ? "C_single" : "C_triple";
        c.k = k;
        c.order = l;
        c.p = p;
        c.value = single_like ? bounds::bound_theoremA_C(l, k, p) : bounds::bound_C(l, k, p);
        c.measured = measured("C", l);
        c.guaranteed = base_ok && ord.any();
        report.bounds.push_back(c);
    }
}

int cmd_measure(const MeasureOptions& o, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    auto s = resolve_source(o.src);
    const auto orders = parse_orders(o.orders);
    if (o.method != "exact" && o.method != "sampled")
        throw ParseError("--method must be exact or sampled");

    auto seq = build_sequence(s, o.src.in);
    RunReport report;
    report.p = s.p ? std::optional<std::uint64_t>(s.p->value()) : seq.meta().p;
    report.polynomials = s.polynomials;
    report.n = seq.size();
    if (s.checks_run)
        report.conditions = s.checks;

    auto timed = [&](const std::string& key, measures::MeasureResult r) {
        report.timing_ms[key] = std::chrono::duration<double, std::milli>(r.elapsed).count();
        report.measures.push_back(std::move(r));
    };
    timed("W", o.oracle ? measures::oracle_well_distribution(seq) : measures::well_distribution(seq));
    for (int l : orders) {
        const auto key = "C" + std::to_string(l);
        if (o.oracle)
            timed(key, measures::oracle_correlation(seq, l));
        else if (o.method == "sampled")
            timed(key, measures::correlation_sampled(seq, l, o.samples, o.seed));
        else
            timed(key, measures::correlation(seq, l, o.budget));
    }
    attach_bounds(report, s, orders);
    report.timing_ms["total"] = ms_since(t0);
    write_output(o.out, out, to_json(report).dump(2) + "\n");
    return ok;
}

// ---------------------------------------------------------------- table

struct TableOptions {
    std::string example = "all";
    std::string format = "text";
};

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err)
{
    std::vector<int> ids;
    if (o.example == "all")
        ids = {1, 2, 3, 4};
    else {
        try {
            ids = {std::stoi(o.example)};
        } catch (const std::exception&) {
            throw ParseError("--example must be 1..4 or all");
        }
        (void)tables::reference_table(ids.front());
    }
    if (o.format != "text" && o.format != "csv" && o.format != "json")
        throw ParseError("--format must be text, csv or json");

    json doc = {{"examples", json::array()}};
    std::ostringstream text;
    std::vector<std::string> mismatches;
    std::size_t cells = 0;
    for (int id : ids) {
        const auto& spec = tables::reference_table(id);
        json ex = {{"id", id}, {"f", spec.f}, {"g", spec.g}, {"h", spec.h}, {"rows", json::array()}};
        if (o.format == "csv")
            text << "# example " << id << ": f=" << spec.f << ", g=" << spec.g << ", h=" << spec.h << '\n'
                 << "p,W_f,W_g,W_h,W_fgh,C2_f,C2_g,C2_h,C2_fgh\n";
        else if (o.format == "text") {
            text << "Example " << id << ": f = " << spec.f << ", g = " << spec.g << ", h = " << spec.h << '\n';
            text << std::setw(6) << "p";
            for (auto c : tables::column_names)
                text << std::setw(16) << c;
            text << '\n';
        }
        for (const auto& expected : spec.rows) {
            const auto row = tables::regenerate_row(spec, expected.p);
            json cells_json = json::array();
            if (o.format == "csv")
                text << row.p;
            else if (o.format == "text")
                text << std::setw(6) << row.p;
            for (std::size_t i = 0; i < row.values.size(); ++i) {
                const bool pass = row.values[i] == expected.values[i];
                ++cells;
                if (!pass) {
                    std::ostringstream m;
                    m << "example " << id << " p=" << row.p << ' ' << tables::column_names[i] << ": expected "
                      << expected.values[i] << ", measured " << row.values[i];
                    mismatches.push_back(m.str());
                }
                cells_json.push_back({{"column", tables::column_names[i]},
                                      {"expected", expected.values[i]},
                                      {"measured", row.values[i]},
                                      {"pass", pass}});
                if (o.format == "csv") {
                    text << ',' << row.values[i];
                } else if (o.format == "text") {
                    std::ostringstream cell;
                    cell << row.values[i] << '/' << expected.values[i] << (pass ? " PASS" : " FAIL");
                    text << std::setw(16) << cell.str();
                }
            }
            text << (o.format == "json" ? "" : "\n");
            ex["rows"].push_back({{"p", row.p}, {"cells", std::move(cells_json)}});
        }
        doc["examples"].push_back(std::move(ex));
        if (o.format == "text")
            text << '\n';
    }
    doc["cells"] = cells;
    doc["mismatches"] = mismatches;

    if (o.format == "json")
        out << doc.dump(2) << '\n';
    else {
        out << text.str();
        if (o.format == "text")
            out << "cells: " << cells << ", mismatches: " << mismatches.size()
                << "  (cell format: measured/expected)\n";
    }
    if (!mismatches.empty()) {
        err << mismatches.size() << " of " << cells << " cells differ from the reference tables:\n";
        for (const auto& m : mismatches)
            err << "  " << m << '\n';
        return table_mismatch;
    }
    return ok;
}

// ---------------------------------------------------------------- combine

struct CombineOptions {
    std::vector<std::string> files;
    std::string out;
    bool check_distinct = false;
};

int cmd_combine(const CombineOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.files.size() != 3)
        throw ParseError("combine takes exactly three sequence files F G H");
    const auto f = load_sequence(o.files[0]);
    const auto g = load_sequence(o.files[1]);
    const auto h = load_sequence(o.files[2]);
    if (o.check_distinct && (f == g || f == h || g == h)) {
        err << "sequences F, G, H are not pairwise distinct\n";
        return condition_failure;
    }
    const auto e = construct_combined(f, g, h);
    std::ostringstream os;
    write_sequence(os, e);
    write_output(o.out, out, os.str());
    return ok;
}

// ---------------------------------------------------------------- crosscorr

struct CrossOptions {
    std::vector<std::string> files;
    int order = 2;
    std::string method = "exact";
    std::uint64_t samples = 10000;
    std::uint64_t seed = measures::default_seed;
    std::uint64_t budget = measures::default_budget;
    std::vector<std::string> theorem3;
    std::string out;
};

int cmd_crosscorr(const CrossOptions& o, std::ostream& out, std::ostream& err)
{
    const auto t0 = std::chrono::steady_clock::now();
    if (o.method != "exact" && o.method != "sampled" && o.method != "auto")
        throw ParseError("--method must be exact, sampled or auto");
    if (o.order < 1)
        throw ParseError("--order must be at least 1");

    std::vector<std::string> paths = o.files;
    for (const auto& t : o.theorem3)
        if (std::find(paths.begin(), paths.end(), t) == paths.end())
            paths.push_back(t);
    if (paths.empty())
        throw ParseError("crosscorr needs at least one sequence file");
    std::vector<BinarySequence> family;
    for (const auto& path : paths)
        family.push_back(load_sequence(path));

    auto phi = [&](int order) {
        if (o.method == "sampled")
            return measures::cross_correlation_sampled(family, order, o.samples, o.seed);
        if (o.method == "auto" &&
            measures::cross_correlation_work(family.size(), family.front().size(), order) > o.budget)
            return measures::cross_correlation_sampled(family, order, o.samples, o.seed);
        return measures::cross_correlation(family, order, o.budget);
    };

    RunReport report;
    report.n = family.front().size();
    report.p = family.front().meta().p;
    auto push = [&](measures::MeasureResult r, const std::string& key) {
        report.timing_ms[key] = std::chrono::duration<double, std::milli>(r.elapsed).count();
        report.measures.push_back(std::move(r));
    };

    if (o.theorem3.empty()) {
        push(phi(o.order), "Phi" + std::to_string(o.order));
    } else {
        if (o.theorem3.size() != 3)
            throw ParseError("--theorem3 takes three files F G H");
        if (o.order < 2)
            throw ParseError("--theorem3 needs --order >= 2");
        auto index_of = [&](const std::string& path) {
            return static_cast<std::size_t>(std::find(paths.begin(), paths.end(), path) - paths.begin());
        };
        const auto& F = family[index_of(o.theorem3[0])];
        const auto& G = family[index_of(o.theorem3[1])];
        const auto& H = family[index_of(o.theorem3[2])];
        ConditionReport distinct;
        distinct.add("pairwise_distinct", !(F == G || F == H || G == H),
                     "the combined-sequence bound needs three distinct sequences");
        report.conditions = distinct;
        if (!distinct.overall()) {
            err << "--theorem3: F, G, H must be pairwise distinct\n";
            out << to_json(report).dump(2) << '\n';
            return condition_failure;
        }

        std::map<int, std::int64_t> phis;
        bool exact = true;
        for (int k = o.order; k <= 2 * o.order; ++k) {
            auto r = phi(k);
            phis[k] = r.value;
            exact = exact && r.method.kind == measures::MethodKind::exact;
            push(std::move(r), "Phi" + std::to_string(k));
        }
        const auto combined = construct_combined(F, G, H);
        auto c = measures::correlation(combined, o.order, o.budget);
        const auto measured = c.value;
        push(std::move(c), "C" + std::to_string(o.order) + "_combined");

        bounds::BoundReport b;
        b.name = "theorem3";
        b.order = o.order;
        b.value = static_cast<double>(bounds::bound_theorem3(o.order, phis));
        b.measured = measured;
        b.guaranteed = exact;
        report.bounds.push_back(b);
    }
    report.timing_ms["total"] = ms_since(t0);
    write_output(o.out, out, to_json(report).dump(2) + "\n");
    return ok;
}

// ---------------------------------------------------------------- bounds

struct BoundsOptions {
    std::uint64_t p = 0;
    int k = 0;
    std::string orders = "2";
    std::string format = "json";
};

int cmd_bounds(const BoundsOptions& o, std::ostream& out)
{
    const ff::PrimeModulus pm(o.p);
    if (o.k < 1)
        throw ParseError("--k must be at least 1");
    if (o.format != "json" && o.format != "text")
        throw ParseError("--format must be json or text");
    std::vector<bounds::BoundReport> rows;
    auto add = [&](std::string name, std::optional<int> order, double value, bool guaranteed) {
        bounds::BoundReport b;
        b.name = std::move(name);
        b.k = o.k;
        b.order = order;
        b.p = o.p;
        b.value = value;
        b.guaranteed = guaranteed;
        rows.push_back(std::move(b));
    };
    add("W", std::nullopt, bounds::bound_W(o.k, o.p), true);
    for (int l : parse_orders(o.orders)) {
        const bool g = conditions::check_correlation_order(l, o.k, pm).any();
        add("C_triple", l, bounds::bound_C(l, o.k, o.p), g);
        add("C_single", l, bounds::bound_theoremA_C(l, o.k, o.p), g);
    }
    add("weil_incomplete", std::nullopt, bounds::weil_incomplete_bound(o.k, o.p), true);

    if (o.format == "json") {
        json j = json::array();
        for (const auto& b : rows)
            j.push_back(to_json(b));
        out << j.dump(2) << '\n';
    } else {
        out << std::left << std::setw(18) << "bound" << std::setw(7) << "order" << std::right << std::setw(16)
            << "value" << "  guaranteed\n";
        for (const auto& b : rows)
            out << std::left << std::setw(18) << b.name << std::setw(7)
                << (b.order ? std::to_string(*b.order) : std::string("-")) << std::right << std::setw(16)
                << std::fixed << std::setprecision(3) << b.value << "  " << (b.guaranteed ? "yes" : "no") << '\n';
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Legendre-symbol binary sequences: generation, preconditions and pseudorandom measures"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap on worker threads (0 = runtime default)");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a sequence file");
    gen.src.add_to(*gen_cmd, false);
    gen_cmd->add_flag("--truncate-half", gen.truncate, "emit only the first (p+1)/2 elements");
    gen_cmd->add_flag("--skip-checks", gen.skip_checks, "generate even when preconditions fail");
    gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "verify the algebraic preconditions");
    check.src.add_to(*check_cmd, false);
    check_cmd->add_flag("--symmetric", check.symmetric, "use the mirrored divisibility condition");
    check_cmd->add_option("--orders", check.orders, "also report correlation-order conditions, e.g. 2,3");

    MeasureOptions measure;
    auto* measure_cmd = app.add_subcommand("measure", "compute W and C_l");
    measure.src.add_to(*measure_cmd, true);
    measure_cmd->add_option("--orders", measure.orders, "correlation orders, e.g. 2,3");
    measure_cmd->add_option("--method", measure.method, "exact or sampled");
    measure_cmd->add_option("--samples", measure.samples, "lag tuples drawn in sampled mode");
    measure_cmd->add_option("--seed", measure.seed, "sampling seed");
    measure_cmd->add_option("--budget", measure.budget, "exact-mode work budget");
    measure_cmd->add_flag("--oracle", measure.oracle, "use the brute-force definitional loops (N <= 64)");
    measure_cmd->add_option("--out", measure.out, "report path (default stdout)");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "regenerate the reference tables");
    table_cmd->add_option("--example", table.example, "1..4 or all");
    table_cmd->add_option("--format", table.format, "text, csv or json");

    CombineOptions combine;
    auto* combine_cmd = app.add_subcommand("combine", "combine three sequences F G H by H's signs");
    combine_cmd->add_option("files", combine.files, "F G H")->expected(3);
    combine_cmd->add_option("--out", combine.out, "output path (default stdout)");
    combine_cmd->add_flag("--check-distinct", combine.check_distinct, "require pairwise distinct inputs");

    CrossOptions cross;
    auto* cross_cmd = app.add_subcommand("crosscorr", "cross-correlation of a sequence family");
    cross_cmd->add_option("files", cross.files, "family members");
    cross_cmd->add_option("--order", cross.order, "order l");
    cross_cmd->add_option("--method", cross.method, "exact, sampled or auto");
    cross_cmd->add_option("--samples", cross.samples, "sampled tuples");
    cross_cmd->add_option("--seed", cross.seed, "sampling seed");
    cross_cmd->add_option("--budget", cross.budget, "exact-mode work budget");
    cross_cmd->add_option("--theorem3", cross.theorem3, "F G H: check the combined-sequence bound")->expected(3);
    cross_cmd->add_option("--out", cross.out, "report path (default stdout)");

    BoundsOptions bnd;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the theoretical bounds");
    bounds_cmd->add_option("--p", bnd.p, "odd prime")->required();
    bounds_cmd->add_option("--k", bnd.k, "degree bound")->required();
    bounds_cmd->add_option("--orders", bnd.orders, "correlation orders");
    bounds_cmd->add_option("--format", bnd.format, "json or text");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? ok : input_error;
    }

    try {
        set_threads(threads);
        if (*gen_cmd)
            return cmd_gen(gen, out, err);
        if (*check_cmd)
            return cmd_check(check, out);
        if (*measure_cmd)
            return cmd_measure(measure, out);
        if (*table_cmd)
            return cmd_table(table, out, err);
        if (*combine_cmd)
            return cmd_combine(combine, out, err);
        if (*cross_cmd)
            return cmd_crosscorr(cross, out, err);
        if (*bounds_cmd)
            return cmd_bounds(bnd, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return budget_exceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

} // namespace legseq::cli
