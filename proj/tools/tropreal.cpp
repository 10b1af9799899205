// tropreal: command-line front end for the real tropicalization library.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or usage.

#include "tropreal/tropreal.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace tropreal;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Opts {
    std::uint64_t seed = 0;
    std::size_t count = 10000;
    std::size_t budget = 1000;
    std::size_t size = 0;
    std::string input;
    std::string orthant;
    std::string rel = "ge";
    std::string out;
    std::string svg;
    std::string window;
    int grid = 240;
    double log_base = 0;
    std::string palette = "default";
    std::string target;
    std::string T;
    std::string F;
    std::string support;
    std::string suite;
    std::string out_dir = "figures";
    bool timings = false;
};

std::uint64_t default_seed() {
    const char* s = std::getenv("TROPREAL_SEED");
    if (!s || !*s) return 0;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw ParseError(std::string("TROPREAL_SEED is not an unsigned integer: ") + s);
    }
}

void emit_json(const std::string& path, const Json& j) {
    if (!path.empty()) write_text_file(path, j.dump(2) + "\n");
}

/// TropPoly JSON, or anything PolyK accepts (then tropicalized).
TropPoly load_trop(const Json& j) {
    if (j.is_object() && j.contains("poly")) return trop_r(j.at("poly").get<PolyK>());
    if (j.is_object() && j.contains("terms") && !j.at("terms").empty()) {
        const Json& c = j.at("terms").front().at("coeff");
        if ((c.is_object() && c.contains("sign")) || (c.is_string() && c.get<std::string>().starts_with("(")))
            return j.get<TropPoly>();
    }
    return trop_r(j.get<PolyK>());
}

struct Problem {
    SADescription S;
    SamplerConfig sampler;
};

Problem load_problem(const std::string& path, std::uint64_t seed) {
    Json j = read_json_file(path);
    Problem p{j.get<SADescription>(), {}};
    if (j.contains("sampler")) p.sampler = j.at("sampler").get<SamplerConfig>();
    p.sampler.seed = seed;
    return p;
}

std::vector<Orthant> orthants(const std::string& flag, std::size_t n) {
    if (flag.empty() || flag == "all") return Orthant::all(n);
    Orthant o = Orthant::parse(flag);
    if (o.size() != n) throw ParseError("orthant '" + flag + "' has the wrong length");
    return {o};
}

Orthant one_orthant(const std::string& flag, std::size_t n) {
    if (flag.empty()) return Orthant::positive(n);
    if (flag == "all") throw ParseError("this command needs a single orthant");
    return orthants(flag, n).front();
}

RenderConfig render_config(const Opts& o, const std::string& title) {
    RenderConfig rc;
    rc.grid = o.grid;
    rc.palette = o.palette;
    rc.title = title;
    if (o.log_base > 0) rc.log_base = o.log_base;
    if (!o.window.empty()) parse_window(o.window, rc);
    rc.validate();
    return rc;
}

// ---------------------------------------------------------------- commands

int cmd_trop(const Opts& o) {
    PolyK f = read_json_file(o.input).get<PolyK>();
    TropPoly F = trop_r(f);
    if (F.terms().empty()) std::cerr << "warning: zero polynomial, empty tropicalization\n";
    std::cout << F.str() << "\n";
    emit_json(o.out, F);
    return kPass;
}

int cmd_region(const Opts& o) {
    TropPoly F = load_trop(read_json_file(o.input));
    Relation rel = parse_relation(o.rel);
    OrthantRegions R;
    for (const auto& s : orthants(o.orthant, F.nvars())) {
        try {
            R[s] = trop_region(F, s, rel);
        } catch (const NegativeExponentAtZero&) {
            std::cout << s.str() << ": skipped (negative exponent on a zero coordinate)\n";
            continue;
        }
        std::cout << s.str() << ": " << (union_is_empty(R[s]) ? "empty" : R[s].str()) << "\n";
    }
    emit_json(o.out, Json{{"poly", F}, {"rel", relation_flag(rel)}, {"regions", regions_to_json(R)}});
    if (!o.svg.empty()) {
        RenderStats st;
        std::string svg = render_trop_region(F, rel, render_config(o, F.str() + " " + relation_symbol(rel) + " 0"), st);
        write_text_file(o.svg, svg);
        std::cout << "svg: " << st.pixels << " pixels, " << st.disagreements << " disagreements with exact evaluation\n";
        if (st.disagreements) return kFail;
    }
    return kPass;
}

int cmd_sample(const Opts& o) {
    Problem p = load_problem(o.input, o.seed);
    std::optional<Orthant> sigma;
    if (!o.orthant.empty() && o.orthant != "all") sigma = one_orthant(o.orthant, p.S.nvars);
    SampleCloud cloud = sa_sample_trop(p.S, o.count, p.sampler, sigma ? &*sigma : nullptr);
    std::cout << cloud.size() << " distinct tropical point(s) from " << o.count << " attempts\n";
    for (const auto& [z, w] : cloud.points) std::cout << "  " << point_str(z) << "\n";
    emit_json(o.out, Json{{"seed", o.seed}, {"attempts", o.count}, {"cloud", cloud_to_json(cloud)}});
    return kPass;
}

int cmd_witness(const Opts& o) {
    Problem p = load_problem(o.input, o.seed);
    if (o.target.empty()) throw ParseError("--target is required");
    TropPoint z = parse_trop_point(o.target);
    if (z.size() != p.S.nvars) throw ParseError("target has the wrong number of coordinates");
    WitnessResult r = witness_search(p.S, z, o.budget, p.sampler);
    Json j{{"target", point_str(z)}, {"attempts", r.attempts}, {"excluded_by_outer", r.excluded_by_outer}};
    if (r.witness) {
        std::cout << "witness: " << point_str(*r.witness) << "\n";
        j["witness"] = point_to_json(*r.witness);
    } else if (r.excluded_by_outer) {
        std::cout << "no witness (excluded by outer region)\n";
    } else {
        std::cout << "no witness in " << r.attempts << " attempts (point lies in the outer region)\n";
    }
    emit_json(o.out, j);
    return r.witness ? kPass : kFail;
}

int cmd_basis(const Opts& o) {
    Problem p = load_problem(o.input, o.seed);
    if (o.T.empty()) throw ParseError("--T is required");
    Orthant sigma = one_orthant(o.orthant, p.S.nvars);
    PolyUnion T = union_from_json(read_json_file(o.T), sigma.support().size());
    LiftConfig cfg;
    cfg.sampler = p.sampler;
    BasisResult r = finite_basis(T, p.S, sigma, cfg);
    Json polys = Json::array();
    std::cout << r.polys.size() << " polynomial(s)\n";
    for (std::size_t i = 0; i < r.polys.size(); ++i) {
        std::cout << "  " << r.polys[i].str() << " >= 0   (epsilon " << to_string(r.lifts[i].epsilon) << ")\n";
        polys.push_back({{"poly", r.polys[i]}, {"epsilon", to_string(r.lifts[i].epsilon)}});
    }
    std::cout << "regions ∩ = T: " << (r.verified ? "OK" : "MISMATCH") << "\n";
    emit_json(o.out, Json{{"orthant", sigma}, {"polys", polys}, {"verified", r.verified}});
    return r.verified ? kPass : kFail;
}

int cmd_lift(const Opts& o) {
    Problem p = load_problem(o.input, o.seed);
    if (o.F.empty()) throw ParseError("--F is required");
    TropPoly F = load_trop(read_json_file(o.F));
    Orthant sigma = one_orthant(o.orthant, p.S.nvars);
    LiftConfig cfg;
    cfg.sampler = p.sampler;
    if (!o.support.empty()) cfg.support = union_from_json(read_json_file(o.support), sigma.support().size());
    LiftResult r = lift_inequality(F, p.S, sigma, cfg);
    std::cout << "f = " << r.f.str() << "\nepsilon = " << to_string(r.epsilon) << ", checked on " << r.verified_on
              << " sample(s)\n";
    emit_json(o.out, Json{{"F", F}, {"f", r.f}, {"epsilon", to_string(r.epsilon)}, {"verified_on", r.verified_on}});
    return kPass;
}

Json suite_json(const checks::SuiteResult& r, bool timings) {
    Json outs = Json::array();
    for (const auto& x : r.outcomes) outs.push_back(checks::outcome_json(x));
    Json j{{"suite", r.suite}, {"pass", r.ok()}, {"outcomes", outs}};
    if (timings) j["seconds"] = r.seconds;
    return j;
}

int run_checks(const std::string& command, const std::vector<std::string>& suites, const Opts& o,
               const std::string& svg_dir) {
    checks::CheckOptions co{o.seed, o.size, svg_dir};
    std::string inputs = command + "|" + std::to_string(o.seed) + "|" + std::to_string(o.size);
    for (const auto& s : suites) inputs += "|" + s;
    Json results = Json::array();
    bool all = true;
    for (const auto& s : suites) {
        auto r = checks::run_suite(s, co);
        std::cout << "[" << s << "]";
        if (o.timings) std::cout << " " << r.seconds << " s";
        std::cout << "\n";
        for (const auto& x : r.outcomes) std::cout << "  " << checks::outcome_line(x) << "\n";
        all = all && r.ok();
        results.push_back(suite_json(r, o.timings));
    }
    std::cout << (all ? "ALL PASS" : "FAILURES") << "\n";
    emit_json(o.out, Json{{"command", command},
                          {"seed", o.seed},
                          {"size", o.size},
                          {"inputs_digest", checks::hex64(checks::fnv1a(inputs))},
                          {"suites", results},
                          {"pass", all}});
    return all ? kPass : kFail;
}

int cmd_check(const Opts& o) {
    std::vector<std::string> suites;
    if (o.suite == "all") suites = checks::suite_names();
    else {
        auto names = checks::suite_names();
        if (std::find(names.begin(), names.end(), o.suite) == names.end())
            throw checks::UnknownSuite("unknown suite '" + o.suite + "'");
        suites = {o.suite};
    }
    return run_checks("check", suites, o, o.svg);
}

int cmd_figures(const Opts& o) { return run_checks("figures", {"figures"}, o, o.out_dir); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real tropicalization of semialgebraic sets"};
    app.require_subcommand(1);
    Opts o;
    std::function<int(const Opts&)> run;
    try {
        o.seed = default_seed();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "RNG seed (default $TROPREAL_SEED or 0)"); };
    auto out = [&](CLI::App* c) { c->add_option("--out", o.out, "write a JSON report here"); };
    auto input = [&](CLI::App* c, const char* what) { c->add_option("input", o.input, what)->required(); };

    auto* trop = app.add_subcommand("trop", "tropicalize a polynomial");
    input(trop, "polynomial JSON file");
    out(trop);
    trop->callback([&] { run = cmd_trop; });

    auto* region = app.add_subcommand("region", "exact region {F rel 0} per orthant");
    input(region, "tropical polynomial (or polynomial) JSON file");
    region->add_option("--rel", o.rel, "eq|ge|gt|le|lt|ne")->capture_default_str();
    region->add_option("--orthant", o.orthant, "sign string like +- or 'all'");
    out(region);
    region->add_option("--svg", o.svg, "write an SVG picture (two variables)");
    region->add_option("--window", o.window, "x0,x1,y0,y1 in multiplicative coordinates");
    region->add_option("--grid", o.grid, "samples per axis")->capture_default_str();
    region->add_option("--log-base", o.log_base, "base of the valuation scale (default e)");
    region->add_option("--palette", o.palette, "default|mono")->capture_default_str();
    region->callback([&] { run = cmd_region; });

    auto* sample = app.add_subcommand("sample", "witnessed inner approximation");
    input(sample, "semialgebraic set JSON file");
    seed(sample);
    sample->add_option("--count", o.count, "sampling attempts")->capture_default_str();
    sample->add_option("--orthant", o.orthant, "restrict samples to one orthant");
    out(sample);
    sample->callback([&] { run = cmd_sample; });

    auto* witness = app.add_subcommand("witness", "search a point of S over a tropical point");
    input(witness, "semialgebraic set JSON file");
    seed(witness);
    witness->add_option("--target", o.target, "tropical point, e.g. '((+,0),(-,1/2))'");
    witness->add_option("--budget", o.budget, "random attempts")->capture_default_str();
    out(witness);
    witness->callback([&] { run = cmd_witness; });

    auto* basis = app.add_subcommand("basis", "finite family of inequalities cutting out T");
    input(basis, "semialgebraic set JSON file");
    seed(basis);
    basis->add_option("--T", o.T, "closed polyhedral union JSON file");
    basis->add_option("--orthant", o.orthant, "orthant (default all +)");
    out(basis);
    basis->callback([&] { run = cmd_basis; });

    auto* lift = app.add_subcommand("lift", "lift a tropical inequality to a polynomial one");
    input(lift, "semialgebraic set JSON file");
    seed(lift);
    lift->add_option("--F", o.F, "tropical polynomial JSON file");
    lift->add_option("--orthant", o.orthant, "orthant (default all +)");
    lift->add_option("--support", o.support, "region the lift must be nonnegative on (default: outer region)");
    out(lift);
    lift->callback([&] { run = cmd_lift; });

    auto* check = app.add_subcommand("check", "run a property suite");
    check->add_option("suite", o.suite, "suite name or 'all'")->required();
    seed(check);
    check->add_option("--size", o.size, "cases per property (0 = suite default)");
    check->add_option("--count", o.size, "alias of --size");
    check->add_option("--svg", o.svg, "directory for figure SVGs");
    check->add_flag("--timings", o.timings, "include wall-clock timings");
    out(check);
    check->callback([&] { run = cmd_check; });

    auto* figures = app.add_subcommand("figures", "render the figure SVGs and check their assertions");
    seed(figures);
    figures->add_option("--out-dir", o.out_dir, "directory for SVGs")->capture_default_str();
    figures->add_flag("--timings", o.timings, "include wall-clock timings");
    figures->add_option("--out", o.out, "write a JSON report here");
    figures->callback([&] { run = cmd_figures; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }
    try {
        return run(o);
    } catch (const NoEpsilonFound& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
