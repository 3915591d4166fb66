#include "fairdiv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/objective_solvers.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/path_solvers.hpp"
#include "fairdiv/random_instances.hpp"
#include "fairdiv/triangulation.hpp"

namespace fairdiv {

namespace {

using nlohmann::json;

// Bad flag combinations and values; distinct from ParseError only in wording.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --input takes a path, inline JSON, or "-" (also the default) for stdin.
std::string read_input(const std::string& source, std::istream& in) {
    if (source.empty() || source == "-") return slurp(in);
    if (source.front() == '{' || source.front() == '[') return source;
    std::ifstream f(source);
    if (!f) throw ParseError("cannot open " + source);
    return slurp(f);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path);
    f << text << "\n";
}

long long env_scale_budget() {
    if (const char* env = std::getenv("FAIRDIV_SCALE_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
        }
    }
    return kDefaultScaleBudget;
}

std::vector<Agent> parse_agent_order(const std::string& text) {
    std::vector<Agent> order;
    if (text.empty()) return order;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int agent = 0;
        try {
            agent = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != tok.size())
            throw UsageError("bad --agent-order entry \"" + tok + "\"");
        order.push_back(agent);
    }
    return order;
}

json bundles_json(const Allocation& a) {
    json arr = json::array();
    for (const Bundle& b : a.bundles) arr.push_back(b.items());
    return arr;
}

json hit_json(const std::optional<FullyColoredHit>& hit) {
    if (!hit) return nullptr;
    json j;
    j["base"] = hit->simplex.base.u;
    j["pi"] = hit->simplex.pi;
    j["sigma"] = hit->sigma;
    j["scanned"] = hit->scanned;
    return j;
}

json joint_json(const std::optional<JointHit>& hit) {
    if (!hit) return nullptr;
    json j;
    j["base"] = hit->simplex.base.u;
    j["pi"] = hit->simplex.pi;
    j["sigma"] = hit->sigma;
    j["tau"] = hit->tau;
    j["scanned"] = hit->scanned;
    return j;
}

struct SolveArgs {
    std::string input, notion, method = "dp", agent_order, output;
    long long scale_budget = kDefaultScaleBudget;
    bool trace = false;
};

int cmd_solve(const SolveArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string promised;
    if (args.method == "dp" || args.method == "sperner") {
        promised = args.notion.empty() ? "eq1p-gc" : args.notion;
    } else if (args.method == "local-search" || args.method == "strongly-greedy") {
        promised = "eqx-gc";
    } else if (args.method == "greedy") {
        promised = "eq1";
    } else {
        throw UsageError("unknown method \"" + args.method + "\"");
    }
    if (args.method == "dp" && promised != "eq1p-gc")
        throw UsageError("method dp certifies eq1p-gc, not " + args.notion);
    if (args.method == "sperner" && promised != "eq1p-gc" && promised != "ef1p-gc")
        throw UsageError("method sperner certifies eq1p-gc or ef1p-gc, not " + args.notion);
    if (!args.notion.empty() && args.notion != promised)
        throw UsageError("method " + args.method + " certifies " + promised + ", not " + args.notion);
    if (!args.agent_order.empty() && args.method != "dp")
        throw UsageError("--agent-order only applies to method dp");

    Instance inst = instance_from_json(read_input(args.input, in));

    Allocation alloc;
    json stats;
    if (args.method == "dp") {
        DpResult r = solve_eq1p_gc_dp(inst, parse_agent_order(args.agent_order));
        alloc = std::move(r.allocation);
        stats["c"] = r.c;
        stats["candidates_tried"] = r.candidates_tried;
    } else if (args.method == "sperner") {
        SpernerSolveResult r = promised == "ef1p-gc"
                                   ? solve_ef1p_gc_sperner(inst, args.scale_budget)
                                   : solve_eq1p_gc_sperner(inst, args.scale_budget);
        alloc = std::move(r.allocation);
        stats["simplices_scanned"] = r.simplices_scanned;
    } else if (args.method == "local-search") {
        LocalSearchResult r = local_search_eqxgc(inst, args.trace);
        if (args.trace) {
            long long k = 0;
            for (const LocalSearchStep& step : r.trace) {
                json line;
                line["iteration"] = ++k;
                line["moved"] = step.moved;
                line["donor"] = step.from;
                line["receiver"] = step.to;
                line["potential"] = {step.potential_after.x, step.potential_after.y,
                                     step.potential_after.z};
                err << line.dump() << "\n";
            }
        }
        alloc = std::move(r.allocation);
        stats["iterations"] = r.iterations;
    } else {
        GreedyResult r = args.method == "greedy" ? greedy_eq1(inst) : strongly_greedy_eqxgc(inst);
        alloc = std::move(r.allocation);
        stats["iterations"] = inst.m;
    }

    // Always recomputed from the allocation; a buggy solver cannot self-certify.
    FairnessVerdict cert = check(inst, alloc, notion_from_name(promised));

    json result;
    result["allocation"] = bundles_json(alloc);
    result["method"] = args.method;
    result["certificate"] = json::parse(verdict_to_json(cert));
    result["stats"] = std::move(stats);
    emit(args.output, result.dump(2), out);
    return cert.holds ? 0 : 4;
}

struct CheckArgs {
    std::string input, notion, output;
};

int cmd_check(const CheckArgs& args, std::istream& in, std::ostream& out) {
    json doc = json::parse(read_input(args.input, in), nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("instance") ||
        !doc.contains("allocation"))
        throw ParseError("check input is {\"instance\":..., \"allocation\":...}");
    Instance inst = instance_from_json(doc.at("instance").dump());
    Allocation alloc = allocation_from_json(doc.at("allocation").dump());

    FairnessVerdict verdict = check(inst, alloc, notion_from_name(args.notion));
    emit(args.output, verdict_to_json(verdict, 2), out);
    return verdict.holds ? 0 : 4;
}

struct SpernerArgs {
    std::string input, output;
    int n = 0, m = 0;
    std::uint64_t seed = 0;
    bool multi = false, joint = false;
    long long scale_budget = kDefaultScaleBudget;
};

void report_single(const Triangulation& t, const Coloring& col, json& result) {
    const long long count = count_fully_colored(t, col);
    result["mode"] = "single";
    result["count"] = count;
    result["parity_odd"] = count % 2 != 0;
    result["first"] = hit_json(find_fully_colored(t, col));
}

void report_multi(const Triangulation& t, const MultiColoring& col, json& result) {
    MultiColoring normalized = normalize_multicoloring(t, col);
    const long long minimal = count_fully_colored(t, minimal_restriction(t, normalized));
    result["mode"] = "multi";
    result["count"] = count_fully_colored_multi(t, col);
    result["minimal_count"] = minimal;
    result["parity_odd"] = minimal % 2 != 0;
    result["first"] = hit_json(find_fully_colored_multi(t, col));
}

int cmd_sperner(const SpernerArgs& args, std::istream& in, std::ostream& out) {
    json result;
    if (!args.input.empty()) {
        Instance inst = instance_from_json(read_input(args.input, in));
        if (inst.n < 2 || inst.m < 1) throw UsageError("sperner needs n >= 2 and m >= 1");
        Triangulation t{inst.n, inst.m};
        if (t.simplex_count() > args.scale_budget)
            throw ScaleLimit("triangulation exceeds the scale budget");

        ValuationClass cls = classify(inst);
        if (!cls.non_negative && !cls.non_positive)
            throw WrongValuationClass("sperner colorings need a non-negative or non-positive instance");

        result["n"] = inst.n;
        result["m"] = inst.m;
        result["source"] = "instance";
        result["joint"] = args.joint;
        if (args.joint) {
            if (cls.non_negative) {
                std::vector<Coloring> cols;
                for (Agent i = 1; i <= inst.n; ++i) cols.push_back(coloring_envy(t, inst, i));
                result["mode"] = "single";
                result["first"] = joint_json(find_jointly_fully_colored(t, cols));
            } else {
                std::vector<MultiColoring> cols;
                for (Agent i = 1; i <= inst.n; ++i) cols.push_back(multicoloring_envy(t, inst, i));
                result["mode"] = "multi";
                result["first"] = joint_json(find_jointly_fully_colored_multi(t, cols));
            }
        } else if (cls.non_negative) {
            report_single(t, coloring_equity(t, inst), result);
        } else {
            report_multi(t, multicoloring_equity(t, inst), result);
        }
    } else {
        if (args.joint) throw UsageError("--joint reads per-agent colorings off an instance");
        if (args.n < 2 || args.m < 1) throw UsageError("random mode needs --n >= 2 and --m >= 1");
        Triangulation t{args.n, args.m};
        if (t.simplex_count() > args.scale_budget)
            throw ScaleLimit("triangulation exceeds the scale budget");

        result["n"] = args.n;
        result["m"] = args.m;
        result["source"] = "random";
        result["seed"] = args.seed;
        result["joint"] = false;
        if (args.multi)
            report_multi(t, random_normalized_special_multicoloring(t, args.seed), result);
        else
            report_single(t, random_special_coloring(t, args.seed), result);
    }
    emit(args.output, result.dump(2), out);
    return 0;
}

struct GenArgs {
    int n = 0, m = -1;
    std::string kind = "additive", cls = "non-negative", output;
    std::uint64_t seed = 0;
    long long magnitude = 9;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
    if (args.n < 1) throw UsageError("need --n >= 1");
    if (args.m < 0) throw UsageError("need --m >= 0");
    if (args.magnitude < 0) throw UsageError("--magnitude must be >= 0");
    std::optional<SignClass> cls = sign_class_from_name(args.cls);
    if (!cls) throw UsageError("unknown class \"" + args.cls + "\"");

    Rng rng(args.seed);
    Instance inst = [&]() -> Instance {
        if (args.kind == "additive")
            return random_additive_instance(rng, args.n, args.m, *cls, args.magnitude);
        if (args.kind == "interval") {
            if (*cls == SignClass::Objective)
                throw UsageError("interval tables cannot be generated as objective");
            return random_interval_instance(rng, args.n, args.m, *cls, args.magnitude);
        }
        if (args.kind == "subset") {
            if (args.m > 20) throw UsageError("subset tables support at most 20 items");
            return random_subset_instance(rng, args.n, args.m, *cls, args.magnitude);
        }
        throw UsageError("unknown kind \"" + args.kind + "\"");
    }();
    emit(args.output, instance_to_json(inst, 2), out);
    return 0;
}

struct OracleArgs {
    std::string input, notion, scope = "well-ordered", output;
    long long budget = kDefaultAllocationBudget;
};

int cmd_oracle(const OracleArgs& args, std::istream& in, std::ostream& out) {
    Instance inst = instance_from_json(read_input(args.input, in));
    std::optional<EnumerationScope> scope = scope_from_name(args.scope);
    if (!scope) throw UsageError("unknown scope \"" + args.scope + "\"");

    OracleResult r = exists_satisfying(inst, notion_from_name(args.notion), *scope, args.budget);
    json result;
    result["exists"] = r.exists;
    result["examined"] = r.examined;
    result["witness"] = r.witness ? bundles_json(*r.witness) : json(nullptr);
    emit(args.output, result.dump(2), out);
    return r.exists ? 0 : 4;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"fair division of indivisible items on a path"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    solve_args.scale_budget = env_scale_budget();
    CLI::App* solve = app.add_subcommand("solve", "compute an allocation and certify it");
    solve->add_option("--input,-i", solve_args.input, "instance JSON: path, inline, or - for stdin");
    solve->add_option("--notion", solve_args.notion, "notion to certify (fixed per method)");
    solve->add_option("--method", solve_args.method,
                      "dp | sperner | local-search | greedy | strongly-greedy");
    solve->add_option("--agent-order", solve_args.agent_order,
                      "dp only: agents taking the bundles left to right, e.g. 2,1,3");
    solve->add_option("--scale-budget", solve_args.scale_budget,
                      "max simplices a sperner search may visit");
    solve->add_flag("--trace", solve_args.trace, "local-search only: JSONL iterations on stderr");
    solve->add_option("--output,-o", solve_args.output, "write the result to this file");

    CheckArgs check_args;
    CLI::App* check_cmd = app.add_subcommand("check", "check an allocation against a notion");
    check_cmd->add_option("--input,-i", check_args.input,
                          "{\"instance\":..., \"allocation\":...}: path, inline, or stdin");
    check_cmd->add_option("--notion", check_args.notion, "fairness notion to check")->required();
    check_cmd->add_option("--output,-o", check_args.output, "write the verdict to this file");

    SpernerArgs sperner_args;
    sperner_args.scale_budget = env_scale_budget();
    CLI::App* sperner = app.add_subcommand("sperner", "count and locate fully-colored simplices");
    sperner->add_option("--input,-i", sperner_args.input, "instance JSON for derived colorings");
    sperner->add_option("--n", sperner_args.n, "agents (random mode)");
    sperner->add_option("--m", sperner_args.m, "items (random mode)");
    sperner->add_option("--seed", sperner_args.seed, "seed for the random coloring");
    sperner->add_flag("--multi", sperner_args.multi, "random normalized special multicoloring");
    sperner->add_flag("--joint", sperner_args.joint, "joint search over per-agent colorings");
    sperner->add_option("--scale-budget", sperner_args.scale_budget, "max simplices to visit");
    sperner->add_option("--output,-o", sperner_args.output, "write the report to this file");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random instance");
    gen->add_option("--n", gen_args.n, "agents")->required();
    gen->add_option("--m", gen_args.m, "items")->required();
    gen->add_option("--kind", gen_args.kind, "additive | interval | subset");
    gen->add_option("--class", gen_args.cls, "non-negative | non-positive | objective");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_option("--magnitude", gen_args.magnitude, "largest absolute value");
    gen->add_option("--output,-o", gen_args.output, "write the instance to this file");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive existence check");
    oracle->add_option("--input,-i", oracle_args.input, "instance JSON: path, inline, or stdin");
    oracle->add_option("--notion", oracle_args.notion, "fairness notion")->required();
    oracle->add_option("--scope", oracle_args.scope, "well-ordered | connected | all");
    oracle->add_option("--budget", oracle_args.budget, "max allocations to enumerate");
    oracle->add_option("--output,-o", oracle_args.output, "write the result to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(solve)) return cmd_solve(solve_args, in, out, err);
        if (app.got_subcommand(check_cmd)) return cmd_check(check_args, in, out);
        if (app.got_subcommand(sperner)) return cmd_sperner(sperner_args, in, out);
        if (app.got_subcommand(gen)) return cmd_gen(gen_args, out);
        if (app.got_subcommand(oracle)) return cmd_oracle(oracle_args, in, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const WrongValuationClass& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedQuery& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotConnected& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotSpecial& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ScaleLimit& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace fairdiv
