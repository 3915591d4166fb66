// End-to-end CLI runs through run_cli with in-memory streams, plus the JSON
// round-trips the subcommands lean on.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "fairdiv/cli.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/model.hpp"

using namespace fairdiv;
using nlohmann::json;

namespace {

struct CliRun {
    int code = 0;
    std::string out, err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json out_json(const CliRun& r) { return json::parse(r.out); }

// Two identically flat agents over m items, one unit per item.
std::string cardinality_json(int m) {
    json table = json::array();
    for (int s = 1; s <= m; ++s) {
        json row = json::array();
        for (int t = s; t <= m; ++t) row.push_back(t - s + 1);
        table.push_back(row);
    }
    json inst;
    inst["n"] = 2;
    inst["m"] = m;
    inst["valuation"] = {{"kind", "interval"}, {"table", json::array({table, table})}};
    return inst.dump();
}

std::string additive_json(std::vector<std::vector<long long>> values) {
    json inst;
    inst["n"] = values.size();
    inst["m"] = values.empty() ? 0 : values.front().size();
    inst["valuation"] = {{"kind", "additive"}, {"values", values}};
    return inst.dump();
}

}  // namespace

TEST_CASE("gen is deterministic and honors the frozen seed") {
    CliRun a = run({"gen", "--n", "2", "--m", "4", "--seed", "1"});
    CliRun b = run({"gen", "--n", "2", "--m", "4", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    json doc = out_json(a);
    CHECK(doc.at("n") == 2);
    CHECK(doc.at("m") == 4);
    CHECK(doc.at("valuation").at("kind") == "additive");
    CHECK(doc.at("valuation").at("values") ==
          json::parse("[[8,2,0,6],[4,9,8,5]]"));
}

TEST_CASE("gen respects class and kind switches") {
    CliRun neg = run({"gen", "--n", "2", "--m", "5", "--seed", "3", "--class", "non-positive"});
    CHECK(neg.code == 0);
    json neg_doc = out_json(neg);
    for (const auto& row : neg_doc.at("valuation").at("values"))
        for (const auto& v : row) CHECK(v.get<long long>() <= 0);

    CliRun sub = run({"gen", "--n", "2", "--m", "3", "--seed", "7", "--kind", "subset"});
    CHECK(sub.code == 0);
    CHECK(out_json(sub).at("valuation").at("kind") == "subset");
    Instance inst = instance_from_json(sub.out);
    CHECK(inst.m == 3);

    CliRun itv = run({"gen", "--n", "3", "--m", "2", "--seed", "4", "--kind", "interval"});
    CHECK(itv.code == 0);
    CHECK(out_json(itv).at("valuation").at("kind") == "interval");
}

TEST_CASE("gen rejects bad requests") {
    CHECK(run({"gen", "--n", "2", "--m", "2", "--kind", "interval", "--class", "objective"}).code == 1);
    CHECK(run({"gen", "--n", "2", "--m", "2", "--class", "sideways"}).code == 1);
    CHECK(run({"gen", "--n", "2", "--m", "21", "--kind", "subset"}).code == 1);
    CHECK(run({"gen", "--n", "0", "--m", "2"}).code == 1);
    CHECK(run({"gen", "--n", "2"}).code == 1);
    CHECK(run({"gen", "--n", "2", "--m", "2", "--kind", "triangular"}).code == 1);
}

TEST_CASE("solve dp on the flat path splits it evenly") {
    CliRun r = run({"solve", "--method", "dp", "--input", cardinality_json(4)});
    CHECK(r.code == 0);
    json doc = out_json(r);
    CHECK(doc.at("method") == "dp");
    CHECK(doc.at("allocation") == json::parse("[[1,2],[3,4]]"));
    CHECK(doc.at("stats").at("c") == 1);
    CHECK(doc.at("stats").at("candidates_tried") == 2);
    CHECK(doc.at("certificate").at("notion") == "eq1p-gc");
    CHECK(doc.at("certificate").at("holds") == true);
}

TEST_CASE("solve dp follows --agent-order and rejects bad orders") {
    CliRun r = run({"solve", "--method", "dp", "--agent-order", "2,1", "--input",
                    cardinality_json(4)});
    CHECK(r.code == 0);
    CHECK(out_json(r).at("allocation") == json::parse("[[3,4],[1,2]]"));

    CHECK(run({"solve", "--method", "dp", "--agent-order", "2,2", "--input",
               cardinality_json(4)}).code == 1);
    CHECK(run({"solve", "--method", "dp", "--agent-order", "2,x", "--input",
               cardinality_json(4)}).code == 1);
    CHECK(run({"solve", "--method", "greedy", "--agent-order", "1,2", "--input",
               additive_json({{1, 1}, {1, 1}})}).code == 1);
}

TEST_CASE("solve dp refuses mixed-sign instances") {
    CliRun r = run({"solve", "--method", "dp", "--input", additive_json({{1, -1}})});
    CHECK(r.code == 2);
}

TEST_CASE("solve local-search emits a trace and certifies eqx-gc") {
    CliRun r = run({"solve", "--method", "local-search", "--trace", "--input",
                    additive_json({{1, 1}, {1, 1}})});
    CHECK(r.code == 0);
    json doc = out_json(r);
    CHECK(doc.at("method") == "local-search");
    CHECK(doc.at("certificate").at("notion") == "eqx-gc");
    CHECK(doc.at("certificate").at("holds") == true);
    CHECK(doc.at("allocation") == json::parse("[[2],[1]]"));
    CHECK(doc.at("stats").at("iterations") == 1);

    std::istringstream lines(r.err);
    std::string line;
    REQUIRE(std::getline(lines, line));
    json step = json::parse(line);
    CHECK(step.at("iteration") == 1);
    CHECK(step.at("moved") == 1);
    CHECK(step.at("donor") == 1);
    CHECK(step.at("receiver") == 2);
    CHECK(step.at("potential").size() == 3);
    CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("solve greedy and strongly-greedy report their notions") {
    CliRun g = run({"solve", "--method", "greedy", "--input",
                    additive_json({{3, 1, 2, 0}, {1, 4, 2, 0}})});
    CHECK(g.code == 0);
    json gdoc = out_json(g);
    CHECK(gdoc.at("allocation") == json::parse("[[1,3],[2,4]]"));
    CHECK(gdoc.at("certificate").at("notion") == "eq1");
    CHECK(gdoc.at("stats").at("iterations") == 4);

    CliRun s = run({"solve", "--method", "strongly-greedy", "--input",
                    additive_json({{5, 3}, {4, 6}})});
    CHECK(s.code == 0);
    json sdoc = out_json(s);
    CHECK(sdoc.at("allocation") == json::parse("[[1],[2]]"));
    CHECK(sdoc.at("certificate").at("notion") == "eqx-gc");
}

TEST_CASE("solve sperner covers both promised notions") {
    CliRun eq = run({"solve", "--method", "sperner", "--input", cardinality_json(2)});
    CHECK(eq.code == 0);
    json eqdoc = out_json(eq);
    CHECK(eqdoc.at("allocation") == json::parse("[[1],[2]]"));
    CHECK(eqdoc.at("stats").at("simplices_scanned") == 3);
    CHECK(eqdoc.at("certificate").at("notion") == "eq1p-gc");

    CliRun ef = run({"solve", "--method", "sperner", "--notion", "ef1p-gc", "--input",
                     cardinality_json(2)});
    CHECK(ef.code == 0);
    json efdoc = out_json(ef);
    CHECK(efdoc.at("allocation") == json::parse("[[2],[1]]"));
    CHECK(efdoc.at("certificate").at("notion") == "ef1p-gc");
}

TEST_CASE("solve enforces method and notion pairing") {
    CHECK(run({"solve", "--method", "dp", "--notion", "eq1", "--input",
               cardinality_json(2)}).code == 1);
    CHECK(run({"solve", "--method", "greedy", "--notion", "eqx-gc", "--input",
               additive_json({{1, 1}})}).code == 1);
    CHECK(run({"solve", "--method", "sperner", "--notion", "ef1", "--input",
               cardinality_json(2)}).code == 1);
    CHECK(run({"solve", "--method", "annealing", "--input", cardinality_json(2)}).code == 1);
}

TEST_CASE("solve sperner scale budget: flag beats environment") {
    // n=2, m=2 triangulation has 6 elementary simplices.
    CHECK(run({"solve", "--method", "sperner", "--scale-budget", "5", "--input",
               cardinality_json(2)}).code == 3);

    setenv("FAIRDIV_SCALE_BUDGET", "5", 1);
    CHECK(run({"solve", "--method", "sperner", "--input", cardinality_json(2)}).code == 3);
    CHECK(run({"solve", "--method", "sperner", "--scale-budget", "6", "--input",
               cardinality_json(2)}).code == 0);
    setenv("FAIRDIV_SCALE_BUDGET", "plenty", 1);
    CHECK(run({"solve", "--method", "sperner", "--input", cardinality_json(2)}).code == 0);
    unsetenv("FAIRDIV_SCALE_BUDGET");
}

TEST_CASE("check verdicts map to exit codes") {
    json doc;
    doc["instance"] = json::parse(additive_json({{5, 5}, {5, 5}}));
    doc["allocation"] = json::parse("[[1,2],[]]");
    CliRun fail = run({"check", "--notion", "ef1-gc", "--input", doc.dump()});
    CHECK(fail.code == 4);
    json verdict = out_json(fail);
    CHECK(verdict.at("notion") == "ef1-gc");
    CHECK(verdict.at("holds") == false);
    CHECK(verdict.at("violations") == json::parse("[[2,1]]"));

    doc["allocation"] = json::parse("[[1],[2]]");
    CliRun ok = run({"check", "--notion", "ef", "--input", doc.dump()});
    CHECK(ok.code == 0);
    CHECK(out_json(ok).at("holds") == true);
}

TEST_CASE("check propagates checker preconditions and input errors") {
    json doc;
    doc["instance"] = json::parse(additive_json({{1, 1, 1}, {1, 1, 1}}));
    doc["allocation"] = json::parse("[[1,3],[2]]");
    CHECK(run({"check", "--notion", "eq1p-gc", "--input", doc.dump()}).code == 2);
    CHECK(run({"check", "--notion", "eq1", "--input", doc.dump()}).code == 0);

    CHECK(run({"check", "--notion", "ef", "--input", "{\"instance\":"}).code == 1);
    CHECK(run({"check", "--notion", "ef", "--input",
               "{\"allocation\":[[1],[2]]}"}).code == 1);
    CHECK(run({"check", "--input", doc.dump()}).code == 1);
    CHECK(run({"check", "--notion", "almost-fair", "--input", doc.dump()}).code == 1);
}

TEST_CASE("sperner random mode reports an odd count") {
    CliRun r = run({"sperner", "--n", "2", "--m", "2", "--seed", "5"});
    CHECK(r.code == 0);
    json doc = out_json(r);
    CHECK(doc.at("source") == "random");
    CHECK(doc.at("seed") == 5);
    CHECK(doc.at("joint") == false);
    CHECK(doc.at("mode") == "single");
    CHECK(doc.at("parity_odd") == true);
    CHECK(doc.at("count").get<long long>() % 2 == 1);
    CHECK_FALSE(doc.at("first").is_null());

    CliRun multi = run({"sperner", "--n", "2", "--m", "2", "--seed", "5", "--multi"});
    CHECK(multi.code == 0);
    json mdoc = out_json(multi);
    CHECK(mdoc.at("mode") == "multi");
    CHECK(mdoc.at("parity_odd") == true);
    CHECK(mdoc.at("minimal_count").get<long long>() % 2 == 1);
    CHECK(mdoc.at("count").get<long long>() >= mdoc.at("minimal_count").get<long long>());
}

TEST_CASE("sperner derives colorings from an instance") {
    CliRun single = run({"sperner", "--input", cardinality_json(2)});
    CHECK(single.code == 0);
    json sdoc = out_json(single);
    CHECK(sdoc.at("source") == "instance");
    CHECK(sdoc.at("mode") == "single");
    CHECK(sdoc.at("count") == 1);
    CHECK(sdoc.at("parity_odd") == true);
    CHECK(sdoc.at("first").at("base") == json::parse("[2]"));
    CHECK(sdoc.at("first").at("scanned") == 3);

    // Mirror instance: all values flipped, so the equity multicoloring kicks in.
    CliRun multi = run({"sperner", "--input", additive_json({{-1, -1}, {-1, -1}})});
    CHECK(multi.code == 0);
    json mdoc = out_json(multi);
    CHECK(mdoc.at("mode") == "multi");
    CHECK(mdoc.at("count") == 2);
    CHECK(mdoc.at("minimal_count") == 1);
    CHECK(mdoc.at("parity_odd") == true);
    CHECK(mdoc.at("first").at("base") == json::parse("[2]"));
}

TEST_CASE("sperner joint search pairs agents with bundles") {
    CliRun r = run({"sperner", "--joint", "--input", cardinality_json(2)});
    CHECK(r.code == 0);
    json doc = out_json(r);
    CHECK(doc.at("joint") == true);
    CHECK(doc.at("mode") == "single");
    REQUIRE_FALSE(doc.at("first").is_null());
    json tau = doc.at("first").at("tau");
    REQUIRE(tau.size() == 2);
    CHECK(tau[0] != tau[1]);
    for (const auto& c : tau) CHECK((c == 1 || c == 2));

    CliRun multi = run({"sperner", "--joint", "--input", additive_json({{-1, -1}, {-1, -1}})});
    CHECK(multi.code == 0);
    CHECK(out_json(multi).at("mode") == "multi");
}

TEST_CASE("sperner rejects unusable requests") {
    CHECK(run({"sperner", "--joint"}).code == 1);
    CHECK(run({"sperner", "--n", "1", "--m", "2"}).code == 1);
    CHECK(run({"sperner"}).code == 1);
    CHECK(run({"sperner", "--n", "3", "--m", "2", "--scale-budget", "10"}).code == 3);
    CHECK(run({"sperner", "--input", additive_json({{1, -1}, {1, 1}})}).code == 2);
}

TEST_CASE("oracle reports existence, absence, and budget limits") {
    CliRun twins = run({"oracle", "--notion", "ef", "--scope", "all", "--input",
                        additive_json({{5, 5}, {5, 5}})});
    CHECK(twins.code == 0);
    json tdoc = out_json(twins);
    CHECK(tdoc.at("exists") == true);
    CHECK(tdoc.at("examined") == 2);
    CHECK(tdoc.at("witness") == json::parse("[[1],[2]]"));

    CliRun absent = run({"oracle", "--notion", "ef", "--input", cardinality_json(1)});
    CHECK(absent.code == 4);
    json adoc = out_json(absent);
    CHECK(adoc.at("exists") == false);
    CHECK(adoc.at("examined") == 2);
    CHECK(adoc.at("witness").is_null());

    CHECK(run({"oracle", "--notion", "ef", "--budget", "1", "--input",
               cardinality_json(1)}).code == 3);
    CHECK(run({"oracle", "--notion", "ef", "--scope", "everything", "--input",
               cardinality_json(1)}).code == 1);
}

TEST_CASE("input can arrive on stdin and output can land in a file") {
    CliRun viaStdin = run({"solve", "--method", "dp"}, cardinality_json(4));
    CHECK(viaStdin.code == 0);
    CHECK(out_json(viaStdin).at("allocation") == json::parse("[[1,2],[3,4]]"));

    CliRun dash = run({"solve", "--method", "dp", "--input", "-"}, cardinality_json(4));
    CHECK(dash.out == viaStdin.out);

    std::string path = "cli_out_test.json";
    CliRun toFile = run({"gen", "--n", "2", "--m", "3", "--seed", "9", "--output", path});
    CHECK(toFile.code == 0);
    CHECK(toFile.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json doc = json::parse(f);
    CHECK(doc.at("n") == 2);
    f.close();
    std::remove(path.c_str());

    CHECK(run({"solve", "--method", "dp", "--input", "no_such_file.json"}).code == 1);
}

TEST_CASE("top-level argument errors exit with 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"transmogrify"}).code == 1);
    CHECK(run({"solve", "--method"}).code == 1);
}

TEST_CASE("instance JSON round-trips for every valuation kind") {
    std::vector<std::string> sources = {
        additive_json({{3, -1, 2}, {0, 0, 5}}),
        cardinality_json(3),
    };
    json table;
    table["0"] = 0;
    table["1"] = 4;
    table["2"] = -1;
    table["3"] = 6;
    json sub;
    sub["n"] = 1;
    sub["m"] = 2;
    sub["valuation"]["kind"] = "subset";
    sub["valuation"]["tables"] = json::array({table});
    sources.push_back(sub.dump());

    for (const std::string& src : sources) {
        Instance inst = instance_from_json(src);
        std::string dumped = instance_to_json(inst);
        Instance again = instance_from_json(dumped);
        CHECK(instance_to_json(again) == dumped);
        CHECK(again.n == inst.n);
        CHECK(again.m == inst.m);
        Bundle everything = Bundle::interval(1, inst.m);
        for (Agent i = 1; i <= inst.n; ++i)
            CHECK(inst.valuation.value(i, everything) == again.valuation.value(i, everything));
    }
}

TEST_CASE("allocation and verdict JSON round-trip") {
    Allocation alloc{{Bundle(std::vector<Item>{3, 1}), Bundle(), Bundle(std::vector<Item>{2})}};
    std::string dumped = allocation_to_json(alloc);
    Allocation again = allocation_from_json(dumped);
    CHECK(again.bundles == alloc.bundles);
    CHECK(allocation_to_json(again) == dumped);

    Instance inst = instance_from_json(additive_json({{5, 5}, {5, 5}}));
    FairnessVerdict verdict = check(inst, allocation_from_json("[[1,2],[]]"),
                                    FairnessNotion::EF1GoodChore);
    std::string vdump = verdict_to_json(verdict);
    FairnessVerdict vagain = verdict_from_json(vdump);
    CHECK(verdict_to_json(vagain) == vdump);
    CHECK(vagain.holds == verdict.holds);
    REQUIRE(vagain.violations.size() == 1);
    CHECK(vagain.violations[0] == verdict.violations[0]);

    CHECK_THROWS_AS(instance_from_json("{\"n\":2}"), ParseError);
    CHECK_THROWS_AS(allocation_from_json("{\"a\":1}"), ParseError);
    CHECK_THROWS_AS(verdict_from_json("[1,2]"), ParseError);
}
