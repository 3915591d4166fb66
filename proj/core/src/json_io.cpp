#include "fairdiv/json_io.hpp"

#include <stdexcept>
#include <utility>

#include "fairdiv/errors.hpp"
#include "json.hpp"

namespace fairdiv {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("not valid JSON");
    return j;
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
    return f.get<int>();
}

long long as_value(const json& j) {
    if (!j.is_number_integer()) throw ParseError("values must be integers");
    return j.get<long long>();
}

std::vector<Item> as_items(const json& j) {
    if (!j.is_array()) throw ParseError("expected an item array");
    std::vector<Item> items;
    items.reserve(j.size());
    for (const json& x : j) {
        if (!x.is_number_integer()) throw ParseError("items must be integers");
        items.push_back(x.get<Item>());
    }
    return items;
}

Valuation parse_valuation(const json& j, int n, int m) {
    const json& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("valuation kind must be a string");
    const std::string name = kind.get<std::string>();

    if (name == "additive") {
        const json& values = field(j, "values");
        if (!values.is_array() || values.size() != static_cast<size_t>(n))
            throw ParseError("\"values\" must list one row per agent");
        std::vector<std::vector<long long>> rows;
        rows.reserve(static_cast<size_t>(n));
        for (const json& row : values) {
            if (!row.is_array() || row.size() != static_cast<size_t>(m))
                throw ParseError("additive rows must have one value per item");
            std::vector<long long> r;
            r.reserve(static_cast<size_t>(m));
            for (const json& cell : row) r.push_back(as_value(cell));
            rows.push_back(std::move(r));
        }
        return Valuation::additive(std::move(rows));
    }

    if (name == "interval") {
        const json& table = field(j, "table");
        if (!table.is_array() || table.size() != static_cast<size_t>(n))
            throw ParseError("\"table\" must list one triangle per agent");
        std::vector<std::vector<std::vector<long long>>> tri;
        tri.reserve(static_cast<size_t>(n));
        for (const json& per_agent : table) {
            if (!per_agent.is_array() || per_agent.size() != static_cast<size_t>(m))
                throw ParseError("interval triangle must have one row per start item");
            std::vector<std::vector<long long>> rows;
            for (size_t s = 0; s < per_agent.size(); ++s) {
                const json& row = per_agent[s];
                if (!row.is_array() || row.size() != static_cast<size_t>(m) - s)
                    throw ParseError("interval row has the wrong length");
                std::vector<long long> r;
                for (const json& cell : row) r.push_back(as_value(cell));
                rows.push_back(std::move(r));
            }
            tri.push_back(std::move(rows));
        }
        return Valuation::interval_table(std::move(tri));
    }

    if (name == "subset") {
        const json& tables = field(j, "tables");
        if (!tables.is_array() || tables.size() != static_cast<size_t>(n))
            throw ParseError("\"tables\" must list one table per agent");
        if (m > 20) throw ParseError("subset tables support at most 20 items");
        const size_t size = size_t{1} << m;
        std::vector<std::vector<long long>> flat;
        flat.reserve(static_cast<size_t>(n));
        for (const json& table : tables) {
            if (!table.is_object()) throw ParseError("subset tables must be objects keyed by bitmask");
            std::vector<long long> values(size, 0);
            if (table.size() != size) throw ParseError("subset table must cover every bitmask");
            for (const auto& [key, cell] : table.items()) {
                size_t mask = 0;
                try {
                    size_t pos = 0;
                    mask = std::stoull(key, &pos);
                    if (pos != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    throw ParseError("subset table keys must be decimal bitmasks");
                }
                if (mask >= size) throw ParseError("subset table key out of range");
                values[mask] = as_value(cell);
            }
            flat.push_back(std::move(values));
        }
        return Valuation::subset_table(std::move(flat));
    }

    throw ParseError("unknown valuation kind \"" + name + "\"");
}

}  // namespace

std::string instance_to_json(const Instance& inst, int indent) {
    json v;
    switch (inst.valuation.kind()) {
        case ValuationKind::Additive:
            v["kind"] = "additive";
            v["values"] = inst.valuation.additive_values();
            break;
        case ValuationKind::IntervalTable: {
            v["kind"] = "interval";
            json table = json::array();
            for (Agent i = 1; i <= inst.n; ++i) {
                json tri = json::array();
                for (int s = 1; s <= inst.m; ++s) {
                    json row = json::array();
                    for (int t = s; t <= inst.m; ++t) row.push_back(inst.value(i, Interval{s, t}));
                    tri.push_back(std::move(row));
                }
                table.push_back(std::move(tri));
            }
            v["table"] = std::move(table);
            break;
        }
        case ValuationKind::SubsetTable: {
            v["kind"] = "subset";
            json tables = json::array();
            const std::uint32_t full = inst.m == 0 ? 0u : (1u << inst.m) - 1u;
            for (Agent i = 1; i <= inst.n; ++i) {
                json table = json::object();
                for (std::uint32_t mask = 0; mask <= full; ++mask) {
                    std::vector<Item> items;
                    for (int x = 1; x <= inst.m; ++x)
                        if (mask & (1u << (x - 1))) items.push_back(x);
                    table[std::to_string(mask)] = inst.value(i, Bundle(std::move(items)));
                }
                tables.push_back(std::move(table));
            }
            v["tables"] = std::move(tables);
            break;
        }
    }
    json j;
    j["n"] = inst.n;
    j["m"] = inst.m;
    j["valuation"] = std::move(v);
    return j.dump(indent);
}

Instance instance_from_json(const std::string& text) {
    json j = parse_text(text);
    const int n = int_field(j, "n");
    const int m = int_field(j, "m");
    if (n < 1) throw ParseError("need at least one agent");
    if (m < 0) throw ParseError("negative item count");
    try {
        Valuation v = parse_valuation(field(j, "valuation"), n, m);
        return {n, m, std::move(v)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string allocation_to_json(const Allocation& a, int indent) {
    json j = json::array();
    for (const Bundle& b : a.bundles) j.push_back(b.items());
    return j.dump(indent);
}

Allocation allocation_from_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_array()) throw ParseError("allocation must be an array of bundles");
    Allocation a;
    a.bundles.reserve(j.size());
    for (const json& b : j) a.bundles.emplace_back(as_items(b));
    return a;
}

std::string verdict_to_json(const FairnessVerdict& verdict, int indent) {
    json j;
    j["notion"] = notion_name(verdict.notion);
    j["holds"] = verdict.holds;
    json violations = json::array();
    for (const auto& [i, jj] : verdict.violations) violations.push_back({i, jj});
    j["violations"] = std::move(violations);
    json witnesses = json::array();
    for (const RemovalWitness& w : verdict.witnesses) {
        json entry;
        entry["i"] = w.i;
        entry["j"] = w.j;
        entry["X"] = w.removed;
        witnesses.push_back(std::move(entry));
    }
    j["witnesses"] = std::move(witnesses);
    return j.dump(indent);
}

FairnessVerdict verdict_from_json(const std::string& text) {
    json j = parse_text(text);
    FairnessVerdict verdict;
    const json& notion = field(j, "notion");
    if (!notion.is_string()) throw ParseError("\"notion\" must be a string");
    try {
        verdict.notion = notion_from_name(notion.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    const json& holds = field(j, "holds");
    if (!holds.is_boolean()) throw ParseError("\"holds\" must be a boolean");
    verdict.holds = holds.get<bool>();
    for (const json& pair : field(j, "violations")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("violations must be [i,j] pairs");
        verdict.violations.emplace_back(pair[0].get<Agent>(), pair[1].get<Agent>());
    }
    for (const json& w : field(j, "witnesses")) {
        RemovalWitness witness;
        witness.i = int_field(w, "i");
        witness.j = int_field(w, "j");
        witness.removed = as_items(field(w, "X"));
        verdict.witnesses.push_back(std::move(witness));
    }
    return verdict;
}

}  // namespace fairdiv
