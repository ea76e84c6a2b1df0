#include "pea/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pea {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + path);
    out << content;
}

std::string structure_to_json(const StructurePtr& s) {
    const int n = s->dim();
    json j;
    j["kind"] = family_name(s->kind().family);
    j["n"] = n;
    json atoms = json::array();
    for (Atom a = 0; a < s->atom_count(); ++a) atoms.push_back(s->describe(a));
    j["atoms"] = std::move(atoms);
    json e = json::array();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            json entry;
            entry["i"] = i;
            entry["j"] = k;
            entry["atoms"] = s->diag_set(i, k).to_vector();
            e.push_back(std::move(entry));
        }
    j["E"] = std::move(e);
    json t = json::array();
    for (int i = 0; i < n; ++i) {
        json entry;
        entry["i"] = i;
        json pairs = json::array();
        const CylRelation& rel = s->cyl_rel(i);
        if (rel.is_equivalence()) {
            for (uint32_t c = 0; c < rel.class_count(); ++c) {
                const auto& members = rel.class_members(c);
                for (Atom a : members)
                    for (Atom b : members) pairs.push_back(json::array({a, b}));
            }
        } else {
            for (Atom a = 0; a < s->atom_count(); ++a)
                for (Atom b : rel.raw_successors(a)) pairs.push_back(json::array({a, b}));
        }
        entry["pairs"] = std::move(pairs);
        t.push_back(std::move(entry));
    }
    j["T"] = std::move(t);
    if (s->kind().has_transpositions()) {
        json sv = json::array();
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) {
                json entry;
                entry["i"] = i;
                entry["j"] = k;
                std::vector<Atom> map(s->atom_count());
                for (Atom a = 0; a < s->atom_count(); ++a) map[a] = s->transp_image(i, k, a);
                entry["map"] = std::move(map);
                sv.push_back(std::move(entry));
            }
        j["S"] = std::move(sv);
    }
    return j.dump(1);
}

StructurePtr structure_from_json(const std::string& text, bool validated) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad structure JSON: ") + e.what());
    }
    AtomStructureData data;
    try {
        data.kind = SignatureKind(family_from_name(j.at("kind").get<std::string>()),
                                  j.at("n").get<int>());
        const int n = data.kind.n;
        auto atoms = j.at("atoms");
        data.atom_count = static_cast<uint32_t>(atoms.size());
        for (auto& a : atoms) data.descriptors.push_back(a.get<std::string>());
        data.diag.assign(n, std::vector<Bitset>(n, Bitset(data.atom_count)));
        for (auto& entry : j.at("E")) {
            int i = entry.at("i").get<int>();
            int k = entry.at("j").get<int>();
            for (auto& a : entry.at("atoms")) data.diag[i][k].set(a.get<uint32_t>());
        }
        std::vector<std::vector<std::pair<Atom, Atom>>> pairs(n);
        for (auto& entry : j.at("T")) {
            int i = entry.at("i").get<int>();
            for (auto& p : entry.at("pairs"))
                pairs[i].push_back({p.at(0).get<uint32_t>(), p.at(1).get<uint32_t>()});
        }
        for (int i = 0; i < n; ++i)
            data.cyl.push_back(CylRelation::from_pairs(data.atom_count, pairs[i]));
        if (data.kind.has_transpositions()) {
            data.transp.assign(n, std::vector<std::vector<Atom>>(n));
            for (auto& entry : j.at("S")) {
                int i = entry.at("i").get<int>();
                int k = entry.at("j").get<int>();
                std::vector<Atom> map;
                for (auto& v : entry.at("map")) map.push_back(v.get<uint32_t>());
                data.transp[i][k] = std::move(map);
            }
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad structure JSON: ") + e.what());
    }
    return validated ? AtomStructure::create(std::move(data))
                     : AtomStructure::create_unchecked(std::move(data));
}

std::string scheme_to_json(const ColourScheme& scheme) {
    json j;
    j["variant"] = variant_name(scheme.variant());
    j["n"] = scheme.dim();
    switch (scheme.variant()) {
        case SchemeVariant::Std:
            j["greens"] = scheme.tints().size();
            j["reds"] = scheme.red_base();
            break;
        case SchemeVariant::Split:
            j["greens"] = scheme.tints().size();
            j["reds"] = scheme.red_base();
            j["copies"] = scheme.copies();
            break;
        case SchemeVariant::Order:
            j["greenPrefix"] = scheme.tints().size();
            j["redPrefix"] = scheme.red_base();
            break;
        case SchemeVariant::NonFinAx:
            j["mu"] = scheme.tints().size();
            j["kappa"] = scheme.red_base();
            break;
    }
    return j.dump(1);
}

ColourScheme scheme_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        std::string v = j.at("variant").get<std::string>();
        int n = j.at("n").get<int>();
        if (v == "std")
            return ColourScheme::std_rainbow(n, j.at("greens").get<int>(), j.at("reds").get<int>());
        if (v == "split")
            return ColourScheme::split(n, j.at("greens").get<int>(), j.at("reds").get<int>(),
                                       j.at("copies").get<int>());
        if (v == "order")
            return ColourScheme::order(n, j.at("greenPrefix").get<int>(),
                                       j.at("redPrefix").get<int>());
        if (v == "nonfinax")
            return ColourScheme::nonfinax(n, j.at("mu").get<int>(), j.at("kappa").get<int>());
        throw parse_error("unknown scheme variant '" + v + "'");
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad scheme JSON: ") + e.what());
    }
}

std::string simple_graph_to_json(const SimpleGraph& g) {
    json j;
    j["nodes"] = g.nodes;
    json edges = json::array();
    for (int u = 0; u < g.nodes; ++u)
        for (int v = u + 1; v < g.nodes; ++v)
            if (g.has_edge(u, v)) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j.dump(1);
}

SimpleGraph simple_graph_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        SimpleGraph g(j.at("nodes").get<int>());
        for (auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        return g;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad graph JSON: ") + e.what());
    }
}

std::string coloured_graph_to_json(const ColourScheme& scheme, const ColouredGraph& g) {
    json j;
    j["nodes"] = g.node_count();
    json edges = json::array();
    for (int u = 0; u < g.node_count(); ++u)
        for (int v = u + 1; v < g.node_count(); ++v) {
            json e;
            e["u"] = u;
            e["v"] = v;
            e["colour"] = scheme.colour_name(g.edge(u, v));
            edges.push_back(std::move(e));
        }
    j["edges"] = std::move(edges);
    json yellows = json::array();
    for (auto& y : g.yellows()) {
        json e;
        json tuple = json::array();
        for (int u = 0; u < g.node_count(); ++u)
            if ((y.nodes >> u) & 1) tuple.push_back(u);
        e["tuple"] = std::move(tuple);
        if (y.shade.full) {
            e["S"] = "full";
        } else {
            json tints = json::array();
            for (std::size_t k = 0; k < scheme.tints().size(); ++k)
                if ((y.shade.mask >> k) & 1) tints.push_back(scheme.tints()[k]);
            e["S"] = std::move(tints);
        }
        yellows.push_back(std::move(e));
    }
    j["yellows"] = std::move(yellows);
    return j.dump(1);
}

ColouredGraph coloured_graph_from_json(const ColourScheme& scheme, const std::string& text) {
    try {
        json j = json::parse(text);
        ColouredGraph g(j.at("nodes").get<int>());
        for (auto& e : j.at("edges"))
            g.set_edge(e.at("u").get<int>(), e.at("v").get<int>(),
                       scheme.parse_colour(e.at("colour").get<std::string>()));
        for (auto& e : j.at("yellows")) {
            NodeSet s = 0;
            for (auto& u : e.at("tuple")) s |= static_cast<NodeSet>(1u << u.get<int>());
            Yellow y;
            if (e.at("S").is_string() && e.at("S").get<std::string>() == "full") {
                y.full = true;
            } else {
                for (auto& t : e.at("S")) {
                    int idx = scheme.tint_index(t.get<int>());
                    if (idx < 0) throw parse_error("tint outside the scheme universe");
                    y.mask |= 1u << idx;
                }
            }
            g.set_yellow(s, y);
        }
        return g;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad coloured graph JSON: ") + e.what());
    }
}

std::string axiom_report_to_json(const AxiomReport& rep) {
    json j;
    j["instances"] = rep.results.size();
    j["failures"] = rep.fail_count();
    json rows = json::array();
    for (auto& r : rep.results) {
        json row;
        row["name"] = r.name;
        row["statement"] = r.statement;
        row["mode"] = r.mode;
        row["pass"] = r.pass;
        if (!r.pass) row["witness"] = r.witness;
        rows.push_back(std::move(row));
    }
    j["axioms"] = std::move(rows);
    return j.dump(1);
}

std::string match_to_json(const std::string& variant, int pebbles, const MatchResult& res) {
    json j;
    j["variant"] = variant;
    j["pebbles"] = pebbles;
    json rounds = json::array();
    for (auto& line : res.transcript) rounds.push_back(line);
    j["rounds"] = std::move(rounds);
    j["verdict"] = res.winner == MatchResult::Winner::Forall ? "ForallWins" : "ExistsSurvives";
    j["roundsPlayed"] = res.rounds_played;
    j["note"] = res.note;
    return j.dump(1);
}

} // namespace pea
