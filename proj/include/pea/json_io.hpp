#pragma once

// JSON formats: atom-structure dumps (round-trip stable on canonical form),
// scheme descriptors, simple graphs, coloured graphs, axiom reports and match
// transcripts.

#include <string>

#include "pea/atom_structure.hpp"
#include "pea/axioms.hpp"
#include "pea/colour.hpp"
#include "pea/coloured_graph.hpp"
#include "pea/graph_game.hpp"
#include "pea/monk.hpp"

namespace pea {

std::string structure_to_json(const StructurePtr& s);
StructurePtr structure_from_json(const std::string& text, bool validated = true);

std::string scheme_to_json(const ColourScheme& scheme);
ColourScheme scheme_from_json(const std::string& text);

std::string simple_graph_to_json(const SimpleGraph& g);
SimpleGraph simple_graph_from_json(const std::string& text);

std::string coloured_graph_to_json(const ColourScheme& scheme, const ColouredGraph& g);
ColouredGraph coloured_graph_from_json(const ColourScheme& scheme, const std::string& text);

std::string axiom_report_to_json(const AxiomReport& rep);

std::string match_to_json(const std::string& variant, int pebbles, const MatchResult& res);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace pea
