#pragma once

#include "subcur/automorphisms.hpp"
#include "subcur/currents.hpp"
#include "subcur/fiber.hpp"
#include "subcur/stallings.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace subcur {

// {"rank", "vertices", "edges": [[o, t, label], ...], "basepoint"?}
nlohmann::json to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

// [{"coefficient": "p/q", "graph": ...}, ...] in key order.
nlohmann::json to_json(const RationalCurrent& mu);

// Per component: V, E, chi, contractible, g and intersection generators.
nlohmann::json to_json(const FiberProduct& fp, const BasedCoreGraph& h, const BasedCoreGraph& k);

std::string to_dot(const LabeledGraph& g, std::string_view name = "G");
// Vertices colored by component.
std::string to_dot(const FiberProduct& fp, std::string_view name = "P");

// One generator per line; '#' starts a comment; blank lines are skipped.
// Parse errors name the line.
std::vector<Word> read_words(std::istream& in, Alphabet alphabet);
std::vector<Word> read_words_file(const std::string& path, Alphabet alphabet);

// Exactly N non-comment lines, line i the image of a_i.
Endomorphism read_automorphism(std::istream& in, Alphabet alphabet);
Endomorphism read_automorphism_file(const std::string& path, Alphabet alphabet);

// "tree\tvalue" rows under a header.
std::string cylinder_report(const RationalCurrent& mu, std::span<const FiniteSubtree> trees);

}  // namespace subcur
