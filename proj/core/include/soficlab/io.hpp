#pragma once

#include "soficlab/graph.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace soficlab {

// Symbols with this prefix are reserved for symbols minted by constructions.
inline constexpr std::string_view kReservedPrefix = "^";

// Parses the JSON graph format. Vertex-labelled graphs are converted by giving
// each edge the label of its source vertex, or of its target vertex when the
// file sets "label_convention": "target".
LabeledGraph parse_presentation(std::string_view text, bool allow_reserved = false);
LabeledGraph presentation_from_json(const nlohmann::json& doc, bool allow_reserved = false);
LabeledGraph load_presentation(const std::string& path, bool allow_reserved = false);

// Edge-labelled JSON form; parse_presentation(serialize) reproduces the graph.
nlohmann::json presentation_to_json(const LabeledGraph& g);
std::string serialize_presentation(const LabeledGraph& g);
std::string to_dot(const LabeledGraph& g, std::string_view name = "G");

// Words are written as plain strings over single-character alphabets and as
// whitespace- or comma-separated tokens otherwise.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w);

} // namespace soficlab
