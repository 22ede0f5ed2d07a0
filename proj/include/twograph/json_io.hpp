#pragma once

#include <string>

#include "twograph/decision.hpp"
#include "twograph/grammar.hpp"
#include "twograph/recognizer.hpp"

#include "json.hpp"

namespace twograph {

using json = nlohmann::json;

// Parsers throw ParseError (malformed JSON, with line/column) or the
// violated invariant's error, with a JSON-pointer path in the message.

Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g, const ClassId& cls);

// A graph file also names its class; the alphabet is read off the edges.
struct GraphFile {
  ClassId cls;
  Graph graph;
};
GraphFile parse_graph_file(const std::string& path);
GraphFile parse_graph_text(const std::string& text, const std::string& origin = "<input>");

Grammar grammar_from_json(const json& j);
json grammar_to_json(const Grammar& g);
Grammar parse_grammar_file(const std::string& path);
Grammar parse_grammar_text(const std::string& text, const std::string& origin = "<input>");

Term term_from_json(const json& j);
json term_to_json(const Term& t);

json profile_to_json(const Profile& p);
json verdict_to_json(const InclusionVerdict& v, const ClassId& cls);

// Canonical serialization: sorted keys, two-space indentation, trailing newline.
std::string dump_canonical(const json& j);

// DOT export of a graph / block-cut tree (plain text convenience).
std::string graph_to_dot(const Graph& g);
std::string block_cut_tree_to_dot(const Graph& g, const BlockCutTree& t);

}  // namespace twograph
