#ifndef TPC_REPORT_HPP
#define TPC_REPORT_HPP

#include "tpc/elaborator.hpp"
#include "tpc/print_syntax.hpp"

namespace tpc {

// Deterministic text renderings of an elaboration: the structured dump and
// the theory graph (text and DOT).

inline std::string print_assignment(const View& v) {
  std::string out = "[";
  bool first = true;
  for (const auto& d : v.source.decls) {
    const Image* img = v.assignment.find(d.name);
    if (!img) continue;
    out += first ? " " : ", ";
    first = false;
    out += print_decl_name(d.name) + " |-> ";
    if (img->is_term())
      out += print_term(img->term());
    else
      out += print_type(img->type());
  }
  out += first ? "]" : " ]";
  return out;
}

inline std::string print_renaming_map(const NameMap& m) {
  std::string out = "[";
  bool first = true;
  for (const auto& [from, to] : m) {
    out += first ? " " : ", ";
    first = false;
    out += print_decl_name(from) + " |-> " + print_decl_name(to);
  }
  out += first ? "]" : " ]";
  return out;
}

inline std::string dump_text(const Elaboration& el) {
  std::string out;
  for (const auto& entry : el.env.entries) {
    out += "def " + print_decl_name(entry.name) + "\n";
    out += "  type: " + entry.type.show() + "\n";
    if (entry.bracket) {
      std::ostringstream os;
      detail::print_bracket(os, *entry.bracket);
      out += std::string("  entries: ") + os.str() + "\n";
      continue;
    }
    const ElabResult& r = *entry.result;
    if (r.as_theory) {
      out += "  theory:\n";
      std::istringstream lines(flatten_text(*r.as_theory));
      std::string line;
      while (std::getline(lines, line)) out += "    " + line + "\n";
    }
    if (r.as_embedding)
      out += "  embedding: " + print_assignment(r.as_embedding->view) + "\n";
    else if (r.as_view)
      out += "  view: " + print_assignment(*r.as_view) + "\n";
  }
  return out;
}

inline const char* edge_tag_name(GraphEdge::Tag t) {
  switch (t) {
    case GraphEdge::Tag::Inclusion: return "incl";
    case GraphEdge::Tag::Renaming: return "rename";
    case GraphEdge::Tag::View: return "view";
  }
  return "?";
}

inline std::string graph_text(const DiagramGraph& g) {
  std::string out;
  for (const auto& n : g.nodes) out += "theory " + n.text + "\n";
  for (const auto& e : g.edges)
    out += "edge " + e.from.text + " -> " + e.to.text + " " + edge_tag_name(e.tag) + " (" +
           e.label.text + ")\n";
  return out;
}

inline std::string graph_dot(const DiagramGraph& g) {
  std::string out = "digraph theories {\n";
  for (const auto& n : g.nodes) out += "  \"" + n.text + "\";\n";
  for (const auto& e : g.edges) {
    const char* style = e.tag == GraphEdge::Tag::View ? "dashed" : "solid";
    out += "  \"" + e.from.text + "\" -> \"" + e.to.text + "\" [style=" + style + ",label=\"" +
           e.label.text + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace tpc

#endif
