#ifndef TPC_PRINT_SYNTAX_HPP
#define TPC_PRINT_SYNTAX_HPP

#include <sstream>

#include "tpc/printer.hpp"
#include "tpc/syntax.hpp"

namespace tpc {

// Renders surface and combinator trees back to source text. Printing then
// reparsing is a fixpoint, which the tests pin down.

namespace detail {

inline void print_surf(std::ostream& out, const SExprPtr& e, int min_prec);

inline void print_surf_name(std::ostream& out, const Name& n) { out << print_atom_name(n); }

inline void print_surf(std::ostream& out, const SExprPtr& e, int min_prec) {
  if (auto* n = std::get_if<SName>(&e->node)) {
    print_surf_name(out, n->name);
    return;
  }
  if (std::get_if<SType>(&e->node)) {
    out << "type";
    return;
  }
  if (auto* b = std::get_if<SBinder>(&e->node)) {
    bool p = min_prec > prec::binder;
    if (p) out << '(';
    out << (b->is_pi ? "forall " : "\\");
    for (size_t i = 0; i < b->names.size(); ++i)
      out << (i ? "," : "") << print_decl_name(b->names[i]);
    out << ':';
    print_surf(out, b->annot, prec::eq);
    out << ". ";
    print_surf(out, b->body, prec::binder);
    if (p) out << ')';
    return;
  }
  if (auto* q = std::get_if<SEq>(&e->node)) {
    bool p = min_prec > prec::eq;
    if (p) out << '(';
    print_surf(out, q->lhs, prec::arrow);
    out << " = ";
    print_surf(out, q->rhs, prec::arrow);
    if (q->carrier) {
      out << " : ";
      print_surf(out, q->carrier, prec::arrow);
    }
    if (p) out << ')';
    return;
  }
  if (auto* a = std::get_if<SArrow>(&e->node)) {
    bool p = min_prec > prec::arrow;
    if (p) out << '(';
    print_surf(out, a->dom, prec::infix);
    out << " -> ";
    print_surf(out, a->cod, prec::arrow);
    if (p) out << ')';
    return;
  }
  const auto& app = std::get<SApp>(e->node);
  // binary application of an operator name prints infix
  if (auto* inner = std::get_if<SApp>(&app.fn->node)) {
    if (auto* head = std::get_if<SName>(&inner->fn->node);
        head && is_operator_name(head->name.text)) {
      bool p = min_prec > prec::infix;
      if (p) out << '(';
      print_surf(out, inner->arg, prec::apply);
      out << ' ' << head->name.text << ' ';
      print_surf(out, app.arg, prec::apply);
      if (p) out << ')';
      return;
    }
  }
  bool p = min_prec > prec::apply;
  if (p) out << '(';
  print_surf(out, app.fn, prec::apply);
  out << ' ';
  print_surf(out, app.arg, prec::atom);
  if (p) out << ')';
}

inline void print_bracket(std::ostream& out, const BracketList& b) {
  if (b.entries.empty()) {
    out << "[]";
    return;
  }
  out << "[ ";
  for (size_t i = 0; i < b.entries.size(); ++i) {
    if (i) out << ", ";
    out << print_decl_name(b.entries[i].first) << " |-> ";
    print_surf(out, b.entries[i].second, prec::eq);
  }
  out << " ]";
}

inline void print_arg(std::ostream& out, const RawArg& a) {
  if (auto* n = std::get_if<Name>(&a))
    out << print_decl_name(*n);
  else
    print_bracket(out, std::get<BracketList>(a));
}

inline void print_raw_decls(std::ostream& out, const std::vector<RawDecl>& ds) {
  out << "{ ";
  for (size_t i = 0; i < ds.size(); ++i) {
    if (i) out << "; ";
    out << print_decl_name(ds[i].name) << " : ";
    print_surf(out, ds[i].classifier, prec::binder);
  }
  out << " }";
}

// combinator precedence: bars < seq < postfix < primary
namespace tprec {
constexpr int bars = 0;
constexpr int seq = 1;
constexpr int postfix = 2;
constexpr int primary = 3;
}  // namespace tprec

inline void print_tpc(std::ostream& out, const TpcPtr& e, int min_prec);

inline void print_construction_arg(std::ostream& out, const TpcPtr& e, const RawArg& r) {
  print_tpc(out, e, tprec::postfix);
  out << ' ';
  print_arg(out, r);
}

inline void print_tpc(std::ostream& out, const TpcPtr& e, int min_prec) {
  if (std::get_if<EmptyE>(&e->node)) {
    out << "Empty";
    return;
  }
  if (auto* t = std::get_if<TheoryE>(&e->node)) {
    out << "Theory ";
    print_raw_decls(out, t->decls);
    return;
  }
  if (auto* x = std::get_if<ExtendE>(&e->node)) {
    out << "extend ";
    print_tpc(out, x->base, tprec::postfix);
    out << " by ";
    print_raw_decls(out, x->decls);
    return;
  }
  if (auto* c = std::get_if<CombineE>(&e->node)) {
    auto* bl = std::get_if<BracketList>(&c->ren_left);
    auto* br = std::get_if<BracketList>(&c->ren_right);
    if (bl && br && bl->entries.empty() && br->entries.empty()) {
      bool p = min_prec > tprec::bars;
      if (p) out << '(';
      print_tpc(out, c->left, tprec::seq);
      out << " || ";
      print_tpc(out, c->right, tprec::seq);
      if (p) out << ')';
      return;
    }
    out << "combine ";
    print_construction_arg(out, c->left, c->ren_left);
    out << ", ";
    print_construction_arg(out, c->right, c->ren_right);
    return;
  }
  if (auto* m = std::get_if<MixinE>(&e->node)) {
    out << "mixin ";
    print_construction_arg(out, m->left, m->ren_left);
    out << ", ";
    print_construction_arg(out, m->right, m->ren_right);
    return;
  }
  if (auto* v = std::get_if<ViewE>(&e->node)) {
    out << "view ";
    print_tpc(out, v->source, tprec::postfix);
    out << " as ";
    print_tpc(out, v->target, tprec::postfix);
    out << " via ";
    print_arg(out, v->assignment);
    return;
  }
  if (auto* s = std::get_if<SeqE>(&e->node)) {
    bool p = min_prec > tprec::seq;
    if (p) out << '(';
    print_tpc(out, s->first, tprec::seq);
    out << " ; ";
    print_tpc(out, s->second, tprec::postfix);
    if (p) out << ')';
    return;
  }
  if (auto* r = std::get_if<RenameE>(&e->node)) {
    bool p = min_prec > tprec::postfix;
    if (p) out << '(';
    print_tpc(out, r->base, tprec::postfix);
    out << ' ';
    print_arg(out, r->renaming);
    if (p) out << ')';
    return;
  }
  out << print_decl_name(std::get<RefE>(e->node).name);
}

}  // namespace detail

inline std::string print_expr(const TpcPtr& e) {
  std::ostringstream out;
  detail::print_tpc(out, e, 0);
  return out.str();
}

inline std::string print_module(const Module& m) {
  std::ostringstream out;
  for (const auto& d : m.defs) {
    out << print_decl_name(d.name) << " := ";
    if (d.is_expr())
      detail::print_tpc(out, d.expr(), 0);
    else
      detail::print_bracket(out, d.bracket());
    out << '\n';
  }
  return out.str();
}

}  // namespace tpc

#endif
