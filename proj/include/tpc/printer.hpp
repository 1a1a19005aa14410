#ifndef TPC_PRINTER_HPP
#define TPC_PRINTER_HPP

#include <sstream>
#include <string>

#include "tpc/kernel.hpp"

namespace tpc {

// Deterministic rendering with minimal parentheses. Precedence levels,
// loosest first: binder bodies, equations, arrows, infix operators,
// application, atoms. Binary application of an operator-named symbol prints
// infix; infix is non-associative, so both operand slots require application
// level or tighter.

namespace prec {
constexpr int binder = 0;
constexpr int eq = 1;
constexpr int arrow = 2;
constexpr int infix = 3;
constexpr int apply = 4;
constexpr int atom = 5;
}  // namespace prec

inline std::string quote_name(const Name& n) { return "`" + n.text + "`"; }

// how a name appears where a declaration/renaming position expects one
inline std::string print_decl_name(const Name& n) {
  if (is_plain_ident(n.text) || is_operator_name(n.text)) return n.text;
  return quote_name(n);
}

// how a name appears as a term/type atom
inline std::string print_atom_name(const Name& n) {
  if (is_plain_ident(n.text)) return n.text;
  return quote_name(n);
}

namespace detail {

struct Printer {
  std::ostringstream out;
  std::vector<Name> scope;  // display names of enclosing binders, innermost last

  Name display(int index) const {
    if (index < 0 || index >= static_cast<int>(scope.size())) return Name("?" + std::to_string(index));
    return scope[scope.size() - 1 - static_cast<size_t>(index)];
  }

  Name freshen(const Name& hint, const std::set<Name>& avoid) {
    Name n = hint.empty() ? Name("x") : hint;
    while (avoid.count(n) || in_scope(n)) n.text += '\'';
    return n;
  }
  bool in_scope(const Name& n) const {
    for (const auto& s : scope)
      if (s == n) return true;
    return false;
  }

  void paren_open(bool p) { if (p) out << '('; }
  void paren_close(bool p) { if (p) out << ')'; }

  void term(const TermPtr& e, int min_prec) {
    if (auto* s = std::get_if<SymRef>(e.get())) {
      out << print_atom_name(s->name);
      return;
    }
    if (auto* v = std::get_if<BoundRef>(e.get())) {
      out << display(v->index).text;
      return;
    }
    if (std::get_if<Lam>(e.get())) {
      bool p = min_prec > prec::binder;
      paren_open(p);
      out << '\\';
      binder_group_term(e);
      paren_close(p);
      return;
    }
    // application spine
    std::vector<TermPtr> spine;
    TermPtr head = e;
    while (auto* a = std::get_if<App>(head.get())) {
      spine.push_back(a->arg);
      head = a->fn;
    }
    std::reverse(spine.begin(), spine.end());
    auto* hs = std::get_if<SymRef>(head.get());
    if (hs && is_operator_name(hs->name.text) && spine.size() == 2) {
      bool p = min_prec > prec::infix;
      paren_open(p);
      term(spine[0], prec::apply);
      out << ' ' << hs->name.text << ' ';
      term(spine[1], prec::apply);
      paren_close(p);
      return;
    }
    bool p = min_prec > prec::apply;
    paren_open(p);
    term(head, prec::apply);
    for (const auto& arg : spine) {
      out << ' ';
      term(arg, prec::atom);
    }
    paren_close(p);
  }

  // prints "x,y:T. body" for a maximal run of lambdas with the same domain
  void binder_group_term(const TermPtr& e) {
    const auto& l = std::get<Lam>(*e);
    std::set<Name> avoid;
    free_syms(e, avoid);
    Name n0 = freshen(l.hint, avoid);
    std::vector<Name> names{n0};
    TypePtr dom = l.annot;
    TermPtr body = l.body;
    int grouped = 1;
    while (auto* inner = std::get_if<Lam>(body.get())) {
      if (!alpha_eq(inner->annot, shift_type(dom, grouped))) break;
      scope.push_back(names.back());
      Name ni = freshen(inner->hint, avoid);
      scope.pop_back();
      // tentatively check against names picked so far
      bool clash = false;
      for (const auto& n : names)
        if (n == ni) clash = true;
      while (clash) {
        ni.text += '\'';
        clash = false;
        for (const auto& n : names)
          if (n == ni) clash = true;
      }
      names.push_back(ni);
      body = inner->body;
      ++grouped;
    }
    for (size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i].text;
    out << ':';
    type(dom, prec::arrow);
    out << ". ";
    for (const auto& n : names) scope.push_back(n);
    term(body, prec::binder);
    for (size_t i = 0; i < names.size(); ++i) scope.pop_back();
  }

  void binder_group_pi(const TypePtr& t) {
    const auto& p0 = std::get<TPi>(*t);
    std::set<Name> avoid;
    free_syms(t, avoid);
    Name n0 = freshen(p0.hint, avoid);
    std::vector<Name> names{n0};
    TypePtr dom = p0.domain;
    TypePtr body = p0.codomain;
    int grouped = 1;
    while (auto* inner = std::get_if<TPi>(body.get())) {
      if (!alpha_eq(inner->domain, shift_type(dom, grouped))) break;
      Name ni = freshen(inner->hint, avoid);
      bool clash = false;
      for (const auto& n : names)
        if (n == ni) clash = true;
      while (clash) {
        ni.text += '\'';
        clash = false;
        for (const auto& n : names)
          if (n == ni) clash = true;
      }
      names.push_back(ni);
      body = inner->codomain;
      ++grouped;
    }
    for (size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i].text;
    out << ':';
    type(dom, prec::arrow);
    out << ". ";
    for (const auto& n : names) scope.push_back(n);
    type(body, prec::binder);
    for (size_t i = 0; i < names.size(); ++i) scope.pop_back();
  }

  void type(const TypePtr& t, int min_prec) {
    if (auto* at = std::get_if<TAtom>(t.get())) {
      if (at->args.empty()) {
        out << print_atom_name(at->family);
        return;
      }
      bool p = min_prec > prec::apply;
      paren_open(p);
      out << print_atom_name(at->family);
      for (const auto& a : at->args) {
        out << ' ';
        term(a, prec::atom);
      }
      paren_close(p);
      return;
    }
    if (auto* pi = std::get_if<TPi>(t.get())) {
      if (mentions_index_type(pi->codomain, 0)) {
        bool p = min_prec > prec::binder;
        paren_open(p);
        out << "forall ";
        binder_group_pi(t);
        paren_close(p);
        return;
      }
      bool p = min_prec > prec::arrow;
      paren_open(p);
      type(pi->domain, prec::infix);
      out << " -> ";
      scope.push_back(Name("_"));
      type(pi->codomain, prec::arrow);
      scope.pop_back();
      paren_close(p);
      return;
    }
    const auto& e = std::get<TEq>(*t);
    bool p = min_prec > prec::eq;
    paren_open(p);
    term(e.lhs, prec::arrow);
    out << " = ";
    term(e.rhs, prec::arrow);
    paren_close(p);
  }

  void kind(const KindPtr& k, int min_prec) {
    if (std::holds_alternative<KType>(*k)) {
      out << "type";
      return;
    }
    const auto& p = std::get<KPi>(*k);
    if (mentions_index_kind(p.codomain, 0)) {
      bool par = min_prec > prec::binder;
      paren_open(par);
      out << "forall ";
      std::set<Name> avoid;
      free_syms(p.domain, avoid);
      free_syms(p.codomain, avoid);
      Name n = freshen(p.hint, avoid);
      out << n.text << ':';
      type(p.domain, prec::arrow);
      out << ". ";
      scope.push_back(n);
      kind(p.codomain, prec::binder);
      scope.pop_back();
      paren_close(par);
      return;
    }
    bool par = min_prec > prec::arrow;
    paren_open(par);
    type(p.domain, prec::infix);
    out << " -> ";
    scope.push_back(Name("_"));
    kind(p.codomain, prec::arrow);
    scope.pop_back();
    paren_close(par);
  }
};

}  // namespace detail

inline std::string print_term(const TermPtr& e) {
  detail::Printer p;
  p.term(e, prec::binder);
  return p.out.str();
}

inline std::string print_type(const TypePtr& t) {
  detail::Printer p;
  p.type(t, prec::binder);
  return p.out.str();
}

inline std::string print_kind(const KindPtr& k) {
  detail::Printer p;
  p.kind(k, prec::binder);
  return p.out.str();
}

// One declaration per line, `name : classifier`. Classifiers are shown in
// beta-normal form so that no residue of how the theory was put together
// shows through.
inline std::string print_declaration(const Declaration& d) {
  std::string cls = d.is_type_decl() ? print_kind(d.kind())
                                     : print_type(beta_normalize_type(d.type()));
  return print_decl_name(d.name) + " : " + cls;
}

inline std::string flatten_text(const Presentation& p) {
  Presentation c = canonical_order(p);
  std::string out;
  for (const auto& d : c.decls) {
    out += print_declaration(d);
    out += '\n';
  }
  return out;
}

}  // namespace tpc

#endif
