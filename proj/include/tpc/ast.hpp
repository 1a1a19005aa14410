#ifndef TPC_AST_HPP
#define TPC_AST_HPP

#include <map>
#include <memory>
#include <set>
#include <variant>
#include <vector>

#include "tpc/errors.hpp"
#include "tpc/name.hpp"

namespace tpc {

// Kernel syntax. Binders use de Bruijn indices; the user-facing binder name is
// kept as a hint for printing only. Presentation symbols are referenced by
// name and are never alpha-renamed.

struct Term;
struct TypeExpr;
struct Kind;

using TermPtr = std::shared_ptr<const Term>;
using TypePtr = std::shared_ptr<const TypeExpr>;
using KindPtr = std::shared_ptr<const Kind>;

struct SymRef {
  Name name;
};
struct BoundRef {
  int index = 0;  // 0 is the innermost binder
};
struct Lam {
  Name hint;
  TypePtr annot;
  TermPtr body;
};
struct App {
  TermPtr fn;
  TermPtr arg;
};

struct Term : std::variant<SymRef, BoundRef, Lam, App> {
  using variant::variant;
};

struct TAtom {
  Name family;                // always a presentation type symbol
  std::vector<TermPtr> args;  // may be partially applied
};
struct TPi {
  Name hint;
  TypePtr domain;
  TypePtr codomain;  // binder index 0 refers to the Pi variable
};
struct TEq {
  TypePtr carrier;
  TermPtr lhs;
  TermPtr rhs;
};

struct TypeExpr : std::variant<TAtom, TPi, TEq> {
  using variant::variant;
};

struct KType {};
struct KPi {
  Name hint;
  TypePtr domain;
  KindPtr codomain;
};

struct Kind : std::variant<KType, KPi> {
  using variant::variant;
};

// builders

inline TermPtr sym(Name n) { return std::make_shared<Term>(SymRef{std::move(n)}); }
inline TermPtr bound(int i) { return std::make_shared<Term>(BoundRef{i}); }
inline TermPtr lam(Name hint, TypePtr annot, TermPtr body) {
  return std::make_shared<Term>(Lam{std::move(hint), std::move(annot), std::move(body)});
}
inline TermPtr app(TermPtr f, TermPtr a) {
  return std::make_shared<Term>(App{std::move(f), std::move(a)});
}
inline TermPtr app2(TermPtr f, TermPtr a, TermPtr b) {
  return app(app(std::move(f), std::move(a)), std::move(b));
}

inline TypePtr tatom(Name family, std::vector<TermPtr> args = {}) {
  return std::make_shared<TypeExpr>(TAtom{std::move(family), std::move(args)});
}
inline TypePtr tpi(Name hint, TypePtr dom, TypePtr cod) {
  return std::make_shared<TypeExpr>(TPi{std::move(hint), std::move(dom), std::move(cod)});
}
inline TypePtr teq(TypePtr carrier, TermPtr l, TermPtr r) {
  return std::make_shared<TypeExpr>(TEq{std::move(carrier), std::move(l), std::move(r)});
}

inline KindPtr ktype() {
  static const KindPtr k = std::make_shared<Kind>(KType{});
  return k;
}
inline KindPtr kpi(Name hint, TypePtr dom, KindPtr cod) {
  return std::make_shared<Kind>(KPi{std::move(hint), std::move(dom), std::move(cod)});
}

// alpha equality: structural, binder hints ignored

inline bool alpha_eq(const TermPtr& a, const TermPtr& b);
inline bool alpha_eq(const TypePtr& a, const TypePtr& b);
inline bool alpha_eq(const KindPtr& a, const KindPtr& b);

inline bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->index() != b->index()) return false;
  if (auto* s = std::get_if<SymRef>(a.get()))
    return s->name == std::get<SymRef>(*b).name;
  if (auto* v = std::get_if<BoundRef>(a.get()))
    return v->index == std::get<BoundRef>(*b).index;
  if (auto* l = std::get_if<Lam>(a.get())) {
    const auto& m = std::get<Lam>(*b);
    return alpha_eq(l->annot, m.annot) && alpha_eq(l->body, m.body);
  }
  const auto& x = std::get<App>(*a);
  const auto& y = std::get<App>(*b);
  return alpha_eq(x.fn, y.fn) && alpha_eq(x.arg, y.arg);
}

inline bool alpha_eq(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (a->index() != b->index()) return false;
  if (auto* t = std::get_if<TAtom>(a.get())) {
    const auto& u = std::get<TAtom>(*b);
    if (t->family != u.family || t->args.size() != u.args.size()) return false;
    for (size_t i = 0; i < t->args.size(); ++i)
      if (!alpha_eq(t->args[i], u.args[i])) return false;
    return true;
  }
  if (auto* p = std::get_if<TPi>(a.get())) {
    const auto& q = std::get<TPi>(*b);
    return alpha_eq(p->domain, q.domain) && alpha_eq(p->codomain, q.codomain);
  }
  const auto& e = std::get<TEq>(*a);
  const auto& f = std::get<TEq>(*b);
  return alpha_eq(e.carrier, f.carrier) && alpha_eq(e.lhs, f.lhs) && alpha_eq(e.rhs, f.rhs);
}

inline bool alpha_eq(const KindPtr& a, const KindPtr& b) {
  if (a == b) return true;
  if (a->index() != b->index()) return false;
  if (std::holds_alternative<KType>(*a)) return true;
  const auto& p = std::get<KPi>(*a);
  const auto& q = std::get<KPi>(*b);
  return alpha_eq(p.domain, q.domain) && alpha_eq(p.codomain, q.codomain);
}

// free presentation symbols (both term symbols and type families)

inline void free_syms(const TermPtr& e, std::set<Name>& out);
inline void free_syms(const TypePtr& t, std::set<Name>& out);
inline void free_syms(const KindPtr& k, std::set<Name>& out);

inline void free_syms(const TermPtr& e, std::set<Name>& out) {
  if (auto* s = std::get_if<SymRef>(e.get())) {
    out.insert(s->name);
  } else if (auto* l = std::get_if<Lam>(e.get())) {
    free_syms(l->annot, out);
    free_syms(l->body, out);
  } else if (auto* a = std::get_if<App>(e.get())) {
    free_syms(a->fn, out);
    free_syms(a->arg, out);
  }
}

inline void free_syms(const TypePtr& t, std::set<Name>& out) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    out.insert(at->family);
    for (const auto& a : at->args) free_syms(a, out);
  } else if (auto* p = std::get_if<TPi>(t.get())) {
    free_syms(p->domain, out);
    free_syms(p->codomain, out);
  } else {
    const auto& e = std::get<TEq>(*t);
    free_syms(e.carrier, out);
    free_syms(e.lhs, out);
    free_syms(e.rhs, out);
  }
}

inline void free_syms(const KindPtr& k, std::set<Name>& out) {
  if (auto* p = std::get_if<KPi>(k.get())) {
    free_syms(p->domain, out);
    free_syms(p->codomain, out);
  }
}

// shift free de Bruijn indices >= cutoff by d

inline TermPtr shift_term(const TermPtr& e, int d, int cutoff = 0);
inline TypePtr shift_type(const TypePtr& t, int d, int cutoff = 0);

inline TermPtr shift_term(const TermPtr& e, int d, int cutoff) {
  if (std::holds_alternative<SymRef>(*e)) return e;
  if (auto* v = std::get_if<BoundRef>(e.get()))
    return v->index >= cutoff ? bound(v->index + d) : e;
  if (auto* l = std::get_if<Lam>(e.get()))
    return lam(l->hint, shift_type(l->annot, d, cutoff), shift_term(l->body, d, cutoff + 1));
  const auto& a = std::get<App>(*e);
  return app(shift_term(a.fn, d, cutoff), shift_term(a.arg, d, cutoff));
}

inline TypePtr shift_type(const TypePtr& t, int d, int cutoff) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    std::vector<TermPtr> args;
    args.reserve(at->args.size());
    for (const auto& a : at->args) args.push_back(shift_term(a, d, cutoff));
    return tatom(at->family, std::move(args));
  }
  if (auto* p = std::get_if<TPi>(t.get()))
    return tpi(p->hint, shift_type(p->domain, d, cutoff), shift_type(p->codomain, d, cutoff + 1));
  const auto& e = std::get<TEq>(*t);
  return teq(shift_type(e.carrier, d, cutoff), shift_term(e.lhs, d, cutoff),
             shift_term(e.rhs, d, cutoff));
}

// Substitution images: a symbol maps to a term or, for type symbols, to a
// type. Images are locally closed, so no index adjustment is needed when they
// are placed under binders.
struct Image : std::variant<TermPtr, TypePtr> {
  using variant::variant;
  bool is_term() const { return std::holds_alternative<TermPtr>(*this); }
  const TermPtr& term() const { return std::get<TermPtr>(*this); }
  const TypePtr& type() const { return std::get<TypePtr>(*this); }
};

using SubstMap = std::map<Name, Image>;

inline TermPtr substitute(const TermPtr& e, const SubstMap& m);
inline TypePtr substitute(const TypePtr& t, const SubstMap& m);
inline KindPtr substitute(const KindPtr& k, const SubstMap& m);

inline TermPtr substitute(const TermPtr& e, const SubstMap& m) {
  if (auto* s = std::get_if<SymRef>(e.get())) {
    auto it = m.find(s->name);
    if (it == m.end()) return e;
    if (!it->second.is_term())
      fail(ErrorKind::IllTyped, "type image for `" + s->name.text + "` used in term position");
    return it->second.term();
  }
  if (std::holds_alternative<BoundRef>(*e)) return e;
  if (auto* l = std::get_if<Lam>(e.get()))
    return lam(l->hint, substitute(l->annot, m), substitute(l->body, m));
  const auto& a = std::get<App>(*e);
  return app(substitute(a.fn, m), substitute(a.arg, m));
}

inline TypePtr substitute(const TypePtr& t, const SubstMap& m) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    std::vector<TermPtr> args;
    args.reserve(at->args.size());
    for (const auto& a : at->args) args.push_back(substitute(a, m));
    auto it = m.find(at->family);
    if (it == m.end()) return tatom(at->family, std::move(args));
    if (it->second.is_term())
      fail(ErrorKind::IllTyped, "term image for type family `" + at->family.text + "`");
    const TypePtr& img = it->second.type();
    if (args.empty()) return img;
    // applying a substituted family: the image must itself be an atom spine
    if (auto* ia = std::get_if<TAtom>(img.get())) {
      std::vector<TermPtr> all = ia->args;
      all.insert(all.end(), args.begin(), args.end());
      return tatom(ia->family, std::move(all));
    }
    fail(ErrorKind::IllTyped, "image of applied family `" + at->family.text + "` is not an atom");
  }
  if (auto* p = std::get_if<TPi>(t.get()))
    return tpi(p->hint, substitute(p->domain, m), substitute(p->codomain, m));
  const auto& e = std::get<TEq>(*t);
  return teq(substitute(e.carrier, m), substitute(e.lhs, m), substitute(e.rhs, m));
}

inline KindPtr substitute(const KindPtr& k, const SubstMap& m) {
  if (std::holds_alternative<KType>(*k)) return k;
  const auto& p = std::get<KPi>(*k);
  return kpi(p.hint, substitute(p.domain, m), substitute(p.codomain, m));
}

// renaming of presentation symbols (names to names, total on occurrences)

using NameMap = std::map<Name, Name>;

inline SubstMap as_subst(const NameMap& nm, bool families_too = true) {
  SubstMap m;
  for (const auto& [from, to] : nm) {
    (void)families_too;
    m.emplace(from, Image{sym(to)});
  }
  return m;
}

inline TermPtr rename_syms(const TermPtr& e, const NameMap& nm);
inline TypePtr rename_syms(const TypePtr& t, const NameMap& nm);
inline KindPtr rename_syms(const KindPtr& k, const NameMap& nm);

inline TermPtr rename_syms(const TermPtr& e, const NameMap& nm) {
  if (auto* s = std::get_if<SymRef>(e.get())) {
    auto it = nm.find(s->name);
    return it == nm.end() ? e : sym(it->second);
  }
  if (std::holds_alternative<BoundRef>(*e)) return e;
  if (auto* l = std::get_if<Lam>(e.get()))
    return lam(l->hint, rename_syms(l->annot, nm), rename_syms(l->body, nm));
  const auto& a = std::get<App>(*e);
  return app(rename_syms(a.fn, nm), rename_syms(a.arg, nm));
}

inline TypePtr rename_syms(const TypePtr& t, const NameMap& nm) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    std::vector<TermPtr> args;
    args.reserve(at->args.size());
    for (const auto& a : at->args) args.push_back(rename_syms(a, nm));
    auto it = nm.find(at->family);
    return tatom(it == nm.end() ? at->family : it->second, std::move(args));
  }
  if (auto* p = std::get_if<TPi>(t.get()))
    return tpi(p->hint, rename_syms(p->domain, nm), rename_syms(p->codomain, nm));
  const auto& e = std::get<TEq>(*t);
  return teq(rename_syms(e.carrier, nm), rename_syms(e.lhs, nm), rename_syms(e.rhs, nm));
}

inline KindPtr rename_syms(const KindPtr& k, const NameMap& nm) {
  if (std::holds_alternative<KType>(*k)) return k;
  const auto& p = std::get<KPi>(*k);
  return kpi(p.hint, rename_syms(p.domain, nm), rename_syms(p.codomain, nm));
}

}  // namespace tpc

#endif
