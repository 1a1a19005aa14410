#ifndef TPC_PRESENTATION_HPP
#define TPC_PRESENTATION_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "tpc/ast.hpp"

namespace tpc {

// A declaration is either a type-family declaration `name : kind` or a term
// declaration `name : type`. Axioms are ordinary term declarations whose type
// happens to be an equation.
struct Declaration {
  Name name;
  std::variant<KindPtr, TypePtr> classifier;

  bool is_type_decl() const { return std::holds_alternative<KindPtr>(classifier); }
  const KindPtr& kind() const { return std::get<KindPtr>(classifier); }
  const TypePtr& type() const { return std::get<TypePtr>(classifier); }
};

inline Declaration type_decl(Name n, KindPtr k) { return Declaration{std::move(n), std::move(k)}; }
inline Declaration term_decl(Name n, TypePtr t) { return Declaration{std::move(n), std::move(t)}; }

inline bool alpha_eq(const Declaration& a, const Declaration& b) {
  if (a.name != b.name) return false;
  if (a.is_type_decl() != b.is_type_decl()) return false;
  return a.is_type_decl() ? alpha_eq(a.kind(), b.kind()) : alpha_eq(a.type(), b.type());
}

// An ordered list of well-typed declarations; also serves as the typing
// context of the kernel. Build one through wf_check or the construction
// operations, then treat it as immutable.
struct Presentation {
  std::vector<Declaration> decls;

  bool empty() const { return decls.empty(); }
  size_t size() const { return decls.size(); }

  const Declaration* find(const Name& n) const {
    for (const auto& d : decls)
      if (d.name == n) return &d;
    return nullptr;
  }
  bool declares(const Name& n) const { return find(n) != nullptr; }
};

inline bool alpha_eq(const Presentation& a, const Presentation& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!alpha_eq(a.decls[i], b.decls[i])) return false;
  return true;
}

// syms(Gamma)
inline std::set<Name> symbols(const Presentation& p) {
  std::set<Name> out;
  for (const auto& d : p.decls) out.insert(d.name);
  return out;
}

// A tail of declarations extending some unstated base. Usually not a valid
// presentation on its own, so it gets its own type.
struct ExtensionBody {
  std::vector<Declaration> decls;

  bool empty() const { return decls.empty(); }
  std::set<Name> names() const {
    std::set<Name> out;
    for (const auto& d : decls) out.insert(d.name);
    return out;
  }
};

inline std::set<Name> classifier_deps(const Declaration& d, const std::set<Name>& declared) {
  std::set<Name> frees;
  if (d.is_type_decl())
    free_syms(d.kind(), frees);
  else
    free_syms(d.type(), frees);
  std::set<Name> out;
  std::set_intersection(frees.begin(), frees.end(), declared.begin(), declared.end(),
                        std::inserter(out, out.begin()));
  return out;
}

// Dependency topological sort with code-point tie-break on names. This is the
// order used whenever a presentation is rendered or compared, so that results
// of the constructions are independent of the order they were assembled in.
inline Presentation canonical_order(const Presentation& p) {
  const std::set<Name> declared = symbols(p);
  std::map<Name, std::set<Name>> deps;
  std::map<Name, const Declaration*> by_name;
  for (const auto& d : p.decls) {
    deps[d.name] = classifier_deps(d, declared);
    by_name[d.name] = &d;
  }
  Presentation out;
  std::set<Name> emitted;
  std::set<Name> ready;
  auto refresh = [&] {
    for (const auto& [n, ds] : deps) {
      if (emitted.count(n) || ready.count(n)) continue;
      bool ok = true;
      for (const auto& dep : ds)
        if (dep != n && !emitted.count(dep)) { ok = false; break; }
      if (ok) ready.insert(n);
    }
  };
  refresh();
  while (!ready.empty()) {
    Name n = *ready.begin();  // least name in code-point order
    ready.erase(ready.begin());
    out.decls.push_back(*by_name[n]);
    emitted.insert(n);
    refresh();
  }
  if (out.size() != p.size()) bug("cycle in declaration dependencies");
  return out;
}

}  // namespace tpc

#endif
