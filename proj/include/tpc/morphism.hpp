#ifndef TPC_MORPHISM_HPP
#define TPC_MORPHISM_HPP

#include "tpc/kernel.hpp"
#include "tpc/printer.hpp"

namespace tpc {

// When enabled, composites and mediating views are re-run through the full
// view checker instead of being trusted to the substitution lemma.
inline bool& debug_recheck() {
  static bool flag = false;
  return flag;
}

// raw name-to-image map; untyped until checked against a source/target pair
struct Assignment {
  std::map<Name, Image> entries;

  const Image* find(const Name& n) const {
    auto it = entries.find(n);
    return it == entries.end() ? nullptr : &it->second;
  }
  SubstMap as_subst() const {
    SubstMap m;
    for (const auto& [n, img] : entries) m.emplace(n, img);
    return m;
  }
};

// finite map of names, injective on its support when used for embeddings;
// identity outside the stored entries
struct Renaming {
  NameMap mapping;

  Name apply(const Name& n) const {
    auto it = mapping.find(n);
    return it == mapping.end() ? n : it->second;
  }
  bool trivial() const {
    for (const auto& [a, b] : mapping)
      if (a != b) return false;
    return true;
  }
};

// a typed morphism of presentations
struct View {
  Presentation source;
  Presentation target;
  Assignment assignment;
};

inline bool alpha_eq(const Assignment& a, const Assignment& b) {
  if (a.entries.size() != b.entries.size()) return false;
  auto i = a.entries.begin();
  auto j = b.entries.begin();
  for (; i != a.entries.end(); ++i, ++j) {
    if (i->first != j->first) return false;
    if (i->second.is_term() != j->second.is_term()) return false;
    if (i->second.is_term()) {
      if (!alpha_eq(i->second.term(), j->second.term())) return false;
    } else {
      if (!alpha_eq(i->second.type(), j->second.type())) return false;
    }
  }
  return true;
}

inline bool alpha_eq(const View& u, const View& v) {
  return alpha_eq(u.source, v.source) && alpha_eq(u.target, v.target) &&
         alpha_eq(u.assignment, v.assignment);
}

// rename both declared names and all occurrences
inline Presentation rename_presentation(const Presentation& p, const NameMap& nm) {
  Presentation out;
  out.decls.reserve(p.size());
  for (const auto& d : p.decls) {
    auto it = nm.find(d.name);
    Name n = it == nm.end() ? d.name : it->second;
    if (d.is_type_decl())
      out.decls.push_back(type_decl(n, rename_syms(d.kind(), nm)));
    else
      out.decls.push_back(term_decl(n, rename_syms(d.type(), nm)));
  }
  return out;
}

// the morphism formation rule, processed left to right
inline View check_view(const Presentation& source, const Presentation& target, Assignment a) {
  for (const auto& [n, img] : a.entries)
    if (!source.declares(n))
      fail(ErrorKind::ExtraAssignment, "`" + n.text + "` is not a symbol of the source");
  SubstMap sub;
  for (const auto& d : source.decls) {
    const Image* img = a.find(d.name);
    if (!img) fail(ErrorKind::MissingAssignment, "no image for `" + d.name.text + "`");
    // a bare name can stand for a term or a type; coerce to what the
    // declaration needs
    Image use = *img;
    if (d.is_type_decl() && use.is_term()) {
      if (auto* s = std::get_if<SymRef>(use.term().get()))
        use = Image{tatom(s->name)};
      else
        fail(ErrorKind::TypeMismatch,
             "image of type symbol `" + d.name.text + "` is not a type");
    } else if (!d.is_type_decl() && !use.is_term()) {
      if (auto* at = std::get_if<TAtom>(use.type().get()); at && at->args.empty())
        use = Image{sym(at->family)};
      else
        fail(ErrorKind::TypeMismatch,
             "image of term symbol `" + d.name.text + "` is not a term");
    }
    if (d.is_type_decl()) {
      KindPtr expected = substitute(d.kind(), sub);
      KindPtr got = check_kind(target, use.type());
      if (!kind_conv(target, got, expected))
        fail(ErrorKind::TypeMismatch, "image of `" + d.name.text + "` has kind " +
                                          print_kind(got) + ", expected " + print_kind(expected));
    } else {
      TypePtr expected = substitute(d.type(), sub);
      TypePtr got;
      try {
        got = infer_type(target, use.term());
      } catch (const Error& e) {
        fail(ErrorKind::TypeMismatch,
             "image of `" + d.name.text + "` does not type-check: " + e.what());
      }
      if (!type_conv(target, got, expected))
        fail(ErrorKind::TypeMismatch, "image of `" + d.name.text + "` has type " +
                                          print_type(got) + ", expected " + print_type(expected));
    }
    a.entries[d.name] = use;
    sub.emplace(d.name, use);
  }
  return View{source, target, std::move(a)};
}

// v ; w — substitute w through every image of v
inline View compose(const View& v, const View& w) {
  if (!alpha_eq(v.target, w.source))
    fail(ErrorKind::SourceTargetMismatch, "composition endpoints do not match");
  SubstMap wm = w.assignment.as_subst();
  Assignment out;
  for (const auto& [n, img] : v.assignment.entries) {
    if (img.is_term())
      out.entries.emplace(n, Image{substitute(img.term(), wm)});
    else
      out.entries.emplace(n, Image{substitute(img.type(), wm)});
  }
  if (debug_recheck()) return check_view(v.source, w.target, std::move(out));
  return View{v.source, w.target, std::move(out)};
}

// equivalence of parallel views: image-wise convertibility at the
// substituted classifiers
inline bool equiv(const View& u, const View& v) {
  if (!alpha_eq(u.source, v.source) || !alpha_eq(u.target, v.target))
    fail(ErrorKind::SourceTargetMismatch, "equiv needs parallel views");
  SubstMap su, sv;
  for (const auto& d : u.source.decls) {
    const Image* iu = u.assignment.find(d.name);
    const Image* iv = v.assignment.find(d.name);
    if (!iu || !iv) bug("view assignment lost a symbol");
    if (d.is_type_decl()) {
      if (!type_conv(u.target, iu->type(), iv->type())) return false;
    } else {
      if (!conv(u.target, iu->term(), substitute(d.type(), su), iv->term(),
                substitute(d.type(), sv)))
        return false;
    }
    su.emplace(d.name, *iu);
    sv.emplace(d.name, *iv);
  }
  return true;
}

// An embedding: a view induced by an injective name map, stored along with
// its renaming and its rename/extension decomposition.
struct Embedding {
  View view;
  NameMap pi;  // non-identity pairs only; identity elsewhere
  Presentation renamed_base;
  ExtensionBody extension;

  const Presentation& source() const { return view.source; }
  const Presentation& target() const { return view.target; }
  Name apply(const Name& n) const {
    auto it = pi.find(n);
    return it == pi.end() ? n : it->second;
  }
  bool is_inclusion() const { return pi.empty(); }
};

inline Assignment name_map_assignment(const Presentation& source, const NameMap& m) {
  Assignment a;
  for (const auto& d : source.decls) {
    auto it = m.find(d.name);
    Name img = it == m.end() ? d.name : it->second;
    if (d.is_type_decl())
      a.entries.emplace(d.name, Image{tatom(img)});
    else
      a.entries.emplace(d.name, Image{sym(img)});
  }
  return a;
}

// decide the three conditions on the induced name map and compute the
// decomposition
inline Embedding as_embedding(const View& v) {
  NameMap m;
  std::set<Name> images;
  for (const auto& d : v.source.decls) {
    const Image* img = v.assignment.find(d.name);
    if (!img) bug("view assignment lost a symbol");
    Name to;
    if (img->is_term()) {
      auto* s = std::get_if<SymRef>(img->term().get());
      if (!s)
        fail(ErrorKind::NotAnEmbedding,
             "image of `" + d.name.text + "` is not a bare symbol");
      to = s->name;
    } else {
      auto* at = std::get_if<TAtom>(img->type().get());
      if (!at || !at->args.empty())
        fail(ErrorKind::NotAnEmbedding,
             "image of `" + d.name.text + "` is not a bare symbol");
      to = at->family;
    }
    if (!images.insert(to).second)
      fail(ErrorKind::NotAnEmbedding, "name map is not injective at `" + to.text + "`");
    m.emplace(d.name, to);
  }
  // Injectivity is the whole content of the conditions on the inducing
  // bijection: any injective finite name map extends to a finite-support
  // bijection of the name universe, and target symbols outside the image are
  // exactly the extension part of the decomposition.
  Embedding e;
  e.view = v;
  for (const auto& [from, to] : m)
    if (from != to) e.pi.emplace(from, to);
  e.renamed_base = rename_presentation(v.source, e.pi);
  for (const auto& d : v.target.decls)
    if (!images.count(d.name)) e.extension.decls.push_back(d);
  return e;
}

inline Embedding identity(const Presentation& p) {
  View v{p, p, name_map_assignment(p, {})};
  Embedding e;
  e.view = std::move(v);
  e.renamed_base = p;
  return e;
}

// embedding given directly by a name map (validated through the checker)
inline Embedding make_embedding(const Presentation& source, const Presentation& target,
                                const NameMap& m) {
  return as_embedding(check_view(source, target, name_map_assignment(source, m)));
}

inline Embedding compose(const Embedding& a, const Embedding& b) {
  View v = compose(a.view, b.view);
  return as_embedding(v);
}

}  // namespace tpc

#endif
