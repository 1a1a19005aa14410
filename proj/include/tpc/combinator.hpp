#ifndef TPC_COMBINATOR_HPP
#define TPC_COMBINATOR_HPP

#include "tpc/morphism.hpp"

namespace tpc {

// The four constructions. Each returns the new presentation together with
// the morphisms it induces; combine and mixin also expose the mediating-view
// builder of their universal property.

struct RenameResult {
  Presentation pres;
  Embedding embed;
};

struct ExtendResult {
  Presentation pres;
  Embedding embed;
};

namespace detail {

// restrict to the given symbols, check injectivity there, keep non-identity
// pairs
inline NameMap complete_renaming(const Renaming& r, const std::set<Name>& over,
                                 const char* what) {
  NameMap eff;
  std::map<Name, Name> seen;  // image -> preimage
  for (const auto& n : over) {
    Name img = r.apply(n);
    auto [it, fresh] = seen.emplace(img, n);
    if (!fresh)
      fail(ErrorKind::NotInjective, std::string(what) + " sends both `" + it->second.text +
                                        "` and `" + n.text + "` to `" + img.text + "`");
    if (img != n) eff.emplace(n, img);
  }
  return eff;
}

inline Name applied(const NameMap& m, const Name& n) {
  auto it = m.find(n);
  return it == m.end() ? n : it->second;
}

inline Presentation checked_concat(std::vector<Declaration> decls, const char* what) {
  try {
    return wf_check(decls);
  } catch (const Error& e) {
    bug(std::string(what) + " produced an ill-formed presentation: " + e.what());
  }
}

}  // namespace detail

inline RenameResult rename(const Presentation& p, const Renaming& r) {
  const std::set<Name> syms = symbols(p);
  // non-identity pairs restricted to the presentation's symbols
  NameMap eff;
  for (const auto& [from, to] : r.mapping)
    if (syms.count(from) && from != to) eff.emplace(from, to);
  std::map<Name, Name> seen;
  for (const auto& [from, to] : eff) {
    auto [it, fresh] = seen.emplace(to, from);
    if (!fresh)
      fail(ErrorKind::NotInjective, "renaming sends both `" + it->second.text + "` and `" +
                                        from.text + "` to `" + to.text + "`");
  }
  for (const auto& [from, to] : eff) {
    if (syms.count(to) && detail::applied(eff, to) == to)
      fail(ErrorKind::NameCollision,
           "`" + from.text + "` would collide with existing `" + to.text + "`");
  }
  Presentation renamed = rename_presentation(p, eff);
  Presentation pres = detail::checked_concat(renamed.decls, "rename");
  RenameResult out;
  out.pres = pres;
  out.embed = make_embedding(p, pres, eff);
  return out;
}

inline ExtendResult extend(const Presentation& base, const ExtensionBody& body) {
  Presentation pres = append_extension(base, body);
  ExtendResult out;
  out.pres = pres;
  out.embed = make_embedding(base, pres, {});
  return out;
}

struct CombineResult {
  Presentation pres;
  Embedding embed_left;
  Embedding embed_right;
  Embedding diag;
  // inputs and completed renamings, kept for the mediating construction
  View input_left;
  View input_right;
  NameMap ren_left;   // over the left target's symbols
  NameMap ren_right;  // over the right target's symbols

  View mediate(const View& w_left, const View& w_right) const;
};

namespace detail {

// the renaming condition: the two images agree exactly on the shared base
inline void check_renaming_condition(const Embedding& left, const Embedding& right,
                                     const NameMap& ren_left, const NameMap& ren_right) {
  const Presentation& base = left.source();
  std::map<Name, Name> base_left, base_right;  // z -> renamed image
  for (const auto& d : base.decls) {
    base_left.emplace(d.name, applied(ren_left, left.apply(d.name)));
    base_right.emplace(d.name, applied(ren_right, right.apply(d.name)));
  }
  std::vector<std::pair<Name, Name>> offending;
  for (const auto& dx : left.target().decls) {
    Name ix = applied(ren_left, dx.name);
    for (const auto& dy : right.target().decls) {
      Name iy = applied(ren_right, dy.name);
      bool joined = false;
      for (const auto& d : base.decls)
        if (left.apply(d.name) == dx.name && right.apply(d.name) == dy.name) {
          joined = true;
          break;
        }
      if ((ix == iy) != joined) offending.emplace_back(dx.name, dy.name);
    }
  }
  if (!offending.empty()) {
    std::sort(offending.begin(), offending.end());
    fail(ErrorKind::RenamingConditionViolated,
         "`" + offending.front().first.text + "` and `" + offending.front().second.text +
             "` break the renaming condition (Eq.(3)): renamed images must coincide exactly "
             "on the shared base");
  }
}

}  // namespace detail

inline CombineResult combine(const Embedding& u_left, const Embedding& u_right,
                             const Renaming& r_left, const Renaming& r_right) {
  if (!alpha_eq(u_left.source(), u_right.source()))
    fail(ErrorKind::SharedBaseMismatch, "combine inputs do not share a base");
  NameMap ren_left = detail::complete_renaming(r_left, symbols(u_left.target()), "left renaming");
  NameMap ren_right =
      detail::complete_renaming(r_right, symbols(u_right.target()), "right renaming");
  detail::check_renaming_condition(u_left, u_right, ren_left, ren_right);

  const Presentation& base = u_left.source();
  // base through the left route; the condition makes the right route agree
  NameMap base_map;
  for (const auto& d : base.decls) {
    Name img = detail::applied(ren_left, u_left.apply(d.name));
    if (img != d.name) base_map.emplace(d.name, img);
  }
  std::vector<Declaration> decls = rename_presentation(base, base_map).decls;
  for (const auto& d : rename_presentation(Presentation{u_left.extension.decls}, ren_left).decls)
    decls.push_back(d);
  for (const auto& d : rename_presentation(Presentation{u_right.extension.decls}, ren_right).decls)
    decls.push_back(d);

  CombineResult out;
  out.pres = detail::checked_concat(std::move(decls), "combine");
  out.embed_left = make_embedding(u_left.target(), out.pres, ren_left);
  out.embed_right = make_embedding(u_right.target(), out.pres, ren_right);
  out.diag = compose(u_left, out.embed_left);
  if (!alpha_eq(out.diag.view, compose(u_right, out.embed_right).view))
    bug("combine square does not commute on the nose");
  out.input_left = u_left.view;
  out.input_right = u_right.view;
  out.ren_left = std::move(ren_left);
  out.ren_right = std::move(ren_right);
  return out;
}

inline View CombineResult::mediate(const View& w_left, const View& w_right) const {
  if (!alpha_eq(w_left.source, input_left.target) ||
      !alpha_eq(w_right.source, input_right.target) || !alpha_eq(w_left.target, w_right.target))
    fail(ErrorKind::SourceTargetMismatch, "mediating legs do not fit the combine");
  if (!equiv(compose(input_left, w_left), compose(input_right, w_right)))
    fail(ErrorKind::SquareDoesNotCommute,
         "the two legs do not agree (up to convertibility) on the shared base");
  Assignment a;
  for (const auto& d : input_left.target.decls)
    a.entries.emplace(detail::applied(ren_left, d.name), *w_left.assignment.find(d.name));
  for (const auto& d : input_right.target.decls)
    a.entries.emplace(detail::applied(ren_right, d.name), *w_right.assignment.find(d.name));
  try {
    return check_view(pres, w_left.target, std::move(a));
  } catch (const Error& e) {
    bug(std::string("mediating view failed to check: ") + e.what());
  }
}

struct MixinResult {
  Presentation pres;
  Embedding embed_left;
  View view_right;
  View diag;
  View input_left;
  Embedding input_right;
  NameMap ren_left;        // over the left target's symbols
  NameMap ren_right_plus;  // over the names the right extension introduces

  View mediate(const View& w_left, const View& w_right) const;
};

// mixin the view into the embedding: transport the extension across the view
inline MixinResult mixin(const View& v_left, const Embedding& u_right, const Renaming& r_left,
                         const Renaming& r_right) {
  if (!alpha_eq(v_left.source, u_right.source()))
    fail(ErrorKind::SharedBaseMismatch, "mixin inputs do not share a base");
  NameMap ren_left = detail::complete_renaming(r_left, symbols(v_left.target), "left renaming");
  const std::set<Name> plus_names = u_right.extension.names();
  for (const auto& [from, to] : r_right.mapping)
    if (!plus_names.count(from))
      fail(ErrorKind::ClashWithContext, "right renaming touches `" + from.text +
                                            "`, which the extension does not introduce");
  NameMap ren_right = detail::complete_renaming(r_right, plus_names, "right renaming");

  // images of the right presentation's symbols in the result
  Assignment right_assignment;
  SubstMap transport;  // substitution applied to the extension's classifiers
  for (const auto& d : u_right.target().decls) {
    bool is_plus = plus_names.count(d.name) != 0;
    Image img{TermPtr{}};
    if (is_plus) {
      Name to = detail::applied(ren_right, d.name);
      img = d.is_type_decl() ? Image{tatom(to)} : Image{sym(to)};
    } else {
      // a base symbol: route it through the view, then the left renaming
      const Name z = [&] {
        for (const auto& b : v_left.source.decls)
          if (u_right.apply(b.name) == d.name) return b.name;
        bug("embedding base symbol without a preimage");
      }();
      const Image* via = v_left.assignment.find(z);
      if (!via) bug("view assignment lost a symbol");
      img = via->is_term() ? Image{rename_syms(via->term(), ren_left)}
                           : Image{rename_syms(via->type(), ren_left)};
    }
    right_assignment.entries.emplace(d.name, img);
    transport.emplace(d.name, img);
  }

  std::vector<Declaration> decls = rename_presentation(v_left.target, ren_left).decls;
  std::set<Name> left_names;
  for (const auto& d : decls) left_names.insert(d.name);
  for (const auto& d : u_right.extension.decls) {
    Name to = detail::applied(ren_right, d.name);
    if (left_names.count(to))
      fail(ErrorKind::NotDisjoint,
           "`" + to.text + "` appears on both sides of the mixin; rename one of them");
    if (d.is_type_decl())
      decls.push_back(type_decl(to, substitute(d.kind(), transport)));
    else
      decls.push_back(term_decl(to, substitute(d.type(), transport)));
  }

  MixinResult out;
  out.pres = detail::checked_concat(std::move(decls), "mixin");
  out.embed_left = make_embedding(v_left.target, out.pres, ren_left);
  try {
    out.view_right = check_view(u_right.target(), out.pres, right_assignment);
  } catch (const Error& e) {
    bug(std::string("mixin right view failed to check: ") + e.what());
  }
  out.diag = compose(v_left, out.embed_left.view);
  if (!alpha_eq(out.diag, compose(u_right.view, out.view_right)))
    bug("mixin square does not commute on the nose");
  out.input_left = v_left;
  out.input_right = u_right;
  out.ren_left = std::move(ren_left);
  out.ren_right_plus = std::move(ren_right);
  return out;
}

inline View MixinResult::mediate(const View& w_left, const View& w_right) const {
  if (!alpha_eq(w_left.source, input_left.target) ||
      !alpha_eq(w_right.source, input_right.target()) || !alpha_eq(w_left.target, w_right.target))
    fail(ErrorKind::SourceTargetMismatch, "mediating legs do not fit the mixin");
  if (!equiv(compose(input_left, w_left), compose(input_right.view, w_right)))
    fail(ErrorKind::SquareDoesNotCommute,
         "the two legs do not agree (up to convertibility) on the shared base");
  Assignment a;
  for (const auto& d : input_left.target.decls)
    a.entries.emplace(detail::applied(ren_left, d.name), *w_left.assignment.find(d.name));
  for (const auto& d : input_right.extension.decls)
    a.entries.emplace(detail::applied(ren_right_plus, d.name), *w_right.assignment.find(d.name));
  try {
    return check_view(pres, w_left.target, std::move(a));
  } catch (const Error& e) {
    bug(std::string("mediating view failed to check: ") + e.what());
  }
}

inline View mediate_combine(const CombineResult& res, const View& w_left, const View& w_right) {
  return res.mediate(w_left, w_right);
}

inline View mediate_mixin(const MixinResult& res, const View& w_left, const View& w_right) {
  return res.mediate(w_left, w_right);
}

}  // namespace tpc

#endif
