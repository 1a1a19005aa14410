#ifndef TPC_TESTS_GEN_HPP
#define TPC_TESTS_GEN_HPP

#include <random>

#include "fixtures.hpp"

// Deterministic random generators for the property suites.
namespace gen {

using namespace tpc;
using Rng = std::mt19937;

inline int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
inline bool coin(Rng& rng) { return pick(rng, 2) == 0; }

// raw (scope-resolved but not necessarily well-typed) terms over a symbol pool
inline TermPtr raw_term(Rng& rng, const std::vector<Name>& pool, int depth, int binders = 0) {
  int choice = depth <= 0 ? pick(rng, 2 + (binders > 0)) : pick(rng, 4 + (binders > 0));
  if (choice == 0 || choice == 1) {
    if (binders > 0 && coin(rng)) return bound(pick(rng, binders));
    return sym(pool[static_cast<size_t>(pick(rng, static_cast<int>(pool.size())))]);
  }
  if (choice == 2)
    return app(raw_term(rng, pool, depth - 1, binders), raw_term(rng, pool, depth - 1, binders));
  if (choice == 3)
    return lam("v", fix::U(), raw_term(rng, pool, depth - 1, binders + 1));
  return bound(pick(rng, binders));
}

// a well-typed term of the requested type over ctx (types restricted to
// U / U->U / U->U->U shapes, which is all the algebra corpus uses)
inline TermPtr typed_term(Rng& rng, const Presentation& ctx, const LocalEnv& env,
                          const TypePtr& want, int depth);

inline std::vector<std::pair<TermPtr, TypePtr>> heads(const Presentation& ctx,
                                                      const LocalEnv& env) {
  std::vector<std::pair<TermPtr, TypePtr>> out;
  for (const auto& d : ctx.decls)
    if (!d.is_type_decl() && !std::holds_alternative<TEq>(*d.type()))
      out.emplace_back(sym(d.name), d.type());
  for (size_t i = 0; i < env.size(); ++i) {
    int index = static_cast<int>(env.size() - 1 - i);
    out.emplace_back(bound(index), local_type(env, index));
  }
  return out;
}

inline TermPtr typed_term(Rng& rng, const Presentation& ctx, const LocalEnv& env,
                          const TypePtr& want, int depth) {
  if (auto* pi = std::get_if<TPi>(want.get()); pi && depth > 0 && coin(rng)) {
    LocalEnv inner = env;
    inner.push_back(pi->domain);
    return lam("v", pi->domain, typed_term(rng, ctx, inner, pi->codomain, depth - 1));
  }
  // spine: pick a head whose type ends in `want` after 0..2 arguments
  auto hs = heads(ctx, env);
  std::shuffle(hs.begin(), hs.end(), rng);
  for (const auto& [h, hty] : hs) {
    std::vector<TypePtr> doms;
    TypePtr t = hty;
    for (int nargs = 0; nargs <= 2; ++nargs) {
      if (alpha_eq(t, want)) {
        TermPtr e = h;
        for (const auto& d : doms) e = app(e, typed_term(rng, ctx, env, d, depth - 1));
        return e;
      }
      auto* pi = std::get_if<TPi>(t.get());
      if (!pi || depth <= 0) break;
      doms.push_back(pi->domain);
      t = pi->codomain;  // shapes are non-dependent here
    }
  }
  // fall back to eta-expanding around a smaller request
  if (auto* pi = std::get_if<TPi>(want.get())) {
    LocalEnv inner = env;
    inner.push_back(pi->domain);
    return lam("v", pi->domain, typed_term(rng, ctx, inner, pi->codomain, depth - 1));
  }
  bug("generator could not produce a term; pool too small");
}

inline Name pool_name(int i) {
  static const char* base[] = {"p", "q", "r", "s", "t", "w"};
  return Name(std::string(base[i % 6]) + (i >= 6 ? std::to_string(i / 6) : ""));
}

// the base's carrier type (presentations here declare exactly one)
inline TypePtr carrier_of(const Presentation& p) {
  for (const auto& d : p.decls)
    if (d.is_type_decl() && std::holds_alternative<KType>(*d.kind())) return tatom(d.name);
  bug("generated presentation without a carrier");
}

// random small presentation: U plus constants/operations/axioms over U
inline Presentation presentation(Rng& rng, int max_decls, const std::string& prefix) {
  std::vector<Declaration> decls;
  decls.push_back(type_decl("U", ktype()));
  int n = 1 + pick(rng, max_decls);
  for (int i = 0; i < n; ++i) {
    Name nm(prefix + std::to_string(i));
    switch (pick(rng, 4)) {
      case 0: decls.push_back(term_decl(nm, fix::U())); break;
      case 1: decls.push_back(term_decl(nm, fix::unop())); break;
      case 2: decls.push_back(term_decl(nm, fix::binop())); break;
      default: {
        // an equation between two generated terms of type U
        Presentation sofar = wf_check(decls);
        LocalEnv env{fix::U()};
        TermPtr l = typed_term(rng, sofar, env, fix::U(), 2);
        TermPtr r = typed_term(rng, sofar, env, fix::U(), 2);
        decls.push_back(term_decl(nm, tpi("x", fix::U(), teq(fix::U(), l, r))));
        break;
      }
    }
  }
  return wf_check(decls);
}

// a random extension of `base` with fresh names
inline ExtensionBody extension(Rng& rng, const Presentation& base, int max_decls,
                               const std::string& prefix) {
  const TypePtr u = carrier_of(base);
  std::vector<Declaration> decls = base.decls;
  ExtensionBody out;
  int n = pick(rng, max_decls + 1);
  for (int i = 0; i < n; ++i) {
    Name nm(prefix + std::to_string(i));
    Declaration d = [&] {
      switch (pick(rng, 3)) {
        case 0: return term_decl(nm, u);
        case 1: return term_decl(nm, tpi("_", u, tpi("_", u, u)));
        default: {
          Presentation sofar = wf_check(decls);
          LocalEnv env{u};
          TermPtr l = typed_term(rng, sofar, env, u, 2);
          TermPtr r = typed_term(rng, sofar, env, u, 2);
          return term_decl(nm, tpi("x", u, teq(u, l, r)));
        }
      }
    }();
    decls.push_back(d);
    out.decls.push_back(d);
  }
  return out;
}

// random embedding out of `base`: optional renaming of the base followed by
// an extension
inline Embedding embedding(Rng& rng, const Presentation& base, int max_ext,
                           const std::string& prefix) {
  Renaming ren;
  if (coin(rng)) {
    int i = 0;
    for (const auto& d : base.decls) {
      if (d.is_type_decl()) continue;
      if (pick(rng, 3) == 0) ren.mapping.emplace(d.name, Name(prefix + "r" + std::to_string(i)));
      ++i;
    }
  }
  RenameResult rn = rename(base, ren);
  ExtensionBody ext = extension(rng, rn.pres, max_ext, prefix);
  ExtendResult ex = extend(rn.pres, ext);
  return compose(rn.embed, ex.embed);
}

// renamings satisfying the combine side condition: shared base symbols get a
// common image, fresh symbols get fresh images (sometimes identity)
inline std::pair<Renaming, Renaming> aligned_renamings(Rng& rng, const Embedding& left,
                                                       const Embedding& right,
                                                       const std::string& prefix) {
  Renaming rl, rr;
  int i = 0;
  for (const auto& d : left.source().decls) {
    Name il = left.apply(d.name);
    Name ir = right.apply(d.name);
    // the condition forces a common image whenever the two routes disagree
    if (il != ir || pick(rng, 3) == 0) {
      Name shared(prefix + "z" + std::to_string(i));
      rl.mapping.emplace(il, shared);
      rr.mapping.emplace(ir, shared);
    }
    ++i;
  }
  i = 0;
  for (const auto& d : left.extension.decls) {
    if (pick(rng, 3) == 0)
      rl.mapping.emplace(d.name, Name(prefix + "l" + std::to_string(i)));
    ++i;
  }
  i = 0;
  for (const auto& d : right.extension.decls) {
    if (pick(rng, 3) == 0)
      rr.mapping.emplace(d.name, Name(prefix + "m" + std::to_string(i)));
    ++i;
  }
  return {rl, rr};
}

}  // namespace gen

#endif
