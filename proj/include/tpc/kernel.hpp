#ifndef TPC_KERNEL_HPP
#define TPC_KERNEL_HPP

#include <vector>

#include "tpc/presentation.hpp"

namespace tpc {

// The underlying calculus: lambda-Pi with one universe `type`, a built-in
// equality type former, and no recursion of any sort. Everything here is
// syntax-directed; convertibility is beta-eta.

// Types of enclosing binders, innermost last. Entries are expressed in the
// scope where they were pushed; lookup shifts them to the current scope.
using LocalEnv = std::vector<TypePtr>;

inline TypePtr local_type(const LocalEnv& env, int index) {
  if (index < 0 || index >= static_cast<int>(env.size())) bug("dangling de Bruijn index");
  return shift_type(env[env.size() - 1 - static_cast<size_t>(index)], index + 1);
}

// instantiate binder 0 with `a` (a is expressed in the outer scope)

inline TermPtr inst_term(const TermPtr& e, int depth, const TermPtr& a);
inline TypePtr inst_type(const TypePtr& t, int depth, const TermPtr& a);
inline KindPtr inst_kind(const KindPtr& k, int depth, const TermPtr& a);

inline TermPtr inst_term(const TermPtr& e, int depth, const TermPtr& a) {
  if (std::holds_alternative<SymRef>(*e)) return e;
  if (auto* v = std::get_if<BoundRef>(e.get())) {
    if (v->index == depth) return shift_term(a, depth);
    return v->index > depth ? bound(v->index - 1) : e;
  }
  if (auto* l = std::get_if<Lam>(e.get()))
    return lam(l->hint, inst_type(l->annot, depth, a), inst_term(l->body, depth + 1, a));
  const auto& ap = std::get<App>(*e);
  return app(inst_term(ap.fn, depth, a), inst_term(ap.arg, depth, a));
}

inline TypePtr inst_type(const TypePtr& t, int depth, const TermPtr& a) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    std::vector<TermPtr> args;
    args.reserve(at->args.size());
    for (const auto& x : at->args) args.push_back(inst_term(x, depth, a));
    return tatom(at->family, std::move(args));
  }
  if (auto* p = std::get_if<TPi>(t.get()))
    return tpi(p->hint, inst_type(p->domain, depth, a), inst_type(p->codomain, depth + 1, a));
  const auto& e = std::get<TEq>(*t);
  return teq(inst_type(e.carrier, depth, a), inst_term(e.lhs, depth, a),
             inst_term(e.rhs, depth, a));
}

inline KindPtr inst_kind(const KindPtr& k, int depth, const TermPtr& a) {
  if (std::holds_alternative<KType>(*k)) return k;
  const auto& p = std::get<KPi>(*k);
  return kpi(p.hint, inst_type(p.domain, depth, a), inst_kind(p.codomain, depth + 1, a));
}

// does the expression mention binder `depth`?
inline bool mentions_index_term(const TermPtr& e, int depth);
inline bool mentions_index_type(const TypePtr& t, int depth);
inline bool mentions_index_kind(const KindPtr& k, int depth);

inline bool mentions_index_term(const TermPtr& e, int depth) {
  if (auto* v = std::get_if<BoundRef>(e.get())) return v->index == depth;
  if (auto* l = std::get_if<Lam>(e.get()))
    return mentions_index_type(l->annot, depth) || mentions_index_term(l->body, depth + 1);
  if (auto* a = std::get_if<App>(e.get()))
    return mentions_index_term(a->fn, depth) || mentions_index_term(a->arg, depth);
  return false;
}

inline bool mentions_index_type(const TypePtr& t, int depth) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    for (const auto& a : at->args)
      if (mentions_index_term(a, depth)) return true;
    return false;
  }
  if (auto* p = std::get_if<TPi>(t.get()))
    return mentions_index_type(p->domain, depth) || mentions_index_type(p->codomain, depth + 1);
  const auto& e = std::get<TEq>(*t);
  return mentions_index_type(e.carrier, depth) || mentions_index_term(e.lhs, depth) ||
         mentions_index_term(e.rhs, depth);
}

inline bool mentions_index_kind(const KindPtr& k, int depth) {
  if (std::holds_alternative<KType>(*k)) return false;
  const auto& p = std::get<KPi>(*k);
  return mentions_index_type(p.domain, depth) || mentions_index_kind(p.codomain, depth + 1);
}

// beta normalization (normal order, full). The calculus has no fixpoints, so
// this terminates on well-typed input.

inline TypePtr beta_normalize_type(const TypePtr& t);

inline TermPtr beta_normalize(const TermPtr& e) {
  if (std::holds_alternative<SymRef>(*e) || std::holds_alternative<BoundRef>(*e)) return e;
  if (auto* l = std::get_if<Lam>(e.get()))
    return lam(l->hint, beta_normalize_type(l->annot), beta_normalize(l->body));
  const auto& a = std::get<App>(*e);
  TermPtr fn = beta_normalize(a.fn);
  TermPtr arg = beta_normalize(a.arg);
  if (auto* l = std::get_if<Lam>(fn.get())) return beta_normalize(inst_term(l->body, 0, arg));
  return app(fn, arg);
}

inline TypePtr beta_normalize_type(const TypePtr& t) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    std::vector<TermPtr> args;
    args.reserve(at->args.size());
    for (const auto& a : at->args) args.push_back(beta_normalize(a));
    return tatom(at->family, std::move(args));
  }
  if (auto* p = std::get_if<TPi>(t.get()))
    return tpi(p->hint, beta_normalize_type(p->domain), beta_normalize_type(p->codomain));
  const auto& e = std::get<TEq>(*t);
  return teq(beta_normalize_type(e.carrier), beta_normalize(e.lhs), beta_normalize(e.rhs));
}

// typing and kinding

inline TypePtr infer_type(const Presentation& ctx, const LocalEnv& env, const TermPtr& e);
inline KindPtr check_kind(const Presentation& ctx, const LocalEnv& env, const TypePtr& t);
inline TypePtr normalize_type(const Presentation& ctx, const LocalEnv& env, const TypePtr& t);
inline TermPtr normalize(const Presentation& ctx, const LocalEnv& env, const TermPtr& e,
                         const TypePtr& ty);

inline bool type_conv(const Presentation& ctx, const LocalEnv& env, const TypePtr& a,
                      const TypePtr& b) {
  if (alpha_eq(a, b)) return true;
  return alpha_eq(normalize_type(ctx, env, a), normalize_type(ctx, env, b));
}

inline bool kind_conv(const Presentation& ctx, const LocalEnv& env, const KindPtr& a,
                      const KindPtr& b) {
  if (a->index() != b->index()) return false;
  if (std::holds_alternative<KType>(*a)) return true;
  const auto& p = std::get<KPi>(*a);
  const auto& q = std::get<KPi>(*b);
  if (!type_conv(ctx, env, p.domain, q.domain)) return false;
  LocalEnv inner = env;
  inner.push_back(p.domain);
  return kind_conv(ctx, inner, p.codomain, q.codomain);
}

inline TypePtr infer_type(const Presentation& ctx, const LocalEnv& env, const TermPtr& e) {
  if (auto* s = std::get_if<SymRef>(e.get())) {
    const Declaration* d = ctx.find(s->name);
    if (!d) fail(ErrorKind::UnboundName, "`" + s->name.text + "` is not declared");
    if (d->is_type_decl())
      fail(ErrorKind::IllTyped, "type symbol `" + s->name.text + "` used as a term");
    return d->type();
  }
  if (auto* v = std::get_if<BoundRef>(e.get())) return local_type(env, v->index);
  if (auto* l = std::get_if<Lam>(e.get())) {
    KindPtr k = check_kind(ctx, env, l->annot);
    if (!std::holds_alternative<KType>(*k))
      fail(ErrorKind::KindMismatch, "binder annotation is not of kind type");
    LocalEnv inner = env;
    inner.push_back(l->annot);
    TypePtr body_ty = infer_type(ctx, inner, l->body);
    return tpi(l->hint, l->annot, body_ty);
  }
  const auto& a = std::get<App>(*e);
  TypePtr fn_ty = infer_type(ctx, env, a.fn);
  auto* pi = std::get_if<TPi>(fn_ty.get());
  if (!pi) fail(ErrorKind::TypeMismatch, "application head is not of function type");
  TypePtr arg_ty = infer_type(ctx, env, a.arg);
  if (!type_conv(ctx, env, arg_ty, pi->domain))
    fail(ErrorKind::TypeMismatch, "argument type does not match function domain");
  return inst_type(pi->codomain, 0, a.arg);
}

inline KindPtr check_kind(const Presentation& ctx, const LocalEnv& env, const TypePtr& t) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    const Declaration* d = ctx.find(at->family);
    if (!d) fail(ErrorKind::UnboundName, "`" + at->family.text + "` is not declared");
    if (!d->is_type_decl())
      fail(ErrorKind::KindMismatch, "term symbol `" + at->family.text + "` used as a type");
    KindPtr k = d->kind();
    for (const auto& arg : at->args) {
      auto* p = std::get_if<KPi>(k.get());
      if (!p) fail(ErrorKind::KindMismatch, "type family `" + at->family.text + "` over-applied");
      TypePtr arg_ty = infer_type(ctx, env, arg);
      if (!type_conv(ctx, env, arg_ty, p->domain))
        fail(ErrorKind::TypeMismatch, "family argument type mismatch");
      k = inst_kind(p->codomain, 0, arg);
    }
    return k;
  }
  if (auto* p = std::get_if<TPi>(t.get())) {
    KindPtr dk = check_kind(ctx, env, p->domain);
    if (!std::holds_alternative<KType>(*dk))
      fail(ErrorKind::KindMismatch, "Pi domain is not of kind type");
    LocalEnv inner = env;
    inner.push_back(p->domain);
    KindPtr ck = check_kind(ctx, inner, p->codomain);
    if (!std::holds_alternative<KType>(*ck))
      fail(ErrorKind::KindMismatch, "Pi codomain is not of kind type");
    return ktype();
  }
  const auto& e = std::get<TEq>(*t);
  KindPtr ck = check_kind(ctx, env, e.carrier);
  if (!std::holds_alternative<KType>(*ck))
    fail(ErrorKind::KindMismatch, "equation carrier is not of kind type");
  TypePtr lt = infer_type(ctx, env, e.lhs);
  if (!type_conv(ctx, env, lt, e.carrier))
    fail(ErrorKind::TypeMismatch, "equation left-hand side not of carrier type");
  TypePtr rt = infer_type(ctx, env, e.rhs);
  if (!type_conv(ctx, env, rt, e.carrier))
    fail(ErrorKind::TypeMismatch, "equation right-hand side not of carrier type");
  return ktype();
}

// eta-long form of a beta-normal term at a normalized type

inline TermPtr eta_long(const Presentation& ctx, const LocalEnv& env, const TermPtr& e,
                        const TypePtr& ty) {
  if (auto* pi = std::get_if<TPi>(ty.get())) {
    TermPtr body;
    if (auto* l = std::get_if<Lam>(e.get()))
      body = l->body;
    else
      body = app(shift_term(e, 1), bound(0));
    LocalEnv inner = env;
    inner.push_back(pi->domain);
    return lam(pi->hint.empty() ? Name("x") : pi->hint, pi->domain,
               eta_long(ctx, inner, body, pi->codomain));
  }
  // atom or equation type: e is a spine
  std::vector<TermPtr> spine;
  TermPtr head = e;
  while (auto* a = std::get_if<App>(head.get())) {
    spine.push_back(a->arg);
    head = a->fn;
  }
  std::reverse(spine.begin(), spine.end());
  TypePtr head_ty;
  if (auto* s = std::get_if<SymRef>(head.get())) {
    const Declaration* d = ctx.find(s->name);
    if (!d || d->is_type_decl()) bug("unbound or non-term spine head in eta expansion");
    head_ty = normalize_type(ctx, env, d->type());
  } else if (auto* v = std::get_if<BoundRef>(head.get())) {
    head_ty = normalize_type(ctx, env, local_type(env, v->index));
  } else {
    bug("beta-normal term of atomic type has a lambda head");
  }
  TermPtr out = head;
  for (const auto& arg : spine) {
    auto* pi = std::get_if<TPi>(head_ty.get());
    if (!pi) bug("spine longer than head type in eta expansion");
    out = app(out, eta_long(ctx, env, arg, pi->domain));
    head_ty = normalize_type(ctx, env, inst_type(pi->codomain, 0, arg));
  }
  return out;
}

// beta-normal eta-long form; idempotent
inline TermPtr normalize(const Presentation& ctx, const LocalEnv& env, const TermPtr& e,
                         const TypePtr& ty) {
  return eta_long(ctx, env, beta_normalize(e), normalize_type(ctx, env, ty));
}

inline TypePtr normalize_type(const Presentation& ctx, const LocalEnv& env, const TypePtr& t) {
  if (auto* at = std::get_if<TAtom>(t.get())) {
    const Declaration* d = ctx.find(at->family);
    if (!d || !d->is_type_decl()) bug("bad type family in normalize_type");
    KindPtr k = d->kind();
    std::vector<TermPtr> args;
    args.reserve(at->args.size());
    for (const auto& a : at->args) {
      auto* p = std::get_if<KPi>(k.get());
      if (!p) bug("over-applied family in normalize_type");
      args.push_back(normalize(ctx, env, a, p->domain));
      k = inst_kind(p->codomain, 0, a);
    }
    return tatom(at->family, std::move(args));
  }
  if (auto* p = std::get_if<TPi>(t.get())) {
    TypePtr dom = normalize_type(ctx, env, p->domain);
    LocalEnv inner = env;
    inner.push_back(p->domain);
    return tpi(p->hint, dom, normalize_type(ctx, inner, p->codomain));
  }
  const auto& e = std::get<TEq>(*t);
  TypePtr carrier = normalize_type(ctx, env, e.carrier);
  return teq(carrier, normalize(ctx, env, e.lhs, carrier), normalize(ctx, env, e.rhs, carrier));
}

// definitional equality of two typed terms (beta-eta)

inline bool conv(const Presentation& ctx, const LocalEnv& env, const TermPtr& s1,
                 const TypePtr& t1, const TermPtr& s2, const TypePtr& t2) {
  // precondition: both sides type-check at the stated types
  TypePtr i1 = infer_type(ctx, env, s1);
  if (!type_conv(ctx, env, i1, t1)) fail(ErrorKind::IllTyped, "left side not of stated type");
  TypePtr i2 = infer_type(ctx, env, s2);
  if (!type_conv(ctx, env, i2, t2)) fail(ErrorKind::IllTyped, "right side not of stated type");
  if (!type_conv(ctx, env, t1, t2)) return false;
  return alpha_eq(normalize(ctx, env, s1, t1), normalize(ctx, env, s2, t2));
}

// convenience overloads at the top level

inline TypePtr infer_type(const Presentation& ctx, const TermPtr& e) {
  return infer_type(ctx, LocalEnv{}, e);
}
inline KindPtr check_kind(const Presentation& ctx, const TypePtr& t) {
  return check_kind(ctx, LocalEnv{}, t);
}
inline TermPtr normalize(const Presentation& ctx, const TermPtr& e, const TypePtr& ty) {
  return normalize(ctx, LocalEnv{}, e, ty);
}
inline TypePtr normalize_type(const Presentation& ctx, const TypePtr& t) {
  return normalize_type(ctx, LocalEnv{}, t);
}
inline bool conv(const Presentation& ctx, const TermPtr& s1, const TypePtr& t1, const TermPtr& s2,
                 const TypePtr& t2) {
  return conv(ctx, LocalEnv{}, s1, t1, s2, t2);
}
inline bool type_conv(const Presentation& ctx, const TypePtr& a, const TypePtr& b) {
  return type_conv(ctx, LocalEnv{}, a, b);
}
inline bool kind_conv(const Presentation& ctx, const KindPtr& a, const KindPtr& b) {
  return kind_conv(ctx, LocalEnv{}, a, b);
}

// context formation: the two wfctx rules, applied left to right

inline void check_wf_kind(const Presentation& ctx, const LocalEnv& env, const KindPtr& k) {
  if (std::holds_alternative<KType>(*k)) return;
  const auto& p = std::get<KPi>(*k);
  KindPtr dk = check_kind(ctx, env, p.domain);
  if (!std::holds_alternative<KType>(*dk))
    fail(ErrorKind::KindMismatch, "kind domain is not of kind type");
  LocalEnv inner = env;
  inner.push_back(p.domain);
  check_wf_kind(ctx, inner, p.codomain);
}

inline Presentation wf_check(const std::vector<Declaration>& raw) {
  Presentation out;
  for (const auto& d : raw) {
    if (out.declares(d.name))
      fail(ErrorKind::DuplicateName, "`" + d.name.text + "` is declared twice");
    try {
      if (d.is_type_decl()) {
        check_wf_kind(out, LocalEnv{}, d.kind());
      } else {
        KindPtr k = check_kind(out, LocalEnv{}, d.type());
        if (!std::holds_alternative<KType>(*k))
          fail(ErrorKind::KindMismatch, "classifier is a partially applied family");
      }
    } catch (const Error& e) {
      if (e.kind == ErrorKind::Internal) throw;
      throw Error(ErrorKind::IllFormedClassifier,
                  "in declaration of `" + d.name.text + "`: " + e.what());
    }
    out.decls.push_back(d);
  }
  return out;
}

// Gamma |x Delta+
inline Presentation append_extension(const Presentation& base, const ExtensionBody& ext) {
  std::vector<Declaration> all = base.decls;
  all.insert(all.end(), ext.decls.begin(), ext.decls.end());
  return wf_check(all);
}

}  // namespace tpc

#endif
