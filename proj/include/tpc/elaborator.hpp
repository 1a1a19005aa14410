#ifndef TPC_ELABORATOR_HPP
#define TPC_ELABORATOR_HPP

#include <functional>
#include <optional>

#include "tpc/combinator.hpp"
#include "tpc/parser.hpp"

namespace tpc {

// Resolution of surface syntax against a presentation, and the elaborator
// proper: every expression is evaluated once into its (partial) theory,
// embedding and view denotations, together with the most informative type
// the rules give it.

// ---------------------------------------------------------------------------
// surface resolution

namespace detail {

struct ScopeEntry {
  Name name;  // empty for the anonymous binder of a plain arrow
  TypePtr type;
};

inline LocalEnv scope_env(const std::vector<ScopeEntry>& scope) {
  LocalEnv env;
  env.reserve(scope.size());
  for (const auto& s : scope) env.push_back(s.type);
  return env;
}

[[noreturn]] inline void fail_at(ErrorKind k, const std::string& msg, const SExprPtr& e) {
  throw Error(k, msg, e->line, e->col);
}

inline bool is_kind_syntax(const SExprPtr& e) {
  if (std::holds_alternative<SType>(e->node)) return true;
  if (auto* a = std::get_if<SArrow>(&e->node)) return is_kind_syntax(a->cod);
  if (auto* b = std::get_if<SBinder>(&e->node)) return b->is_pi && is_kind_syntax(b->body);
  return false;
}

inline TermPtr resolve_term(const Presentation& ctx, std::vector<ScopeEntry>& scope,
                            const SExprPtr& e);
inline TypePtr resolve_type(const Presentation& ctx, std::vector<ScopeEntry>& scope,
                            const SExprPtr& e);
inline KindPtr resolve_kind(const Presentation& ctx, std::vector<ScopeEntry>& scope,
                            const SExprPtr& e);

inline TermPtr resolve_term(const Presentation& ctx, std::vector<ScopeEntry>& scope,
                            const SExprPtr& e) {
  if (auto* n = std::get_if<SName>(&e->node)) {
    for (size_t i = scope.size(); i-- > 0;)
      if (scope[i].name == n->name) return bound(static_cast<int>(scope.size() - 1 - i));
    const Declaration* d = ctx.find(n->name);
    if (!d) fail_at(ErrorKind::UnboundName, "`" + n->name.text + "` is not declared", e);
    if (d->is_type_decl())
      fail_at(ErrorKind::IllTyped, "type symbol `" + n->name.text + "` used as a term", e);
    return sym(n->name);
  }
  if (auto* a = std::get_if<SApp>(&e->node)) {
    // an application headed by a type family is a type, not a term
    const SurfaceExpr* head = a->fn.get();
    while (auto* inner = std::get_if<SApp>(&head->node)) head = inner->fn.get();
    if (auto* hn = std::get_if<SName>(&head->node)) {
      const Declaration* d = ctx.find(hn->name);
      bool bound_here = false;
      for (const auto& s : scope)
        if (s.name == hn->name) bound_here = true;
      if (!bound_here && d && d->is_type_decl())
        fail_at(ErrorKind::IllTyped, "type expression used as a term", e);
    }
    return app(resolve_term(ctx, scope, a->fn), resolve_term(ctx, scope, a->arg));
  }
  if (auto* b = std::get_if<SBinder>(&e->node)) {
    if (b->is_pi) fail_at(ErrorKind::IllTyped, "forall is a type, not a term", e);
    TypePtr annot = resolve_type(ctx, scope, b->annot);
    std::function<TermPtr(size_t)> build = [&](size_t i) -> TermPtr {
      if (i == b->names.size()) return resolve_term(ctx, scope, b->body);
      TypePtr a2 = resolve_type(ctx, scope, b->annot);
      scope.push_back(ScopeEntry{b->names[i], a2});
      TermPtr body = build(i + 1);
      scope.pop_back();
      return lam(b->names[i], a2, body);
    };
    (void)annot;
    return build(0);
  }
  fail_at(ErrorKind::IllTyped, "type syntax in term position", e);
}

inline TypePtr resolve_type(const Presentation& ctx, std::vector<ScopeEntry>& scope,
                            const SExprPtr& e) {
  if (auto* n = std::get_if<SName>(&e->node)) {
    for (size_t i = scope.size(); i-- > 0;)
      if (scope[i].name == n->name)
        fail_at(ErrorKind::IllTyped, "bound variable `" + n->name.text + "` used as a type", e);
    const Declaration* d = ctx.find(n->name);
    if (!d) fail_at(ErrorKind::UnboundName, "`" + n->name.text + "` is not declared", e);
    if (!d->is_type_decl())
      fail_at(ErrorKind::IllTyped, "term symbol `" + n->name.text + "` used as a type", e);
    return tatom(n->name);
  }
  if (auto* a = std::get_if<SApp>(&e->node)) {
    // family applied to term arguments
    std::vector<SExprPtr> args;
    const SExprPtr* cur = &e;
    const SApp* ap = a;
    while (true) {
      args.push_back(ap->arg);
      cur = &ap->fn;
      auto* inner = std::get_if<SApp>(&(*cur)->node);
      if (!inner) break;
      ap = inner;
    }
    std::reverse(args.begin(), args.end());
    auto* hn = std::get_if<SName>(&(*cur)->node);
    if (!hn) fail_at(ErrorKind::IllTyped, "type application must be headed by a family", e);
    const Declaration* d = ctx.find(hn->name);
    if (!d) fail_at(ErrorKind::UnboundName, "`" + hn->name.text + "` is not declared", e);
    if (!d->is_type_decl())
      fail_at(ErrorKind::IllTyped, "term application used as a type", e);
    std::vector<TermPtr> targs;
    targs.reserve(args.size());
    for (const auto& s : args) targs.push_back(resolve_term(ctx, scope, s));
    return tatom(hn->name, std::move(targs));
  }
  if (auto* ar = std::get_if<SArrow>(&e->node)) {
    TypePtr dom = resolve_type(ctx, scope, ar->dom);
    scope.push_back(ScopeEntry{Name(), dom});
    TypePtr cod = resolve_type(ctx, scope, ar->cod);
    scope.pop_back();
    return tpi("_", dom, cod);
  }
  if (auto* b = std::get_if<SBinder>(&e->node)) {
    if (!b->is_pi) fail_at(ErrorKind::IllTyped, "a lambda is not a type", e);
    std::function<TypePtr(size_t)> build = [&](size_t i) -> TypePtr {
      if (i == b->names.size()) return resolve_type(ctx, scope, b->body);
      TypePtr dom = resolve_type(ctx, scope, b->annot);
      scope.push_back(ScopeEntry{b->names[i], dom});
      TypePtr cod = build(i + 1);
      scope.pop_back();
      return tpi(b->names[i], dom, cod);
    };
    return build(0);
  }
  if (auto* q = std::get_if<SEq>(&e->node)) {
    TermPtr lhs = resolve_term(ctx, scope, q->lhs);
    TypePtr carrier;
    if (q->carrier) {
      carrier = resolve_type(ctx, scope, q->carrier);
    } else {
      try {
        carrier = infer_type(ctx, scope_env(scope), lhs);
      } catch (const Error& err) {
        fail_at(err.kind, std::string("cannot infer the equation carrier: ") + err.what(), e);
      }
    }
    TermPtr rhs = resolve_term(ctx, scope, q->rhs);
    return teq(carrier, lhs, rhs);
  }
  fail_at(ErrorKind::IllTyped, "`type` is a kind, not a type", e);
}

inline KindPtr resolve_kind(const Presentation& ctx, std::vector<ScopeEntry>& scope,
                            const SExprPtr& e) {
  if (std::holds_alternative<SType>(e->node)) return ktype();
  if (auto* a = std::get_if<SArrow>(&e->node)) {
    TypePtr dom = resolve_type(ctx, scope, a->dom);
    scope.push_back(ScopeEntry{Name(), dom});
    KindPtr cod = resolve_kind(ctx, scope, a->cod);
    scope.pop_back();
    return kpi("_", dom, cod);
  }
  if (auto* b = std::get_if<SBinder>(&e->node); b && b->is_pi) {
    std::function<KindPtr(size_t)> build = [&](size_t i) -> KindPtr {
      if (i == b->names.size()) return resolve_kind(ctx, scope, b->body);
      TypePtr dom = resolve_type(ctx, scope, b->annot);
      scope.push_back(ScopeEntry{b->names[i], dom});
      KindPtr cod = build(i + 1);
      scope.pop_back();
      return kpi(b->names[i], dom, cod);
    };
    return build(0);
  }
  fail_at(ErrorKind::IllTyped, "expected a kind", e);
}

}  // namespace detail

// resolve a declaration list against a base, each classifier in the prefix
// before it
inline ExtensionBody resolve_decls(const Presentation& base, const std::vector<RawDecl>& raws) {
  Presentation prefix = base;
  ExtensionBody out;
  for (const auto& raw : raws) {
    if (prefix.declares(raw.name))
      throw Error(ErrorKind::DuplicateName, "`" + raw.name.text + "` is declared twice",
                  raw.line, raw.col);
    std::vector<detail::ScopeEntry> scope;
    Declaration d;
    try {
      if (detail::is_kind_syntax(raw.classifier))
        d = type_decl(raw.name, detail::resolve_kind(prefix, scope, raw.classifier));
      else
        d = term_decl(raw.name, detail::resolve_type(prefix, scope, raw.classifier));
      prefix = append_extension(prefix, ExtensionBody{{d}});
    } catch (const Error& err) {
      if (err.line > 0) throw;
      throw Error(err.kind, err.raw, raw.line, raw.col);
    }
    out.decls.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// elaboration results and the environment

struct TpcType {
  enum class K { Th, Emb, View, Perm, Assign };
  K k = K::Th;
  Presentation source;  // Emb/View: the morphism's endpoints
  Presentation target;  // also the theory denotation, when there is one
  bool theory_denoting = true;

  std::string show() const {
    switch (k) {
      case K::Th: return "Th";
      case K::Emb: return "Emb";
      case K::View: return "View";
      case K::Perm: return "Renaming";
      case K::Assign: return "Assignment";
    }
    return "?";
  }
};

struct ElabResult {
  std::optional<Presentation> as_theory;
  std::optional<Embedding> as_embedding;
  std::optional<View> as_view;
  TpcType type;
  std::shared_ptr<const CombineResult> combine_rec;
  std::shared_ptr<const MixinResult> mixin_rec;
};

struct EnvEntry {
  Name name;
  std::optional<ElabResult> result;    // expression definitions
  std::optional<BracketList> bracket;  // named renamings/assignments
  TpcType type;
  std::optional<Name> view_target_node;  // for view definitions: the node their target lives on
};

struct Env {
  std::vector<EnvEntry> entries;
  std::map<Name, size_t> index;

  const EnvEntry* find(const Name& n) const {
    auto it = index.find(n);
    return it == index.end() ? nullptr : &entries[it->second];
  }
  void add(EnvEntry e) {
    index.emplace(e.name, entries.size());
    entries.push_back(std::move(e));
  }
};

struct GraphEdge {
  Name from;
  Name to;
  enum class Tag { Inclusion, Renaming, View } tag;
  Name label;  // the definition that produced the edge
};

struct DiagramGraph {
  std::vector<Name> nodes;
  std::vector<GraphEdge> edges;
};

struct Elaboration {
  Env env;
  DiagramGraph graph;
};

// ---------------------------------------------------------------------------
// argument checking

inline Renaming check_renaming_arg(const BracketList& b) {
  if (!b.is_renaming())
    throw Error(ErrorKind::TypeError, "an assignment cannot serve as a renaming", b.line, b.col);
  Renaming r;
  std::map<Name, Name> seen;  // image -> preimage
  for (const auto& [from, to_expr] : b.entries) {
    Name to = std::get<SName>(to_expr->node).name;
    if (!r.mapping.emplace(from, to).second)
      throw Error(ErrorKind::NotInjective, "`" + from.text + "` is renamed twice", b.line,
                  b.col);
    auto [it, fresh] = seen.emplace(to, from);
    if (!fresh)
      throw Error(ErrorKind::NotInjective,
                  "both `" + it->second.text + "` and `" + from.text + "` map to `" + to.text +
                      "`",
                  b.line, b.col);
  }
  return r;
}

inline View check_assignment_arg(const BracketList& b, const Presentation& source,
                                 const Presentation& target) {
  Assignment a;
  for (const auto& [n, sexpr] : b.entries) {
    const Declaration* d = source.find(n);
    if (!d)
      throw Error(ErrorKind::ExtraAssignment, "`" + n.text + "` is not a symbol of the source",
                  b.line, b.col);
    std::vector<detail::ScopeEntry> scope;
    if (d->is_type_decl())
      a.entries.emplace(n, Image{detail::resolve_type(target, scope, sexpr)});
    else
      a.entries.emplace(n, Image{detail::resolve_term(target, scope, sexpr)});
  }
  return check_view(source, target, std::move(a));
}

// ---------------------------------------------------------------------------
// the evaluator

namespace detail {

class Elaborator {
 public:
  Env env;
  DiagramGraph graph;

  void run(const Module& m) {
    for (const auto& def : m.defs) {
      if (env.find(def.name))
        throw Error(ErrorKind::DuplicateDefinition, "`" + def.name.text + "` is defined twice",
                    def.line, def.col);
      if (!def.is_expr()) {
        EnvEntry e;
        e.name = def.name;
        e.bracket = def.bracket();
        e.type.k = def.bracket().is_renaming() ? TpcType::K::Perm : TpcType::K::Assign;
        e.type.theory_denoting = false;
        env.add(std::move(e));
        continue;
      }
      ElabResult r;
      try {
        r = eval(def.expr());
      } catch (const Error& err) {
        if (err.line > 0) throw;
        throw Error(err.kind, "in definition of `" + def.name.text + "`: " + err.raw, def.line,
                    def.col);
      }
      record_graph(def.name, def.expr(), r);
      EnvEntry e;
      e.name = def.name;
      e.type = r.type;
      if (auto* v = std::get_if<ViewE>(&def.expr()->node)) e.view_target_node = theory_name(v->target);
      e.result = std::move(r);
      env.add(std::move(e));
    }
  }

  ElabResult eval(const TpcPtr& e) {
    if (std::get_if<EmptyE>(&e->node)) {
      ElabResult r;
      Presentation empty;
      Embedding id0 = identity(empty);
      r.as_theory = empty;
      r.as_embedding = id0;
      r.as_view = id0.view;
      r.type = TpcType{TpcType::K::Emb, empty, empty, true};
      return r;
    }
    if (auto* t = std::get_if<TheoryE>(&e->node)) {
      ExtensionBody body = resolve_decls(Presentation{}, t->decls);
      ExtendResult ext = extend(Presentation{}, body);
      ElabResult r;
      r.as_theory = ext.pres;
      r.as_embedding = ext.embed;
      r.as_view = ext.embed.view;
      r.type = TpcType{TpcType::K::Emb, Presentation{}, ext.pres, true};
      return r;
    }
    if (auto* ref = std::get_if<RefE>(&e->node)) {
      const EnvEntry* entry = env.find(ref->name);
      if (!entry)
        throw Error(ErrorKind::UnknownReference, "`" + ref->name.text + "` is not defined",
                    e->line, e->col);
      if (!entry->result)
        throw Error(ErrorKind::TypeError,
                    "`" + ref->name.text + "` names a renaming/assignment, not a theory "
                    "expression",
                    e->line, e->col);
      return *entry->result;
    }
    if (auto* x = std::get_if<ExtendE>(&e->node)) {
      ElabResult base = eval(x->base);
      if (!base.as_theory)
        throw Error(ErrorKind::TypeError, "extend needs a theory base (rule: extend)", e->line,
                    e->col);
      ExtensionBody body = resolve_decls(*base.as_theory, x->decls);
      ExtendResult ext = extend(*base.as_theory, body);
      ElabResult r;
      r.as_theory = ext.pres;
      r.as_embedding = ext.embed;
      r.as_view = ext.embed.view;
      r.type = TpcType{TpcType::K::Emb, *base.as_theory, ext.pres, true};
      return r;
    }
    if (auto* rn = std::get_if<RenameE>(&e->node)) {
      ElabResult base = eval(rn->base);
      if (!base.as_theory)
        throw Error(ErrorKind::TypeError, "a renaming applies to a theory (rule: rename)",
                    e->line, e->col);
      RenameResult res = rename(*base.as_theory, arg_renaming(rn->renaming, e));
      ElabResult r;
      r.as_theory = res.pres;
      r.as_embedding = res.embed;
      r.as_view = res.embed.view;
      r.type = TpcType{TpcType::K::Emb, *base.as_theory, res.pres, true};
      return r;
    }
    if (auto* c = std::get_if<CombineE>(&e->node)) {
      ElabResult l = eval(c->left);
      ElabResult r0 = eval(c->right);
      if (!l.as_embedding || !r0.as_embedding)
        throw Error(ErrorKind::TypeError,
                    "combine requires embedding-valued arguments (rule: combine)", e->line,
                    e->col);
      auto com = std::make_shared<CombineResult>(combine(*l.as_embedding, *r0.as_embedding,
                                                         arg_renaming(c->ren_left, e),
                                                         arg_renaming(c->ren_right, e)));
      ElabResult r;
      r.as_theory = com->pres;
      r.as_embedding = com->diag;
      r.as_view = com->diag.view;
      r.type = TpcType{TpcType::K::Emb, com->diag.source(), com->pres, true};
      r.combine_rec = com;
      return r;
    }
    if (auto* m = std::get_if<MixinE>(&e->node)) {
      ElabResult l = eval(m->left);
      ElabResult r0 = eval(m->right);
      if (!l.as_view)
        throw Error(ErrorKind::TypeError, "mixin's first argument must denote a view (rule: "
                                          "mixin)",
                    e->line, e->col);
      if (!r0.as_embedding)
        throw Error(ErrorKind::TypeError,
                    "mixin's second argument must be an embedding; lifting a view over a view "
                    "is not supported (rule: mixin)",
                    e->line, e->col);
      auto mix = std::make_shared<MixinResult>(mixin(*l.as_view, *r0.as_embedding,
                                                     arg_renaming(m->ren_left, e),
                                                     arg_renaming(m->ren_right, e)));
      ElabResult r;
      r.as_theory = mix->pres;
      r.as_view = mix->diag;
      r.type = TpcType{TpcType::K::View, mix->diag.source, mix->pres, true};
      r.mixin_rec = mix;
      return r;
    }
    if (auto* v = std::get_if<ViewE>(&e->node)) {
      ElabResult s = eval(v->source);
      ElabResult t = eval(v->target);
      if (!s.as_theory || !t.as_theory)
        throw Error(ErrorKind::TypeError, "view endpoints must be theories (rule: view)",
                    e->line, e->col);
      View view = arg_assignment(v->assignment, *s.as_theory, *t.as_theory, e);
      ElabResult r;
      r.as_view = view;
      // no theory reading: substituting the assignment into the source is a
      // specification error
      r.type = TpcType{TpcType::K::View, *s.as_theory, *t.as_theory, false};
      return r;
    }
    const auto& s = std::get<SeqE>(e->node);
    ElabResult a = eval(s.first);
    ElabResult b = eval(s.second);
    if (!a.as_view || !b.as_view)
      throw Error(ErrorKind::TypeError, "composition needs morphisms (rule: composition)",
                  e->line, e->col);
    View composed = compose(*a.as_view, *b.as_view);
    ElabResult r;
    r.as_view = composed;
    r.as_theory = composed.target;  // cod of the composite
    if (a.as_embedding && b.as_embedding)
      r.as_embedding = compose(*a.as_embedding, *b.as_embedding);
    r.type = TpcType{r.as_embedding ? TpcType::K::Emb : TpcType::K::View, composed.source,
                     composed.target, true};
    return r;
  }

 private:
  Renaming arg_renaming(const RawArg& a, const TpcPtr& at) {
    if (auto* b = std::get_if<BracketList>(&a)) return check_renaming_arg(*b);
    const Name& n = std::get<Name>(a);
    const EnvEntry* entry = env.find(n);
    if (!entry)
      throw Error(ErrorKind::UnknownReference, "`" + n.text + "` is not defined", at->line,
                  at->col);
    if (!entry->bracket)
      throw Error(ErrorKind::TypeError, "`" + n.text + "` is not a renaming", at->line, at->col);
    return check_renaming_arg(*entry->bracket);
  }

  View arg_assignment(const RawArg& a, const Presentation& src, const Presentation& tgt,
                      const TpcPtr& at) {
    const BracketList* b = std::get_if<BracketList>(&a);
    if (!b) {
      const Name& n = std::get<Name>(a);
      const EnvEntry* entry = env.find(n);
      if (!entry)
        throw Error(ErrorKind::UnknownReference, "`" + n.text + "` is not defined", at->line,
                    at->col);
      if (!entry->bracket)
        throw Error(ErrorKind::TypeError, "`" + n.text + "` is not an assignment", at->line,
                    at->col);
      b = &*entry->bracket;
    }
    return check_assignment_arg(*b, src, tgt);
  }

  // --- diagram recording -------------------------------------------------

  std::optional<Name> theory_name(const TpcPtr& e) const {
    if (auto* ref = std::get_if<RefE>(&e->node)) {
      const EnvEntry* entry = env.find(ref->name);
      if (entry && entry->result && entry->result->as_theory) return ref->name;
      return std::nullopt;
    }
    if (auto* s = std::get_if<SeqE>(&e->node)) return theory_name(s->second);
    if (auto* v = std::get_if<ViewE>(&e->node)) return theory_name(v->target);
    return std::nullopt;
  }

  // the node holding the target theory of a morphism-valued expression
  std::optional<Name> morphism_target_name(const TpcPtr& e) const {
    if (auto* ref = std::get_if<RefE>(&e->node)) {
      const EnvEntry* entry = env.find(ref->name);
      if (!entry || !entry->result) return std::nullopt;
      if (entry->result->as_theory) return ref->name;  // a theory's view targets itself
      return std::nullopt;  // a named view: resolved via stored metadata below
    }
    if (auto* s = std::get_if<SeqE>(&e->node)) return morphism_target_name(s->second);
    if (auto* v = std::get_if<ViewE>(&e->node)) return theory_name(v->target);
    return std::nullopt;
  }

  GraphEdge::Tag classify(const View& v) const {
    try {
      Embedding em = as_embedding(v);
      return em.pi.empty() ? GraphEdge::Tag::Inclusion : GraphEdge::Tag::Renaming;
    } catch (const Error&) {
      return GraphEdge::Tag::View;
    }
  }

  void add_edge(const std::optional<Name>& from, const Name& to, GraphEdge::Tag tag,
                const Name& label) {
    if (!from) return;
    graph.edges.push_back(GraphEdge{*from, to, tag, label});
  }

  void record_graph(const Name& def, const TpcPtr& e, const ElabResult& r) {
    if (r.as_theory) graph.nodes.push_back(def);
    if (auto* x = std::get_if<ExtendE>(&e->node)) {
      add_edge(theory_name(x->base), def, GraphEdge::Tag::Inclusion, def);
    } else if (auto* rn = std::get_if<RenameE>(&e->node)) {
      add_edge(theory_name(rn->base), def,
               r.as_embedding && r.as_embedding->pi.empty() ? GraphEdge::Tag::Inclusion
                                                            : GraphEdge::Tag::Renaming,
               def);
    } else if (auto* c = std::get_if<CombineE>(&e->node)) {
      if (r.combine_rec) {
        add_edge(theory_name(c->left), def,
                 r.combine_rec->embed_left.pi.empty() ? GraphEdge::Tag::Inclusion
                                                      : GraphEdge::Tag::Renaming,
                 def);
        add_edge(theory_name(c->right), def,
                 r.combine_rec->embed_right.pi.empty() ? GraphEdge::Tag::Inclusion
                                                       : GraphEdge::Tag::Renaming,
                 def);
      }
    } else if (auto* m = std::get_if<MixinE>(&e->node)) {
      if (r.mixin_rec) {
        add_edge(view_source_node(m->left), def,
                 r.mixin_rec->embed_left.pi.empty() ? GraphEdge::Tag::Inclusion
                                                    : GraphEdge::Tag::Renaming,
                 def);
        add_edge(theory_name(m->right), def, classify(r.mixin_rec->view_right), def);
      }
    } else if (auto* v = std::get_if<ViewE>(&e->node)) {
      auto from = theory_name(v->source);
      auto to = theory_name(v->target);
      if (from && to && r.as_view)
        graph.edges.push_back(GraphEdge{*from, *to, classify(*r.as_view), def});
    }
  }

  // target node of the view in a mixin's left slot
  std::optional<Name> view_source_node(const TpcPtr& e) const {
    if (auto* ref = std::get_if<RefE>(&e->node)) {
      const EnvEntry* entry = env.find(ref->name);
      if (!entry || !entry->result) return std::nullopt;
      if (entry->result->as_theory) return ref->name;
      return entry->view_target_node;
    }
    if (auto* s = std::get_if<SeqE>(&e->node)) return view_source_node(s->second);
    if (auto* v = std::get_if<ViewE>(&e->node)) return theory_name(v->target);
    return std::nullopt;
  }
};

}  // namespace detail

// elaborate a module: every definition once, in order
inline Elaboration elaborate(const Module& m) {
  detail::Elaborator el;
  el.run(m);
  return Elaboration{std::move(el.env), std::move(el.graph)};
}

// single-expression semantics against an already elaborated environment

inline ElabResult elaborate_expr(const TpcPtr& e, const Env& env) {
  detail::Elaborator el;
  el.env = env;
  return el.eval(e);
}

inline TpcType infer_tpc_type(const TpcPtr& e, const Env& env) {
  if (auto* ref = std::get_if<RefE>(&e->node)) {
    const EnvEntry* entry = env.find(ref->name);
    if (!entry)
      throw Error(ErrorKind::UnknownReference, "`" + ref->name.text + "` is not defined",
                  e->line, e->col);
    return entry->type;
  }
  return elaborate_expr(e, env).type;
}

inline Presentation sem_c(const TpcPtr& e, const Env& env) {
  ElabResult r = elaborate_expr(e, env);
  if (!r.as_theory)
    throw Error(ErrorKind::SpecificationError,
                "the expression has no theory denotation (a bare view)", e->line, e->col);
  return *r.as_theory;
}

inline Embedding sem_e(const TpcPtr& e, const Env& env) {
  ElabResult r = elaborate_expr(e, env);
  if (!r.as_embedding)
    throw Error(ErrorKind::SpecificationError, "the expression has no embedding denotation",
                e->line, e->col);
  return *r.as_embedding;
}

inline View sem_b(const TpcPtr& e, const Env& env) {
  ElabResult r = elaborate_expr(e, env);
  if (!r.as_view)
    throw Error(ErrorKind::SpecificationError, "the expression has no view denotation", e->line,
                e->col);
  return *r.as_view;
}

}  // namespace tpc

#endif
