#ifndef TPC_PARSER_HPP
#define TPC_PARSER_HPP

#include <set>

#include "tpc/lexer.hpp"
#include "tpc/syntax.hpp"

namespace tpc {

// Recursive descent for the combinator language and the term syntax inside
// theories and views.
//
// Precedence, loosest first: `||`, then `;`, then postfix renaming. In a
// combine/mixin argument slot the final bracket list is the construction's
// renaming and any earlier ones are postfix renamings; parenthesize to force
// a postfix reading of the last one.

namespace detail {

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Module module() {
    Module m;
    std::set<Name> defined;
    while (peek().kind != Tok::End) {
      Definition d = definition(defined);
      if (!defined.insert(d.name).second)
        throw Error(ErrorKind::DuplicateDefinition, "`" + d.name.text + "` is defined twice",
                    d.line, d.col);
      m.defs.push_back(std::move(d));
    }
    return m;
  }

  TpcPtr single_expr() {
    TpcPtr e = tpc_expr();
    expect(Tok::End);
    // references must be resolvable by the caller; nothing to check here
    return e;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok t) const { return peek().kind == t; }
  bool eat(Tok t) {
    if (!at(t)) return false;
    next();
    return true;
  }
  const Token& expect(Tok t) {
    if (!at(t))
      throw Error(ErrorKind::ParseError,
                  std::string("expected ") + token_name(t) + ", found " +
                      token_name(peek().kind),
                  peek().line, peek().col);
    return *&next();
  }

  [[noreturn]] void unexpected(const char* what) {
    throw Error(ErrorKind::ParseError,
                std::string("expected ") + what + ", found " + token_name(peek().kind),
                peek().line, peek().col);
  }

  bool at_name() const { return at(Tok::Ident) || at(Tok::Op); }
  Name name_token(const char* what) {
    if (!at_name()) unexpected(what);
    return Name(next().text);
  }

  Definition definition(const std::set<Name>& defined) {
    const Token& t = peek();
    Name n = name_token("definition name");
    expect(Tok::Define);
    Definition d;
    d.name = n;
    d.line = t.line;
    d.col = t.col;
    if (at(Tok::LBracket)) {
      d.body = bracket_list();
    } else {
      TpcPtr e = tpc_expr();
      check_refs(e, defined);
      d.body = e;
    }
    return d;
  }

  void check_refs(const TpcPtr& e, const std::set<Name>& defined) {
    auto check_name = [&](const Name& n, int line, int col) {
      if (!defined.count(n))
        throw Error(ErrorKind::UnknownReference, "`" + n.text + "` is not defined yet", line,
                    col);
    };
    auto check_arg = [&](const RawArg& a, int line, int col) {
      if (auto* n = std::get_if<Name>(&a)) check_name(*n, line, col);
    };
    if (auto* r = std::get_if<RefE>(&e->node)) {
      check_name(r->name, e->line, e->col);
    } else if (auto* x = std::get_if<ExtendE>(&e->node)) {
      check_refs(x->base, defined);
    } else if (auto* c = std::get_if<CombineE>(&e->node)) {
      check_refs(c->left, defined);
      check_refs(c->right, defined);
      check_arg(c->ren_left, e->line, e->col);
      check_arg(c->ren_right, e->line, e->col);
    } else if (auto* m = std::get_if<MixinE>(&e->node)) {
      check_refs(m->left, defined);
      check_refs(m->right, defined);
      check_arg(m->ren_left, e->line, e->col);
      check_arg(m->ren_right, e->line, e->col);
    } else if (auto* v = std::get_if<ViewE>(&e->node)) {
      check_refs(v->source, defined);
      check_refs(v->target, defined);
      check_arg(v->assignment, e->line, e->col);
    } else if (auto* s = std::get_if<SeqE>(&e->node)) {
      check_refs(s->first, defined);
      check_refs(s->second, defined);
    } else if (auto* rn = std::get_if<RenameE>(&e->node)) {
      check_refs(rn->base, defined);
      check_arg(rn->renaming, e->line, e->col);
    }
  }

  // tpc := seq ('||' seq)*
  TpcPtr tpc_expr() {
    const Token& t = peek();
    TpcPtr e = seq_expr();
    while (at(Tok::Bars)) {
      next();
      TpcPtr rhs = seq_expr();
      e = tpcnode(CombineE{e, RawArg{}, rhs, RawArg{}}, t.line, t.col);
    }
    return e;
  }

  TpcPtr seq_expr() {
    const Token& t = peek();
    TpcPtr e = postfix_expr();
    while (at(Tok::Semi)) {
      next();
      TpcPtr rhs = postfix_expr();
      e = tpcnode(SeqE{e, rhs}, t.line, t.col);
    }
    return e;
  }

  TpcPtr postfix_expr() {
    TpcPtr e = primary_expr();
    while (true) {
      if (at(Tok::LBracket)) {
        BracketList b = bracket_list();
        if (!b.is_renaming())
          throw Error(ErrorKind::ParseError, "postfix bracket must be a renaming", b.line,
                      b.col);
        e = tpcnode(RenameE{e, RawArg{b}}, e->line, e->col);
        continue;
      }
      // a named renaming may follow postfix, unless the name starts the next
      // definition
      if (at(Tok::Ident) && peek(1).kind != Tok::Define) {
        Name n(next().text);
        e = tpcnode(RenameE{e, RawArg{n}}, e->line, e->col);
        continue;
      }
      break;
    }
    return e;
  }

  // an argument of combine/mixin: expression followed by its renaming; the
  // last bracket list is the renaming, earlier ones are postfix renames
  std::pair<TpcPtr, RawArg> construction_arg() {
    TpcPtr e = primary_expr();
    if (at_name()) return {e, RawArg{name_token("renaming name")}};
    std::vector<BracketList> brackets;
    while (at(Tok::LBracket)) brackets.push_back(bracket_list());
    if (brackets.empty()) return {e, RawArg{}};
    for (size_t i = 0; i + 1 < brackets.size(); ++i) {
      if (!brackets[i].is_renaming())
        throw Error(ErrorKind::ParseError, "postfix bracket must be a renaming",
                    brackets[i].line, brackets[i].col);
      e = tpcnode(RenameE{e, RawArg{brackets[i]}}, e->line, e->col);
    }
    return {e, RawArg{brackets.back()}};
  }

  TpcPtr primary_expr() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwEmpty:
        next();
        return tpcnode(EmptyE{}, t.line, t.col);
      case Tok::KwTheory: {
        next();
        expect(Tok::LBrace);
        std::vector<RawDecl> ds = raw_decls();
        expect(Tok::RBrace);
        return tpcnode(TheoryE{std::move(ds)}, t.line, t.col);
      }
      case Tok::KwExtend: {
        next();
        TpcPtr base = postfix_expr();
        expect(Tok::KwBy);
        expect(Tok::LBrace);
        std::vector<RawDecl> ds = raw_decls();
        expect(Tok::RBrace);
        return tpcnode(ExtendE{base, std::move(ds)}, t.line, t.col);
      }
      case Tok::KwCombine: {
        next();
        auto [l, rl] = construction_arg();
        expect(Tok::Comma);
        auto [r, rr] = construction_arg();
        return tpcnode(CombineE{l, rl, r, rr}, t.line, t.col);
      }
      case Tok::KwMixin: {
        next();
        auto [l, rl] = construction_arg();
        expect(Tok::Comma);
        auto [r, rr] = construction_arg();
        return tpcnode(MixinE{l, rl, r, rr}, t.line, t.col);
      }
      case Tok::KwView: {
        next();
        TpcPtr src = postfix_expr();
        expect(Tok::KwAs);
        TpcPtr tgt = postfix_expr();
        expect(Tok::KwVia);
        RawArg v;
        if (at(Tok::LBracket))
          v = RawArg{bracket_list()};
        else
          v = RawArg{name_token("assignment name")};
        return tpcnode(ViewE{src, tgt, v}, t.line, t.col);
      }
      case Tok::LParen: {
        next();
        TpcPtr e = tpc_expr();
        expect(Tok::RParen);
        return e;
      }
      case Tok::Ident: {
        Name n(next().text);
        return tpcnode(RefE{n}, t.line, t.col);
      }
      default:
        unexpected("a theory expression");
    }
  }

  std::vector<RawDecl> raw_decls() {
    std::vector<RawDecl> out;
    while (!at(Tok::RBrace)) {
      const Token& t = peek();
      Name n = name_token("declaration name");
      expect(Tok::Colon);
      SExprPtr cls = surf_expr();
      out.push_back(RawDecl{n, cls, t.line, t.col});
      if (!eat(Tok::Semi)) break;
    }
    return out;
  }

  BracketList bracket_list() {
    BracketList b;
    const Token& t = expect(Tok::LBracket);
    b.line = t.line;
    b.col = t.col;
    if (eat(Tok::RBracket)) return b;
    while (true) {
      Name from = name_token("symbol");
      expect(Tok::MapsTo);
      SExprPtr to;
      if (at(Tok::Op)) {
        // a bare operator name on the right-hand side (renamings like
        // [* |-> +]); operators in term position otherwise need backticks
        const Token& ot = next();
        to = surface(SName{Name(ot.text)}, ot.line, ot.col);
      } else {
        to = surf_expr();
      }
      b.entries.emplace_back(from, to);
      if (!eat(Tok::Comma)) break;
    }
    expect(Tok::RBracket);
    return b;
  }

  // term/type/kind surface grammar
  // surf := binder | eq
  // eq := arrow ('=' arrow (':' arrow)?)?
  // arrow := op ('->' arrow)?
  // op := app (OP app)?
  // app := atom+
  SExprPtr surf_expr() {
    if (at(Tok::Backslash) || at(Tok::KwFun) || at(Tok::KwForall)) return binder_expr();
    return eq_expr();
  }

  SExprPtr binder_expr() {
    const Token& t = next();  // backslash / fun / forall
    bool is_pi = t.kind == Tok::KwForall;
    std::vector<Name> names;
    names.push_back(name_token("binder name"));
    while (eat(Tok::Comma)) names.push_back(name_token("binder name"));
    expect(Tok::Colon);
    SExprPtr annot = eq_expr();
    expect(Tok::Dot);
    SExprPtr body = surf_expr();
    return surface(SBinder{is_pi, std::move(names), annot, body}, t.line, t.col);
  }

  SExprPtr eq_expr() {
    const Token& t = peek();
    SExprPtr lhs = arrow_expr();
    if (!at(Tok::Equals)) return lhs;
    next();
    SExprPtr rhs = arrow_expr();
    SExprPtr carrier;
    if (eat(Tok::Colon)) carrier = arrow_expr();
    return surface(SEq{lhs, rhs, carrier}, t.line, t.col);
  }

  SExprPtr arrow_expr() {
    const Token& t = peek();
    SExprPtr dom = op_expr();
    if (!at(Tok::Arrow)) return dom;
    next();
    SExprPtr cod = arrow_expr();
    return surface(SArrow{dom, cod}, t.line, t.col);
  }

  SExprPtr op_expr() {
    const Token& t = peek();
    SExprPtr lhs = app_expr();
    if (!at(Tok::Op)) return lhs;
    Name op(next().text);
    SExprPtr rhs = app_expr();
    SExprPtr opref = surface(SName{op}, t.line, t.col);
    return surface(SApp{surface(SApp{opref, lhs}, t.line, t.col), rhs}, t.line, t.col);
  }

  SExprPtr app_expr() {
    SExprPtr e = atom_expr();
    while (at(Tok::Ident) || at(Tok::KwType) || at(Tok::LParen)) {
      SExprPtr arg = atom_expr();
      e = surface(SApp{e, arg}, e->line, e->col);
    }
    return e;
  }

  SExprPtr atom_expr() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        Name n(next().text);
        return surface(SName{n}, t.line, t.col);
      }
      case Tok::KwType:
        next();
        return surface(SType{}, t.line, t.col);
      case Tok::LParen: {
        next();
        SExprPtr e = surf_expr();
        expect(Tok::RParen);
        return e;
      }
      default:
        unexpected("a term");
    }
  }
};

}  // namespace detail

inline Module parse_module(const std::string& text) {
  detail::Parser p(lex(text));
  return p.module();
}

inline TpcPtr parse_expr(const std::string& text) {
  detail::Parser p(lex(text));
  return p.single_expr();
}

}  // namespace tpc

#endif
