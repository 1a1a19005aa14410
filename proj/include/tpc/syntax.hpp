#ifndef TPC_SYNTAX_HPP
#define TPC_SYNTAX_HPP

#include <memory>
#include <variant>
#include <vector>

#include "tpc/name.hpp"

namespace tpc {

// Surface syntax for kernel terms/types/kinds, produced by the parser and
// resolved against a presentation by the elaborator.

struct SurfaceExpr;
using SExprPtr = std::shared_ptr<const SurfaceExpr>;

struct SName {
  Name name;
};
struct SType {};  // the `type` keyword
struct SApp {
  SExprPtr fn;
  SExprPtr arg;
};
// \x,y:T. body / fun ... / forall ...
struct SBinder {
  bool is_pi = false;
  std::vector<Name> names;
  SExprPtr annot;
  SExprPtr body;
};
struct SArrow {
  SExprPtr dom;
  SExprPtr cod;
};
struct SEq {
  SExprPtr lhs;
  SExprPtr rhs;
  SExprPtr carrier;  // null when left to inference
};

struct SurfaceExpr {
  std::variant<SName, SType, SApp, SBinder, SArrow, SEq> node;
  int line = 0;
  int col = 0;
};

inline SExprPtr surface(std::variant<SName, SType, SApp, SBinder, SArrow, SEq> n, int line,
                        int col) {
  auto p = std::make_shared<SurfaceExpr>();
  const_cast<SurfaceExpr&>(*p).node = std::move(n);
  const_cast<SurfaceExpr&>(*p).line = line;
  const_cast<SurfaceExpr&>(*p).col = col;
  return p;
}

struct RawDecl {
  Name name;
  SExprPtr classifier;
  int line = 0;
  int col = 0;
};

// A bracketed `[ x |-> ... ]` list. It is a renaming when every right-hand
// side is a bare name; otherwise it can only serve as an assignment.
struct BracketList {
  std::vector<std::pair<Name, SExprPtr>> entries;
  int line = 0;
  int col = 0;

  bool is_renaming() const {
    for (const auto& [n, e] : entries)
      if (!std::holds_alternative<SName>(e->node)) return false;
    return true;
  }
};

// literal bracket list or a reference to a named one
struct RawArg : std::variant<BracketList, Name> {
  using variant::variant;
  RawArg() : variant(BracketList{}) {}
};

// combinator expressions

struct TpcExpr;
using TpcPtr = std::shared_ptr<const TpcExpr>;

struct EmptyE {};
struct TheoryE {
  std::vector<RawDecl> decls;
};
struct ExtendE {
  TpcPtr base;
  std::vector<RawDecl> decls;
};
struct CombineE {
  TpcPtr left;
  RawArg ren_left;
  TpcPtr right;
  RawArg ren_right;
};
struct MixinE {
  TpcPtr left;
  RawArg ren_left;
  TpcPtr right;
  RawArg ren_right;
};
struct ViewE {
  TpcPtr source;
  TpcPtr target;
  RawArg assignment;
};
struct SeqE {
  TpcPtr first;
  TpcPtr second;
};
struct RenameE {
  TpcPtr base;
  RawArg renaming;
};
struct RefE {
  Name name;
};

struct TpcExpr {
  std::variant<EmptyE, TheoryE, ExtendE, CombineE, MixinE, ViewE, SeqE, RenameE, RefE> node;
  int line = 0;
  int col = 0;
};

inline TpcPtr tpcnode(std::variant<EmptyE, TheoryE, ExtendE, CombineE, MixinE, ViewE, SeqE,
                                   RenameE, RefE>
                          n,
                      int line, int col) {
  auto p = std::make_shared<TpcExpr>();
  const_cast<TpcExpr&>(*p).node = std::move(n);
  const_cast<TpcExpr&>(*p).line = line;
  const_cast<TpcExpr&>(*p).col = col;
  return p;
}

// one `Name := ...` item: a combinator expression or a named bracket list
struct Definition {
  Name name;
  std::variant<TpcPtr, BracketList> body;
  int line = 0;
  int col = 0;

  bool is_expr() const { return std::holds_alternative<TpcPtr>(body); }
  const TpcPtr& expr() const { return std::get<TpcPtr>(body); }
  const BracketList& bracket() const { return std::get<BracketList>(body); }
};

struct Module {
  std::vector<Definition> defs;
};

}  // namespace tpc

#endif
