#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "tpc/print_syntax.hpp"
#include "tpc/tpc.hpp"

using namespace tpc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus(const char* rel) { return std::string(TPC_SOURCE_DIR "/library/") + rel; }

}  // namespace

TEST_CASE("lexer basics") {
  auto toks = lex("Magma := extend Carrier by { * : U -> U -> U } -- comment\n");
  REQUIRE(toks.size() >= 10);
  CHECK(toks[0].kind == Tok::Ident);
  CHECK(toks[1].kind == Tok::Define);
  CHECK(toks[2].kind == Tok::KwExtend);
  // the comment is skipped entirely
  CHECK(toks.back().kind == Tok::End);

  auto ops = lex("a |-> b -> c || d = e");
  CHECK(ops[1].kind == Tok::MapsTo);
  CHECK(ops[3].kind == Tok::Arrow);
  CHECK(ops[5].kind == Tok::Bars);
  CHECK(ops[7].kind == Tok::Equals);

  auto quoted = lex("`associative_+` e'");
  CHECK(quoted[0].kind == Tok::Ident);
  CHECK(quoted[0].text == "associative_+");
  CHECK(quoted[1].text == "e'");

  CHECK_THROWS_MATCHES(lex("`unterminated"), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind == ErrorKind::LexError; }));
  CHECK_THROWS_AS(lex("a ? b"), Error);

  // UTF-8 identifiers lex as single names, and the math-font arrows
  // normalize to their ASCII forms
  auto utf8 = lex("Mono\xc3\xafd \xe2\x89\x94 Empty [ x \xe2\x86\xa6 y ]");
  CHECK(utf8[0].kind == Tok::Ident);
  CHECK(utf8[0].text == "Mono\xc3\xafd");
  CHECK(utf8[1].kind == Tok::Define);
  CHECK(utf8[5].kind == Tok::MapsTo);
}

TEST_CASE("lexer positions") {
  try {
    lex("A := Empty\nB := ?");
    FAIL("expected a lex error");
  } catch (const Error& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 6);
  }
}

TEST_CASE("parse_module: combine sugar") {
  Module m = parse_module(
      "Carrier := Theory { U : type }\n"
      "Magma := extend Carrier by { * : U -> U -> U }\n"
      "Pointed := extend Carrier by { e : U }\n"
      "PointedMagma := Magma || Pointed\n");
  REQUIRE(m.defs.size() == 4);
  const auto* c = std::get_if<CombineE>(&m.defs[3].expr()->node);
  REQUIRE(c);
  CHECK(std::get<RefE>(c->left->node).name == Name("Magma"));
  CHECK(std::get<RefE>(c->right->node).name == Name("Pointed"));
  CHECK(std::get<BracketList>(c->ren_left).entries.empty());
  CHECK(std::get<BracketList>(c->ren_right).entries.empty());
}

TEST_CASE("parse_module: Empty") {
  Module m = parse_module("X := Empty\n");
  REQUIRE(m.defs.size() == 1);
  CHECK(std::holds_alternative<EmptyE>(m.defs[0].expr()->node));
}

TEST_CASE("parse_module: mixin with a trailing renaming") {
  // The final bracket after a construction argument is that argument's
  // renaming; earlier brackets are postfix renames. Parenthesize the whole
  // argument to force the postfix reading of a final bracket.
  Module m = parse_module(
      "Flip := Empty\n"
      "PointedMagma := Empty\n"
      "LeftUnital := Empty\n"
      "RightUnital := mixin Flip [], (PointedMagma ; LeftUnital) [ left_identity |-> "
      "right_identity ]\n");
  const auto* mx = std::get_if<MixinE>(&m.defs[3].expr()->node);
  REQUIRE(mx);
  CHECK(std::holds_alternative<RefE>(mx->left->node));
  CHECK(std::get<BracketList>(mx->ren_left).entries.empty());
  const auto* seq = std::get_if<SeqE>(&mx->right->node);
  REQUIRE(seq);
  const auto& r2 = std::get<BracketList>(mx->ren_right);
  REQUIRE(r2.entries.size() == 1);
  CHECK(r2.entries[0].first == Name("left_identity"));

  // an explicit postfix rename inside parentheses, argument renaming empty
  Module m2 = parse_module(
      "A := Empty\nB := Empty\n"
      "C := combine A [], (B [ x |-> y ]) []\n");
  const auto* c2 = std::get_if<CombineE>(&m2.defs[2].expr()->node);
  REQUIRE(c2);
  CHECK(std::holds_alternative<RenameE>(c2->right->node));
  CHECK(std::get<BracketList>(c2->ren_right).entries.empty());

  // two brackets: first postfix, last is the construction renaming
  Module m3 = parse_module(
      "A := Empty\nB := Empty\n"
      "C := combine A [], B [ x |-> y ] [ z |-> w ]\n");
  const auto* c3 = std::get_if<CombineE>(&m3.defs[2].expr()->node);
  REQUIRE(c3);
  CHECK(std::holds_alternative<RenameE>(c3->right->node));
  CHECK(std::get<BracketList>(c3->ren_right).entries.size() == 1);
}

TEST_CASE("parse_expr productions") {
  CHECK(std::holds_alternative<EmptyE>(parse_expr("Empty")->node));

  TpcPtr ext = parse_expr("extend Magma by { e : U }");
  const auto* x = std::get_if<ExtendE>(&ext->node);
  REQUIRE(x);
  REQUIRE(x->decls.size() == 1);
  CHECK(x->decls[0].name == Name("e"));

  TpcPtr v = parse_expr("view Magma as Magma via [ * |-> \\x:U. \\y:U. y * x ]");
  const auto* vw = std::get_if<ViewE>(&v->node);
  REQUIRE(vw);
  const auto& b = std::get<BracketList>(vw->assignment);
  REQUIRE(b.entries.size() == 1);
  CHECK(b.entries[0].first == Name("*"));
  CHECK_FALSE(b.is_renaming());

  // `fun` is a synonym for the backslash
  TpcPtr v2 = parse_expr("view A as B via [ f |-> fun x:U. x ]");
  const auto& b2 = std::get<BracketList>(std::get<ViewE>(v2->node).assignment);
  CHECK(std::holds_alternative<SBinder>(b2.entries[0].second->node));

  CHECK(std::holds_alternative<TheoryE>(parse_expr("Theory { U : type }")->node));
  CHECK(std::holds_alternative<SeqE>(parse_expr("A ; B")->node));
  CHECK(std::holds_alternative<RenameE>(parse_expr("A [ x |-> y ]")->node));
  CHECK(std::holds_alternative<RefE>(parse_expr("A")->node));
  CHECK(std::holds_alternative<MixinE>(parse_expr("mixin A [], B []")->node));

  // precedence: postfix > ; > ||
  TpcPtr prec = parse_expr("A ; B [ x |-> y ] || C");
  const auto* top = std::get_if<CombineE>(&prec->node);
  REQUIRE(top);
  const auto* lhs = std::get_if<SeqE>(&top->left->node);
  REQUIRE(lhs);
  CHECK(std::holds_alternative<RenameE>(lhs->second->node));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_MATCHES(parse_module("X := extend by {}"), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind == ErrorKind::ParseError; }));
  CHECK_THROWS_MATCHES(parse_module("X := Empty\nX := Empty\n"), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind == ErrorKind::DuplicateDefinition;
                       }));
  CHECK_THROWS_MATCHES(parse_module("X := Y\n"), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind == ErrorKind::UnknownReference;
                       }));
  // a postfix bracket must be a renaming
  CHECK_THROWS_MATCHES(parse_module("A := Empty\nB := A [ x |-> \\y:U. y ] ; A\n"), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind == ErrorKind::ParseError; }));
  try {
    parse_module("A := Empty\nB := extend A by { e : }\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ParseError);
    CHECK(e.line == 2);
  }
}

TEST_CASE("print then parse is a fixpoint") {
  for (const char* file : {"tiny.tpc", "algebra.tpc", "addsemigroup.tpc"}) {
    std::string text = slurp(corpus(file));
    Module m1 = parse_module(text);
    std::string p1 = print_module(m1);
    Module m2 = parse_module(p1);
    std::string p2 = print_module(m2);
    CHECK(p1 == p2);
  }
}

TEST_CASE("surface terms parse with the documented precedence") {
  Module m = parse_module(
      "T := Theory { U : type ; * : U -> U -> U ; e : U ;"
      " ax : forall x,y,z:U. (x * y) * z = x * (y * z) ;"
      " ax2 : forall x:U. x * e = x }\n");
  const auto* t = std::get_if<TheoryE>(&m.defs[0].expr()->node);
  REQUIRE(t);
  REQUIRE(t->decls.size() == 5);
  // arrow is right-associative
  const auto* star = std::get_if<SArrow>(&t->decls[1].classifier->node);
  REQUIRE(star);
  CHECK(std::holds_alternative<SArrow>(star->cod->node));
  // binder body reaches across the equation
  const auto* ax = std::get_if<SBinder>(&t->decls[3].classifier->node);
  REQUIRE(ax);
  CHECK(ax->names.size() == 3);
  CHECK(std::holds_alternative<SEq>(ax->body->node));
}
