#ifndef TPC_TESTS_FIXTURES_HPP
#define TPC_TESTS_FIXTURES_HPP

#include "tpc/combinator.hpp"

// Hand-built kernel presentations used across the suites.
namespace fix {

using namespace tpc;

inline TypePtr U() { return tatom("U"); }
inline TypePtr binop() { return tpi("_", U(), tpi("_", U(), U())); }
inline TypePtr unop() { return tpi("_", U(), U()); }

inline Presentation carrier() { return wf_check({type_decl("U", ktype())}); }

inline Presentation magma() {
  return wf_check({type_decl("U", ktype()), term_decl("*", binop())});
}

inline Presentation pointed() {
  return wf_check({type_decl("U", ktype()), term_decl("e", U())});
}

inline Presentation pointed_magma() {
  return wf_check({type_decl("U", ktype()), term_decl("*", binop()), term_decl("e", U())});
}

// forall x:U. x * e = x
inline TypePtr right_identity_ax() {
  return tpi("x", U(), teq(U(), app2(sym("*"), bound(0), sym("e")), bound(0)));
}
// forall x:U. e * x = x
inline TypePtr left_identity_ax() {
  return tpi("x", U(), teq(U(), app2(sym("*"), sym("e"), bound(0)), bound(0)));
}
// forall x,y,z:U. (x * y) * z = x * (y * z)
inline TypePtr associative_ax() {
  TermPtr x = bound(2), y = bound(1), z = bound(0);
  TermPtr lhs = app2(sym("*"), app2(sym("*"), x, y), z);
  TermPtr rhs = app2(sym("*"), x, app2(sym("*"), y, z));
  return tpi("x", U(), tpi("y", U(), tpi("z", U(), teq(U(), lhs, rhs))));
}

inline Presentation semigroup() {
  return wf_check({type_decl("U", ktype()), term_decl("*", binop()),
                   term_decl("associative", associative_ax())});
}

inline Presentation monoid() {
  return wf_check({type_decl("U", ktype()), term_decl("*", binop()), term_decl("e", U()),
                   term_decl("right_identity", right_identity_ax()),
                   term_decl("left_identity", left_identity_ax()),
                   term_decl("associative", associative_ax())});
}

// \x:U. \y:U. y * x
inline TermPtr flip_term() {
  return lam("x", U(), lam("y", U(), app2(sym("*"), bound(0), bound(1))));
}

inline View flip_view() {
  Assignment a;
  a.entries.emplace(Name("U"), Image{U()});
  a.entries.emplace(Name("*"), Image{flip_term()});
  return check_view(magma(), magma(), a);
}

inline Embedding incl(const Presentation& small, const Presentation& big) {
  return make_embedding(small, big, {});
}

}  // namespace fix

#endif
