#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cts/contact.hpp"

using namespace cts;

namespace {

SigPtr k17(std::uint32_t p = 3, std::uint32_t N = 1) { return Signature::contact_k1(p, N); }

}  // namespace

TEST_CASE("alpha and basic pairings") {
  auto s = k17();
  ContactStructure C(s);
  CHECK(interior(VectorField::partial(s, 0), C.alpha()).render() == "1");
  CHECK(interior(VectorField::partial(s, 1), C.alpha()).render() == "2 w1");  // −w1
  CHECK(interior(VectorField::partial(s, static_cast<std::uint32_t>(s->index_of("u"))), C.alpha()).render() == "2 u");
  CHECK(interior(VectorField::partial(s, 1), d(DPElement::generator(s, 0))).is_zero());
}

TEST_CASE("d o d = 0 on functions and one-forms") {
  for (std::uint32_t N : {1u, 2u}) {
    auto s = k17(3, N);
    for (int deg = 0; deg <= 6; ++deg)
      for (const auto& m : graded_monomials(*s, deg)) {
        DPElement f(s, m, 1);
        CHECK(d(d(f)).is_zero());
        for (std::uint32_t i = 0; i < s->count(); ++i) {
          OneForm w(s);
          w.coefficient(i) = f;
          CHECK(d(d(w)).is_zero());
        }
      }
  }
}

TEST_CASE("lie derivative examples") {
  auto s = k17();
  ContactStructure C(s);
  CHECK(lie_derivative(VectorField::partial(s, 0), C.alpha()).is_zero());
  // grading field: L_{X_t} α = μ α with μ a nonzero constant
  auto Xt = C.field_of(DPElement::generator(s, 0));
  DPElement mu(s);
  REQUIRE(C.is_contact(Xt, &mu));
  CHECK(!mu.is_zero());
  auto Xv4 = C.field_of(DPElement::generator(s, 3));
  CHECK(C.is_contact(Xv4));
}

TEST_CASE("field_of: fundamental cases") {
  auto s = k17();
  ContactStructure C(s);
  CHECK(C.field_of(DPElement::one(s)) == VectorField::partial(s, 0));

  auto v4 = DPElement::generator(s, 3);
  auto w4 = DPElement::generator(s, static_cast<std::uint32_t>(s->index_of("w4")));
  auto Xv4 = C.field_of(v4);
  auto Xw4 = C.field_of(w4);
  CHECK(*Xv4.degree() == -1);
  CHECK(*Xv4.parity() == 1);
  // self-bracket of X_{v4} vanishes (v4 pairs with w4, not itself) ...
  CHECK(bracket(Xv4, Xv4).is_zero());
  // ... the nondegenerate pairing shows up against X_{w4}
  auto h = bracket(Xv4, Xw4);
  REQUIRE(!h.is_zero());
  CHECK(*h.degree() == -2);
  CHECK(h.coefficient(0).degree() == 0);
  // and u is self-paired through the 2u du term
  auto u = DPElement::generator(s, static_cast<std::uint32_t>(s->index_of("u")));
  auto Xu = C.field_of(u);
  CHECK(!bracket(Xu, Xu).is_zero());
}

TEST_CASE("field_of of the V1'' generating function") {
  auto s = k17();
  ContactStructure C(s);
  auto f = parse_element(s, "t w4 + v1 w1 w4 + v3 w3 w4 + u w1 w3");
  auto X = C.field_of(f);
  CHECK(*X.degree() == 1);
  CHECK(*X.parity() == 1);
  CHECK(C.generating_function(X) == f);
}

TEST_CASE("generating function round trip, exhaustive for p=3, N=1") {
  auto s = k17();
  ContactStructure C(s);
  std::size_t total = 0;
  for (int d = 0; d <= s->top_degree(); ++d)
    for (const auto& m : graded_monomials(*s, d)) {
      DPElement f(s, m, 1);
      auto X = C.field_of(f);
      CHECK(interior(X, C.alpha()) == f);
      CHECK(C.generating_function(X) == f);
      if (!f.is_zero()) {
        CHECK(*X.degree() == d - 2);
        CHECK(*X.parity() == m.parity());
      }
      ++total;
    }
  CHECK(total == 384);  // dim O(1;1|7) = 3·2^7
}

TEST_CASE("grading eigenvalue of the t-field") {
  auto s = k17(5, 1);
  ContactStructure C(s);
  auto Xt = C.field_of(DPElement::generator(s, 0));
  auto v4 = DPElement::generator(s, 3);
  auto Xv4 = C.field_of(v4);
  auto br = bracket(Xt, Xv4);
  // t spans the grading center: [X_t, X_{v4}] is a nonzero multiple of X_{v4}
  auto g = C.generating_function(br);
  REQUIRE(!g.is_zero());
  CHECK(g.terms().size() == 1);
  CHECK(g.terms()[0].m == v4.terms()[0].m);
}

TEST_CASE("closure: bracket of contact fields is contact") {
  auto s = k17();
  ContactStructure C(s);
  for (int ka = -2; ka <= 3; ++ka)
    for (int kb = ka; kb <= 3; ++kb) {
      auto A = C.contact_basis(ka);
      auto B = C.contact_basis(kb);
      for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) {
          auto br = bracket(A[i], B[j]);
          CHECK(C.is_contact(br));
        }
    }
}

TEST_CASE("contact slice dimensions count monomials of degree k+2") {
  auto s = k17();
  ContactStructure C(s);
  CHECK(C.slice_dim(-2) == 1);
  CHECK(C.slice_dim(-1) == 7);
  CHECK(C.slice_dim(0) == 22);
  std::size_t total = 0;
  for (int k = -2; k <= s->top_degree() - 2; ++k) total += C.slice_dim(k);
  CHECK(total == 384);
}

TEST_CASE("field_of is injective and degree-shifting on graded slices") {
  auto s = k17();
  ContactStructure C(s);
  for (int d = 1; d <= 4; ++d) {
    auto monos = graded_monomials(*s, d);
    // pairwise differences map to nonzero fields
    for (std::size_t i = 0; i + 1 < monos.size(); i += 2) {
      DPElement f = DPElement(s, monos[i], 1) - DPElement(s, monos[i + 1], 2);
      auto X = C.field_of(f);
      CHECK(!X.is_zero());
      CHECK(*X.degree() == d - 2);
    }
  }
}
