#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cts/vfield.hpp"

using namespace cts;

namespace {

SigPtr k17(std::uint32_t p = 3, std::uint32_t N = 1) { return Signature::contact_k1(p, N); }

VectorField dpartial(const SigPtr& s, const char* name) {
  return VectorField::partial(s, static_cast<std::uint32_t>(s->index_of(name)));
}

}  // namespace

TEST_CASE("apply examples") {
  auto s = k17();
  auto dt = dpartial(s, "t");
  CHECK(apply(dt, parse_element(s, "t^(2)")).render() == "t");
  auto v1 = DPElement::generator(s, 1);
  auto euler = VectorField::monomial_field(s, v1, 1);  // v1 d/dv1
  CHECK(apply(euler, v1) == v1);
  CHECK(apply(dpartial(s, "v4"), DPElement::generator(s, static_cast<std::uint32_t>(s->index_of("w3")))).is_zero());
}

TEST_CASE("bracket examples") {
  auto s = k17();
  auto dv1 = dpartial(s, "v1");
  CHECK(bracket(dv1, dv1).is_zero());
  auto u = DPElement::generator(s, static_cast<std::uint32_t>(s->index_of("u")));
  auto udu = VectorField::monomial_field(s, u, static_cast<std::uint32_t>(s->index_of("u")));
  auto du = dpartial(s, "u");
  CHECK(bracket(udu, du) == du.scaled(s->p() - 1));  // [u∂_u, ∂_u] = −∂_u
}

TEST_CASE("field basis of the contact-graded W(1;1|7)") {
  auto s = k17();
  auto bm2 = field_basis(s, -2);
  REQUIRE(bm2.size() == 1);
  CHECK(bm2[0] == VectorField::partial(s, 0));
  // 7 odd coordinate derivations plus the 7 fields (odd linear)·∂_t
  CHECK(field_basis(s, -1).size() == 14);
  // degree-0 slice: generating-function oracle
  // dim W_k = Σ_i #monomials(k + w_i); H(z) = (1+z^2+z^4)(1+z)^7
  auto h = graded_dimension(*s);
  auto dim_w = [&](int k) {
    std::size_t total = 0;
    for (std::uint32_t i = 0; i < s->count(); ++i) {
      int d = k + s->weight(i);
      if (d >= 0 && d < static_cast<int>(h.size())) total += h[d];
    }
    return total;
  };
  CHECK(dim_w(0) == 71);
  CHECK(field_basis(s, 0).size() == 71);
  for (int k = -2; k <= 6; ++k) CHECK(field_basis(s, k).size() == dim_w(k));
}

TEST_CASE("bracket degree additivity and super anticommutativity") {
  auto s = k17();
  for (int ka = -2; ka <= 2; ++ka)
    for (int kb = ka; kb <= 2; ++kb) {
      auto A = field_basis(s, ka);
      auto B = field_basis(s, kb);
      for (std::size_t i = 0; i < A.size(); i += 3)
        for (std::size_t j = 0; j < B.size(); j += 3) {
          auto br = bracket(A[i], B[j]);
          if (!br.is_zero()) {
            CHECK(br.degree().has_value());
            CHECK(*br.degree() == ka + kb);
          }
          auto rev = bracket(B[j], A[i]);
          std::uint32_t sg = *A[i].parity() & *B[j].parity();
          auto expect = sg ? rev : rev.scaled(s->p() - 1);
          CHECK(br == expect);
        }
    }
}

TEST_CASE("super jacobi on random homogeneous triples") {
  auto s = k17();
  std::vector<VectorField> pool;
  for (int k = -2; k <= 2; ++k)
    for (const auto& X : field_basis(s, k)) pool.push_back(X);
  std::uint64_t seed = 2024;
  for (int it = 0; it < 60; ++it) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    const auto& X = pool[(seed >> 32) % pool.size()];
    const auto& Y = pool[(seed >> 17) % pool.size()];
    const auto& Z = pool[(seed >> 5) % pool.size()];
    std::uint32_t px = *X.parity(), py = *Y.parity(), pz = *Z.parity();
    auto term = [&](const VectorField& A, const VectorField& B, const VectorField& C, std::uint32_t sg) {
      auto t = bracket(A, bracket(B, C));
      return sg ? t.scaled(s->p() - 1) : t;
    };
    // (−1)^{p(X)p(Z)}[X,[Y,Z]] + (−1)^{p(Y)p(X)}[Y,[Z,X]] + (−1)^{p(Z)p(Y)}[Z,[X,Y]] = 0
    auto sum = term(X, Y, Z, px & pz) + term(Y, Z, X, py & px) + term(Z, X, Y, pz & py);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("bracket acts as commutator of applications") {
  auto s = k17();
  std::vector<VectorField> pool;
  for (int k = -2; k <= 1; ++k)
    for (const auto& X : field_basis(s, k)) pool.push_back(X);
  std::vector<Monomial> monos;
  for (int d = 0; d <= 5; ++d)
    for (const auto& m : graded_monomials(*s, d)) monos.push_back(m);
  std::uint64_t seed = 7;
  for (int it = 0; it < 120; ++it) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    const auto& X = pool[(seed >> 30) % pool.size()];
    const auto& Y = pool[(seed >> 15) % pool.size()];
    DPElement f(s, monos[(seed >> 4) % monos.size()], 1);
    DPElement lhs = apply(bracket(X, Y), f);
    DPElement rhs = apply(X, apply(Y, f));
    DPElement swap = apply(Y, apply(X, f));
    rhs += (*X.parity() & *Y.parity()) ? swap : -swap;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("field rendering and parsing") {
  auto s = k17();
  auto X = parse_field(s, "d/dw4 + 2 t d/du + 2 v4 w3 d/dt");
  CHECK(X.render() == "2 v4 w3 d/dt + d/dw4 + 2 t d/du");
  CHECK(parse_field(s, X.render()) == X);
  CHECK(parse_field(s, "0").is_zero());
}
