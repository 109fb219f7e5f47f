#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cts/fp.hpp"

using namespace cts;

namespace {

// Independent oracle: Pascal's triangle mod p (exact, since reduction
// commutes with addition).
std::uint32_t pascal_binom(unsigned a, unsigned b, std::uint32_t p) {
  if (b > a) return 0;
  std::vector<std::uint32_t> row{1};
  for (unsigned i = 1; i <= a; ++i) {
    std::vector<std::uint32_t> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) % p;
    row = std::move(next);
  }
  return row[b] % p;
}

}  // namespace

TEST_CASE("fp arithmetic examples") {
  CHECK(Fp(2, 3) * Fp(2, 3) == Fp(1, 3));
  CHECK(Fp(2, 3).inv() == Fp(2, 3));
  CHECK(Fp(3, 5) + Fp(4, 5) == Fp(2, 5));
  CHECK(Fp(-1, 3) == Fp(2, 3));
  CHECK_THROWS(Fp(0, 3).inv());
  CHECK_THROWS(Fp(1, 3) + Fp(1, 5));
  CHECK_THROWS(Fp(1, 2));
  CHECK_THROWS(Fp(1, 9));
}

TEST_CASE("field axioms, exhaustive for p=3, sampled for p=5,7") {
  for (std::uint32_t p : {3u}) {
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c) {
          Fp A(a, p), B(b, p), C(c, p);
          CHECK((A + B) + C == A + (B + C));
          CHECK((A * B) * C == A * (B * C));
          CHECK(A * (B + C) == A * B + A * C);
          CHECK(A + B == B + A);
          CHECK(A * B == B * A);
        }
    for (std::uint32_t a = 1; a < p; ++a) CHECK(Fp(a, p) * Fp(a, p).inv() == Fp(1, p));
  }
  for (std::uint32_t p : {5u, 7u}) {
    std::uint64_t s = 12345;
    for (int it = 0; it < 300; ++it) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      std::uint32_t a = (s >> 33) % p, b = (s >> 21) % p, c = (s >> 11) % p;
      Fp A(a, p), B(b, p), C(c, p);
      CHECK((A + B) + C == A + (B + C));
      CHECK((A * B) * C == A * (B * C));
      CHECK(A * (B + C) == A * B + A * C);
      if (a) CHECK(A * A.inv() == Fp(1, p));
    }
  }
}

TEST_CASE("lucas binomials: examples") {
  CHECK(lucas_binom(2, 1, 3) == 2);
  CHECK(lucas_binom(3, 1, 3) == 0);
  // 10 = (101)_3, 4 = (011)_3, middle digit 0 < 1
  CHECK(lucas_binom(10, 4, 3) == 0);
  CHECK(lucas_binom(10, 4, 3) == pascal_binom(10, 4, 3));
}

TEST_CASE("lucas equals big-integer binomial mod p, exhaustive to 3p^2") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    unsigned lim = 3 * p * p;
    for (unsigned a = 0; a <= lim; ++a)
      for (unsigned b = 0; b <= a; ++b)
        CHECK(lucas_binom(a, b, p) == pascal_binom(a, b, p));
  }
}

TEST_CASE("multi-index binomial") {
  std::vector<std::uint64_t> top{2, 1}, bot{1, 1};
  CHECK(binom_mod(top, bot, 3) == Fp(2, 3));
  std::vector<std::uint64_t> top2{3, 1}, bot2{1, 0};
  CHECK(binom_mod(top2, bot2, 3) == Fp(0, 3));
}
