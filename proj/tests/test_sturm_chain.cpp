#include <catch2/catch_amalgamated.hpp>

#include "sturmint/sturm_chain.hpp"
#include "support/generators.hpp"

using sturmint::Polynomial;
using sturmint::Rational;
using sturmint::SturmChain;
namespace st = sturmint::testing;

namespace {

const Polynomial x2_minus_1{Rational(-1), Rational(0), Rational(1)};
const Polynomial two_x{Rational(0), Rational(2)};
const Polynomial x2{Rational(0), Rational(0), Rational(1)};
const Polynomial x3_minus_x{Rational(0), Rational(-1), Rational(0), Rational(1)};
const Polynomial g3{Rational(-1), Rational(0), Rational(3)};  // 3x^2 - 1

void check_chain_invariants(const SturmChain& c) {
  const int m = c.m();
  REQUIRE(m >= 1);
  REQUIRE(static_cast<int>(c.chain.size()) == m + 1);
  REQUIRE_FALSE(c.chain.back().is_zero());
  // f_{i-1} = d_i f_i - f_{i+1} for 1 <= i <= m-1, and f_{m-1} = d_m f_m,
  // as exact polynomial identities.
  for (int i = 1; i + 1 <= m; ++i) {
    REQUIRE(c.chain[i - 1] == c.quotients[i - 1] * c.chain[i] - c.chain[i + 1]);
    REQUIRE(c.chain[i + 1].degree() < c.chain[i].degree());
  }
  REQUIRE(c.chain[m - 1] == c.quotients[m - 1] * c.chain[m]);
}

}  // namespace

TEST_CASE("build_chain worked examples") {
  const SturmChain c1 = build_chain(x2_minus_1, two_x);
  CHECK(c1.chain == std::vector<Polynomial>{x2_minus_1, two_x, Polynomial::constant(Rational(1))});
  CHECK(c1.quotients == std::vector<Polynomial>{Polynomial{Rational(0), Rational(1, 2)}, two_x});
  CHECK(c1.m() == 2);
  check_chain_invariants(c1);

  const SturmChain c2 = build_chain(x2, two_x);
  CHECK(c2.chain == std::vector<Polynomial>{x2, two_x});
  CHECK(c2.quotients == std::vector<Polynomial>{Polynomial{Rational(0), Rational(1, 2)}});
  CHECK(c2.m() == 1);
  check_chain_invariants(c2);

  const SturmChain c3 = build_chain(x3_minus_x, g3);
  CHECK(c3.chain == std::vector<Polynomial>{x3_minus_x, g3, Polynomial{Rational(0), Rational(2, 3)},
                                            Polynomial::constant(Rational(1))});
  CHECK(c3.quotients == std::vector<Polynomial>{Polynomial{Rational(0), Rational(1, 3)},
                                                Polynomial{Rational(0), Rational(9, 2)},
                                                Polynomial{Rational(0), Rational(2, 3)}});
  CHECK(c3.m() == 3);
  check_chain_invariants(c3);
}

TEST_CASE("canonical_chain") {
  CHECK(canonical_chain(x2_minus_1).chain ==
        std::vector<Polynomial>{x2_minus_1, two_x, Polynomial::constant(Rational(1))});
  CHECK(canonical_chain(x2).chain == std::vector<Polynomial>{x2, two_x});

  const Polynomial x{Rational(0), Rational(1)};
  const SturmChain lin = canonical_chain(x);
  CHECK(lin.chain == std::vector<Polynomial>{x, Polynomial::constant(Rational(1))});
  CHECK(lin.quotients == std::vector<Polynomial>{x});
  CHECK(lin.m() == 1);
}

TEST_CASE("build_chain rejects bad inputs") {
  CHECK_THROWS_AS(build_chain(Polynomial::constant(Rational(5)), two_x), std::invalid_argument);
  CHECK_THROWS_AS(build_chain(Polynomial{}, two_x), std::invalid_argument);
  CHECK_THROWS_AS(build_chain(x2, Polynomial{}), std::invalid_argument);
  CHECK_THROWS_AS(canonical_chain(Polynomial::constant(Rational(5))), std::invalid_argument);
}

TEST_CASE("constant g gives a two-element chain") {
  const SturmChain c = build_chain(x2, Polynomial::constant(Rational(3)));
  CHECK(c.m() == 1);
  CHECK(c.chain == std::vector<Polynomial>{x2, Polynomial::constant(Rational(3))});
  CHECK(c.quotients == std::vector<Polynomial>{Polynomial{Rational(0), Rational(0), Rational(1, 3)}});
  check_chain_invariants(c);
}

TEST_CASE("g dividing f terminates at m = 1") {
  const Polynomial f = x2 * two_x;
  const SturmChain c = build_chain(f, x2);
  CHECK(c.m() == 1);
  CHECK(c.chain.back() == x2);
  check_chain_invariants(c);
}

TEST_CASE("deg g above deg f is handled by the same recurrence") {
  const SturmChain c = build_chain(two_x, x2);
  check_chain_invariants(c);
  CHECK(c.quotients.front().is_zero());
  CHECK(c.chain[2] == -two_x);
}

TEST_CASE("random chains satisfy the recurrence identities") {
  st::Rng rng(201);
  for (int i = 0; i < 200; ++i) {
    auto [f, g] = rng.chain_pair();
    check_chain_invariants(build_chain(f, g));
  }
}

TEST_CASE("sign_variation") {
  CHECK(sturmint::sign_variation({Rational(1), Rational(-1), Rational(1)}) == 2);
  CHECK(sturmint::sign_variation({Rational(-1), Rational(0), Rational(1)}) == 1);
  CHECK(sturmint::sign_variation({Rational(3), Rational(-4), Rational(1)}) == 2);
  CHECK(sturmint::sign_variation({}) == 0);
  CHECK(sturmint::sign_variation({Rational(0), Rational(0)}) == 0);
  CHECK(sturmint::sign_variation({Rational(2)}) == 0);
}

TEST_CASE("variation_at") {
  const SturmChain c1 = build_chain(x2_minus_1, two_x);
  CHECK(variation_at(c1, Rational(-2)) == 2);  // values (3, -4, 1)
  CHECK(variation_at(c1, Rational(0)) == 1);   // values (-1, 0, 1)
  const SturmChain c3 = build_chain(x3_minus_x, g3);
  CHECK(variation_at(c3, Rational(-2)) == 3);  // values (-6, 11, -4/3, 1)
}

TEST_CASE("variation of an all-zero evaluation is zero") {
  // at a root of f_m every chain member vanishes; sigma of the empty
  // sequence is 0 by the zero-deletion rule
  const SturmChain c = build_chain(x2, two_x);
  CHECK(variation_at(c, Rational(0)) == 0);
}

TEST_CASE("refine worked examples") {
  // f_m = 2x: every member is divided by f_m itself, so the tail becomes 1
  const sturmint::RefinedChain r1 = refine(build_chain(x2, two_x));
  CHECK(r1.chain == std::vector<Polynomial>{Polynomial{Rational(0), Rational(1, 2)},
                                            Polynomial::constant(Rational(1))});

  // coprime pair: f_m = 1, refinement is the identity
  const SturmChain c2 = build_chain(x2_minus_1, two_x);
  CHECK(refine(c2).chain == c2.chain);

  // (x-1)^2 (x+1): the refined head is squarefree with the same roots
  const Polynomial f = st::from_roots({Rational(1), Rational(-1)}, {2, 1});
  const sturmint::RefinedChain r3 = refine(canonical_chain(f));
  const Polynomial& head = r3.chain.front();
  CHECK(gcd(head, derivative(head)) == Polynomial::constant(Rational(1)));
  CHECK(eval(head, Rational(1)).is_zero());
  CHECK(eval(head, Rational(-1)).is_zero());
  CHECK(head.degree() == 2);
  CHECK(r3.chain.back() == Polynomial::constant(Rational(1)));
}

TEST_CASE("refined chain invariants hold on random inputs") {
  st::Rng rng(202);
  for (int i = 0; i < 100; ++i) {
    auto [f, g] = rng.chain_pair(6);
    const SturmChain c = build_chain(f, g);
    const sturmint::RefinedChain r = refine(c);
    const Polynomial& fm = c.chain.back();
    REQUIRE(r.chain.back() == Polynomial::constant(Rational(1)));
    for (size_t j = 0; j < r.chain.size(); ++j) REQUIRE(r.chain[j] * fm == c.chain[j]);
    REQUIRE(gcd(r.chain[0], r.chain[1]) == Polynomial::constant(Rational(1)));
  }
}

TEST_CASE("consecutive chain members share no root away from common roots (fact a)") {
  st::Rng rng(203);
  int hits = 0;
  for (int i = 0; i < 150; ++i) {
    auto [f, g] = rng.chain_pair(6);
    const SturmChain c = build_chain(f, g);
    for (int t = 0; t < 8; ++t) {
      const Rational a = rng.rational();
      if (eval(c.chain.back(), a).is_zero()) continue;  // a common root of (f, g)
      for (size_t j = 0; j + 1 < c.chain.size(); ++j) {
        const bool both_zero = eval(c.chain[j], a).is_zero() && eval(c.chain[j + 1], a).is_zero();
        REQUIRE_FALSE(both_zero);
      }
      ++hits;
    }
  }
  REQUIRE(hits > 500);
}

TEST_CASE("the chain tail is the gcd up to a constant (fact b)") {
  st::Rng rng(204);
  for (int i = 0; i < 100; ++i) {
    auto [f, g] = rng.chain_pair(6);
    const SturmChain c = build_chain(f, g);
    CHECK(monic(c.chain.back()) == gcd(f, g));
  }
}

TEST_CASE("an interior zero separates opposite signs (fact c)") {
  // Build chains upward from a pair (p, q) where p vanishes at a chosen
  // point; the Euclidean algorithm reproduces the construction, so the
  // constructed level is a genuine interior chain member.
  st::Rng rng(205);
  for (int iter = 0; iter < 60; ++iter) {
    const Rational root = rng.rational(6, 3);
    Polynomial below = rng.polynomial(static_cast<int>(rng.integer(0, 1)), 4, 3);  // f_{i+1}
    Polynomial mid = Polynomial{-root, Rational(1)} * rng.polynomial(1, 4, 3);     // f_i, f_i(root) = 0
    if (eval(below, root).is_zero()) continue;
    if (!gcd(mid, below).is_constant()) continue;
    // extend upward a random number of levels
    std::vector<Polynomial> rising{below, mid};
    const int levels = static_cast<int>(rng.integer(1, 3));
    for (int t = 0; t < levels; ++t) {
      const Polynomial d = rng.polynomial(static_cast<int>(rng.integer(1, 2)), 4, 3);
      rising.push_back(d * rising.back() - rising[rising.size() - 2]);
    }
    const SturmChain c = build_chain(rising.back(), rising[rising.size() - 2]);
    // locate the constructed zero level inside the rebuilt chain
    const int idx = static_cast<int>(rising.size()) - 2;  // position of `mid` from the top
    REQUIRE(c.chain[idx] == mid);
    REQUIRE(1 <= idx);
    REQUIRE(idx <= c.m() - 1);
    if (eval(c.chain.back(), root).is_zero()) continue;
    const Rational product = eval(c.chain[idx - 1], root) * eval(c.chain[idx + 1], root);
    REQUIRE(sign(product) == -1);
  }
}

TEST_CASE("variation is invariant under refinement away from common roots") {
  st::Rng rng(206);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    auto [f0, g0] = rng.chain_pair(4, 5, 3);
    const Polynomial d = rng.polynomial(static_cast<int>(rng.integer(1, 2)), 5, 3);
    const Polynomial f = f0 * d, g = g0 * d;
    const SturmChain c = build_chain(f, g);
    const sturmint::RefinedChain r = refine(c);
    for (int t = 0; t < 5; ++t) {
      const Rational a = rng.rational();
      if (eval(c.chain.back(), a).is_zero()) continue;
      std::vector<Rational> refined_values;
      for (const auto& p : r.chain) refined_values.push_back(eval(p, a));
      CHECK(variation_at(c, a) == sturmint::sign_variation(refined_values));
      ++checked;
    }
  }
  REQUIRE(checked > 200);
}
