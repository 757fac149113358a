#include <doctest.h>

#include "qclifford/errors.hpp"
#include "qclifford/exterior.hpp"
#include "qclifford/forms.hpp"
#include "qclifford/text.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qcl;

TEST_SUITE("clifford") {
  TEST_CASE("generator map matches the operator oracle") {
    testing::Gen gen(41);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = gen.integer(1, 6);
      const auto ctx = split_form(gen.form(n));
      const Algebra alg(ctx);
      const Multivector u = gen.multivector(ctx);
      const int i = gen.integer(1, n);
      const auto expected = oracle::clifford_generator(ctx->bilinear(), i).apply(u.dense());
      CHECK(alg.apply_generator(i, u) == Multivector::from_dense(ctx, expected));
    }
  }

  TEST_CASE("product matches the Chevalley oracle") {
    testing::Gen gen(42);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = gen.integer(1, 5);
      const auto ctx = split_form(gen.form(n));
      const Algebra alg(ctx);
      const oracle::CliffordOracle ref(ctx->bilinear());
      const Multivector u = gen.multivector(ctx), v = gen.multivector(ctx);
      CHECK(alg.product(u, v) == Multivector::from_dense(ctx, ref.product(u.dense(), v.dense())));
    }
  }

  TEST_CASE("square law and anticommutator") {
    testing::Gen gen(43);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = gen.integer(1, 6);
      const auto ctx = split_form(gen.form(n));
      const Algebra alg(ctx);
      const auto xc = gen.coords(n), yc = gen.coords(n);
      const Multivector x = Multivector::vector(ctx, xc), y = Multivector::vector(ctx, yc);
      CHECK(alg.product(x, x) == alg.one() * quadratic(*ctx, xc));
      CHECK(alg.anticommutator(x, y) == alg.one() * (Scalar(2) * evaluate_form(x, y, FormPart::Symmetric)));
      // x y = x _|B y + x ^ y for vectors.
      CHECK(alg.product(x, y) == alg.one() * evaluate_form(x, y) + wedge(x, y));
    }
  }

  TEST_CASE("product is associative and unital") {
    testing::Gen gen(44);
    for (int trial = 0; trial < 40; ++trial) {
      const auto ctx = split_form(gen.form(gen.integer(1, 5)));
      const Algebra alg(ctx);
      const Multivector u = gen.multivector(ctx), v = gen.multivector(ctx), w = gen.multivector(ctx);
      CHECK(alg.product(alg.product(u, v), w) == alg.product(u, alg.product(v, w)));
      CHECK(alg.product(alg.one(), u) == u);
      CHECK(alg.product(u, alg.one()) == u);
      CHECK(alg.product({u, v, w}) == alg.product(alg.product(u, v), w));
    }
  }

  TEST_CASE("product table agrees with the monomial route") {
    testing::Gen gen(45);
    for (int trial = 0; trial < 30; ++trial) {
      const auto ctx = split_form(gen.form(gen.integer(1, 5)));
      const Algebra alg(ctx);
      const Multivector u = gen.multivector(ctx), v = gen.multivector(ctx);
      CHECK(alg.table().multiply(u, v) == alg.product(u, v));
    }
  }

  TEST_CASE("product table refuses large dimensions") {
    const Algebra alg(split_form(Matrix::identity(9)));
    CHECK_THROWS_AS(alg.table(), DimensionLimitError);
    // The monomial route still works there.
    CHECK(alg.product(alg.e(9), alg.e(9)) == alg.one());
  }

  TEST_CASE("monomial coordinates invert") {
    testing::Gen gen(46);
    for (int trial = 0; trial < 40; ++trial) {
      const auto ctx = split_form(gen.form(gen.integer(1, 6)));
      const Algebra alg(ctx);
      const Multivector u = gen.multivector(ctx);
      CHECK(alg.from_monomial_coordinates(alg.to_monomial_coordinates(u)) == u);
      CHECK(alg.monomials().monomial_to_wedge() * alg.monomials().wedge_to_monomial() ==
            Matrix::identity(alg.basis_size()));
    }
  }

  TEST_CASE("monomials are unitriangular in grade") {
    testing::Gen gen(47);
    const auto ctx = split_form(gen.form(5));
    const Algebra alg(ctx);
    for (std::uint32_t b = 0; b < alg.basis_size(); ++b) {
      const Multivector& m = alg.monomials().monomial_in_wedge(Blade(b));
      CHECK(m.coefficient(Blade(b)) == Scalar(1));
      for (const auto& [blade, c] : m.terms())
        if (blade != Blade(b)) CHECK(blade.grade() < Blade(b).grade());
    }
  }

  TEST_CASE("words, powers and inverses") {
    const Algebra alg(split_form(Matrix::from_rows({{1, 1}, {0, -1}})));
    // e1 e2 = B_12 + e1^e2.
    CHECK(alg.word({1, 2}) == alg.parse("1 + e1^e2"));
    CHECK(alg.word({2, 1}) == alg.parse("-e1^e2"));
    CHECK(alg.power(alg.e(1), 2) == alg.one());
    CHECK(alg.power(alg.e(1), 0) == alg.one());
    const auto inv = alg.inverse(alg.parse("2 + e1"));
    REQUIRE(inv.has_value());
    CHECK(alg.product(*inv, alg.parse("2 + e1")) == alg.one());
    // 1 + e1 is a zero divisor since e1^2 = 1.
    CHECK_FALSE(alg.inverse(alg.parse("1 + e1")).has_value());
  }

  TEST_CASE("regular representation is multiplicative") {
    testing::Gen gen(48);
    const auto ctx = split_form(gen.form(3));
    const Algebra alg(ctx);
    const Multivector u = gen.multivector(ctx), v = gen.multivector(ctx);
    CHECK(alg.regular_representation(alg.product(u, v)) ==
          alg.regular_representation(u) * alg.regular_representation(v));
    CHECK(rank(alg.regular_representation(alg.one())) == alg.basis_size());
  }

  TEST_CASE("generator relations report the first violation") {
    const Algebra alg(split_form(testing::signature_matrix(1, 2)));
    std::vector<Multivector> gens{alg.e(1), alg.e(2), alg.e(3)};
    CHECK(alg.verify_generator_relations(gens, testing::signature_matrix(1, 2)).pass);
    const auto report = alg.verify_generator_relations(gens, testing::signature_matrix(2, 1));
    CHECK_FALSE(report.pass);
    REQUIRE(report.first_violation.has_value());
    CHECK(*report.first_violation == std::pair<int, int>{2, 2});
  }
}
