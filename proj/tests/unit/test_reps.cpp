#include <doctest.h>

#include "qclifford/errors.hpp"
#include "qclifford/forms.hpp"
#include "qclifford/reps.hpp"
#include "qclifford/text.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qcl;

namespace {

Matrix block_form(const Scalar& n11, const Scalar& n12, const Scalar& n21, const Scalar& n22) {
  return Matrix::from_rows({{1, 0, n11, n12}, {0, -1, n21, n22}, {0, 0, 1, 0}, {0, 0, 0, -1}});
}

// Dimension of Cl f from the oracle: rank of the right-multiplication image.
std::size_t ideal_rank(const Algebra& alg, const Multivector& f) {
  Matrix m(alg.basis_size(), alg.basis_size());
  for (std::uint32_t b = 0; b < alg.basis_size(); ++b) {
    const auto col = alg.product(alg.blade(Blade(b)), f).dense();
    for (std::size_t r = 0; r < col.size(); ++r) m(r, b) = col[r];
  }
  return oracle::rank_of(m);
}

void check_certificate(const Algebra& alg, const Multivector& f, const SplitResult& r) {
  REQUIRE(r.f1.has_value());
  REQUIRE(r.f2.has_value());
  CHECK(alg.product(*r.f1, *r.f1) == *r.f1);
  CHECK(alg.product(*r.f2, *r.f2) == *r.f2);
  CHECK(alg.product(*r.f1, *r.f2).is_zero());
  CHECK(alg.product(*r.f2, *r.f1).is_zero());
  CHECK(*r.f1 + *r.f2 == f);
  CHECK(ideal_rank(alg, *r.f1) + ideal_rank(alg, *r.f2) == ideal_rank(alg, f));
}

}  // namespace

TEST_SUITE("reps") {
  TEST_CASE("idempotents of Cl_{1,1}") {
    const Algebra alg(split_form(testing::signature_matrix(1, 1)));
    for (const char* text : {"1/2 + 1/2*e1", "1/2 + 1/2*e1^e2", "1/2 + 2/5*e1 + 3/10*e1^e2"}) {
      const Multivector f = alg.parse(text);
      CHECK(is_idempotent(alg, f));
      const IdealBasis ideal = left_ideal(alg, f);
      CHECK(ideal.dimension() == 2);
      CHECK(ideal.dimension() == ideal_rank(alg, f));
      for (const auto& b : ideal.basis) CHECK(alg.product(b, f) == b);
      const CornerBasis corner = peirce_corner(alg, f);
      CHECK(corner.primitive());
      CHECK(corner_split_search(alg, f).outcome == SplitOutcome::Primitive);
    }
    CHECK_FALSE(is_idempotent(alg, alg.parse("e1")));
    CHECK_THROWS_AS(left_ideal(alg, alg.parse("e1")), NotIdempotentError);
    CHECK_THROWS_AS(peirce_corner(alg, alg.parse("2")), NotIdempotentError);
    CHECK_THROWS_AS(corner_split_search(alg, alg.parse("e1")), NotIdempotentError);
  }

  TEST_CASE("corner elements are fixed by f on both sides") {
    const Algebra alg(split_form(testing::signature_matrix(2, 2)));
    const Multivector f = alg.parse("1/2 + 1/2*e1");
    const CornerBasis corner = peirce_corner(alg, f);
    CHECK(corner.dimension() == 4);
    for (const auto& b : corner.basis) CHECK(alg.product({f, b, f}) == b);
    CHECK(left_ideal(alg, f).dimension() == 8);
  }

  TEST_CASE("unit of Cl_{1,1} splits into two primitive pieces") {
    const Algebra alg(split_form(testing::signature_matrix(1, 1)));
    const SplitResult r = corner_split_search(alg, alg.one());
    CHECK(r.outcome == SplitOutcome::Split);
    CHECK(r.corner_dimension == 4);
    check_certificate(alg, alg.one(), r);
    CHECK(poly::degree(r.factor) >= 1);
  }

  TEST_CASE("primitive decomposition of small split algebras") {
    struct Case {
      int p, q;
      std::size_t pieces;
    };
    // Cl_{1,1} = M_2, Cl_{2,1} = M_2 + M_2, Cl_{2,2} = M_4, Cl_{3,3} = M_8 over Q.
    for (const Case c : {Case{1, 1, 2}, Case{2, 1, 4}, Case{2, 2, 4}, Case{3, 3, 8}}) {
      CAPTURE(c.p);
      CAPTURE(c.q);
      const Algebra alg(split_form(testing::signature_matrix(c.p, c.q)));
      const PrimitiveDecomposition d = primitive_decomposition(alg, alg.one());
      CHECK(d.certified);
      CHECK(d.pieces.size() == c.pieces);
      Multivector sum = alg.zero();
      std::size_t total = 0;
      for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        sum += d.pieces[i];
        total += left_ideal(alg, d.pieces[i]).dimension();
        CHECK(peirce_corner(alg, d.pieces[i]).primitive());
        for (std::size_t j = 0; j < d.pieces.size(); ++j)
          if (i != j) CHECK(alg.product(d.pieces[i], d.pieces[j]).is_zero());
      }
      CHECK(sum == alg.one());
      CHECK(total == alg.basis_size());
    }
  }

  TEST_CASE("division algebra corners do not split") {
    // Cl_{0,2} is the quaternion algebra: its only idempotents are 0 and 1,
    // yet the corner of 1 is 4-dimensional.
    const Algebra alg(split_form(testing::signature_matrix(0, 2)));
    const SplitResult r = corner_split_search(alg, alg.one());
    CHECK(r.outcome == SplitOutcome::NoSplitFound);
    CHECK(r.corner_dimension == 4);
    CHECK_FALSE(r.real_split_only);
  }

  TEST_CASE("deformed block form: rational and real-only splits") {
    SUBCASE("n11 = 6/5 splits over Q") {
      const Algebra alg(split_form(block_form(Scalar(6, 5), 0, 0, 0)));
      const Multivector f = alg.parse("1/2 + 2/5*e1 + 3/10*e1^e2");
      REQUIRE(is_idempotent(alg, f));
      CHECK(left_ideal(alg, f).dimension() == 8);
      const SplitResult r = corner_split_search(alg, f);
      CHECK(r.outcome == SplitOutcome::Split);
      check_certificate(alg, f, r);
      CHECK(left_ideal(alg, *r.f1).dimension() == 4);
      CHECK(left_ideal(alg, *r.f2).dimension() == 4);
    }
    SUBCASE("n11 = 1 splits over R only") {
      const Algebra alg(split_form(block_form(1, 0, 0, 0)));
      const Multivector f = alg.parse("1/2 + 2/5*e1 + 3/10*e1^e2");
      REQUIRE(is_idempotent(alg, f));
      CHECK(left_ideal(alg, f).dimension() == 8);
      CHECK(peirce_corner(alg, f).dimension() == 4);
      const SplitResult r = corner_split_search(alg, f);
      CHECK(r.outcome == SplitOutcome::NoSplitFound);
      CHECK(r.real_split_only);
      REQUIRE(r.real_witness.has_value());
      // The witness lies in the corner and its minimal polynomial annihilates it.
      CHECK(alg.product({f, *r.real_witness, f}) == *r.real_witness);
      Multivector value = alg.zero(), power = f;
      for (const auto& c : r.real_witness_polynomial) {
        value += c * power;
        power = alg.product(power, *r.real_witness);
      }
      CHECK(value.is_zero());
    }
  }

  TEST_CASE("ideal dimension is invariant under conjugation") {
    testing::Gen gen(72);
    for (int trial = 0; trial < 20; ++trial) {
      const int p = gen.integer(1, 2), q = gen.integer(1, 2);
      const Algebra alg(split_form(testing::signature_matrix(p, q)));
      const PrimitiveDecomposition d = primitive_decomposition(alg, alg.one());
      const Multivector f = d.pieces.front();
      const Multivector u = gen.multivector(alg.context()).even_part() + alg.one() * Scalar(gen.integer(3, 5));
      const auto inv = alg.inverse(u);
      if (!inv) continue;
      const Multivector conj = alg.product({u, f, *inv});
      REQUIRE(is_idempotent(alg, conj));
      CHECK(left_ideal(alg, conj).dimension() == left_ideal(alg, f).dimension());
      CHECK(ideal_rank(alg, conj) == ideal_rank(alg, f));
    }
  }

  TEST_CASE("undeformed Cl_{2,2} partitions as 4 + 4 + 8") {
    const Algebra alg(split_form(block_form(0, 0, 0, 0)));
    CHECK(rank(alg.regular_representation(alg.one())) == 16);
    // The idempotent only involves e1, e2, so it is f_11 (x) 1 with ideal 2 * 4.
    const Multivector f = alg.parse("1/2 + 2/5*e1 + 3/10*e1^e2");
    const Multivector rest = alg.one() - f;
    CHECK(left_ideal(alg, f).dimension() == 8);
    const SplitResult r = corner_split_search(alg, rest);
    REQUIRE(r.outcome == SplitOutcome::Split);
    check_certificate(alg, rest, r);
    const std::size_t a = left_ideal(alg, *r.f1).dimension(), b = left_ideal(alg, *r.f2).dimension();
    CHECK(a == 4);
    CHECK(b == 4);
    CHECK(a + b + left_ideal(alg, f).dimension() == 16);
  }

  TEST_CASE("search is deterministic for a fixed seed") {
    const Algebra alg(split_form(testing::signature_matrix(2, 2)));
    SplitOptions options;
    options.seed = 7;
    const SplitResult a = corner_split_search(alg, alg.one(), options);
    const SplitResult b = corner_split_search(alg, alg.one(), options);
    CHECK(a.transcript == b.transcript);
    REQUIRE(a.f1.has_value());
    CHECK(*a.f1 == *b.f1);
  }
}

TEST_SUITE("poly") {
  using poly::Poly;

  TEST_CASE("division, gcd and derivative") {
    // (t - 1)(t + 2) = t^2 + t - 2.
    const Poly p{-2, 1, 1};
    const Poly q{-1, 1};
    Poly quot, rem;
    poly::divmod(p, q, quot, rem);
    CHECK(quot == Poly{2, 1});
    CHECK(poly::degree(rem) == -1);
    CHECK(poly::monic_gcd(p, poly::multiply(q, Poly{3, 1})) == q);
    CHECK(poly::derivative(p) == Poly{1, 2});
    CHECK(poly::evaluate(p, Scalar(1)) == Scalar(0));
    CHECK(poly::to_text(p) == "t^2 + t - 2");
    CHECK(poly::to_text(Poly{Scalar(-3, 4), 0, 1}) == "t^2 - 3/4");
  }

  TEST_CASE("division identity on random polynomials") {
    testing::Gen gen(71);
    for (int trial = 0; trial < 100; ++trial) {
      Poly a(gen.integer(1, 6)), b(gen.integer(1, 4));
      for (auto& c : a) c = gen.rational();
      for (auto& c : b) c = gen.rational();
      b.back() = Scalar(gen.integer(1, 3));
      Poly q, r;
      poly::divmod(a, b, q, r);
      Poly back = poly::multiply(q, b);
      back.resize(std::max(back.size(), r.size()));
      for (std::size_t i = 0; i < r.size(); ++i) back[i] += r[i];
      poly::trim(back);
      Poly a_trim = a;
      poly::trim(a_trim);
      CHECK(back == a_trim);
      CHECK(poly::degree(r) < poly::degree(b));
    }
  }

  TEST_CASE("rationalize") {
    CHECK(rationalize(0.75, 100) == mpq_class(3, 4));
    CHECK(rationalize(-1.0 / 3.0, 1000) == mpq_class(-1, 3));
    CHECK(rationalize(3.14159265358979, 10) == mpq_class(22, 7));
  }
}
