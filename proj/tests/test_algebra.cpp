#include <gtest/gtest.h>

#include "evolalg/algebra.hpp"
#include "fixtures.hpp"
#include "test_support.hpp"

using namespace evolalg;

namespace {

Element el(Vec v) { return Element(std::move(v)); }

}  // namespace

TEST(Algebra, RejectsInvalidConstruction) {
  EXPECT_THROW(EvolutionAlgebra(Mat(2, 3)), DimensionError);
  EXPECT_THROW(EvolutionAlgebra(Mat(2, 2), {"a"}), DimensionError);
  EXPECT_THROW(EvolutionAlgebra(Mat(2, 2), {"a", "a"}), std::invalid_argument);
  EXPECT_EQ(EvolutionAlgebra(Mat(3, 3)).labels(), (std::vector<std::string>{"e1", "e2", "e3"}));
}

TEST(Algebra, Multiply) {
  const auto a = fixtures::complete_pair();
  EXPECT_TRUE(multiply(a, Element::basis(2, 0), Element::basis(2, 1)).is_zero());
  const Element s = el({1, 1});
  EXPECT_TRUE(multiply(a, s, s).is_zero());
  const auto b = fixtures::prime_not_perfect();
  EXPECT_EQ(multiply(b, Element::basis(2, 1), Element::basis(2, 1)), el({1, 0}));
  EXPECT_THROW(multiply(a, el({1}), el({1, 1})), DimensionError);
}

TEST(Algebra, LeftMultiplicationMatrix) {
  EXPECT_EQ(left_mult_matrix(fixtures::complete_pair(), el({1, 1})), (Mat{{1, -1}, {1, -1}}));
  EXPECT_TRUE(left_mult_matrix(fixtures::degenerate_4d(), Element::zero(4)).is_zero());
  const Mat n = left_mult_matrix(fixtures::degenerate_4d(), Element::basis(4, 3));
  EXPECT_EQ(n, (Mat{{0, 0, 0, -1}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  EXPECT_TRUE((n * n).is_zero());
}

TEST(Algebra, Support) {
  EXPECT_EQ(support(el({1, 0, 2})), (VertexSet{0, 2}));
  EXPECT_TRUE(support(Element::zero(3)).empty());
  EXPECT_EQ(support(Element::basis(3, 1)), VertexSet{1});
}

TEST(Algebra, AnnihilatorAndPerfection) {
  EXPECT_EQ(annihilator(fixtures::loop_and_sink()), Subspace::span(2, {{0, 1}}));
  EXPECT_TRUE(annihilator(fixtures::complete_pair()).is_zero());
  EXPECT_EQ(annihilator(EvolutionAlgebra(Mat(3, 3))), Subspace::full(3));
  EXPECT_FALSE(is_perfect(fixtures::complete_pair()));
  EXPECT_FALSE(is_perfect(fixtures::prime_not_perfect()));
  EXPECT_FALSE(is_perfect(fixtures::bipartite_4d()));
  EXPECT_TRUE(is_perfect(fixtures::two_loops()));
}

TEST(Algebra, IdealGeneratedBy) {
  EXPECT_EQ(ideal_generated_by(fixtures::complete_pair(), el({1, 1})), Subspace::span(2, {{1, 1}}));
  EXPECT_EQ(ideal_generated_by(fixtures::prime_not_perfect(), el({1, 0})), Subspace::span(2, {{1, 0}}));
  EXPECT_TRUE(ideal_generated_by(fixtures::complete_pair(), Element::zero(2)).is_zero());
  // e3 reaches everything in this algebra.
  EXPECT_EQ(ideal_generated_by(fixtures::non_prime_5d(), Element::basis(5, 2)), Subspace::full(5));
}

TEST(Algebra, BasicIdealsAndQuotients) {
  const auto a = fixtures::non_prime_5d();
  const auto i = basic_ideal(a, std::vector<std::size_t>{4, 3});
  EXPECT_EQ(i.vertices, (VertexSet{3, 4}));
  EXPECT_EQ(i.space, Subspace::span(5, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  EXPECT_TRUE(is_ideal(a, i.space));
  EXPECT_TRUE(basic_ideal(a, std::vector<std::size_t>{}).space.is_zero());
  EXPECT_EQ(basic_ideal(a, std::vector<std::size_t>{0, 1, 2, 3, 4}).space, Subspace::full(5));
  EXPECT_THROW(basic_ideal(a, std::vector<std::size_t>{2}), std::invalid_argument);

  const auto q = quotient_by_basic(a, std::vector<std::size_t>{3, 4});
  EXPECT_EQ(q.structure(), (Mat{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(q.labels(), (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(quotient_by_basic(a, std::vector<std::size_t>{}), a);
  EXPECT_EQ(quotient_by_basic(a, std::vector<std::size_t>{0, 1, 2, 3, 4}).dim(), 0u);
  EXPECT_THROW(quotient_by_basic(a, std::vector<std::size_t>{2}), std::invalid_argument);
}

TEST(Algebra, AnnihilatorSeries) {
  const auto s = ann_series(fixtures::sink_layers_8d());
  ASSERT_EQ(s.asi, 4u);
  EXPECT_EQ(s.terms[0], Subspace::axes(8, std::vector<std::size_t>{6, 7}));
  EXPECT_EQ(s.terms[1], Subspace::axes(8, std::vector<std::size_t>{3, 6, 7}));
  EXPECT_EQ(s.terms[2], Subspace::axes(8, std::vector<std::size_t>{3, 5, 6, 7}));
  EXPECT_EQ(s.terms[3], Subspace::axes(8, std::vector<std::size_t>{3, 4, 5, 6, 7}));

  const auto sinkless = ann_series(fixtures::complete_pair());
  EXPECT_EQ(sinkless.asi, 1u);
  EXPECT_TRUE(sinkless.terms[0].is_zero());

  const auto zero = ann_series(EvolutionAlgebra(Mat(3, 3)));
  EXPECT_EQ(zero.asi, 1u);
  EXPECT_EQ(zero.terms[0], Subspace::full(3));
}

// --- seeded properties ---------------------------------------------------

TEST(AlgebraProperty, MultiplicationIsCommutativeAndBilinear) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % 6;
    const EvolutionAlgebra a(testing_support::random_mat(rng, n, n, 0.5));
    const Element x(testing_support::random_vec(rng, n));
    const Element y(testing_support::random_vec(rng, n));
    const Element z(testing_support::random_vec(rng, n));
    EXPECT_EQ(multiply(a, x, y), multiply(a, y, x)) << "seed " << seed;
    EXPECT_EQ(multiply(a, x + z, y), multiply(a, x, y) + multiply(a, z, y)) << "seed " << seed;
    EXPECT_EQ(left_mult_matrix(a, x) * y.coords(), multiply(a, x, y).coords()) << "seed " << seed;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) EXPECT_TRUE(multiply(a, Element::basis(n, i), Element::basis(n, j)).is_zero());
  }
}

TEST(AlgebraProperty, GeneratedIdealsAreClosed) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % 6;
    const EvolutionAlgebra a(testing_support::random_mat(rng, n, n, 0.4));
    const Element x(testing_support::random_vec(rng, n, 0.5));
    const Subspace ideal = ideal_generated_by(a, x);
    EXPECT_TRUE(ideal.contains(x.coords())) << "seed " << seed;
    for (const auto& v : ideal.basis_vectors())
      for (std::size_t i = 0; i < n; ++i)
        EXPECT_TRUE(ideal.contains(multiply(a, v, Element::basis(n, i).coords()))) << "seed " << seed;
  }
}

TEST(AlgebraProperty, QuotientGraphIsGraphQuotient) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % 6;
    const EvolutionAlgebra a(testing_support::random_mat(rng, n, n, 0.4));
    const auto g = from_algebra(a);
    const auto h = reach(g, std::vector<std::size_t>{rng() % n});
    EXPECT_EQ(from_algebra(quotient_by_basic(a, h)), quotient(g, h)) << "seed " << seed;
  }
}

TEST(AlgebraProperty, AnnihilatorSeriesFollowsSinkStrata) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % 7;
    const EvolutionAlgebra a(testing_support::random_mat(rng, n, n, 0.25));
    const auto series = ann_series(a);
    const auto strata = sink_strata(from_algebra(a));
    VertexSet layers;
    for (std::size_t k = 0; k < series.terms.size(); ++k) {
      if (k > 0) EXPECT_TRUE(series.terms[k].contains(series.terms[k - 1])) << "seed " << seed;
      if (k < strata.strata.size()) layers.insert(layers.end(), strata.strata[k].begin(), strata.strata[k].end());
      EXPECT_EQ(series.terms[k], Subspace::axes(n, layers)) << "seed " << seed;
    }
    EXPECT_EQ(series.asi, std::max<std::size_t>(1, strata.strata.size())) << "seed " << seed;
  }
}
