#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace decgroup;
using namespace testsupport;

TEST(MonomialOrder, LexMakesFirstVariableMostSignificant) {
  const MonomialOrder lex(OrderKind::lex, 3);
  EXPECT_TRUE(lex.less(Monomial({0, 5, 5}), Monomial({1, 0, 0})));
  EXPECT_TRUE(lex.less(Monomial({1, 0, 1}), Monomial({1, 1, 0})));
}

TEST(MonomialOrder, DegrevlexBreaksTiesOnLastVariable) {
  const MonomialOrder drl(OrderKind::degrevlex, 3);
  EXPECT_TRUE(drl.less(Monomial({1, 0, 0}), Monomial({0, 0, 2})));
  // x1*x3 < x2^2: smaller power of the last variable wins.
  EXPECT_TRUE(drl.less(Monomial({1, 0, 1}), Monomial({0, 2, 0})));
  const MonomialOrder grlex(OrderKind::grlex, 3);
  EXPECT_TRUE(grlex.less(Monomial({0, 2, 0}), Monomial({1, 0, 1})));
}

TEST(MonomialOrder, RandomTriplesAreConsistent) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<unsigned> e(0, 3);
  for (auto kind : {OrderKind::lex, OrderKind::grlex, OrderKind::degrevlex}) {
    const MonomialOrder ord(kind, 3);
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a({e(rng), e(rng), e(rng)}), b({e(rng), e(rng), e(rng)}), c({e(rng), e(rng), e(rng)});
      EXPECT_EQ(ord.compare(a, b), -ord.compare(b, a));
      if (ord.less(a, b)) {
        EXPECT_TRUE(ord.less(a * c, b * c));
      }
      EXPECT_FALSE(ord.less(a, Monomial(3)));
    }
  }
}

TEST(Parse, ReadsDeclaredVariablesAndPolynomials) {
  const auto sys = parse_system("vars: x1 x2\nx1*x2 - 1");
  EXPECT_EQ(sys.ring->names(), (std::vector<std::string>{"x1", "x2"}));
  ASSERT_EQ(sys.polys.size(), 1u);
  EXPECT_EQ(format_poly(sys.polys[0]), "x1*x2 - 1");
}

TEST(Parse, ExpandsProducts) {
  const auto sys = parse_system("vars: x1 x2 x3 x4\nx3*(x3+1)");
  const auto r = sys.ring;
  EXPECT_EQ(sys.polys[0], poly("x3^2 + x3", r));
}

TEST(Parse, SkipsCommentsAndBlankLines) {
  const auto sys = parse_system("# header\nvars: a b\n\n# note\na - 1/2*b\n  \nb^3\n");
  ASSERT_EQ(sys.polys.size(), 2u);
  EXPECT_EQ(format_poly(sys.polys[0]), "a - 1/2*b");
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(parse_system("vars: x\nx^^2"), ParseError);
  EXPECT_THROW(parse_system("vars: x y\n2x"), ParseError);
  EXPECT_THROW(parse_system("vars: x\nx/(x+1)"), ParseError);
  EXPECT_THROW(parse_system("vars: x\ny + 1"), ParseError);
  EXPECT_THROW(parse_system("x + 1"), ParseError);
}

TEST(Parse, ReportsLineAndColumn) {
  try {
    parse_system("vars: x y\nx + y\nx + z\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(Parse, AllowsDivisionByConstants) {
  const auto r = x_ring(1);
  EXPECT_EQ(poly("(x1 + 1)/2", r), poly("1/2*x1 + 1/2", r));
  EXPECT_THROW(poly("x1/0", r), std::exception);
}

TEST(Format, RoundTripsRandomPolynomials) {
  std::mt19937 rng(3);
  const auto r = x_ring(3, OrderKind::lex);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_polynomial(r, rng, 5, 3) * Rational(1, 1 + trial % 4);
    EXPECT_EQ(parse_polynomial(format_poly(f), r), f) << format_poly(f);
  }
}

TEST(Arithmetic, BasicIdentities) {
  const auto r = x_ring(2);
  const auto x1 = Polynomial::variable(r, 0), x2 = Polynomial::variable(r, 1);
  EXPECT_TRUE((x1 + -x1).is_zero());
  EXPECT_EQ((x1 + x2) * (x1 - x2), poly("x1^2 - x2^2", r));
  EXPECT_EQ((x1 + x2).pow(3), poly("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", r));
  EXPECT_EQ(x1 * Rational(0), Polynomial(r));
}

TEST(Arithmetic, ExpandsFactoredBlockPolynomial) {
  const auto r = symbolic_ring(3);
  const Polynomial left = product({"lambda + t2", "lambda + t2 + t3"}, r);
  const Polynomial right = product({"lambda + t1", "lambda + t3 + t1"}, r);
  const Polynomial f = left * right;
  EXPECT_EQ(f.degree_in(3), 4u);
  EXPECT_EQ(f.total_degree(), 4u);
  // Value at t = (1, 2, 3), lambda = 1: (3)(6)(2)(5).
  EXPECT_EQ(evaluate(f, {1, 2, 3, 1}), Rational(180));
}

TEST(Arithmetic, RejectsMixedRings) {
  const auto a = Polynomial::variable(x_ring(2), 0);
  const auto b = Polynomial::variable(x_ring(3), 0);
  EXPECT_THROW(a + b, ArityMismatch);
  EXPECT_THROW(a * b, ArityMismatch);
}

TEST(Arithmetic, TermsStaySortedAndNonZero) {
  std::mt19937 rng(5);
  const auto r = x_ring(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_polynomial(r, rng), g = random_polynomial(r, rng);
    EXPECT_NO_THROW((f * g).audit());
    EXPECT_NO_THROW((f - g).audit());
    EXPECT_NO_THROW((f + g * Rational(-1)).audit());
  }
}

TEST(Permute, MatchesKnownTriangularImage) {
  const auto sys = parse_system("vars: x1 x2 x3 x4 x5\nx1+1\nx2+1\n1+x3\n1-3*x4+x4^2\n-3+x4+x5\n");
  const auto image = apply_perm_polys(Permutation::parse_cycles("(1 4)", 5), sys.polys);
  const auto r = sys.ring;
  const std::vector<Polynomial> expected{poly("x4+1", r), poly("x2+1", r), poly("1+x3", r),
                                         poly("1-3*x1+x1^2", r), poly("-3+x1+x5", r)};
  EXPECT_EQ(image, expected);
}

TEST(Permute, IdentityAndSymmetricMonomial) {
  const auto r = x_ring(2);
  const auto f = poly("x1*x2", r);
  EXPECT_EQ(apply_perm(Permutation::identity(2), poly("x1^2 - 7*x2", r)), poly("x1^2 - 7*x2", r));
  EXPECT_EQ(apply_perm(Permutation::parse_cycles("(1 2)", 2), f), f);
}

TEST(Permute, IsARingHomomorphismAndComposes) {
  std::mt19937 rng(7);
  const auto r = x_ring(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_polynomial(r, rng), g = random_polynomial(r, rng);
    const auto s = random_permutation(4, rng), t = random_permutation(4, rng);
    EXPECT_EQ(apply_perm(s, f * g), apply_perm(s, f) * apply_perm(s, g));
    EXPECT_EQ(apply_perm(s, f + g), apply_perm(s, f) + apply_perm(s, g));
    EXPECT_EQ(apply_perm(s * t, f), apply_perm(s, apply_perm(t, f)));
    EXPECT_EQ(apply_perm(s, f).total_degree(), f.total_degree());
    EXPECT_EQ(apply_perm(s, f).size(), f.size());
  }
}

TEST(Evaluate, AtZerosOfTheWorkedExample) {
  const auto r = x_ring(4);
  EXPECT_EQ(evaluate(poly("x1*x2", r), {0, -1, 0, 1}), 0);
  EXPECT_EQ(evaluate(poly("x1+x2+1", r), {-1, 0, 0, 1}), 0);
  EXPECT_EQ(evaluate(Polynomial::constant(r, 5), {7, 7, 7, 7}), 5);
  EXPECT_THROW(evaluate(poly("x1", r), {1, 2}), ArityMismatch);
}

TEST(Univariate, SquarefreeAndGcd) {
  const auto& L = lambda_ring();
  EXPECT_EQ(squarefree_part(poly("lambda^4 + 2*lambda^3 + lambda^2", L)), poly("lambda^2 + lambda", L));
  EXPECT_EQ(squarefree_part(poly("lambda^2 - 3*lambda + 2", L)), poly("lambda^2 - 3*lambda + 2", L));
  const auto x = make_ring({"x"});
  EXPECT_EQ(univariate_gcd(poly("x^2 - 1", x), poly("x - 1", x)), poly("x - 1", x));
  EXPECT_EQ(derivative(poly("x^3 - 2*x + 5", x)), poly("3*x^2 - 2", x));
  EXPECT_THROW(squarefree_part(poly("x1*x2", x_ring(2))), std::exception);
}

TEST(Univariate, GcdDividesBothInputs) {
  std::mt19937 rng(13);
  const auto x = make_ring({"x"});
  for (int trial = 0; trial < 40; ++trial) {
    const auto common = random_polynomial(x, rng, 2, 2);
    const auto a = common * random_polynomial(x, rng, 3, 3);
    const auto b = common * random_polynomial(x, rng, 3, 3);
    if (a.is_zero() || b.is_zero()) continue;
    const auto g = univariate_gcd(a, b);
    EXPECT_TRUE(divide(a, g).remainder.is_zero());
    EXPECT_TRUE(divide(b, g).remainder.is_zero());
    if (!common.is_zero() && !common.is_constant()) {
      EXPECT_TRUE(divide(g, common.monic()).remainder.is_zero());
    }
  }
}

TEST(PrimitivePart, ClearsDenominatorsAndSign) {
  const auto r = x_ring(2);
  EXPECT_EQ(primitive_part(poly("-1/2*x1 + 3/4*x2", r)), poly("2*x1 - 3*x2", r));
  EXPECT_EQ(primitive_part(poly("6*x1 + 9", r)), poly("2*x1 + 3", r));
}

TEST(Points, ParsesAndValidatesRows) {
  const auto ps = parse_points("vars: a b\n1 2\n-1/2 3\n");
  ASSERT_EQ(ps.points.size(), 2u);
  EXPECT_EQ(ps.points[1][0], Rational(-1, 2));
  EXPECT_THROW(parse_points("vars: a b\n1 2 3\n"), std::exception);
  EXPECT_THROW(parse_points("vars: a\n1/0\n"), std::exception);
}
