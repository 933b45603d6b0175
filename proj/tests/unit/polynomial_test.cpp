#include <gtest/gtest.h>

#include <vector>

#include "schubert/errors.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {
namespace {

Polynomial x(int i) { return Polynomial::variable(3, i); }

TEST(Polynomial, Arithmetic) {
  const auto p = x(1) * x(1) + x(2) * mpq_class(3);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  const auto one = Polynomial::constant(3, 1);
  EXPECT_TRUE(one.is_constant());
  EXPECT_EQ(one.constant_term(), 1);
  EXPECT_EQ((x(1) + x(2)) * (x(1) - x(2)), x(1) * x(1) - x(2) * x(2));
  EXPECT_EQ(Polynomial::constant(3, 0), Polynomial(3));
}

TEST(Polynomial, Substitution) {
  const std::vector<int> images{-2, 1, 3};
  EXPECT_EQ(x(1).substitute(images), x(2) * mpq_class(-1));
  EXPECT_EQ((x(1) * x(2)).substitute(images), x(2) * x(1) * mpq_class(-1));
}

TEST(Polynomial, ExactDivision) {
  const std::vector<int> alpha{1, -1, 0};
  const auto f = (x(1) - x(2)) * (x(1) * x(3) + Polynomial::constant(3, mpq_class(1, 2)));
  EXPECT_EQ(f.divide_linear(alpha), x(1) * x(3) + Polynomial::constant(3, mpq_class(1, 2)));
  EXPECT_THROW(x(1).divide_linear(alpha), InvariantViolation);
  const std::vector<int> twice_last{0, 0, 2};
  EXPECT_EQ((x(3) * x(3)).divide_linear(twice_last), x(3) * mpq_class(1, 2));
}

TEST(Polynomial, Linear) {
  const std::vector<int> c{1, 0, -2};
  EXPECT_EQ(Polynomial::linear(c), x(1) - x(3) * mpq_class(2));
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(Polynomial(3).to_string(), "0");
  EXPECT_EQ(Polynomial::constant(3, mpq_class(-3, 4)).to_string(), "-3/4");
  EXPECT_FALSE((x(1) * x(1) * x(2)).to_string().empty());
}

}  // namespace
}  // namespace schubert
