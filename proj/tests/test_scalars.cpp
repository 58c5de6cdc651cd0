#include "pa/scalars.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pa;

TEST(Field, Examples) {
    EXPECT_EQ(FieldElement::from_int(2, 5).inv(), FieldElement::from_int(3, 5));
    auto a = FieldElement::parse("1/2", 0), b = FieldElement::parse("1/3", 0);
    EXPECT_EQ((a + b).str(), "5/6");
    for (const char* s : {"0", "7", "-3/4"}) {
        auto x = FieldElement::parse(s, 0);
        EXPECT_TRUE((FieldElement::from_int(0, 0) * x).is_zero());
    }
    EXPECT_TRUE((FieldElement::from_int(0, 7) * FieldElement::from_int(5, 7)).is_zero());
}

TEST(Field, Normalization) {
    auto x = FieldElement::parse("4/-6", 0);
    EXPECT_EQ(x.rational().get_den(), 3);
    EXPECT_EQ(x.rational().get_num(), -2);
    EXPECT_EQ(FieldElement::from_int(-1, 5).residue(), 4);
    EXPECT_EQ(FieldElement::from_int(12, 5).residue(), 2);
    // a/b over GF(p) means a * b^-1
    EXPECT_EQ(FieldElement::parse("1/2", 5), FieldElement::from_int(3, 5));
}

TEST(Field, Rejections) {
    EXPECT_THROW(FieldElement::from_int(1, 0) + FieldElement::from_int(1, 3), std::invalid_argument);
    EXPECT_THROW(FieldElement::from_int(1, 4), std::invalid_argument);
    EXPECT_THROW(FieldElement::from_int(0, 5).inv(), std::exception);
    EXPECT_THROW(FieldElement::parse("x", 0), std::invalid_argument);
    EXPECT_THROW(FieldElement::parse("1/0", 0), std::invalid_argument);
    EXPECT_THROW(FieldElement::parse("1/5", 5), std::exception);
}

TEST(Field, IntegerQueries) {
    EXPECT_TRUE(FieldElement::from_int(-4, 0).is_integer());
    EXPECT_FALSE(FieldElement::parse("1/2", 0).is_integer());
    EXPECT_EQ(FieldElement::from_int(-4, 0).to_long(), -4);
    EXPECT_EQ(FieldElement::from_int(3, 0).pow(3), FieldElement::from_int(27, 0));
}

TEST(Laurent, QInteger) {
    EXPECT_TRUE(q_integer(0).is_zero());
    EXPECT_EQ(q_integer(1), LaurentPoly(1));
    EXPECT_EQ(q_integer(3), LaurentPoly::monomial(2) + LaurentPoly(1) + LaurentPoly::monomial(-2));
    LaurentPoly qq = LaurentPoly::q() - LaurentPoly::monomial(-1);
    for (int n = 0; n <= 20; ++n)
        EXPECT_EQ(q_integer(n) * qq, LaurentPoly::monomial(n) - LaurentPoly::monomial(-n)) << n;
}

TEST(Laurent, Binomial) {
    EXPECT_EQ(q_binomial(4, 2).at_one(), 6);
    EXPECT_EQ(q_factorial(4).at_one(), 24);
    EXPECT_EQ(q_binomial(5, 0), LaurentPoly(1));
}

TEST(Laurent, RingAxiomsRandomized) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-4, 4), c(-3, 3);
    auto rnd = [&] {
        LaurentPoly p;
        for (int t = 0; t < 4; ++t) p += LaurentPoly::monomial(e(rng), c(rng));
        return p;
    };
    for (int it = 0; it < 200; ++it) {
        auto a = rnd(), b = rnd(), d = rnd();
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * d, a * (b * d));
        EXPECT_EQ(a * (b + d), a * b + a * d);
        for (auto& [k, v] : (a - a).terms()) FAIL() << "stored zero at " << k << " " << v;
    }
}

namespace {
ExactMatrix from_rows(const std::vector<std::vector<long>>& r, int p) {
    ExactMatrix m(static_cast<int>(r.size()), r.empty() ? 0 : static_cast<int>(r[0].size()), p);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = FieldElement::from_int(r[i][j], p);
    return m;
}
} // namespace

TEST(Rank, Examples) {
    EXPECT_EQ(matrix_rank(ExactMatrix(3, 5, 0)), 0);
    EXPECT_EQ(matrix_rank(ExactMatrix(2, 2, 7)), 0);
    EXPECT_EQ(matrix_rank(ExactMatrix::identity(4, 0)), 4);
    EXPECT_EQ(matrix_rank(from_rows({{1, 2}, {2, 4}}, 0)), 1);
    EXPECT_EQ(matrix_rank(from_rows({{1, 1}, {1, 4}}, 3)), 1);
    EXPECT_EQ(matrix_rank(from_rows({{1, 1}, {1, 4}}, 0)), 2);
}

TEST(Rank, PermutationAndDiagonalAgreeAcrossFields) {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<long>> pm(n, std::vector<long>(n, 0)), dm = pm;
        for (int i = 0; i < n; ++i) {
            pm[i][perm[i]] = 1;
            dm[i][i] = 1 + static_cast<long>(rng() % 4);   // units mod 5 and 7
        }
        for (int p : {0, 5, 7}) {
            EXPECT_EQ(matrix_rank(from_rows(pm, p)), n);
            EXPECT_EQ(matrix_rank(from_rows(dm, p)), n);
        }
    }
}

TEST(Rank, FastPathsMatchGeneric) {
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        std::vector<std::vector<long>> a(r, std::vector<long>(c));
        std::vector<mpz_class> z;
        std::vector<int64_t> m;
        for (auto& row : a)
            for (auto& x : row) {
                x = static_cast<long>(rng() % 3) - 1;
                z.push_back(x);
                m.push_back(((x % 3) + 3) % 3);
            }
        EXPECT_EQ(rank_integer(z, r, c), matrix_rank(from_rows(a, 0)));
        EXPECT_EQ(rank_mod_p(m, r, c, 3), matrix_rank(from_rows(a, 3)));
    }
}
