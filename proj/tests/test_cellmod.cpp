#include "pa/cellmod.hpp"
#include "pa/repthy.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pa;

namespace {
FieldElement fe(long v, int p = 0) { return FieldElement::from_int(v, p); }

long stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}
long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST(VBasis, Sizes) {
    EXPECT_EQ(enumerate_V(2, 2, false).size(), 1);
    EXPECT_EQ(enumerate_V(2, 1, false).size(), 3);
    EXPECT_EQ(enumerate_V(2, 0, false).size(), 2);
    for (int r = 0; r <= 5; ++r)
        for (int l = 0; l <= r; ++l) {
            long s = 0;
            for (int k = l; k <= r; ++k) s += stirling2(r, k) * binom(k, l);
            EXPECT_EQ(enumerate_V(r, l, false).size(), s) << r << " " << l;
        }
}

TEST(VBasis, NormalForm) {
    for (int r = 1; r <= 4; ++r)
        for (int l = 0; l <= r; ++l)
            for (bool half : {false, true}) {
                const auto& V = enumerate_V(r, l, half);
                for (auto& x : V.diagrams) {
                    EXPECT_EQ(propagating_number(x), l + (half ? 1 : 0));
                    for (int j = 1; j <= r - l; ++j) {
                        // leading bottom dots are singletons
                        int b = x.block_of(Diagram::bot(j));
                        int cnt = 0;
                        for (int q = 0; q < 2 * x.degree(); ++q) cnt += x.block_of(q) == b;
                        EXPECT_EQ(cnt, 1);
                    }
                    int prev_min = -1;
                    for (int m = 0; m < l; ++m) {
                        int b = x.block_of(Diagram::bot(V.slot(m)));
                        int mn = -1;
                        for (int i = 1; i <= r; ++i)
                            if (x.block_of(Diagram::top(i)) == b) { mn = i; break; }
                        ASSERT_GT(mn, 0) << "slot block must meet the top row";
                        EXPECT_GT(mn, prev_min);
                        prev_min = mn;
                    }
                    if (half) EXPECT_TRUE(is_half(x));
                }
            }
}

TEST(Inflation, Examples) {
    const auto& top = enumerate_V(3, 3, false);
    ASSERT_EQ(top.size(), 1);
    auto v = inflation_form(top, 0, 0);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->exponent, 0);
    EXPECT_EQ(v->pi, (std::vector<int>{0, 1, 2}));
    const auto& v0 = enumerate_V(1, 0, false);
    auto w = inflation_form(v0, 0, 0);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->exponent, 1);
    EXPECT_TRUE(w->pi.empty());
    const auto& v1 = enumerate_V(2, 1, false);
    bool zero_seen = false;
    for (int x = 0; x < v1.size(); ++x)
        for (int y = 0; y < v1.size(); ++y) zero_seen |= !inflation_form(v1, x, y).has_value();
    EXPECT_TRUE(zero_seen);
}

TEST(Gram, Examples) {
    for (int r = 1; r <= 4; ++r)
        for (auto& l : partitions_of(r)) {
            EXPECT_EQ(gram_rank(l, Degree::integer(r), fe(3)), syt_count(l));
            EXPECT_EQ(cell_dim(l, Degree::integer(r)), syt_count(l));
            EXPECT_EQ(simple_dim(l, Degree::integer(r), fe(-1)), syt_count(l));
        }
    EXPECT_EQ(gram_matrix({1}, Degree::integer(2), FieldElement::parse("5/2", 0)).rows(), 3);
    EXPECT_EQ(gram_rank({1}, Degree::integer(2), FieldElement::parse("5/2", 0)), 3);
    EXPECT_EQ(gram_rank({1}, Degree::integer(2), fe(2)), 2);
    EXPECT_EQ(simple_dim({2}, Degree::integer(2), fe(2)), 1);
    EXPECT_THROW(simple_dim({}, Degree::integer(2), fe(0)), std::invalid_argument);
    EXPECT_THROW(gram_matrix({}, Degree::integer(2), fe(0)), std::invalid_argument);
    EXPECT_EQ(cell_dim({1}, Degree::integer(2)), 3);
    EXPECT_EQ(cell_dim({}, Degree::integer(2)), 2);
    // symmetric
    auto G = gram_matrix({1}, Degree::half(2), fe(4));
    EXPECT_EQ(G.transpose(), G);
}

TEST(Gram, SemisimpleOracle) {
    EXPECT_TRUE(semisimple_oracle(Degree::integer(2), fe(5)));
    EXPECT_FALSE(semisimple_oracle(Degree::integer(2), fe(2)));
    EXPECT_FALSE(semisimple_oracle(Degree::integer(2), fe(1, 2)));
}

TEST(CellDim, SumOfSquaresIsBell) {
    const long bell[] = {1, 2, 15, 203, 4140, 115975};
    for (int r = 1; r <= 5; ++r) {
        long s = 0;
        for (auto& l : partitions_up_to(r)) s += cell_dim(l, Degree::integer(r)) * cell_dim(l, Degree::integer(r));
        EXPECT_EQ(s, bell[r]) << r;
        // half degree: Bell(2r + 1) diagrams with r+1, (r+1)' joined
        long h = 0;
        for (auto& l : partitions_up_to(r)) h += cell_dim(l, Degree::half(r)) * cell_dim(l, Degree::half(r));
        const long bell_odd[] = {1, 5, 52, 877, 21147, 678570};
        EXPECT_EQ(h, bell_odd[r]) << r;
    }
}

TEST(CellAction, Basics) {
    for (int tw = 1; tw <= 6; ++tw) {
        Degree d(tw);
        for (auto& l : partitions_up_to(d.floor())) {
            auto I = cell_action(l, d, fe(3), Diagram::identity(d.columns()));
            EXPECT_EQ(I, ExactMatrix::identity(static_cast<int>(cell_dim(l, d)), 0));
        }
    }
    for (auto& l : partitions_of(3)) {
        auto& sd = specht_data(l);
        for (int i = 1; i <= 2; ++i) {
            auto M = cell_action(l, Degree::integer(3), fe(3), generator(GenKind::S, i, 3));
            for (int a = 0; a < sd.dim(); ++a)
                for (int b = 0; b < sd.dim(); ++b) EXPECT_EQ(M.at(a, b), fe(static_cast<long>(sd.generators[i - 1](a, b))));
        }
    }
    // A_2 on Δ_2((1)): exactly one basis vector is scaled by δ, the rest are killed or moved
    auto delta = FieldElement::parse("7/3", 0);
    auto M = cell_action({1}, Degree::integer(2), delta, generator(GenKind::A, 2, 2));
    int scaled = 0;
    for (int j = 0; j < M.cols(); ++j)
        for (int i = 0; i < M.rows(); ++i) scaled += M.at(i, j) == delta;
    EXPECT_EQ(scaled, 1);
}

TEST(CellAction, InvarianceAndHomomorphism) {
    std::mt19937 rng(17);
    for (int tw = 1; tw <= 6; ++tw) {
        Degree d(tw);
        auto gens = algebra_generators(d);
        for (long v : {3L, 0L, -2L}) {
            auto delta = fe(v);
            for (auto& l : partitions_up_to(d.floor())) {
                if (!is_admissible_label(l, d, delta)) continue;
                auto G = gram_matrix(l, d, delta);
                for (auto& g : gens) {
                    auto A = cell_action(l, d, delta, g), B = cell_action(l, d, delta, flip(g));
                    EXPECT_EQ(A.transpose() * G, G * B) << d.str() << " " << to_string(l) << " " << format_diagram(g);
                }
                if (gens.empty()) continue;
                // random words of length <= 4
                for (int it = 0; it < 6; ++it) {
                    int len = 1 + static_cast<int>(rng() % 4);
                    auto word = AlgebraElement::basis(Diagram::identity(d.columns()), delta, d.is_half());
                    auto mat = ExactMatrix::identity(static_cast<int>(cell_dim(l, d)), 0);
                    for (int k = 0; k < len; ++k) {
                        auto& g = gens[rng() % gens.size()];
                        word = multiply(word, AlgebraElement::basis(g, delta, d.is_half()));
                        mat = mat * cell_action(l, d, delta, g);
                    }
                    EXPECT_EQ(cell_action(l, d, word), mat);
                }
            }
        }
    }
}

TEST(CellAction, RestrictionDimensions) {
    for (int tw = 2; tw <= 9; ++tw) {
        Degree d(tw);
        for (auto& l : partitions_up_to(d.floor())) {
            long s = 0;
            for (auto& x : restrict_cell_labels(l, d, 0)) s += cell_dim(x, Degree(tw - 1));
            EXPECT_EQ(s, cell_dim(l, d));
        }
    }
}
