#include "pa/scalars.hpp"
#include "pa/young.hpp"

#include <gtest/gtest.h>

using namespace pa;

namespace {
int form_rank(const IntMatrix& f, int p) {
    ExactMatrix m(f.rows, f.cols, p);
    for (int i = 0; i < f.rows; ++i)
        for (int j = 0; j < f.cols; ++j) m.at(i, j) = FieldElement::from_int(static_cast<long>(f(i, j)), p);
    return matrix_rank(m);
}
} // namespace

TEST(Young, Boxes) {
    EXPECT_EQ(addable_boxes({}), (std::vector<BoxRef>{{1, 1}}));
    EXPECT_EQ(removable_boxes({3, 1}), (std::vector<BoxRef>{{1, 3}, {2, 1}}));
    EXPECT_EQ(removable_boxes({3, 1})[1].content(), -1);
    EXPECT_EQ(addable_boxes({2, 2}), (std::vector<BoxRef>{{1, 3}, {3, 1}}));
    EXPECT_EQ(add_box({2, 2}, {3, 1}), (Partition{2, 2, 1}));
    EXPECT_EQ(remove_box({3, 1}, {2, 1}), (Partition{3}));
    EXPECT_THROW(remove_box({3, 1}, {1, 1}), std::invalid_argument);
}

TEST(Young, Parsing) {
    EXPECT_EQ(parse_partition("3,1"), (Partition{3, 1}));
    EXPECT_EQ(parse_partition("(2,2,1)"), (Partition{2, 2, 1}));
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_EQ(parse_partition("()"), Partition{});
    EXPECT_EQ(to_string({}), "()");
    EXPECT_EQ(to_string({3, 1}), "(3,1)");
    EXPECT_THROW(parse_partition("1,3"), std::invalid_argument);
    EXPECT_THROW(parse_partition("a"), std::invalid_argument);
}

TEST(Young, Counts) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(syt_count({n}), 1);
    EXPECT_EQ(syt_count({2, 1}), 2);
    EXPECT_EQ(syt_count({3, 2}), 5);
    const size_t parts[] = {1, 1, 2, 3, 5, 7, 11};
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(partitions_of(n).size(), parts[n]);
    // Σ f_λ² = n!
    long fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        long s = 0;
        for (auto& l : partitions_of(n)) s += syt_count(l) * syt_count(l);
        EXPECT_EQ(s, fact);
    }
}

TEST(Young, Regularity) {
    EXPECT_FALSE(is_p_regular({1, 1, 1}, 3));
    EXPECT_TRUE(is_p_regular({2, 1}, 2));
    EXPECT_FALSE(is_p_regular({1, 1}, 2));
    for (auto& l : partitions_up_to(5)) EXPECT_TRUE(is_p_regular(l, 0));
}

TEST(Specht, SmallModules) {
    auto& triv = specht_data({3});
    for (auto& g : triv.generators) EXPECT_EQ(g, IntMatrix::identity(1));
    EXPECT_EQ(triv.form, IntMatrix::identity(1));
    auto& sgn = specht_data({1, 1});
    ASSERT_EQ(sgn.generators.size(), 1u);
    EXPECT_EQ(sgn.generators[0](0, 0), -1);
    auto& sd = specht_data({2, 1});
    EXPECT_EQ(form_rank(sd.form, 0), 2);
    EXPECT_EQ(form_rank(sd.form, 3), 1);
}

TEST(Specht, CoxeterPresentationAndInvariance) {
    for (int n = 1; n <= 5; ++n)
        for (auto& l : partitions_of(n)) {
            auto& sd = specht_data(l);
            auto I = IntMatrix::identity(sd.dim());
            for (size_t i = 0; i < sd.generators.size(); ++i) {
                auto& s = sd.generators[i];
                EXPECT_EQ(s * s, I);
                EXPECT_EQ(s.transpose() * sd.form * s, sd.form);
                if (i + 1 < sd.generators.size()) {
                    auto& t = sd.generators[i + 1];
                    EXPECT_EQ(s * t * s, t * s * t);
                }
                for (size_t j = i + 2; j < sd.generators.size(); ++j) EXPECT_EQ(s * sd.generators[j], sd.generators[j] * s);
            }
            EXPECT_EQ(sd.form.transpose(), sd.form);
        }
}

TEST(Specht, FormRanks) {
    for (int n = 1; n <= 5; ++n)
        for (auto& l : partitions_of(n)) {
            auto& sd = specht_data(l);
            EXPECT_EQ(form_rank(sd.form, 0), syt_count(l));
            for (int p : {7, 11})
                if (p > n) EXPECT_EQ(form_rank(sd.form, p), syt_count(l));
        }
}

TEST(Specht, PermutationActionIsHomomorphism) {
    for (auto& l : partitions_of(4)) {
        auto& sd = specht_data(l);
        auto perms = all_permutations(4);
        for (auto& u : perms)
            for (auto& w : perms) {
                std::vector<int> uw(4);
                for (int i = 0; i < 4; ++i) uw[i] = u[w[i]];
                EXPECT_EQ(sd.perm_action[permutation_index(uw)],
                          sd.perm_action[permutation_index(u)] * sd.perm_action[permutation_index(w)]);
            }
    }
}
