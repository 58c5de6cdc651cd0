#include "pa/cellmod.hpp"
#include "pa/combinatorics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace pa;

namespace {
FieldElement fe(long v, int p = 0) { return FieldElement::from_int(v, p); }
JMWeight ints(std::initializer_list<long> xs) {
    JMWeight w;
    for (long x : xs) w.push_back(fe(x));
    return w;
}
} // namespace

TEST(Degree, Parse) {
    EXPECT_EQ(Degree::parse("3"), Degree::integer(3));
    EXPECT_EQ(Degree::parse("3+1/2"), Degree::half(3));
    EXPECT_EQ(Degree::parse("7/2"), Degree::half(3));
    EXPECT_EQ(Degree::half(4).str(), "4+1/2");
    EXPECT_EQ(Degree::half(4).columns(), 5);
    EXPECT_THROW(Degree::parse("x"), std::invalid_argument);
    EXPECT_THROW(Degree::parse("5/3"), std::invalid_argument);
}

TEST(Tableaux, Examples) {
    auto one = enumerate_tableaux(Degree::integer(1), {1});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], (UpDownTableau{{}, {1}}));
    UpDownTableau t = {{}, {1}, {1}, {2}, {2}, {2, 1}, {2, 1}, {3, 1}, {3, 1}};
    auto ts = enumerate_tableaux(Degree::half(4), {3, 1});
    EXPECT_NE(std::find(ts.begin(), ts.end(), t), ts.end());
    // d = 3/2, λ = (1): only ∅,(1),(1) — the half step cannot remove the box and still end at (1)
    EXPECT_EQ(enumerate_tableaux(Degree::half(1), {1}).size(), 1u);
}

TEST(Tableaux, StructuralInvariants) {
    for (int tw = 1; tw <= 8; ++tw) {
        Degree d(tw);
        for (auto& l : partitions_up_to(d.floor())) {
            auto ts = enumerate_tableaux(d, l);
            EXPECT_EQ(ts, enumerate_tableaux(d, l));   // deterministic
            std::set<UpDownTableau> uniq(ts.begin(), ts.end());
            EXPECT_EQ(uniq.size(), ts.size());
            for (auto& t : ts) {
                ASSERT_EQ(static_cast<int>(t.size()), tw);
                EXPECT_TRUE(t[0].empty());
                EXPECT_EQ(t.back(), l);
                for (size_t j = 1; j < t.size(); ++j) {
                    int diff = size(t[j]) - size(t[j - 1]);
                    if (j % 2 == 1) EXPECT_TRUE(diff == 0 || diff == 1);
                    else EXPECT_TRUE(diff == 0 || diff == -1);
                    EXPECT_LE(size(t[j]), static_cast<int>((j + 2) / 2));
                }
            }
        }
    }
}

TEST(JM, PaperTableaux) {
    UpDownTableau t = {{}, {1}, {1}, {2}, {2}, {2, 1}, {2, 1}, {3, 1}, {3, 1}};
    UpDownTableau u = {{}, {1}, {1}, {2}, {2}, {2, 1}, {2, 1}, {2, 1}, {1, 1}};
    auto delta = FieldElement::parse("9/4", 0);
    // full tuple (L_{1/2}, L_1, ..., L_{9/2}); the edge labels drop the leading L_{1/2} = 0
    EXPECT_EQ(jm_weight(t, delta), ints({0, 0, 1, 1, 2, -1, 3, 2, 4}));
    JMWeight wu = ints({0, 0, 1, 1, 2, -1, 3});
    wu.push_back(delta - 3);
    wu.push_back(delta - 1);
    EXPECT_EQ(jm_weight(u, delta), wu);
    EXPECT_EQ(jm_weight(t, fe(5)), jm_weight(u, fe(5)));
    EXPECT_EQ(jm_weight({{}, {1}}, fe(3)), ints({0, 0}));
}

TEST(JM, CommonWeight) {
    for (auto& l : partitions_up_to(3)) EXPECT_TRUE(common_jm_weight_bruteforce(l, l, Degree::integer(3), fe(1)));
    EXPECT_TRUE(common_jm_weight_bruteforce({1, 1}, {3, 1}, Degree::half(4), fe(5)));
    EXPECT_FALSE(common_jm_weight_bruteforce({1, 1}, {3, 1}, Degree::half(4), fe(6)));
    EXPECT_TRUE(common_jm_weight_bruteforce({1}, {2}, Degree::integer(2), fe(2)));
}

TEST(Arrow, Examples) {
    auto a = arrow_diagram({3, 2, 2, 2, 1}, fe(8));
    EXPECT_EQ(a.vee_positions(7), (std::vector<long>{2, 0, -1, -2, -4, -6, -7}));
    // above-label of the ∧ is δ − |λ| = −2, i.e. below-label 10
    EXPECT_EQ(a.wedge, fe(-2));
    auto e = arrow_diagram({}, fe(3));
    EXPECT_EQ(e.vee_positions(3), (std::vector<long>{-1, -2, -3}));
    EXPECT_EQ(e.wedge, fe(3));
    auto t = tau(tau(a), -1);
    EXPECT_EQ(t.wedge, a.wedge);
    auto a5 = arrow_diagram({3, 2, 2, 2, 1}, fe(8, 5));
    EXPECT_EQ(a5.wedge, fe(3, 5));
    EXPECT_EQ(tau(tau(a5, 1), -1).wedge, a5.wedge);
}

TEST(Arrow, Rendering) {
    std::string s = arrow_diagram({3, 2, 2, 2, 1}, fe(8)).render(-7, 3);
    EXPECT_NE(s.find("  o  V  o  V  V  X  o  V  o  V  V"), std::string::npos) << s;
    EXPECT_NE(s.find("  5  6  7  8  9 10 11 12 13 14 15"), std::string::npos) << s;
}

TEST(Arrow, MuProjection) {
    auto a = mu_projection({2, 2, 1, 1}, {3, 3, 2, 1, 1}, fe(1, 11));
    std::string s = a.render(0, 0);
    EXPECT_NE(s.find("  o  o  o  V  V  o  V  V  o  X  o"), std::string::npos) << s;
    EXPECT_EQ(a.proj_wedge, -5);
    // no ∨ ever lands on label −k−1
    for (int p : {5, 7, 11})
        for (int r = 1; r < p - 1 && r <= 5; ++r)
            for (auto& mu : partitions_of(r))
                for (auto& l : partitions_up_to(r)) {
                    if (!contained_in(l, mu)) continue;
                    auto pr = mu_projection(l, mu, fe(2, p));
                    std::string txt = pr.render(0, 0);
                    std::string last = txt.substr(0, txt.find('\n'));
                    ASSERT_FALSE(last.empty());
                    auto marks = txt.substr(txt.find('\n') + 1);
                    marks = marks.substr(0, marks.find('\n'));
                    char lastmark = marks.back();
                    EXPECT_TRUE(lastmark == 'o' || lastmark == '^') << to_string(l) << " in " << to_string(mu) << " p=" << p;
                }
}

TEST(Arrow, ColumnProfiles) {
    auto prof = [](Partition l) { return column_profile(arrow_diagram(l, fe(2)), 2); };
    EXPECT_EQ(prof({}), (ColumnProfile{{fe(2), 1}, {fe(-1), 1}, {fe(-2), 1}, {fe(-3), 1}}));
    EXPECT_EQ(prof({1}), (ColumnProfile{{fe(1), 1}, {fe(0), 1}, {fe(-2), 1}, {fe(-3), 1}}));
    EXPECT_EQ(prof({2}), prof({1}));
}

TEST(Pattern, Examples) {
    EXPECT_TRUE(matches_pattern({1}, {2}, Degree::integer(2), fe(2)));
    EXPECT_TRUE(matches_pattern({1, 1}, {3, 1}, Degree::half(4), fe(5)));
    EXPECT_FALSE(matches_pattern({2}, {2}, Degree::integer(2), fe(2)));
    EXPECT_FALSE(matches_pattern({2, 2}, {3, 1}, Degree::integer(4), fe(2, 5)));   // λ ⊄ μ
    EXPECT_TRUE(same_arrow_counts({2}, {2}, Degree::integer(2), fe(2)));
    EXPECT_TRUE(same_arrow_counts({1}, {2}, Degree::integer(2), fe(2)));
    EXPECT_FALSE(same_arrow_counts({}, {2}, Degree::integer(2), fe(2)));
}

TEST(Pattern, CommonWeightImpliesSameCounts) {
    for (int tw = 1; tw <= 7; ++tw) {
        Degree d(tw);
        for (int p : {0, 2, 3, 5})
            for (long v : {-1L, 0L, 1L, 2L, 3L, 5L}) {
                auto delta = fe(v, p);
                auto ls = partitions_up_to(d.floor());
                for (auto& l : ls)
                    for (auto& m : ls)
                        if (common_jm_weight_bruteforce(l, m, d, delta))
                            EXPECT_TRUE(same_arrow_counts(l, m, d, delta)) << d.str() << " " << to_string(l) << to_string(m);
            }
    }
}

TEST(Pattern, EquivalentToCommonWeight) {
    for (int tw = 2; tw <= 9; ++tw) {
        Degree d(tw);
        int r = d.floor();
        for (int p : {0, 5, 7}) {
            if (p && p <= r) continue;
            for (long v = -3; v <= 9; ++v) {
                auto delta = fe(v, p);
                for (auto& mu : partitions_of(r))
                    for (auto& l : partitions_up_to(r))
                        if (l != mu)
                            EXPECT_EQ(matches_pattern(l, mu, d, delta), common_jm_weight_bruteforce(l, mu, d, delta))
                                << d.str() << " p=" << p << " δ=" << v << " " << to_string(l) << " " << to_string(mu);
            }
        }
    }
}

TEST(Pattern, UniquenessOfMatchingTableau) {
    for (int tw = 1; tw <= 7; ++tw) {
        Degree d(tw);
        for (int p : {0, 5, 7}) {
            if (p && p <= d.floor()) continue;
            for (long v = -2; v <= 6; ++v) {
                auto delta = fe(v, p);
                // μ ⊢ r, λ ∈ Λ⁺(d)
                for (auto& mu : partitions_of(d.floor()))
                    for (auto& u : enumerate_tableaux(d, mu)) {
                        auto wu = jm_weight(u, delta);
                        for (auto& l : partitions_up_to(d.floor())) {
                            if (!is_admissible_label(l, d, delta)) continue;
                            int hits = 0;
                            for (auto& t : enumerate_tableaux(d, l)) hits += jm_weight(t, delta) == wu;
                            EXPECT_LE(hits, 1) << d.str() << " " << to_string(l) << " vs " << to_string(mu);
                        }
                    }
            }
        }
    }
}
