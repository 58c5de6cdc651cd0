#include "pa/diagrams.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pa;

namespace {
FieldElement q(long v) { return FieldElement::from_int(v, 0); }

Diagram random_diagram(int n, std::mt19937& rng) {
    std::vector<int> lab(2 * n);
    for (int i = 0; i < 2 * n; ++i) lab[i] = static_cast<int>(rng() % (i + 1));
    return Diagram::from_labels(n, lab);
}
} // namespace

TEST(Diagram, PropagatingNumber) {
    for (int r = 1; r <= 5; ++r) {
        EXPECT_EQ(propagating_number(Diagram::identity(r)), r);
        for (int i = 1; i <= r; ++i) EXPECT_EQ(propagating_number(generator(GenKind::A, i, r)), r - 1);
    }
    EXPECT_EQ(propagating_number(parse_diagram("{1,3,4,3',5'},{2,6'},{4'},{5,6,1',2'}")), 3);
}

TEST(Diagram, Concatenation) {
    for (int r = 2; r <= 4; ++r)
        for (int i = 1; i < r; ++i) {
            auto s = generator(GenKind::S, i, r);
            EXPECT_EQ(concatenate(s, s), std::make_pair(Diagram::identity(r), 0));
            auto a = generator(GenKind::A, i, r);
            EXPECT_EQ(concatenate(a, a), std::make_pair(a, 1));
        }
    Diagram a = parse_diagram("{1,3,5,1'},{4,6},{2},{2',4'},{3'},{5'},{6'}");
    Diagram b = parse_diagram("{1,2'},{3,1',3'},{4,6},{2},{5},{5',6'},{4'}");
    auto [c, e] = concatenate(a, b);
    EXPECT_EQ(c, parse_diagram("{1,3,5,2'},{4,6},{2},{1',3'},{5',6'},{4'}"));
    EXPECT_EQ(e, 2);
    EXPECT_THROW(concatenate(Diagram::identity(2), Diagram::identity(3)), std::invalid_argument);
}

TEST(Diagram, Multiply) {
    auto delta = FieldElement::parse("7/3", 0);
    for (int r = 2; r <= 4; ++r) {
        auto id = AlgebraElement::basis(Diagram::identity(r), delta);
        auto x = AlgebraElement::basis(generator(GenKind::S, 1, r), delta) + AlgebraElement::basis(generator(GenKind::A, r, r), delta) * q(5);
        EXPECT_EQ(multiply(id, x), x);
        auto a = AlgebraElement::basis(generator(GenKind::A, 1, r), delta);
        EXPECT_EQ(multiply(a, a), a * delta);
        for (int l = 1; l <= r - 1; ++l) {
            auto e = AlgebraElement::basis(generator(GenKind::E, l, r), delta);
            EXPECT_EQ(multiply(e, e), e) << r << " " << l;
        }
    }
    // δ = 0 drops terms with deletions
    auto z = AlgebraElement::basis(generator(GenKind::A, 1, 2), q(0));
    EXPECT_TRUE(multiply(z, z).terms().empty());
}

TEST(Diagram, Generators) {
    EXPECT_EQ(generator(GenKind::S, 1, 2), parse_diagram("{1,2'},{2,1'}"));
    EXPECT_EQ(generator(GenKind::A, 1, 2), parse_diagram("{1},{1'},{2,2'}"));
    EXPECT_EQ(generator(GenKind::E, 1, 3), parse_diagram("{1,2,1',2'},{3,3'}"));
    EXPECT_EQ(generator(GenKind::AA, 1, 2), parse_diagram("{1,2,1',2'}"));
}

TEST(Diagram, Flip) {
    EXPECT_EQ(flip(Diagram::identity(3)), Diagram::identity(3));
    EXPECT_EQ(flip(generator(GenKind::S, 1, 3)), generator(GenKind::S, 1, 3));
    EXPECT_EQ(flip(parse_diagram("{1,2'},{2},{1'}")), parse_diagram("{1',2},{2'},{1}"));
}

TEST(Diagram, ParseFormat) {
    EXPECT_EQ(parse_diagram("{1,1'},{2,2'}"), Diagram::identity(2));
    std::string text = "{1,3,4,3',5'},{2,6'},{4'},{5,6,1',2'}";
    Diagram d = parse_diagram(text);
    EXPECT_EQ(parse_diagram(format_diagram(d)), d);
    EXPECT_EQ(format_diagram(parse_diagram(format_diagram(d))), format_diagram(d));
    EXPECT_THROW(parse_diagram("{1,1'}", 2), std::invalid_argument);
    EXPECT_THROW(parse_diagram("{1,1'},{1,2'}"), std::invalid_argument);
    EXPECT_THROW(parse_diagram("{1,x}"), std::invalid_argument);
}

TEST(Diagram, CanonicalForm) {
    auto a = Diagram::from_labels(2, {5, 5, 9, 9});
    auto b = Diagram::from_labels(2, {0, 0, 1, 1});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.labels(), b.labels());
    for (auto& blk : parse_diagram("{1,3,4,3',5'},{2,6'},{4'},{5,6,1',2'}").blocks()) EXPECT_FALSE(blk.empty());
}

TEST(Diagram, BellCounts) {
    const long bell[] = {1, 2, 15, 203, 4140};
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(static_cast<long>(all_diagrams(r).size()), bell[r]);
}

TEST(Diagram, AssociativityRandomized) {
    std::mt19937 rng(5);
    auto delta = FieldElement::parse("3/2", 0);
    for (int it = 0; it < 300; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto x = AlgebraElement::basis(random_diagram(n, rng), delta) + AlgebraElement::basis(random_diagram(n, rng), delta) * q(2);
        auto y = AlgebraElement::basis(random_diagram(n, rng), delta);
        auto z = AlgebraElement::basis(random_diagram(n, rng), delta) + AlgebraElement::basis(random_diagram(n, rng), delta) * q(-1);
        EXPECT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
    }
}

TEST(Diagram, AntiInvolutionAndIdeals) {
    std::mt19937 rng(9);
    for (int it = 0; it < 500; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto a = random_diagram(n, rng), b = random_diagram(n, rng);
        auto [ab, e1] = concatenate(a, b);
        auto [ba, e2] = concatenate(flip(b), flip(a));
        EXPECT_EQ(flip(ab), ba);
        EXPECT_EQ(e1, e2);
        EXPECT_LE(propagating_number(ab), std::min(propagating_number(a), propagating_number(b)));
    }
}

TEST(Diagram, HalfClosure) {
    std::mt19937 rng(13);
    auto delta = q(3);
    int seen = 0;
    for (int it = 0; it < 2000 && seen < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto a = random_diagram(n, rng), b = random_diagram(n, rng);
        if (!is_half(a) || !is_half(b)) continue;
        ++seen;
        auto prod = multiply(AlgebraElement::basis(a, delta, true), AlgebraElement::basis(b, delta, true));
        EXPECT_TRUE(prod.half());
        for (auto& [d, c] : prod.terms()) EXPECT_TRUE(is_half(d));
    }
    EXPECT_GT(seen, 50);
    EXPECT_THROW(AlgebraElement::basis(generator(GenKind::S, 1, 2), delta, true), std::invalid_argument);
}
