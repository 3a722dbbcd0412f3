#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ualg;
using namespace ualg::testing;

TEST(Subset, Operations)
{
    Carrier c(3);
    EXPECT_TRUE(is_subset(Subset(c, {0}), Subset(c, {0, 1})));
    EXPECT_FALSE(is_subset(Subset(c, {2}), Subset(c, {0, 1})));
    EXPECT_EQ(set_union(Subset(c, {0}), Subset(c, {2})), Subset(c, {0, 2}));
    EXPECT_TRUE(empty_subset(c).empty());
    EXPECT_EQ(singleton(c, 1).elements(), (std::vector<Element>{1}));
    EXPECT_TRUE(member(singleton(c, 1), 1));
    EXPECT_THROW(member(singleton(c, 1), 3), RangeError);
    EXPECT_THROW(is_subset(Subset(c), Subset(Carrier(4))), ShapeError);
}

TEST(Subset, ImageIn)
{
    EXPECT_FALSE(image_in(parity4(), Subset(Carrier(2), {0})));
    EXPECT_TRUE(image_in(parity4(), Subset(Carrier(2), {0, 1})));
    EXPECT_THROW(image_in(parity4(), Subset(Carrier(4))), ShapeError);
}

TEST(Subset, Extensionality)
{
    // Mutual inclusion forces identical values, for every pair of subsets of a 4-set.
    Carrier c(4);
    for (std::size_t a = 0; a < 16; ++a)
        for (std::size_t b = 0; b < 16; ++b) {
            Subset s(c), t(c);
            for (Element x = 0; x < 4; ++x) {
                if (a >> x & 1)
                    s.insert(x);
                if (b >> x & 1)
                    t.insert(x);
            }
            if (is_subset(s, t) && is_subset(t, s))
                EXPECT_EQ(s, t);
        }
}

TEST(DisjointUnion, Layout)
{
    auto u = disjoint_union(Carrier(2), Carrier(3));
    EXPECT_EQ(u.sum.size, 5u);
    EXPECT_EQ(u.inj2(0), 2u);

    auto v = disjoint_union(Carrier(0), Carrier(2));
    EXPECT_EQ(v.sum.size, 2u);
    EXPECT_EQ(v.inj2, FiniteFunction::identity(Carrier(2)));

    auto w = disjoint_union(Carrier(1), Carrier(1));
    EXPECT_TRUE(is_monic(w.inj1));
    EXPECT_TRUE(is_monic(w.inj2));
    EXPECT_EQ(w.inj1.table(), (std::vector<Element>{0}));
    EXPECT_EQ(w.inj2.table(), (std::vector<Element>{1}));
}

TEST(Kernel, Examples)
{
    BinaryRelation expected(Carrier(4), Carrier(4),
                            {{0, 0}, {0, 2}, {2, 0}, {2, 2}, {1, 1}, {1, 3}, {3, 1}, {3, 3}});
    EXPECT_EQ(ker(parity4()), expected);
    EXPECT_EQ(ker(FiniteFunction::identity(Carrier(3))), zero_rel(Carrier(3)));
    auto total = ker(FiniteFunction::constant(Carrier(3), Carrier(3), 1));
    EXPECT_EQ(total.count(), 9u);
    EXPECT_EQ(total, BinaryRelation::total(Carrier(3)));
}

TEST(Kernel, SubsetView)
{
    auto s = kernel_subset(parity4());
    EXPECT_EQ(s.carrier().size, 16u);
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y)
            EXPECT_EQ(s.contains(x * 4 + y), x % 2 == y % 2);
}

TEST(ZeroRel, Examples)
{
    EXPECT_EQ(zero_rel(Carrier(3)).pairs(), (std::vector<std::pair<Element, Element>>{{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_EQ(zero_rel(Carrier(0)).count(), 0u);
}

TEST(Pullback, Examples)
{
    EXPECT_EQ(pullback(zero_rel(Carrier(2)), parity4()), ker(parity4()));
    EXPECT_EQ(pullback(BinaryRelation::total(Carrier(2)), parity4()), BinaryRelation::total(Carrier(4)));
    BinaryRelation r(Carrier(2), Carrier(2), {{0, 1}});
    EXPECT_EQ(pullback(r, parity4()).pairs(),
              (std::vector<std::pair<Element, Element>>{{0, 1}, {0, 3}, {2, 1}, {2, 3}}));
    EXPECT_THROW(pullback(zero_rel(Carrier(3)), parity4()), ShapeError);
}

TEST(Pullback, DiagonalIsKernelForAllSmallFunctions)
{
    for (std::size_t d = 0; d <= 4; ++d)
        for (std::size_t c = 1; c <= 4; ++c) {
            const std::size_t total = checked_power(c, d);
            for (std::size_t code = 0; code < total; ++code) {
                FiniteFunction f(Carrier(d), Carrier(c), decode_uniform(code, c, d));
                ASSERT_EQ(pullback(zero_rel(Carrier(c)), f), ker(f));
            }
        }
}

TEST(RelImplies, Examples)
{
    Carrier c(3);
    EXPECT_TRUE(rel_implies(BinaryRelation(c), BinaryRelation(c, c, {{0, 2}})));
    EXPECT_TRUE(rel_implies(zero_rel(c), BinaryRelation::total(c)));
    EXPECT_FALSE(rel_implies(BinaryRelation::total(c), zero_rel(c)));
    EXPECT_TRUE(rel_implies_under(ker(parity4()), parity4(), zero_rel(Carrier(2))));
    EXPECT_FALSE(rel_implies_under(BinaryRelation::total(Carrier(4)), parity4(), zero_rel(Carrier(2))));
    EXPECT_THROW(rel_implies(zero_rel(c), zero_rel(Carrier(2))), ShapeError);
}

TEST(ProjectionOp, Examples)
{
    Carrier c(2);
    EXPECT_EQ(projection_op(c, 2, 0)({0, 1}), 0u);
    EXPECT_EQ(projection_op(c, 1, 0).table(), (std::vector<Element>{0, 1}));
    EXPECT_EQ(projection_op(c, 3, 2)({1, 0, 1}), 1u);
    EXPECT_THROW(projection_op(c, 2, 2), RangeError);
}

TEST(FiniteOperation, LittleEndianTableLayout)
{
    // f(x, y) = 2x + y mod 3 on a 3-set; coordinate 0 varies fastest in the table.
    auto f = FiniteOperation::from_function(Carrier(3), 2, [](const Tuple& t) { return (2 * t[0] + t[1]) % 3; });
    EXPECT_EQ(f.table(), (std::vector<Element>{0, 2, 1, 1, 0, 2, 2, 1, 0}));
    EXPECT_EQ(f({1, 2}), 1u);
    EXPECT_THROW(f({1}), ShapeError);
    EXPECT_THROW(f({1, 3}), RangeError);
    EXPECT_THROW(FiniteOperation(Carrier(2), 2, {0, 1, 1}), ShapeError);
    EXPECT_THROW(FiniteOperation(Carrier(2), 1, {0, 2}), RangeError);
    EXPECT_EQ(FiniteOperation::nullary(Carrier(2), 1)({}), 1u);
}

TEST(EvalRel, Examples)
{
    EXPECT_TRUE(eval_rel(BinaryRelation(Carrier(2)), Tuple{}, Tuple{}));
    EXPECT_TRUE(eval_rel(zero_rel(Carrier(3)), Tuple{1, 2}, Tuple{1, 2}));
    EXPECT_TRUE(eval_rel(ker(parity4()), Tuple{0, 1}, Tuple{2, 3}));
    EXPECT_FALSE(eval_rel(ker(parity4()), Tuple{0, 1}, Tuple{1, 3}));
    EXPECT_THROW(eval_rel(ker(parity4()), Tuple{0}, Tuple{0, 1}), ShapeError);
}

TEST(CompatibleOp, Examples)
{
    // Expected values computed with the literal double-quantifier oracle, then frozen.
    const auto z3 = add_mod(3), z4 = add_mod(4);
    const auto split3 = relation_of_blocks(Carrier(3), {{0}, {1, 2}});
    const auto parity = relation_of_blocks(Carrier(4), {{0, 2}, {1, 3}});
    ASSERT_FALSE(naive_compatible(z3, split3));
    ASSERT_TRUE(naive_compatible(z4, parity));

    EXPECT_TRUE(compatible_op(z3, BinaryRelation::total(Carrier(3))));
    EXPECT_FALSE(compatible_op(z3, split3));
    EXPECT_TRUE(compatible_op(z4, parity));
    EXPECT_THROW(compatible_op(z3, parity), ShapeError);
}

TEST(CompatibleOp, CounterexampleIsLexicographicallyFirst)
{
    auto w = find_incompatibility(add_mod(3), relation_of_blocks(Carrier(3), {{0}, {1, 2}}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->u, (Tuple{1, 1}));
    EXPECT_EQ(w->v, (Tuple{1, 2}));
    EXPECT_EQ(w->fu, 2u);
    EXPECT_EQ(w->fv, 0u);
}

TEST(CompatibleOp, AgreesWithNaiveQuantifier)
{
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 0; k <= 2; ++k)
            for (int trial = 0; trial < 20; ++trial) {
                auto f = random_operation(rng, Carrier(n), k);
                for (std::size_t bits = 0; bits < (std::size_t{1} << (n * n)); ++bits) {
                    auto r = relation_from_bits(Carrier(n), bits);
                    ASSERT_EQ(compatible_op(f, r), naive_compatible(f, r));
                }
            }
}

TEST(CompatibleOp, ProjectionsPreserveEveryRelation)
{
    for (std::size_t n = 0; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t i = 0; i < k; ++i) {
                auto p = projection_op(Carrier(n), k, i);
                for (std::size_t bits = 0; bits < (std::size_t{1} << (n * n)); ++bits)
                    ASSERT_TRUE(compatible_op(p, relation_from_bits(Carrier(n), bits)));
            }
}

TEST(Kernel, IsAlwaysAnEquivalence)
{
    for (std::size_t d = 0; d <= 4; ++d)
        for (std::size_t c = 1; c <= 3; ++c) {
            const std::size_t total = checked_power(c, d);
            for (std::size_t code = 0; code < total; ++code) {
                auto k = ker(FiniteFunction(Carrier(d), Carrier(c), decode_uniform(code, c, d)));
                for (Element x = 0; x < d; ++x) {
                    ASSERT_TRUE(k.holds(x, x));
                    for (Element y = 0; y < d; ++y) {
                        ASSERT_EQ(k.holds(x, y), k.holds(y, x));
                        for (Element z = 0; z < d; ++z)
                            if (k.holds(x, y) && k.holds(y, z))
                                ASSERT_TRUE(k.holds(x, z));
                    }
                }
            }
        }
}
