#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ualg;
using namespace ualg::testing;

using Blocks = std::vector<std::vector<Element>>;

namespace {

std::vector<Partition> partitions_of(const std::vector<Congruence>& cons)
{
    std::vector<Partition> out;
    for (const auto& c : cons)
        out.push_back(c.partition());
    return out;
}

Partition blocks(std::size_t n, const Blocks& b) { return Partition::from_blocks(Carrier(n), b); }

} // namespace

TEST(Product, EmptyFactorList)
{
    auto sig = monoid_signature();
    auto one = product(sig, {});
    EXPECT_EQ(one.carrier().size, 1u);
    EXPECT_EQ(one.operation("e").table(), (std::vector<Element>{0}));
    EXPECT_EQ(one.operation("·").table(), (std::vector<Element>{0}));
}

TEST(Product, Z2SquaredByHand)
{
    auto z2 = z2_monoid();
    auto sq = product(monoid_signature(), {z2, z2});
    ProductLayout layout = product_layout({z2, z2});
    EXPECT_EQ(sq.carrier().size, 4u);
    EXPECT_EQ(layout.encode(Tuple{1, 0}), 1u);
    EXPECT_EQ(layout.encode(Tuple{0, 1}), 2u);
    EXPECT_EQ(interpret(sq, "·", {1, 2}), 3u);
    EXPECT_EQ(layout.decode(3), (Tuple{1, 1}));
    EXPECT_EQ(interpret(sq, "e", {}), 0u);
    EXPECT_EQ(sq.name(), "Z2_x_Z2");
}

TEST(Product, SingleFactorKeepsTables)
{
    auto z3 = cyclic_add(3);
    auto p = product(add_signature(), {z3});
    EXPECT_EQ(p.operations(), z3.operations());
}

TEST(Product, MixedRadixRoundTrip)
{
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b)
            for (std::size_t c = 1; c <= 3; ++c) {
                ProductLayout layout({a, b, c});
                ASSERT_EQ(layout.size(), a * b * c);
                std::vector<std::size_t> radices{a, b, c};
                Tuple t(3, 0);
                std::set<std::size_t> codes;
                do {
                    ASSERT_EQ(layout.decode(layout.encode(t)), t);
                    codes.insert(layout.encode(t));
                } while (next_lex(t, radices));
                ASSERT_EQ(codes.size(), a * b * c);
            }
}

TEST(Product, Errors)
{
    EXPECT_THROW(product(add_signature(), {cyclic_add(2), z2_monoid()}), ShapeError);
    std::vector<FinAlgebra> many(40, cyclic_add(3));
    EXPECT_THROW(product(add_signature(), many), SizeError);
}

TEST(ClassProduct, TagsAreInert)
{
    auto z2 = cyclic_add(2), z3 = cyclic_add(3);
    auto sig = add_signature();
    auto a = class_product(sig, {{z2, "a"}, {z3, "b"}});
    auto b = class_product(sig, {{z2, "b"}, {z3, "a"}});
    EXPECT_EQ(a, product(sig, {z2, z3}));
    EXPECT_EQ(a.operations(), b.operations());
    EXPECT_EQ(class_product(sig, {{z3, "only"}}).operations(), z3.operations());
}

TEST(CheckCongruence, Examples)
{
    auto z4 = cyclic_add(4);
    auto ok = check_congruence(z4, blocks(4, {{0, 2}, {1, 3}}));
    ASSERT_TRUE(std::holds_alternative<Congruence>(ok));
    EXPECT_TRUE(std::get<Congruence>(ok).related(0, 2));

    auto bad = check_congruence(cyclic_add(3), blocks(3, {{0}, {1, 2}}));
    ASSERT_TRUE(std::holds_alternative<CongruenceViolation>(bad));
    EXPECT_EQ(std::get<CongruenceViolation>(bad), (CongruenceViolation{"add", {1, 1}, {1, 2}, 2, 0}));

    std::mt19937 rng(1);
    auto r = random_algebra(rng);
    EXPECT_TRUE(std::holds_alternative<Congruence>(check_congruence(r, Partition::discrete(r.carrier()))));
    EXPECT_THROW(check_congruence(z4, Partition::discrete(Carrier(3))), ShapeError);
}

TEST(ZeroCongruence, Examples)
{
    EXPECT_EQ(zero_congruence(cyclic_add(4)).partition().num_blocks(), 4u);
    auto one = product(add_signature(), {});
    EXPECT_EQ(zero_congruence(one).partition().num_blocks(), 1u);
    EXPECT_EQ(zero_congruence(cyclic_add(3)).partition(), ker_partition(FiniteFunction::identity(Carrier(3))));
}

TEST(ZeroCongruence, RandomAlgebras)
{
    std::mt19937 rng(2024);
    for (int i = 0; i < 150; ++i) {
        auto a = random_algebra(rng);
        auto c = check_congruence(a, Partition::discrete(a.carrier()));
        ASSERT_TRUE(std::holds_alternative<Congruence>(c));
        ASSERT_EQ(std::get<Congruence>(c), zero_congruence(a));
    }
}

TEST(PartitionEnumeration, MatchesBellAndNaiveLabelings)
{
    auto bell = bell_numbers(10);
    EXPECT_EQ(bell[4], 15u);
    EXPECT_EQ(bell[10], 115975u);
    for (std::size_t n = 0; n <= 6; ++n) {
        auto parts = all_partitions(n);
        ASSERT_EQ(parts.size(), bell[n]);
        std::set<std::vector<std::size_t>> ids;
        for (const auto& p : parts)
            ids.insert(p.block_ids());
        ASSERT_EQ(ids, naive_partitions(n));
        for (std::size_t i = 1; i < parts.size(); ++i)
            ASSERT_LT(parts[i - 1].block_ids(), parts[i].block_ids());
    }
    std::size_t count = 0;
    for_each_restricted_growth_string(10, [&](const auto&) { ++count; });
    EXPECT_EQ(count, bell[10]);
}

TEST(AllCongruences, Z4AndZ3)
{
    EXPECT_EQ(partitions_of(all_congruences(cyclic_add(4))),
              (std::vector<Partition>{Partition::full(Carrier(4)), blocks(4, {{0, 2}, {1, 3}}),
                                      Partition::discrete(Carrier(4))}));
    EXPECT_EQ(partitions_of(all_congruences(cyclic_add(3))),
              (std::vector<Partition>{Partition::full(Carrier(3)), Partition::discrete(Carrier(3))}));
}

TEST(AllCongruences, EmptySignatureGivesEveryPartition)
{
    auto bell = bell_numbers(6);
    for (std::size_t n = 0; n <= 6; ++n) {
        FinAlgebra a("S", Signature("Empty"), Carrier(n), {});
        EXPECT_EQ(all_congruences(a).size(), bell[n]);
    }
}

TEST(AllCongruences, SizeBound)
{
    EXPECT_THROW(all_congruences(cyclic_add(11)), SizeError);
    EXPECT_EQ(all_congruences(cyclic_add(6), 6).size(), 4u);
    EXPECT_THROW(all_congruences(cyclic_add(6), 5), SizeError);
}

TEST(AllCongruences, AgreesWithNaiveFilter)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        auto a = random_algebra(rng, 4, 3, 2);
        std::vector<std::vector<std::size_t>> expected;
        for (const auto& labels : naive_partitions(a.carrier().size))
            if (naive_is_congruence(a, Partition::from_labels(labels).to_relation()))
                expected.push_back(labels);
        std::vector<std::vector<std::size_t>> got;
        for (const auto& c : all_congruences(a)) {
            got.push_back(c.partition().block_ids());
            ASSERT_TRUE(std::holds_alternative<Congruence>(check_congruence(a, c.partition())));
        }
        ASSERT_EQ(got, expected);  // std::set order is lexicographic, as is RGS order
        ASSERT_FALSE(got.empty());
        ASSERT_EQ(got.front(), Partition::full(a.carrier()).block_ids());
        ASSERT_EQ(got.back(), Partition::discrete(a.carrier()).block_ids());
    }
}

TEST(GeneratedCongruence, Examples)
{
    auto z4 = cyclic_add(4);
    EXPECT_EQ(generated_congruence(z4, {}), zero_congruence(z4));
    EXPECT_EQ(generated_congruence(z4, {{0, 2}}).partition(), blocks(4, {{0, 2}, {1, 3}}));
    EXPECT_EQ(generated_congruence(cyclic_add(3), {{0, 1}}).partition(), Partition::full(Carrier(3)));
    EXPECT_EQ(generated_congruence(z4, {{1, 0}}).partition(), Partition::full(Carrier(4)));
    EXPECT_THROW(generated_congruence(z4, {{0, 4}}), RangeError);
    EXPECT_THROW(generated_congruence(z4, {}, 3), SizeError);
}

TEST(GeneratedCongruence, IsLeastContainingCongruence)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_algebra(rng, 4, 3, 2);
        const std::size_t n = a.carrier().size;
        auto cons = all_congruences(a);
        for (Element x = 0; x < n; ++x)
            for (Element y = x + 1; y < n; ++y) {
                // Least by refinement among congruences relating x and y.
                auto g = generated_congruence(a, {{x, y}});
                std::optional<Partition> least;
                for (const auto& c : cons) {
                    if (c.related(x, y) && (!least || c.partition().refines(*least)))
                        least = c.partition();
                }
                ASSERT_TRUE(least);
                ASSERT_EQ(g.partition(), *least);
                for (const auto& c : cons) {
                    if (c.related(x, y))
                        ASSERT_TRUE(g.partition().refines(c.partition()));
                }
            }
    }
}

TEST(QuotientAlgebra, Z4ModParityIsZ2)
{
    auto z4 = cyclic_add(4);
    auto theta = generated_congruence(z4, {{0, 2}});
    auto q = quotient_algebra(z4, theta);
    EXPECT_EQ(q.carrier().size, 2u);
    EXPECT_EQ(q.operations(), cyclic_add(2).operations());
}

TEST(QuotientAlgebra, ByZeroAndFull)
{
    auto lat = ualg::testing::load_sample("lattices.ual");
    for (const auto& a : lat.algebras()) {
        auto by_zero = quotient_algebra(a, zero_congruence(a));
        EXPECT_EQ(by_zero.operations(), a.operations());
        auto full = all_congruences(a).front();
        auto by_full = quotient_algebra(a, full);
        EXPECT_EQ(by_full.carrier().size, 1u);
        for (const auto& op : by_full.operations())
            EXPECT_EQ(op.table(), (std::vector<Element>{0}));
    }
    EXPECT_THROW(quotient_algebra(cyclic_add(4), zero_congruence(cyclic_add(3))), ShapeError);
}

TEST(QuotientAlgebra, RepresentativeIndependence)
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_algebra(rng, 4, 3, 2);
        for (const auto& theta : all_congruences(a)) {
            auto q = quotient_algebra(a, theta);
            const auto& p = theta.partition();
            for (std::size_t s = 0; s < a.operations().size(); ++s) {
                const auto& op = a.operations()[s];
                // Every choice of representatives, not just block minima.
                for_each_tuple(a.carrier().size, op.arity(), [&](const Tuple& reps) {
                    Tuple blocks(reps.size());
                    for (std::size_t j = 0; j < reps.size(); ++j)
                        blocks[j] = p.block_id(reps[j]);
                    ASSERT_EQ(p.block_id(op(reps)), q.operations()[s](blocks));
                });
            }
        }
    }
}

TEST(QuotientZero, Examples)
{
    auto z4 = cyclic_add(4);
    auto theta = generated_congruence(z4, {{0, 2}});
    auto zero = quotient_zero(z4, theta);
    EXPECT_EQ(zero.partition(), Partition::discrete(Carrier(2)));
    EXPECT_EQ(zero, zero_congruence(quotient_algebra(z4, theta)));
    auto full = generated_congruence(z4, {{0, 1}});
    EXPECT_EQ(quotient_zero(z4, full).partition(), Partition::discrete(Carrier(1)));
}

TEST(QuotientElim, Examples)
{
    auto z4 = cyclic_add(4);
    auto theta = generated_congruence(z4, {{0, 2}});
    EXPECT_TRUE(quotient_elim(theta, 0, 2));
    EXPECT_TRUE(quotient_elim(theta, 3, 3));
    EXPECT_FALSE(quotient_elim(zero_congruence(z4), 0, 1));
    EXPECT_THROW(quotient_elim(theta, 0, 4), RangeError);
    for (Element u = 0; u < 4; ++u)
        for (Element v = 0; v < 4; ++v)
            EXPECT_EQ(quotient_elim(theta, u, v), theta.partition().to_relation().holds(u, v));
}

TEST(QuotientAlgebra, CongruencesCorrespondForZ4)
{
    // Congruences of Z4/theta match congruences of Z4 above theta, order preserved.
    auto z4 = cyclic_add(4);
    auto cons = all_congruences(z4);
    ASSERT_EQ(cons.size(), 3u);
    for (const auto& theta : cons) {
        auto q = quotient_algebra(z4, theta);
        auto qcons = all_congruences(q);
        std::vector<Partition> above;
        for (const auto& c : cons)
            if (theta.partition().refines(c.partition()))
                above.push_back(c.partition());
        ASSERT_EQ(qcons.size(), above.size());
        // Pull each quotient congruence back along the block map.
        std::vector<Partition> pulled;
        for (const auto& qc : qcons) {
            std::vector<std::size_t> labels(4);
            for (Element x = 0; x < 4; ++x)
                labels[x] = qc.partition().block_id(theta.partition().block_id(x));
            pulled.push_back(Partition::from_labels(labels));
        }
        EXPECT_EQ(pulled, above);
        for (std::size_t i = 0; i < qcons.size(); ++i)
            for (std::size_t j = 0; j < qcons.size(); ++j)
                EXPECT_EQ(qcons[i].partition().refines(qcons[j].partition()), pulled[i].refines(pulled[j]));
    }
}
