#ifndef UALG_EQUIVALENCES_HPP
#define UALG_EQUIVALENCES_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>
#include <optional>
#include <string>
#include <vector>

#include "ualg/discrete_relations.hpp"
#include "ualg/error.hpp"
#include "ualg/finite_base.hpp"
#include "ualg/union_find.hpp"

namespace ualg {

struct RelationProperties
{
    bool reflexive = false;
    bool symmetric = false;
    bool antisymmetric = false;
    bool transitive = false;

    bool is_equivalence() const { return reflexive && symmetric && transitive; }

    friend bool operator==(const RelationProperties&, const RelationProperties&) = default;
};

namespace detail {

// First witness against each property, if any. Pairs/triples are reported
// in lexicographic order.
struct PropertyWitnesses
{
    std::optional<Element> not_reflexive;
    std::optional<std::pair<Element, Element>> not_symmetric;
    std::optional<std::pair<Element, Element>> not_antisymmetric;
    std::optional<std::array<Element, 3>> not_transitive;
};

inline PropertyWitnesses property_witnesses(const BinaryRelation& r)
{
    require_square(r, "relation_properties");
    const std::size_t n = r.left().size;
    PropertyWitnesses w;
    for (Element x = 0; x < n && !w.not_reflexive; ++x)
        if (!r.holds(x, x))
            w.not_reflexive = x;
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (!r.holds(x, y))
                continue;
            if (!w.not_symmetric && !r.holds(y, x))
                w.not_symmetric = std::pair{x, y};
            if (!w.not_antisymmetric && x != y && r.holds(y, x))
                w.not_antisymmetric = std::pair{x, y};
            for (Element z = 0; z < n && !w.not_transitive; ++z)
                if (r.holds(y, z) && !r.holds(x, z))
                    w.not_transitive = std::array<Element, 3>{x, y, z};
        }
    return w;
}

} // namespace detail

inline RelationProperties relation_properties(const BinaryRelation& r)
{
    auto w = detail::property_witnesses(r);
    return {!w.not_reflexive, !w.not_symmetric, !w.not_antisymmetric, !w.not_transitive};
}

/// An equivalence relation in canonical form: blocks ordered by their least
/// element, elements ascending within a block, block ids are positions.
/// Two partitions compare equal iff they encode the same equivalence.
class Partition
{
public:
    /// Canonicalizes an arbitrary labeling: x and y share a block iff labels[x] == labels[y].
    static Partition from_labels(const std::vector<std::size_t>& labels)
    {
        Partition p;
        p.carrier_ = Carrier(labels.size());
        p.block_of_.resize(labels.size());
        std::unordered_map<std::size_t, std::size_t> seen;  // label -> block id
        for (Element x = 0; x < labels.size(); ++x) {
            auto [it, fresh] = seen.try_emplace(labels[x], p.blocks_.size());
            const std::size_t id = it->second;
            if (fresh)
                p.blocks_.emplace_back();
            p.block_of_[x] = id;
            p.blocks_[id].push_back(x);
        }
        return p;
    }

    /// Validates that `blocks` are nonempty, disjoint and cover the carrier.
    static Partition from_blocks(Carrier c, const std::vector<std::vector<Element>>& blocks)
    {
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> labels(c.size, unset);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty())
                throw ShapeError("partition block " + std::to_string(b) + " is empty");
            for (Element x : blocks[b]) {
                require_in(c, x);
                if (labels[x] != unset)
                    throw ShapeError("element " + std::to_string(x) + " appears in more than one block");
                labels[x] = b;
            }
        }
        for (Element x = 0; x < c.size; ++x)
            if (labels[x] == unset)
                throw ShapeError("element " + std::to_string(x) + " is in no block");
        return from_labels(labels);
    }

    static Partition discrete(Carrier c)
    {
        std::vector<std::size_t> labels(c.size);
        std::iota(labels.begin(), labels.end(), 0);
        return from_labels(labels);
    }

    static Partition full(Carrier c) { return from_labels(std::vector<std::size_t>(c.size, 0)); }

    Carrier carrier() const { return carrier_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    const std::vector<std::vector<Element>>& blocks() const { return blocks_; }
    const std::vector<std::size_t>& block_ids() const { return block_of_; }

    std::size_t block_id(Element x) const
    {
        require_in(carrier_, x);
        return block_of_[x];
    }

    /// Least element of x's block.
    Element representative(Element x) const { return blocks_[block_id(x)].front(); }

    bool related(Element x, Element y) const { return block_id(x) == block_id(y); }

    BinaryRelation to_relation() const
    {
        return BinaryRelation::from_predicate(carrier_, carrier_,
                                              [&](Element x, Element y) { return block_of_[x] == block_of_[y]; });
    }

    /// p refines q: every block of p lies inside a block of q.
    bool refines(const Partition& q) const
    {
        if (carrier_ != q.carrier_)
            throw ShapeError("refines: partitions over different carriers");
        for (const auto& b : blocks_)
            for (Element x : b)
                if (q.block_of_[x] != q.block_of_[b.front()])
                    return false;
        return true;
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            s += "{";
            for (std::size_t i = 0; i < blocks_[b].size(); ++i)
                s += (i ? "," : "") + std::to_string(blocks_[b][i]);
            s += "}";
            if (b + 1 < blocks_.size())
                s += ",";
        }
        return s + "}";
    }

    friend bool operator==(const Partition& a, const Partition& b)
    {
        return a.carrier_ == b.carrier_ && a.block_of_ == b.block_of_;
    }

private:
    Partition() = default;

    Carrier carrier_;
    std::vector<std::size_t> block_of_;
    std::vector<std::vector<Element>> blocks_;
};

/// Canonical partition of an equivalence relation. Throws
/// NotEquivalenceError naming the first failing pair or triple.
inline Partition to_partition(const BinaryRelation& r)
{
    auto w = detail::property_witnesses(r);
    if (w.not_reflexive)
        throw NotEquivalenceError("not reflexive: (" + std::to_string(*w.not_reflexive) + "," +
                                  std::to_string(*w.not_reflexive) + ") missing");
    if (w.not_symmetric)
        throw NotEquivalenceError("not symmetric: (" + std::to_string(w.not_symmetric->first) + "," +
                                  std::to_string(w.not_symmetric->second) + ") related but (" +
                                  std::to_string(w.not_symmetric->second) + "," +
                                  std::to_string(w.not_symmetric->first) + ") not");
    if (w.not_transitive) {
        auto [x, y, z] = *w.not_transitive;
        throw NotEquivalenceError("not transitive: (" + std::to_string(x) + "," + std::to_string(y) + ") and (" +
                                  std::to_string(y) + "," + std::to_string(z) + ") related but (" +
                                  std::to_string(x) + "," + std::to_string(z) + ") not");
    }
    const std::size_t n = r.left().size;
    std::vector<std::size_t> labels(n);
    for (Element x = 0; x < n; ++x) {
        Element y = 0;
        while (!r.holds(x, y))
            ++y;
        labels[x] = y;
    }
    return Partition::from_labels(labels);
}

inline Partition ker_partition(const FiniteFunction& f)
{
    return Partition::from_labels(f.table());
}

/// The block [u] as a subset.
inline Subset block(Element u, const Partition& p)
{
    return Subset(p.carrier(), p.blocks()[p.block_id(u)]);
}

/// Smallest u with [u] == c, if c is a block.
inline std::optional<Element> is_block(const Subset& c, const Partition& p)
{
    if (c.carrier() != p.carrier())
        throw ShapeError("is_block: subset and partition over different carriers");
    const auto members = c.elements();
    if (members.empty())
        return std::nullopt;
    if (members != p.blocks()[p.block_id(members.front())])
        return std::nullopt;
    return members.front();
}

struct QuotientClass
{
    Subset members;
    Element representative;

    friend bool operator==(const QuotientClass&, const QuotientClass&) = default;
};

/// Blocks in canonical order, each paired with its least element.
inline std::vector<QuotientClass> quotient_set(const Partition& p)
{
    std::vector<QuotientClass> out;
    out.reserve(p.num_blocks());
    for (const auto& b : p.blocks())
        out.push_back({Subset(p.carrier(), b), b.front()});
    return out;
}

/// <u>: the class of u, recovered as (block, least element).
inline QuotientClass class_of(Element u, const Partition& p)
{
    return {block(u, p), p.representative(u)};
}

} // namespace ualg

#endif // UALG_EQUIVALENCES_HPP
