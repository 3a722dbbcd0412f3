#ifndef UALG_CONGRUENCE_HPP
#define UALG_CONGRUENCE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/equivalences.hpp"
#include "ualg/error.hpp"
#include "ualg/tuples.hpp"
#include "ualg/union_find.hpp"

namespace ualg {

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

/// An ordered list of factors over a common signature. The signature is kept
/// explicitly so the empty product is well defined.
struct ProductIndex
{
    Signature signature;
    std::vector<FinAlgebra> factors;
};

/// Element layout of a product carrier: little-endian mixed radix over the
/// factor sizes, coordinate 0 least significant.
class ProductLayout
{
public:
    explicit ProductLayout(std::vector<std::size_t> radices) : radices_(std::move(radices))
    {
        size_ = checked_product(radices_);
    }

    std::size_t size() const { return size_; }
    const std::vector<std::size_t>& radices() const { return radices_; }

    std::size_t encode(std::span<const Element> coords) const
    {
        if (coords.size() != radices_.size())
            throw ShapeError("product element has wrong number of coordinates");
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] >= radices_[i])
                throw RangeError("product coordinate " + std::to_string(i) + " out of range");
        return encode_mixed(coords, radices_);
    }

    Tuple decode(std::size_t code) const
    {
        if (code >= size_)
            throw RangeError("product element " + std::to_string(code) + " out of range");
        return decode_mixed(code, radices_);
    }

private:
    std::vector<std::size_t> radices_;
    std::size_t size_ = 1;
};

inline ProductLayout product_layout(const std::vector<FinAlgebra>& factors)
{
    std::vector<std::size_t> radices;
    radices.reserve(factors.size());
    for (const auto& f : factors)
        radices.push_back(f.carrier().size);
    return ProductLayout(std::move(radices));
}

inline std::string default_product_name(const std::vector<FinAlgebra>& factors)
{
    if (factors.empty())
        return "Unit";
    std::string name;
    for (std::size_t i = 0; i < factors.size(); ++i)
        name += (i ? "_x_" : "") + factors[i].name();
    return name;
}

/// Cartesian product with operations applied coordinatewise.
inline FinAlgebra product(const ProductIndex& index, std::optional<std::string> name = std::nullopt)
{
    for (const auto& f : index.factors)
        if (f.signature() != index.signature)
            throw ShapeError("product: factor " + f.name() + " is not over signature " + index.signature.name());
    const ProductLayout layout = product_layout(index.factors);
    const Carrier carrier(layout.size());
    const std::size_t p = index.factors.size();

    std::vector<FiniteOperation> ops;
    for (std::size_t s = 0; s < index.signature.size(); ++s) {
        const std::size_t k = index.signature.symbols()[s].arity;
        Tuple coords(p), row(k);
        ops.push_back(FiniteOperation::from_function(carrier, k, [&](const Tuple& args) {
            std::vector<Tuple> decoded;
            decoded.reserve(k);
            for (Element a : args)
                decoded.push_back(layout.decode(a));
            for (std::size_t c = 0; c < p; ++c) {
                for (std::size_t j = 0; j < k; ++j)
                    row[j] = decoded[j][c];
                coords[c] = index.factors[c].operations()[s].at(row);
            }
            return layout.encode(coords);
        }));
    }
    return FinAlgebra(name.value_or(default_product_name(index.factors)), index.signature, carrier, std::move(ops));
}

inline FinAlgebra product(const Signature& sig, std::vector<FinAlgebra> factors,
                          std::optional<std::string> name = std::nullopt)
{
    return product(ProductIndex{sig, std::move(factors)}, std::move(name));
}

/// A class member: the algebra plus an inert tag standing for its membership proof.
struct ClassMember
{
    FinAlgebra algebra;
    std::string tag;
};

/// Product indexed by the members of an enumerated class; tags do not affect the result.
inline FinAlgebra class_product(const Signature& sig, const std::vector<ClassMember>& members,
                                std::optional<std::string> name = std::nullopt)
{
    std::vector<FinAlgebra> factors;
    factors.reserve(members.size());
    for (const auto& m : members)
        factors.push_back(m.algebra);
    return product(sig, std::move(factors), std::move(name));
}

// ---------------------------------------------------------------------------
// Congruences
// ---------------------------------------------------------------------------

struct CongruenceViolation
{
    std::string symbol;
    Tuple u;
    Tuple v;
    Element fu;
    Element fv;

    std::string to_string() const
    {
        return "symbol '" + symbol + "' maps related " + ualg::to_string(u) + " and " + ualg::to_string(v) +
               " to unrelated " + std::to_string(fu) + " and " + std::to_string(fv);
    }

    friend bool operator==(const CongruenceViolation&, const CongruenceViolation&) = default;
};

class Congruence;
using CongruenceCheck = std::variant<Congruence, CongruenceViolation>;

/// A partition of an algebra's carrier compatible with every basic operation.
/// Only obtainable through Congruence::check and the functions built on it.
class Congruence
{
public:
    static CongruenceCheck check(std::shared_ptr<const FinAlgebra> a, Partition p);

    const FinAlgebra& algebra() const { return *algebra_; }
    const std::shared_ptr<const FinAlgebra>& algebra_ptr() const { return algebra_; }
    const Partition& partition() const { return partition_; }

    bool related(Element x, Element y) const { return partition_.related(x, y); }

    friend bool operator==(const Congruence& a, const Congruence& b)
    {
        return (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_) && a.partition_ == b.partition_;
    }

private:
    Congruence(std::shared_ptr<const FinAlgebra> a, Partition p) : algebra_(std::move(a)), partition_(std::move(p)) {}

    friend std::vector<Congruence> all_congruences(const FinAlgebra&, std::size_t);

    std::shared_ptr<const FinAlgebra> algebra_;
    Partition partition_;
};

namespace detail {

/// Compatibility of an equivalence with one operation, checked by changing a
/// single argument to its block representative. Sufficient because the
/// relation is transitive.
inline bool preserves_partition(const FiniteOperation& f, const Partition& p)
{
    const std::size_t n = p.carrier().size;
    const std::size_t k = f.arity();
    if (n == 0 && k > 0)
        return true;
    const auto& ids = p.block_ids();
    Tuple u(k, 0), w(k);
    do {
        const std::size_t bu = ids[f.at(u)];
        w = u;
        for (std::size_t i = 0; i < k; ++i) {
            const Element rep = p.blocks()[ids[u[i]]].front();
            if (rep == u[i])
                continue;
            w[i] = rep;
            if (ids[f.at(w)] != bu)
                return false;
            w[i] = u[i];
        }
    } while (next_lex(u, n));
    return true;
}

inline bool preserves_partition(const FinAlgebra& a, const Partition& p)
{
    for (const auto& op : a.operations())
        if (!preserves_partition(op, p))
            return false;
    return true;
}

inline void require_carrier(const FinAlgebra& a, const Partition& p)
{
    if (a.carrier() != p.carrier())
        throw ShapeError("partition carrier size " + std::to_string(p.carrier().size) + " differs from algebra " +
                         a.name() + " carrier size " + std::to_string(a.carrier().size));
}

} // namespace detail

inline CongruenceCheck Congruence::check(std::shared_ptr<const FinAlgebra> a, Partition p)
{
    detail::require_carrier(*a, p);
    if (auto w = find_incompatibility(*a, p.to_relation()))
        return CongruenceViolation{w->symbol, w->witness.u, w->witness.v, w->witness.fu, w->witness.fv};
    return Congruence(std::move(a), std::move(p));
}

/// Congruence on success; otherwise the lexicographically first failing
/// symbol and argument pair.
inline CongruenceCheck check_congruence(const FinAlgebra& a, const Partition& p)
{
    return Congruence::check(std::make_shared<const FinAlgebra>(a), p);
}

inline CongruenceCheck check_congruence(std::shared_ptr<const FinAlgebra> a, const Partition& p)
{
    return Congruence::check(std::move(a), p);
}

inline Congruence expect_congruence(CongruenceCheck c)
{
    if (auto* v = std::get_if<CongruenceViolation>(&c))
        throw InvalidAlgebraError("not a congruence: " + v->to_string());
    return std::get<Congruence>(std::move(c));
}

/// The diagonal as a congruence; every operation preserves equality.
inline Congruence zero_congruence(std::shared_ptr<const FinAlgebra> a)
{
    const Carrier c = a->carrier();
    return expect_congruence(Congruence::check(std::move(a), Partition::discrete(c)));
}

inline Congruence zero_congruence(const FinAlgebra& a)
{
    return zero_congruence(std::make_shared<const FinAlgebra>(a));
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultEnumerationBound = 10;
inline constexpr std::size_t kDefaultGenerationBound = 4096;

/// Calls fn(labels) for every restricted-growth string of length n, in
/// lexicographic order. labels[x] is the canonical block id of x.
template <class Fn>
void for_each_restricted_growth_string(std::size_t n, Fn&& fn)
{
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> max_prefix(n, 0);  // max of a[0..i-1], +1 stored as bound
    if (n == 0) {
        fn(static_cast<const std::vector<std::size_t>&>(a));
        return;
    }
    for (;;) {
        fn(static_cast<const std::vector<std::size_t>&>(a));
        std::size_t i = n;
        while (i-- > 1) {
            if (a[i] <= max_prefix[i])
                break;
        }
        if (i == 0)
            return;
        ++a[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            max_prefix[j] = std::max(max_prefix[j - 1], a[j - 1]);
            a[j] = 0;
        }
    }
}

/// All partitions of an n-element carrier in restricted-growth-string order.
inline std::vector<Partition> all_partitions(std::size_t n)
{
    std::vector<Partition> out;
    for_each_restricted_growth_string(n, [&](const std::vector<std::size_t>& a) {
        out.push_back(Partition::from_labels(a));
    });
    return out;
}

/// Every congruence of A in restricted-growth-string order. Throws SizeError
/// when the carrier exceeds `max_size`.
inline std::vector<Congruence> all_congruences(const FinAlgebra& a,
                                               std::size_t max_size = kDefaultEnumerationBound)
{
    if (a.carrier().size > max_size)
        throw SizeError("all_congruences: carrier size " + std::to_string(a.carrier().size) +
                        " exceeds enumeration bound " + std::to_string(max_size));
    auto shared = std::make_shared<const FinAlgebra>(a);
    std::vector<Congruence> out;
    for_each_restricted_growth_string(a.carrier().size, [&](const std::vector<std::size_t>& labels) {
        Partition p = Partition::from_labels(labels);
        if (detail::preserves_partition(a, p))
            out.push_back(Congruence(shared, std::move(p)));
    });
    return out;
}

/// Smallest congruence containing every given pair.
inline Congruence generated_congruence(const FinAlgebra& a, const std::vector<std::pair<Element, Element>>& pairs,
                                       std::size_t max_size = kDefaultGenerationBound)
{
    const std::size_t n = a.carrier().size;
    if (n > max_size)
        throw SizeError("generated_congruence: carrier size " + std::to_string(n) + " exceeds bound " +
                        std::to_string(max_size));
    DisjointSet ds(n);
    for (auto [x, y] : pairs) {
        require_in(a.carrier(), x);
        require_in(a.carrier(), y);
        ds.unite(x, y);
    }
    // Merge f(u) with f(u[i := root of u_i]) until nothing changes.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& op : a.operations()) {
            const std::size_t k = op.arity();
            if (k == 0 || n == 0)
                continue;
            Tuple u(k, 0), w(k);
            do {
                const Element fu = op.at(u);
                w = u;
                for (std::size_t i = 0; i < k; ++i) {
                    const Element root = ds.find(u[i]);
                    if (root == u[i])
                        continue;
                    w[i] = root;
                    changed |= ds.unite(fu, op.at(w));
                    w[i] = u[i];
                }
            } while (next_lex(u, n));
        }
    }
    std::vector<std::size_t> labels(n);
    for (Element x = 0; x < n; ++x)
        labels[x] = ds.find(x);
    return expect_congruence(check_congruence(a, Partition::from_labels(labels)));
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

/// A/theta: carrier = block ids, operations evaluated on least-element representatives.
inline FinAlgebra quotient_algebra(const FinAlgebra& a, const Congruence& theta,
                                   std::optional<std::string> name = std::nullopt)
{
    if (theta.algebra_ptr().get() != &a && theta.algebra() != a)
        throw ShapeError("quotient_algebra: congruence belongs to a different algebra");
    const Partition& p = theta.partition();
    const Carrier qc(p.num_blocks());
    std::vector<FiniteOperation> ops;
    for (const auto& op : a.operations()) {
        Tuple reps(op.arity());
        ops.push_back(FiniteOperation::from_function(qc, op.arity(), [&](const Tuple& blocks) {
            for (std::size_t j = 0; j < blocks.size(); ++j)
                reps[j] = p.blocks()[blocks[j]].front();
            return p.block_ids()[op.at(reps)];
        }));
    }
    return FinAlgebra(name.value_or(a.name() + "_quo"), a.signature(), qc, std::move(ops));
}

/// The zero congruence of A/theta.
inline Congruence quotient_zero(const FinAlgebra& a, const Congruence& theta)
{
    return zero_congruence(quotient_algebra(a, theta));
}

/// Whether <u> and <v> are the same class of A/theta.
inline bool quotient_elim(const Congruence& theta, Element u, Element v)
{
    const Partition& p = theta.partition();
    return p.block_id(u) == p.block_id(v);
}

} // namespace ualg

#endif // UALG_CONGRUENCE_HPP
