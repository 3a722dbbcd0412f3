#ifndef UALG_DISCRETE_RELATIONS_HPP
#define UALG_DISCRETE_RELATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ualg/error.hpp"
#include "ualg/finite_base.hpp"
#include "ualg/tuples.hpp"

namespace ualg {

// ---------------------------------------------------------------------------
// Subsets
// ---------------------------------------------------------------------------

/// A subset of a carrier, as a membership mask.
class Subset
{
public:
    explicit Subset(Carrier c) : carrier_(c), bits_(c.size, false) {}

    Subset(Carrier c, const std::vector<Element>& members) : Subset(c)
    {
        for (Element x : members) {
            require_in(c, x);
            bits_[x] = true;
        }
    }

    Carrier carrier() const { return carrier_; }

    bool contains(Element x) const
    {
        require_in(carrier_, x);
        return bits_[x];
    }

    void insert(Element x)
    {
        require_in(carrier_, x);
        bits_[x] = true;
    }

    std::vector<Element> elements() const
    {
        std::vector<Element> out;
        for (Element x = 0; x < carrier_.size; ++x)
            if (bits_[x])
                out.push_back(x);
        return out;
    }

    std::size_t count() const { return elements().size(); }
    bool empty() const { return count() == 0; }

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    Carrier carrier_;
    std::vector<bool> bits_;
};

namespace detail {
inline void require_same_carrier(const Subset& s, const Subset& t)
{
    if (s.carrier() != t.carrier())
        throw ShapeError("subsets over different carriers");
}
} // namespace detail

inline bool member(const Subset& s, Element x) { return s.contains(x); }

inline bool is_subset(const Subset& s, const Subset& t)
{
    detail::require_same_carrier(s, t);
    for (Element x = 0; x < s.carrier().size; ++x)
        if (s.contains(x) && !t.contains(x))
            return false;
    return true;
}

inline Subset set_union(const Subset& s, const Subset& t)
{
    detail::require_same_carrier(s, t);
    Subset out(s.carrier());
    for (Element x = 0; x < s.carrier().size; ++x)
        if (s.contains(x) || t.contains(x))
            out.insert(x);
    return out;
}

inline Subset empty_subset(Carrier c) { return Subset(c); }

inline Subset singleton(Carrier c, Element x) { return Subset(c, {x}); }

/// True iff f(x) lies in `s` for every x in the domain of f.
inline bool image_in(const FiniteFunction& f, const Subset& s)
{
    if (f.cod() != s.carrier())
        throw ShapeError("image_in: subset is not over the codomain");
    for (Element y : f.table())
        if (!s.contains(y))
            return false;
    return true;
}

struct DisjointUnion
{
    Carrier sum;
    FiniteFunction inj1;
    FiniteFunction inj2;
};

/// a + b laid out as a block of a followed by a block of b.
inline DisjointUnion disjoint_union(Carrier a, Carrier b)
{
    Carrier sum(a.size + b.size);
    std::vector<Element> t1(a.size), t2(b.size);
    for (Element x = 0; x < a.size; ++x)
        t1[x] = x;
    for (Element y = 0; y < b.size; ++y)
        t2[y] = a.size + y;
    return {sum, FiniteFunction(a, sum, std::move(t1)), FiniteFunction(b, sum, std::move(t2))};
}

// ---------------------------------------------------------------------------
// Binary relations
// ---------------------------------------------------------------------------

/// A relation between two carriers stored as a dense row-major boolean matrix.
class BinaryRelation
{
public:
    BinaryRelation(Carrier a, Carrier b) : a_(a), b_(b), matrix_(checked_product(std::vector{a.size, b.size}), false)
    {}

    explicit BinaryRelation(Carrier c) : BinaryRelation(c, c) {}

    BinaryRelation(Carrier a, Carrier b, const std::vector<std::pair<Element, Element>>& pairs)
        : BinaryRelation(a, b)
    {
        for (auto [x, y] : pairs)
            set(x, y);
    }

    template <class Pred>
    static BinaryRelation from_predicate(Carrier a, Carrier b, Pred&& pred)
    {
        BinaryRelation r(a, b);
        for (Element x = 0; x < a.size; ++x)
            for (Element y = 0; y < b.size; ++y)
                if (pred(x, y))
                    r.matrix_[x * b.size + y] = true;
        return r;
    }

    static BinaryRelation total(Carrier c)
    {
        return from_predicate(c, c, [](Element, Element) { return true; });
    }

    Carrier left() const { return a_; }
    Carrier right() const { return b_; }
    bool is_square() const { return a_ == b_; }

    bool holds(Element x, Element y) const
    {
        require_in(a_, x);
        require_in(b_, y);
        return matrix_[x * b_.size + y];
    }

    void set(Element x, Element y, bool value = true)
    {
        require_in(a_, x);
        require_in(b_, y);
        matrix_[x * b_.size + y] = value;
    }

    /// Related pairs in lexicographic order.
    std::vector<std::pair<Element, Element>> pairs() const
    {
        std::vector<std::pair<Element, Element>> out;
        for (Element x = 0; x < a_.size; ++x)
            for (Element y = 0; y < b_.size; ++y)
                if (matrix_[x * b_.size + y])
                    out.emplace_back(x, y);
        return out;
    }

    std::size_t count() const { return pairs().size(); }

    friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

private:
    Carrier a_;
    Carrier b_;
    std::vector<bool> matrix_;
};

namespace detail {
inline void require_square(const BinaryRelation& r, const char* where)
{
    if (!r.is_square())
        throw ShapeError(std::string(where) + ": relation is not square");
}
} // namespace detail

/// x ker(f) y iff f(x) == f(y).
inline BinaryRelation ker(const FiniteFunction& f)
{
    const auto& t = f.table();
    return BinaryRelation::from_predicate(f.dom(), f.dom(), [&](Element x, Element y) { return t[x] == t[y]; });
}

/// The kernel of f as a subset of dom x dom, pair (x,y) encoded as x * |dom| + y.
inline Subset kernel_subset(const FiniteFunction& f)
{
    const std::size_t n = f.dom().size;
    Subset s(Carrier(checked_power(n, 2)));
    for (auto [x, y] : ker(f).pairs())
        s.insert(x * n + y);
    return s;
}

/// The identity relation.
inline BinaryRelation zero_rel(Carrier c)
{
    return BinaryRelation::from_predicate(c, c, [](Element x, Element y) { return x == y; });
}

/// x (R on g) y iff R(g x, g y).
inline BinaryRelation pullback(const BinaryRelation& r, const FiniteFunction& g)
{
    detail::require_square(r, "pullback");
    if (r.left() != g.cod())
        throw ShapeError("pullback: relation is not over the codomain of g");
    const auto& t = g.table();
    return BinaryRelation::from_predicate(g.dom(), g.dom(), [&](Element x, Element y) { return r.holds(t[x], t[y]); });
}

inline bool rel_implies(const BinaryRelation& p, const BinaryRelation& q)
{
    if (p.left() != q.left() || p.right() != q.right())
        throw ShapeError("rel_implies: relations have different shapes");
    for (auto [x, y] : p.pairs())
        if (!q.holds(x, y))
            return false;
    return true;
}

/// P(x,y) implies Q(g x, g y).
inline bool rel_implies_under(const BinaryRelation& p, const FiniteFunction& g, const BinaryRelation& q)
{
    return rel_implies(p, pullback(q, g));
}

// ---------------------------------------------------------------------------
// Finitary operations
// ---------------------------------------------------------------------------

/// A k-ary operation on a carrier, stored as a table of size^k results.
/// Argument tuples are indexed little-endian: coordinate 0 varies fastest.
class FiniteOperation
{
public:
    FiniteOperation(Carrier c, std::size_t arity, std::vector<Element> table)
        : FiniteOperation(unchecked(c, arity, std::move(table)))
    {
        if (table_.size() != checked_power(carrier_.size, arity_))
            throw ShapeError("operation table has " + std::to_string(table_.size()) + " entries, expected " +
                             std::to_string(checked_power(carrier_.size, arity_)));
        for (Element y : table_)
            require_in(carrier_, y, "operation value");
    }

    /// No totality or range checks; FinAlgebra validation reports the defects.
    static FiniteOperation unchecked(Carrier c, std::size_t arity, std::vector<Element> table)
    {
        FiniteOperation op;
        op.carrier_ = c;
        op.arity_ = arity;
        op.table_ = std::move(table);
        return op;
    }

    template <class Fn>
    static FiniteOperation from_function(Carrier c, std::size_t arity, Fn&& fn)
    {
        const std::size_t n = checked_power(c.size, arity);
        std::vector<Element> table(n);
        for (std::size_t code = 0; code < n; ++code)
            table[code] = fn(static_cast<const Tuple&>(decode_uniform(code, c.size, arity)));
        return {c, arity, std::move(table)};
    }

    static FiniteOperation nullary(Carrier c, Element value) { return {c, 0, {value}}; }

    Carrier carrier() const { return carrier_; }
    std::size_t arity() const { return arity_; }
    const std::vector<Element>& table() const { return table_; }

    Element operator()(std::span<const Element> args) const
    {
        if (args.size() != arity_)
            throw ShapeError("operation of arity " + std::to_string(arity_) + " applied to " +
                             std::to_string(args.size()) + " arguments");
        for (Element a : args)
            require_in(carrier_, a, "argument");
        return table_[encode_uniform(args, carrier_.size)];
    }

    Element operator()(std::initializer_list<Element> args) const
    {
        return (*this)(std::span<const Element>(args.begin(), args.size()));
    }

    /// Table lookup without range checks.
    Element at(std::span<const Element> args) const { return table_[encode_uniform(args, carrier_.size)]; }

    friend bool operator==(const FiniteOperation&, const FiniteOperation&) = default;

private:
    FiniteOperation() = default;

    Carrier carrier_;
    std::size_t arity_ = 0;
    std::vector<Element> table_;
};

/// The k-ary projection onto coordinate i.
inline FiniteOperation projection_op(Carrier c, std::size_t arity, std::size_t i)
{
    if (i >= arity)
        throw RangeError("projection coordinate " + std::to_string(i) + " out of range for arity " +
                         std::to_string(arity));
    return FiniteOperation::from_function(c, arity, [i](const Tuple& t) { return t[i]; });
}

/// R lifted componentwise to tuples: R(u[i], v[i]) for every i.
inline bool eval_rel(const BinaryRelation& r, std::span<const Element> u, std::span<const Element> v)
{
    if (u.size() != v.size())
        throw ShapeError("eval_rel: tuples of different length");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!r.holds(u[i], v[i]))
            return false;
    return true;
}

struct Incompatibility
{
    Tuple u;
    Tuple v;
    Element fu;
    Element fv;
};

/// Lexicographically first (u, v) with u, v componentwise R-related but
/// f(u), f(v) unrelated; u varies slowest. Only R-related v are visited.
inline std::optional<Incompatibility> find_incompatibility(const FiniteOperation& f, const BinaryRelation& r)
{
    detail::require_square(r, "compatibility");
    if (f.carrier() != r.left())
        throw ShapeError("compatibility: operation and relation have different carriers");
    const std::size_t n = r.left().size;
    const std::size_t k = f.arity();

    std::vector<std::vector<Element>> successors(n);
    for (auto [x, y] : r.pairs())
        successors[x].push_back(y);

    std::optional<Incompatibility> found;
    Tuple u(k, 0), pick(k), v(k), radices(k);
    if (n == 0 && k > 0)
        return found;
    do {
        bool any = true;
        for (std::size_t i = 0; i < k; ++i) {
            radices[i] = successors[u[i]].size();
            if (radices[i] == 0)
                any = false;
        }
        if (!any)
            continue;
        const Element fu = f.at(u);
        std::fill(pick.begin(), pick.end(), 0);
        do {
            for (std::size_t i = 0; i < k; ++i)
                v[i] = successors[u[i]][pick[i]];
            const Element fv = f.at(v);
            if (!r.holds(fu, fv))
                return Incompatibility{u, v, fu, fv};
        } while (next_lex(pick, radices));
    } while (next_lex(u, n));
    return found;
}

/// f |: R.
inline bool compatible_op(const FiniteOperation& f, const BinaryRelation& r)
{
    return !find_incompatibility(f, r).has_value();
}

} // namespace ualg

#endif // UALG_DISCRETE_RELATIONS_HPP
