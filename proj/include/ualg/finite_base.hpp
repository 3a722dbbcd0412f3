#ifndef UALG_FINITE_BASE_HPP
#define UALG_FINITE_BASE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ualg/error.hpp"
#include "ualg/tuples.hpp"

namespace ualg {

/// A finite set {0, ..., size-1}.
struct Carrier
{
    std::size_t size = 0;

    constexpr Carrier() = default;
    constexpr explicit Carrier(std::size_t n) : size(n) {}

    constexpr bool contains(Element x) const { return x < size; }

    friend constexpr bool operator==(Carrier, Carrier) = default;
};

inline void require_in(Carrier c, Element x, const char* what = "element")
{
    if (!c.contains(x))
        throw RangeError(std::string(what) + " " + std::to_string(x) + " out of range for carrier of size " +
                         std::to_string(c.size));
}

/// A total function between finite carriers, stored as its value table.
/// Two functions are equal exactly when their tables agree pointwise.
class FiniteFunction
{
public:
    FiniteFunction(Carrier dom, Carrier cod, std::vector<Element> table)
        : dom_(dom), cod_(cod), table_(std::move(table))
    {
        if (table_.size() != dom_.size)
            throw ShapeError("function table has " + std::to_string(table_.size()) + " entries, domain has " +
                             std::to_string(dom_.size));
        for (Element y : table_)
            require_in(cod_, y, "function value");
    }

    static FiniteFunction identity(Carrier c)
    {
        std::vector<Element> t(c.size);
        for (Element x = 0; x < c.size; ++x)
            t[x] = x;
        return {c, c, std::move(t)};
    }

    static FiniteFunction constant(Carrier dom, Carrier cod, Element value)
    {
        return {dom, cod, std::vector<Element>(dom.size, value)};
    }

    Carrier dom() const { return dom_; }
    Carrier cod() const { return cod_; }
    const std::vector<Element>& table() const { return table_; }

    Element operator()(Element x) const
    {
        require_in(dom_, x);
        return table_[x];
    }

    friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

private:
    Carrier dom_;
    Carrier cod_;
    std::vector<Element> table_;
};

/// g after f.
inline FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f)
{
    if (f.cod() != g.dom())
        throw ShapeError("compose: codomain/domain mismatch");
    std::vector<Element> t(f.dom().size);
    for (Element x = 0; x < t.size(); ++x)
        t[x] = g.table()[f.table()[x]];
    return {f.dom(), g.cod(), std::move(t)};
}

/// Every x with f(x) = b, ascending.
inline std::vector<Element> fiber(const FiniteFunction& f, Element b)
{
    require_in(f.cod(), b);
    std::vector<Element> out;
    for (Element x = 0; x < f.dom().size; ++x)
        if (f.table()[x] == b)
            out.push_back(x);
    return out;
}

/// Smallest preimage of b, if any. When present, f(result) == b.
inline std::optional<Element> image_witness(const FiniteFunction& f, Element b)
{
    require_in(f.cod(), b);
    const auto& t = f.table();
    auto it = std::find(t.begin(), t.end(), b);
    if (it == t.end())
        return std::nullopt;
    return static_cast<Element>(it - t.begin());
}

/// Right inverse g (f after g is the identity) when f is surjective.
inline std::optional<FiniteFunction> is_epic(const FiniteFunction& f)
{
    constexpr Element unset = static_cast<Element>(-1);
    std::vector<Element> g(f.cod().size, unset);
    for (Element x = f.dom().size; x-- > 0;)
        g[f.table()[x]] = x;
    if (std::find(g.begin(), g.end(), unset) != g.end())
        return std::nullopt;
    return FiniteFunction(f.cod(), f.dom(), std::move(g));
}

inline bool is_monic(const FiniteFunction& f)
{
    const auto& t = f.table();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j])
                return false;
    return true;
}

namespace detail {
inline std::vector<std::size_t> fiber_sizes(const FiniteFunction& f)
{
    std::vector<std::size_t> sizes(f.cod().size, 0);
    for (Element y : f.table())
        ++sizes[y];
    return sizes;
}
} // namespace detail

/// Every fiber has at most one element.
inline bool is_embedding(const FiniteFunction& f)
{
    auto sizes = detail::fiber_sizes(f);
    return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s <= 1; });
}

/// Every fiber has exactly one element.
inline bool is_bijective(const FiniteFunction& f)
{
    auto sizes = detail::fiber_sizes(f);
    return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 1; });
}

} // namespace ualg

#endif // UALG_FINITE_BASE_HPP
