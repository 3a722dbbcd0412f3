#ifndef UALG_UNION_FIND_HPP
#define UALG_UNION_FIND_HPP

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace ualg {

/// Disjoint-set forest with path halving and union by size.
class DisjointSet
{
public:
    explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true if x and y were in different sets.
    bool unite(std::size_t x, std::size_t y)
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        if (size_[x] < size_[y])
            std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        return true;
    }

    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace ualg

#endif // UALG_UNION_FIND_HPP
