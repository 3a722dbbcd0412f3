#ifndef UALG_CONTINUOUS_RELATIONS_HPP
#define UALG_CONTINUOUS_RELATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ualg/discrete_relations.hpp"
#include "ualg/error.hpp"
#include "ualg/finite_base.hpp"
#include "ualg/tuples.hpp"

namespace ualg {

/// Row-major matrix of elements. Row i holds relation coordinate i, column j
/// holds operation argument slot j.
class ElementMatrix
{
public:
    ElementMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    ElementMatrix(std::size_t cols, const std::vector<Tuple>& rows) : ElementMatrix(rows.size(), cols)
    {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw ShapeError("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(cols));
            for (std::size_t j = 0; j < cols; ++j)
                data_[i * cols + j] = rows[i][j];
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Element at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Element& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Tuple row(std::size_t i) const { return Tuple(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Tuple column(std::size_t j) const
    {
        Tuple c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = at(i, j);
        return c;
    }

    friend bool operator==(const ElementMatrix&, const ElementMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

/// A k-ary relation over a family of carriers, coordinate i ranging over
/// family[i]. Membership is a dense mask over little-endian tuple codes.
class DepRelation
{
public:
    explicit DepRelation(std::vector<Carrier> family) : family_(std::move(family)), radices_(family_.size())
    {
        for (std::size_t i = 0; i < family_.size(); ++i)
            radices_[i] = family_[i].size;
        mask_.assign(checked_product(radices_), false);
    }

    DepRelation(std::vector<Carrier> family, const std::vector<Tuple>& members) : DepRelation(std::move(family))
    {
        for (const Tuple& t : members)
            insert(t);
    }

    static DepRelation full(std::vector<Carrier> family)
    {
        DepRelation r(std::move(family));
        r.mask_.assign(r.mask_.size(), true);
        return r;
    }

    const std::vector<Carrier>& family() const { return family_; }
    std::size_t arity() const { return family_.size(); }

    bool contains(std::span<const Element> t) const { return mask_[code_of(t)]; }
    void insert(std::span<const Element> t) { mask_[code_of(t)] = true; }

    /// Members in lexicographic order.
    std::vector<Tuple> members() const
    {
        std::vector<Tuple> out;
        if (mask_.empty())
            return out;
        Tuple t(arity(), 0);
        do {
            if (mask_[encode_mixed(t, radices_)])
                out.push_back(t);
        } while (next_lex(t, radices_));
        return out;
    }

    std::size_t count() const { return members().size(); }

    friend bool operator==(const DepRelation&, const DepRelation&) = default;

private:
    std::size_t code_of(std::span<const Element> t) const
    {
        if (t.size() != arity())
            throw ShapeError("tuple of length " + std::to_string(t.size()) + " for relation of arity " +
                             std::to_string(arity()));
        for (std::size_t i = 0; i < t.size(); ++i)
            require_in(family_[i], t[i], "tuple entry");
        return encode_mixed(t, radices_);
    }

    std::vector<Carrier> family_;
    std::vector<std::size_t> radices_;
    std::vector<bool> mask_;
};

/// A k-ary relation over a single carrier.
class ContRelation
{
public:
    ContRelation(Carrier c, std::size_t arity) : carrier_(c), rel_(std::vector<Carrier>(arity, c)) {}

    ContRelation(Carrier c, std::size_t arity, const std::vector<Tuple>& members) : ContRelation(c, arity)
    {
        for (const Tuple& t : members)
            insert(t);
    }

    static ContRelation full(Carrier c, std::size_t arity)
    {
        ContRelation r(c, arity);
        r.rel_ = DepRelation::full(std::vector<Carrier>(arity, c));
        return r;
    }

    Carrier carrier() const { return carrier_; }
    std::size_t arity() const { return rel_.arity(); }
    bool contains(std::span<const Element> t) const { return rel_.contains(t); }
    void insert(std::span<const Element> t) { rel_.insert(t); }
    std::vector<Tuple> members() const { return rel_.members(); }
    std::size_t count() const { return rel_.count(); }

    friend bool operator==(const ContRelation&, const ContRelation&) = default;

private:
    Carrier carrier_;
    DepRelation rel_;
};

inline ContRelation binary_as_cont(const BinaryRelation& r)
{
    if (!r.is_square())
        throw ShapeError("binary_as_cont: relation is not square");
    ContRelation out(r.left(), 2);
    for (auto [x, y] : r.pairs())
        out.insert(Tuple{x, y});
    return out;
}

inline BinaryRelation cont_as_binary(const ContRelation& r)
{
    if (r.arity() != 2)
        throw ShapeError("cont_as_binary: relation arity is not 2");
    BinaryRelation out(r.carrier());
    for (const Tuple& t : r.members())
        out.set(t[0], t[1]);
    return out;
}

inline DepRelation cont_as_dep(const ContRelation& r)
{
    return DepRelation(std::vector<Carrier>(r.arity(), r.carrier()), r.members());
}

/// Every column of `a` is a member of R.
inline bool eval_dep_rel(const DepRelation& r, const ElementMatrix& a)
{
    if (a.rows() != r.arity())
        throw ShapeError("eval_dep_rel: matrix has " + std::to_string(a.rows()) + " rows, relation arity is " +
                         std::to_string(r.arity()));
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!r.contains(a.column(j)))
            return false;
    return true;
}

inline bool eval_cont_rel(const ContRelation& r, const ElementMatrix& a)
{
    if (a.rows() != r.arity())
        throw ShapeError("eval_cont_rel: matrix has " + std::to_string(a.rows()) + " rows, relation arity is " +
                         std::to_string(r.arity()));
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!r.contains(a.column(j)))
            return false;
    return true;
}

struct ContIncompatibility
{
    ElementMatrix args;  // k x m, every column a member
    Tuple result;        // row-wise images, not a member
};

/// First related k x m matrix whose row-wise images leave R. Columns are
/// drawn from R's members in lexicographic order, column 0 varying slowest.
/// Arity-0 relations are compatible with everything.
inline std::optional<ContIncompatibility> find_dep_incompatibility(const std::vector<FiniteOperation>& fs,
                                                                   const DepRelation& r)
{
    const std::size_t k = r.arity();
    if (fs.size() != k)
        throw ShapeError("dep_compatible_ops: " + std::to_string(fs.size()) + " operations for relation of arity " +
                         std::to_string(k));
    if (k == 0)
        return std::nullopt;
    const std::size_t m = fs[0].arity();
    for (std::size_t i = 0; i < k; ++i) {
        if (fs[i].arity() != m)
            throw ShapeError("dep_compatible_ops: operations of different arity");
        if (fs[i].carrier() != r.family()[i])
            throw ShapeError("dep_compatible_ops: operation " + std::to_string(i) + " is not over family carrier");
    }

    const auto members = r.members();
    if (members.empty() && m > 0)
        return std::nullopt;
    Tuple pick(m, 0), row(m), result(k);
    ElementMatrix a(k, m);
    do {
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < k; ++i)
                a.at(i, j) = members[pick[j]][i];
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                row[j] = a.at(i, j);
            result[i] = fs[i].at(row);
        }
        if (!r.contains(result))
            return ContIncompatibility{a, result};
    } while (next_lex(pick, members.size()));
    return std::nullopt;
}

inline bool dep_compatible_ops(const std::vector<FiniteOperation>& fs, const DepRelation& r)
{
    return !find_dep_incompatibility(fs, r).has_value();
}

inline std::optional<ContIncompatibility> find_cont_incompatibility(const FiniteOperation& f, const ContRelation& r)
{
    if (f.carrier() != r.carrier())
        throw ShapeError("cont_compatible_op: operation and relation have different carriers");
    const std::size_t k = r.arity();
    const std::size_t m = f.arity();
    if (k == 0)
        return std::nullopt;

    const auto members = r.members();
    if (members.empty() && m > 0)
        return std::nullopt;
    Tuple pick(m, 0), row(m), result(k);
    do {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                row[j] = members[pick[j]][i];
            result[i] = f.at(row);
        }
        if (!r.contains(result)) {
            ElementMatrix a(k, m);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    a.at(i, j) = members[pick[j]][i];
            return ContIncompatibility{a, result};
        }
    } while (next_lex(pick, members.size()));
    return std::nullopt;
}

inline bool cont_compatible_op(const FiniteOperation& f, const ContRelation& r)
{
    return !find_cont_incompatibility(f, r).has_value();
}

} // namespace ualg

#endif // UALG_CONTINUOUS_RELATIONS_HPP
