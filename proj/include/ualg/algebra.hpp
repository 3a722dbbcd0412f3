#ifndef UALG_ALGEBRA_HPP
#define UALG_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ualg/continuous_relations.hpp"
#include "ualg/discrete_relations.hpp"
#include "ualg/error.hpp"
#include "ualg/finite_base.hpp"

namespace ualg {

struct OpSymbol
{
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

/// Operation symbols with arities, in declaration order.
class Signature
{
public:
    Signature() = default;

    explicit Signature(std::string name, std::vector<OpSymbol> symbols = {}) : name_(std::move(name))
    {
        for (auto& s : symbols)
            add(std::move(s.name), s.arity);
    }

    Signature& add(std::string symbol, std::size_t arity)
    {
        if (index_of(symbol))
            throw ShapeError("duplicate operation symbol '" + symbol + "' in signature " + name_);
        symbols_.push_back({std::move(symbol), arity});
        return *this;
    }

    const std::string& name() const { return name_; }
    const std::vector<OpSymbol>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }

    std::optional<std::size_t> index_of(std::string_view symbol) const
    {
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i].name == symbol)
                return i;
        return std::nullopt;
    }

    std::size_t arity(std::string_view symbol) const
    {
        auto i = index_of(symbol);
        if (!i)
            throw RangeError("unknown operation symbol '" + std::string(symbol) + "'");
        return symbols_[*i].arity;
    }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::string name_;
    std::vector<OpSymbol> symbols_;
};

/// A defect found by validate(): the offending symbol, argument tuple (empty
/// when not tuple-specific) and a short reason.
struct Violation
{
    std::string symbol;
    Tuple tuple;
    std::string reason;

    std::string to_string() const
    {
        std::string s = reason;
        if (!symbol.empty())
            s += " in symbol '" + symbol + "'";
        if (!tuple.empty())
            s += " at " + ualg::to_string(tuple);
        return s;
    }

    friend bool operator==(const Violation&, const Violation&) = default;
};

class FinAlgebra;
std::vector<Violation> validate(const FinAlgebra& a);

/// A finite carrier with one operation per signature symbol, in signature order.
class FinAlgebra
{
public:
    /// Throws InvalidAlgebraError listing every violation.
    FinAlgebra(std::string name, Signature sig, Carrier carrier, std::vector<FiniteOperation> ops)
        : FinAlgebra(unchecked(std::move(name), std::move(sig), carrier, std::move(ops)))
    {
        auto violations = validate(*this);
        if (!violations.empty()) {
            std::string msg = "invalid algebra " + name_ + ":";
            for (const auto& v : violations)
                msg += "\n  " + v.to_string();
            throw InvalidAlgebraError(msg);
        }
    }

    static FinAlgebra unchecked(std::string name, Signature sig, Carrier carrier, std::vector<FiniteOperation> ops)
    {
        FinAlgebra a;
        a.name_ = std::move(name);
        a.sig_ = std::move(sig);
        a.carrier_ = carrier;
        a.ops_ = std::move(ops);
        return a;
    }

    const std::string& name() const { return name_; }
    const Signature& signature() const { return sig_; }
    Carrier carrier() const { return carrier_; }
    const std::vector<FiniteOperation>& operations() const { return ops_; }

    const FiniteOperation& operation(std::size_t index) const { return ops_.at(index); }

    const FiniteOperation& operation(std::string_view symbol) const
    {
        auto i = sig_.index_of(symbol);
        if (!i)
            throw RangeError("unknown operation symbol '" + std::string(symbol) + "' in algebra " + name_);
        return ops_[*i];
    }

    FinAlgebra renamed(std::string name) const
    {
        FinAlgebra copy = *this;
        copy.name_ = std::move(name);
        return copy;
    }

    friend bool operator==(const FinAlgebra&, const FinAlgebra&) = default;

private:
    FinAlgebra() = default;

    std::string name_;
    Signature sig_;
    Carrier carrier_;
    std::vector<FiniteOperation> ops_;
};

inline std::vector<Violation> validate(const FinAlgebra& a)
{
    std::vector<Violation> out;
    const auto& syms = a.signature().symbols();
    const std::size_t n = a.carrier().size;
    if (a.operations().size() != syms.size()) {
        out.push_back({"", {}, "signature has " + std::to_string(syms.size()) + " symbols but " +
                                   std::to_string(a.operations().size()) + " operations given"});
        return out;
    }
    for (std::size_t i = 0; i < syms.size(); ++i) {
        const auto& op = a.operations()[i];
        const auto& sym = syms[i];
        if (op.arity() != sym.arity) {
            out.push_back({sym.name, {}, "arity mismatch"});
            continue;
        }
        if (op.carrier() != a.carrier()) {
            out.push_back({sym.name, {}, "carrier mismatch"});
            continue;
        }
        if (sym.arity == 0 && n == 0) {
            out.push_back({sym.name, {}, "nullary symbol on empty carrier"});
            continue;
        }
        std::size_t expected = 0;
        try {
            expected = checked_power(n, sym.arity);
        } catch (const SizeError&) {
            out.push_back({sym.name, {}, "table too large"});
            continue;
        }
        if (op.table().size() != expected) {
            out.push_back({sym.name, {}, "table has " + std::to_string(op.table().size()) + " entries, expected " +
                                             std::to_string(expected)});
            continue;
        }
        // Report out-of-range values in lexicographic argument order.
        if (expected == 0)
            continue;
        Tuple t(sym.arity, 0);
        do {
            if (op.table()[encode_uniform(t, n)] >= n)
                out.push_back({sym.name, t, "value out of range"});
        } while (next_lex(t, n));
    }
    return out;
}

/// f^A applied to args.
inline Element interpret(const FinAlgebra& a, std::string_view symbol, std::span<const Element> args)
{
    return a.operation(symbol)(args);
}

inline Element interpret(const FinAlgebra& a, std::string_view symbol, std::initializer_list<Element> args)
{
    return interpret(a, symbol, std::span<const Element>(args.begin(), args.size()));
}

struct SymbolIncompatibility
{
    std::string symbol;
    Incompatibility witness;
};

/// First symbol (in signature order) whose operation does not preserve R.
inline std::optional<SymbolIncompatibility> find_incompatibility(const FinAlgebra& a, const BinaryRelation& r)
{
    if (r.left() != a.carrier() || r.right() != a.carrier())
        throw ShapeError("compatible: relation is not over the algebra's carrier");
    for (std::size_t i = 0; i < a.operations().size(); ++i)
        if (auto w = find_incompatibility(a.operations()[i], r))
            return SymbolIncompatibility{a.signature().symbols()[i].name, std::move(*w)};
    return std::nullopt;
}

/// Every basic operation of A preserves R.
inline bool compatible(const FinAlgebra& a, const BinaryRelation& r)
{
    return !find_incompatibility(a, r).has_value();
}

struct SymbolContIncompatibility
{
    std::string symbol;
    ContIncompatibility witness;
};

inline std::optional<SymbolContIncompatibility> find_cont_incompatibility(const FinAlgebra& a, const ContRelation& r)
{
    if (r.carrier() != a.carrier())
        throw ShapeError("cont_compatible: relation is not over the algebra's carrier");
    for (std::size_t i = 0; i < a.operations().size(); ++i)
        if (auto w = find_cont_incompatibility(a.operations()[i], r))
            return SymbolContIncompatibility{a.signature().symbols()[i].name, std::move(*w)};
    return std::nullopt;
}

inline bool cont_compatible(const FinAlgebra& a, const ContRelation& r)
{
    return !find_cont_incompatibility(a, r).has_value();
}

/// For every symbol f, the tuple of interpretations (f^A_0, ..., f^A_{k-1}) preserves R.
inline bool dep_compatible(const std::vector<FinAlgebra>& family, const DepRelation& r)
{
    if (family.empty())
        throw ShapeError("dep_compatible: empty family");
    if (family.size() != r.arity())
        throw ShapeError("dep_compatible: family size differs from relation arity");
    const Signature& sig = family.front().signature();
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].signature() != sig)
            throw ShapeError("dep_compatible: algebras over different signatures");
        if (family[i].carrier() != r.family()[i])
            throw ShapeError("dep_compatible: relation coordinate " + std::to_string(i) +
                             " is not over the algebra's carrier");
    }
    for (std::size_t s = 0; s < sig.size(); ++s) {
        std::vector<FiniteOperation> fs;
        fs.reserve(family.size());
        for (const auto& alg : family)
            fs.push_back(alg.operations()[s]);
        if (!dep_compatible_ops(fs, r))
            return false;
    }
    return true;
}

/// Monoid signature: e of arity 0 and the binary product "·".
inline Signature monoid_signature()
{
    return Signature("monoid", {{"e", 0}, {"·", 2}});
}

/// ({0,1}, e = 0, · = addition mod 2).
inline FinAlgebra z2_monoid()
{
    Carrier c(2);
    return FinAlgebra("Z2", monoid_signature(), c,
                      {FiniteOperation::nullary(c, 0),
                       FiniteOperation::from_function(c, 2, [](const Tuple& t) { return (t[0] + t[1]) % 2; })});
}

} // namespace ualg

#endif // UALG_ALGEBRA_HPP
