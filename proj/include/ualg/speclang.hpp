#ifndef UALG_SPECLANG_HPP
#define UALG_SPECLANG_HPP

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/continuous_relations.hpp"
#include "ualg/equivalences.hpp"
#include "ualg/error.hpp"

namespace ualg::spec {

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

struct RelationDecl
{
    std::string name;
    std::string algebra;
    ContRelation relation;

    friend bool operator==(const RelationDecl&, const RelationDecl&) = default;
};

struct PartitionDecl
{
    std::string name;
    std::string algebra;
    Partition partition;

    friend bool operator==(const PartitionDecl&, const PartitionDecl&) = default;
};

enum class ItemKind { Signature, Algebra, Relation, Partition };

struct ItemRef
{
    ItemKind kind;
    std::size_t index;

    friend bool operator==(const ItemRef&, const ItemRef&) = default;
};

/// Named signatures, algebras, relations and partitions. `order` records the
/// declaration order across kinds and drives serialization.
class SpecDocument
{
public:
    void add(Signature s)
    {
        order_.push_back({ItemKind::Signature, signatures_.size()});
        signatures_.push_back(std::move(s));
    }

    void add(FinAlgebra a)
    {
        order_.push_back({ItemKind::Algebra, algebras_.size()});
        algebras_.push_back(std::move(a));
    }

    void add(RelationDecl r)
    {
        order_.push_back({ItemKind::Relation, relations_.size()});
        relations_.push_back(std::move(r));
    }

    void add(PartitionDecl p)
    {
        order_.push_back({ItemKind::Partition, partitions_.size()});
        partitions_.push_back(std::move(p));
    }

    const std::vector<Signature>& signatures() const { return signatures_; }
    const std::vector<FinAlgebra>& algebras() const { return algebras_; }
    const std::vector<RelationDecl>& relations() const { return relations_; }
    const std::vector<PartitionDecl>& partitions() const { return partitions_; }
    const std::vector<ItemRef>& order() const { return order_; }

    const Signature* find_signature(std::string_view name) const { return find(signatures_, name); }
    const FinAlgebra* find_algebra(std::string_view name) const { return find(algebras_, name); }
    const RelationDecl* find_relation(std::string_view name) const { return find(relations_, name); }
    const PartitionDecl* find_partition(std::string_view name) const { return find(partitions_, name); }

    friend bool operator==(const SpecDocument&, const SpecDocument&) = default;

private:
    template <class T>
    static const T* find(const std::vector<T>& items, std::string_view name)
    {
        for (const auto& item : items) {
            if constexpr (requires { item.name(); }) {
                if (item.name() == name)
                    return &item;
            } else {
                if (item.name == name)
                    return &item;
            }
        }
        return nullptr;
    }

    std::vector<Signature> signatures_;
    std::vector<FinAlgebra> algebras_;
    std::vector<RelationDecl> relations_;
    std::vector<PartitionDecl> partitions_;
    std::vector<ItemRef> order_;
};

struct Diagnostic
{
    enum class Kind { Syntax, Semantic };

    std::size_t line = 0;
    std::size_t column = 0;
    Kind kind = Kind::Syntax;
    std::string message;

    std::string to_string(std::string_view file = "<input>") const
    {
        return std::string(file) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
               (kind == Kind::Syntax ? "syntax error: " : "error: ") + message;
    }
};

/// Either a complete document or the diagnostics that prevented one.
class ParseResult
{
public:
    ParseResult(SpecDocument doc) : value_(std::move(doc)) {}
    ParseResult(std::vector<Diagnostic> diags) : value_(std::move(diags)) {}

    bool ok() const { return std::holds_alternative<SpecDocument>(value_); }
    explicit operator bool() const { return ok(); }

    const SpecDocument& document() const { return std::get<SpecDocument>(value_); }
    SpecDocument& document() { return std::get<SpecDocument>(value_); }

    const std::vector<Diagnostic>& diagnostics() const
    {
        static const std::vector<Diagnostic> none;
        if (auto* d = std::get_if<std::vector<Diagnostic>>(&value_))
            return *d;
        return none;
    }

private:
    std::variant<SpecDocument, std::vector<Diagnostic>> value_;
};

inline bool is_identifier(std::string_view s)
{
    auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    if (s.empty() || !head(s.front()))
        return false;
    return std::all_of(s.begin() + 1, s.end(), [&](char c) { return head(c) || (c >= '0' && c <= '9'); });
}

namespace detail {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok { Ident, Nat, Punct, End };

struct Token
{
    Tok kind = Tok::End;
    std::string text;
    std::size_t value = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

struct SyntaxError
{
    Diagnostic diag;
};

class Lexer
{
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (is_ident_head(c)) {
                t.kind = Tok::Ident;
                while (pos_ < src_.size() && (is_ident_head(src_[pos_]) || is_digit(src_[pos_])))
                    t.text += advance();
            } else if (is_digit(c)) {
                t.kind = Tok::Nat;
                while (pos_ < src_.size() && is_digit(src_[pos_]))
                    t.text += advance();
                auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
                if (ec != std::errc())
                    throw SyntaxError{{t.line, t.column, Diagnostic::Kind::Syntax, "number too large: " + t.text}};
            } else if (std::string_view("{}[]();:=,").find(c) != std::string_view::npos) {
                t.kind = Tok::Punct;
                t.text = std::string(1, advance());
            } else {
                throw SyntaxError{{t.line, t.column, Diagnostic::Kind::Syntax, describe_char(c)}};
            }
            out.push_back(std::move(t));
        }
    }

private:
    static bool is_ident_head(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    static std::string describe_char(char c)
    {
        const auto u = static_cast<unsigned char>(c);
        if (u >= 0x20 && u < 0x7f)
            return std::string("unexpected character '") + c + "'";
        std::ostringstream os;
        os << "unexpected byte 0x" << std::hex << static_cast<unsigned>(u);
        return os.str();
    }

    char advance()
    {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_blank()
    {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// Syntax tree
// ---------------------------------------------------------------------------

struct Located
{
    std::size_t line = 0;
    std::size_t column = 0;
};

struct Name : Located
{
    std::string text;
};

struct Number : Located
{
    std::size_t value = 0;
};

struct TableNode : Located
{
    bool leaf = true;
    std::size_t value = 0;
    std::vector<TableNode> children;
};

struct SigAst : Located
{
    Name name;
    std::vector<std::pair<Name, Number>> ops;
};

struct AlgAst : Located
{
    Name name;
    Name signature;
    Number carrier;
    std::vector<std::pair<Name, TableNode>> ops;
};

struct RelAst : Located
{
    Name name;
    Name algebra;
    Number arity;
    std::vector<std::pair<Located, std::vector<Number>>> tuples;
};

struct PartAst : Located
{
    Name name;
    Name algebra;
    std::vector<std::pair<Located, std::vector<Number>>> blocks;
};

using ItemAst = std::variant<SigAst, AlgAst, RelAst, PartAst>;

// ---------------------------------------------------------------------------
// Parser (recursive descent, stops at the first syntax error)
// ---------------------------------------------------------------------------

class Parser
{
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::vector<ItemAst> file()
    {
        std::vector<ItemAst> items;
        while (peek().kind != Tok::End) {
            const Token& t = peek();
            if (t.kind == Tok::Ident && t.text == "signature")
                items.emplace_back(signature());
            else if (t.kind == Tok::Ident && t.text == "algebra")
                items.emplace_back(algebra());
            else if (t.kind == Tok::Ident && t.text == "relation")
                items.emplace_back(relation());
            else if (t.kind == Tok::Ident && t.text == "partition")
                items.emplace_back(partition());
            else
                fail(t, "expected 'signature', 'algebra', 'relation' or 'partition'");
        }
        return items;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }

    [[noreturn]] static void fail(const Token& t, const std::string& msg)
    {
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw SyntaxError{{t.line, t.column, Diagnostic::Kind::Syntax, msg + ", found " + found}};
    }

    static Located at(const Token& t) { return {t.line, t.column}; }

    void expect_punct(char c)
    {
        if (!at_punct(c))
            fail(peek(), std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_keyword(std::string_view kw)
    {
        if (peek().kind != Tok::Ident || peek().text != kw)
            fail(peek(), "expected '" + std::string(kw) + "'");
        ++pos_;
    }

    Name ident()
    {
        const Token& t = peek();
        if (t.kind != Tok::Ident)
            fail(t, "expected identifier");
        ++pos_;
        Name n;
        static_cast<Located&>(n) = at(t);
        n.text = t.text;
        return n;
    }

    Number nat()
    {
        const Token& t = peek();
        if (t.kind != Tok::Nat)
            fail(t, "expected natural number");
        ++pos_;
        Number n;
        static_cast<Located&>(n) = at(t);
        n.value = t.value;
        return n;
    }

    SigAst signature()
    {
        SigAst s;
        static_cast<Located&>(s) = at(peek());
        expect_keyword("signature");
        s.name = ident();
        expect_punct('{');
        while (!at_punct('}')) {
            expect_keyword("op");
            Name op = ident();
            Number arity = nat();
            expect_punct(';');
            s.ops.emplace_back(std::move(op), arity);
        }
        expect_punct('}');
        return s;
    }

    TableNode table()
    {
        TableNode node;
        static_cast<Located&>(node) = at(peek());
        if (peek().kind == Tok::Nat) {
            node.value = nat().value;
            return node;
        }
        if (!at_punct('['))
            fail(peek(), "expected table entry or '['");
        ++pos_;
        node.leaf = false;
        if (!at_punct(']')) {
            node.children.push_back(table());
            while (at_punct(',')) {
                ++pos_;
                node.children.push_back(table());
            }
        }
        expect_punct(']');
        return node;
    }

    AlgAst algebra()
    {
        AlgAst a;
        static_cast<Located&>(a) = at(peek());
        expect_keyword("algebra");
        a.name = ident();
        expect_punct(':');
        a.signature = ident();
        expect_punct('{');
        expect_keyword("carrier");
        a.carrier = nat();
        expect_punct(';');
        while (!at_punct('}')) {
            expect_keyword("op");
            Name op = ident();
            expect_punct('=');
            TableNode t = table();
            expect_punct(';');
            a.ops.emplace_back(std::move(op), std::move(t));
        }
        expect_punct('}');
        return a;
    }

    std::vector<Number> nat_list(char close)
    {
        std::vector<Number> out{nat()};
        while (at_punct(',')) {
            ++pos_;
            out.push_back(nat());
        }
        expect_punct(close);
        return out;
    }

    RelAst relation()
    {
        RelAst r;
        static_cast<Located&>(r) = at(peek());
        expect_keyword("relation");
        r.name = ident();
        expect_keyword("on");
        r.algebra = ident();
        expect_keyword("arity");
        r.arity = nat();
        expect_punct('{');
        while (!at_punct('}')) {
            Located loc = at(peek());
            expect_punct('(');
            auto entries = nat_list(')');
            expect_punct(';');
            r.tuples.emplace_back(loc, std::move(entries));
        }
        expect_punct('}');
        return r;
    }

    PartAst partition()
    {
        PartAst p;
        static_cast<Located&>(p) = at(peek());
        expect_keyword("partition");
        p.name = ident();
        expect_keyword("on");
        p.algebra = ident();
        expect_punct('{');
        while (!at_punct('}')) {
            Located loc = at(peek());
            expect_punct('{');
            auto entries = nat_list('}');
            expect_punct(';');
            p.blocks.emplace_back(loc, std::move(entries));
        }
        expect_punct('}');
        return p;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Semantic analysis
// ---------------------------------------------------------------------------

class Analyzer
{
public:
    ParseResult run(const std::vector<ItemAst>& items)
    {
        // Names are collected first so that references may point forward.
        for (const auto& item : items)
            std::visit([&](const auto& ast) { declare(ast); }, item);
        if (!diags_.empty())
            return std::move(diags_);
        for (const auto& [name, ast] : sig_asts_)
            sigs_[name] = signature_of(*ast);

        SpecDocument doc;
        for (const auto& item : items) {
            std::visit(
                [&](const auto& ast) {
                    using T = std::decay_t<decltype(ast)>;
                    if constexpr (std::is_same_v<T, SigAst>) {
                        if (auto s = build(ast))
                            doc.add(std::move(*s));
                    } else if constexpr (std::is_same_v<T, AlgAst>) {
                        if (auto a = build(ast))
                            doc.add(std::move(*a));
                    } else if constexpr (std::is_same_v<T, RelAst>) {
                        if (auto r = build(ast))
                            doc.add(std::move(*r));
                    } else {
                        if (auto p = build(ast))
                            doc.add(std::move(*p));
                    }
                },
                item);
        }
        if (!diags_.empty())
            return std::move(diags_);
        return doc;
    }

private:
    void error(const Located& loc, std::string msg)
    {
        diags_.push_back({loc.line, loc.column, Diagnostic::Kind::Semantic, std::move(msg)});
    }

    void declare_name(std::map<std::string, Located>& seen, const Name& n, const char* kind)
    {
        auto [it, fresh] = seen.emplace(n.text, n);
        if (!fresh)
            error(n, std::string("duplicate name: ") + kind + " '" + n.text + "' already declared at line " +
                         std::to_string(it->second.line));
    }

    void declare(const SigAst& s)
    {
        declare_name(sig_names_, s.name, "signature");
        sig_asts_[s.name.text] = &s;
    }
    void declare(const AlgAst& a)
    {
        declare_name(alg_names_, a.name, "algebra");
        alg_asts_[a.name.text] = &a;
    }
    void declare(const RelAst& r) { declare_name(rel_names_, r.name, "relation"); }
    void declare(const PartAst& p) { declare_name(part_names_, p.name, "partition"); }

    std::optional<Signature> signature_of(const SigAst& s)
    {
        Signature sig(s.name.text);
        std::set<std::string> seen;
        for (const auto& [op, arity] : s.ops) {
            if (!seen.insert(op.text).second) {
                error(op, "duplicate symbol '" + op.text + "' in signature '" + s.name.text + "'");
                return std::nullopt;
            }
            sig.add(op.text, arity.value);
        }
        return sig;
    }

    std::optional<Signature> build(const SigAst& s) { return sigs_[s.name.text]; }

    // Carrier size of the algebra called `name`, reporting "unknown algebra" at `ref`.
    std::optional<Carrier> carrier_of(const Name& ref)
    {
        auto it = alg_asts_.find(ref.text);
        if (it == alg_asts_.end()) {
            error(ref, "unknown algebra '" + ref.text + "'");
            return std::nullopt;
        }
        return Carrier(it->second->carrier.value);
    }

    bool flatten(const TableNode& node, std::size_t depth, std::size_t arity, std::size_t n, std::size_t code,
                 std::size_t stride, std::vector<Element>& out, const std::string& sym)
    {
        if (depth == arity) {
            if (!node.leaf) {
                error(node, "arity mismatch: table for '" + sym + "' is nested deeper than its arity " +
                                std::to_string(arity));
                return false;
            }
            if (node.value >= n) {
                error(node, "value out of range: " + std::to_string(node.value) + " in table for '" + sym +
                                "' (carrier size " + std::to_string(n) + ")");
                return false;
            }
            out[code] = node.value;
            return true;
        }
        if (node.leaf) {
            error(node, "arity mismatch: table for '" + sym + "' has nesting depth " + std::to_string(depth) +
                            ", arity is " + std::to_string(arity));
            return false;
        }
        if (node.children.size() != n) {
            error(node, "table length mismatch: expected " + std::to_string(n) + " entries for '" + sym +
                            "', found " + std::to_string(node.children.size()));
            return false;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!flatten(node.children[i], depth + 1, arity, n, code + i * stride, stride * n, out, sym))
                return false;
        return true;
    }

    std::optional<FinAlgebra> build(const AlgAst& a)
    {
        auto sit = sigs_.find(a.signature.text);
        if (sit == sigs_.end()) {
            error(a.signature, "unknown signature '" + a.signature.text + "'");
            return std::nullopt;
        }
        auto sig = sit->second;
        if (!sig)
            return std::nullopt;
        const Carrier c(a.carrier.value);
        const std::size_t before = diags_.size();

        std::vector<std::optional<FiniteOperation>> ops(sig->size());
        for (const auto& [op, node] : a.ops) {
            auto idx = sig->index_of(op.text);
            if (!idx) {
                error(op, "unknown symbol '" + op.text + "' for signature '" + sig->name() + "'");
                continue;
            }
            if (ops[*idx]) {
                error(op, "duplicate symbol '" + op.text + "' in algebra '" + a.name.text + "'");
                continue;
            }
            const std::size_t arity = sig->symbols()[*idx].arity;
            if (arity == 0 && c.size == 0) {
                error(op, "nullary symbol '" + op.text + "' on empty carrier");
                continue;
            }
            std::size_t size = 0;
            try {
                size = checked_power(c.size, arity);
            } catch (const SizeError&) {
                error(op, "table for '" + op.text + "' is too large");
                continue;
            }
            std::vector<Element> table(size);
            if (flatten(node, 0, arity, c.size, 0, 1, table, op.text))
                ops[*idx] = FiniteOperation(c, arity, std::move(table));
        }
        for (std::size_t i = 0; i < sig->size(); ++i)
            if (!ops[i] && diags_.size() == before)
                error(a, "missing symbol '" + sig->symbols()[i].name + "' in algebra '" + a.name.text + "'");
        if (diags_.size() != before)
            return std::nullopt;

        std::vector<FiniteOperation> tables;
        for (auto& op : ops)
            tables.push_back(std::move(*op));
        return FinAlgebra(a.name.text, std::move(*sig), c, std::move(tables));
    }

    std::optional<RelationDecl> build(const RelAst& r)
    {
        auto c = carrier_of(r.algebra);
        if (!c)
            return std::nullopt;
        const std::size_t k = r.arity.value;
        std::optional<ContRelation> rel;
        try {
            rel.emplace(*c, k);
        } catch (const SizeError&) {
            error(r.arity, "relation '" + r.name.text + "' is too large");
            return std::nullopt;
        }
        const std::size_t before = diags_.size();
        for (const auto& [loc, entries] : r.tuples) {
            if (entries.size() != k) {
                error(loc, "arity mismatch: tuple of length " + std::to_string(entries.size()) + " in relation '" +
                               r.name.text + "' of arity " + std::to_string(k));
                continue;
            }
            Tuple t;
            bool ok = true;
            for (const auto& e : entries) {
                if (e.value >= c->size) {
                    error(e, "value out of range: " + std::to_string(e.value) + " (carrier size " +
                                 std::to_string(c->size) + ")");
                    ok = false;
                    break;
                }
                t.push_back(e.value);
            }
            if (ok)
                rel->insert(t);
        }
        if (diags_.size() != before)
            return std::nullopt;
        return RelationDecl{r.name.text, r.algebra.text, std::move(*rel)};
    }

    std::optional<PartitionDecl> build(const PartAst& p)
    {
        auto c = carrier_of(p.algebra);
        if (!c)
            return std::nullopt;
        const std::size_t before = diags_.size();
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> label(c->size, unset);
        for (std::size_t b = 0; b < p.blocks.size(); ++b) {
            for (const auto& e : p.blocks[b].second) {
                if (e.value >= c->size) {
                    error(e, "value out of range: " + std::to_string(e.value) + " (carrier size " +
                                 std::to_string(c->size) + ")");
                } else if (label[e.value] != unset) {
                    error(e, "element " + std::to_string(e.value) + " appears twice in partition '" + p.name.text +
                                 "'");
                } else {
                    label[e.value] = b;
                }
            }
        }
        if (diags_.size() == before) {
            for (Element x = 0; x < c->size; ++x)
                if (label[x] == unset) {
                    error(p, "element " + std::to_string(x) + " is in no block of partition '" + p.name.text + "'");
                    break;
                }
        }
        if (diags_.size() != before)
            return std::nullopt;
        return PartitionDecl{p.name.text, p.algebra.text, Partition::from_labels(label)};
    }

    std::vector<Diagnostic> diags_;
    std::map<std::string, Located> sig_names_, alg_names_, rel_names_, part_names_;
    std::map<std::string, const SigAst*> sig_asts_;
    std::map<std::string, std::optional<Signature>> sigs_;
    std::map<std::string, const AlgAst*> alg_asts_;
};

} // namespace detail

/// Parses a spec-language document. Syntax errors stop at the first error;
/// semantic errors are all reported.
inline ParseResult parse(std::string_view text)
{
    try {
        auto tokens = detail::Lexer(text).run();
        auto items = detail::Parser(std::move(tokens)).file();
        return detail::Analyzer().run(items);
    } catch (const detail::SyntaxError& e) {
        return std::vector<Diagnostic>{e.diag};
    }
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace detail {

inline const std::string& checked_name(const std::string& name)
{
    if (!is_identifier(name))
        throw ShapeError("'" + name + "' is not a valid identifier");
    return name;
}

inline void write_table(std::ostream& os, const FiniteOperation& op, std::size_t depth, std::size_t code,
                        std::size_t stride)
{
    const std::size_t n = op.carrier().size;
    if (depth == op.arity()) {
        os << op.table()[code];
        return;
    }
    os << '[';
    for (std::size_t i = 0; i < n; ++i) {
        if (i)
            os << ", ";
        write_table(os, op, depth + 1, code + i * stride, stride * n);
    }
    os << ']';
}

inline std::string join(const std::vector<Element>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + std::to_string(xs[i]);
    return s;
}

} // namespace detail

inline std::string serialize(const Signature& s)
{
    std::ostringstream os;
    os << "signature " << detail::checked_name(s.name()) << " {";
    for (const auto& sym : s.symbols())
        os << " op " << detail::checked_name(sym.name) << ' ' << sym.arity << ';';
    os << " }";
    return os.str();
}

inline std::string serialize(const FinAlgebra& a)
{
    std::ostringstream os;
    os << "algebra " << detail::checked_name(a.name()) << " : " << detail::checked_name(a.signature().name())
       << " { carrier " << a.carrier().size << ';';
    for (std::size_t i = 0; i < a.signature().size(); ++i) {
        os << " op " << detail::checked_name(a.signature().symbols()[i].name) << " = ";
        detail::write_table(os, a.operations()[i], 0, 0, 1);
        os << ';';
    }
    os << " }";
    return os.str();
}

inline std::string serialize(const RelationDecl& r)
{
    if (r.relation.arity() == 0 && r.relation.count() != 0)
        throw ShapeError("relation '" + r.name + "' contains the empty tuple, which has no textual form");
    std::ostringstream os;
    os << "relation " << detail::checked_name(r.name) << " on " << detail::checked_name(r.algebra) << " arity "
       << r.relation.arity() << " {";
    for (const auto& t : r.relation.members())
        os << " (" << detail::join(t) << ");";
    os << " }";
    return os.str();
}

inline std::string serialize(const PartitionDecl& p)
{
    std::ostringstream os;
    os << "partition " << detail::checked_name(p.name) << " on " << detail::checked_name(p.algebra) << " {";
    for (const auto& b : p.partition.blocks())
        os << " {" << detail::join(b) << "};";
    os << " }";
    return os.str();
}

/// Canonical text: one declaration per line in declaration order.
inline std::string serialize(const SpecDocument& doc)
{
    std::string out;
    for (const auto& ref : doc.order()) {
        switch (ref.kind) {
        case ItemKind::Signature: out += serialize(doc.signatures()[ref.index]); break;
        case ItemKind::Algebra: out += serialize(doc.algebras()[ref.index]); break;
        case ItemKind::Relation: out += serialize(doc.relations()[ref.index]); break;
        case ItemKind::Partition: out += serialize(doc.partitions()[ref.index]); break;
        }
        out += '\n';
    }
    return out;
}

} // namespace ualg::spec

#endif // UALG_SPECLANG_HPP
