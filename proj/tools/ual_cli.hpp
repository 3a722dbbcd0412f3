#ifndef UALG_TOOLS_UAL_CLI_HPP
#define UALG_TOOLS_UAL_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ualg/ualg.hpp"

namespace ualg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

namespace detail {

struct Failure
{
    std::string message;
};

inline spec::SpecDocument load(const std::string& path, std::ostream& err)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{"cannot read '" + path + "'"};
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto result = spec::parse(text);
    if (!result) {
        for (const auto& d : result.diagnostics())
            err << d.to_string(path) << '\n';
        throw Failure{};
    }
    return std::move(result.document());
}

inline const FinAlgebra& algebra(const spec::SpecDocument& doc, const std::string& name)
{
    if (auto* a = doc.find_algebra(name))
        return *a;
    throw Failure{"no algebra named '" + name + "'"};
}

inline const Partition& partition_for(const spec::SpecDocument& doc, const std::string& name, const FinAlgebra& a)
{
    auto* p = doc.find_partition(name);
    if (!p)
        throw Failure{"no partition named '" + name + "'"};
    if (p->partition.carrier() != a.carrier())
        throw Failure{"partition '" + name + "' is not over the carrier of algebra '" + a.name() + "'"};
    return p->partition;
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        out.push_back(cur);
    }
    return out;
}

inline Element parse_element(const std::string& s)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Failure{"bad element '" + s + "'"};
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw Failure{"bad element '" + s + "'"};
    }
}

/// "a-b,c-d" -> {(a,b),(c,d)}; the empty string yields no pairs.
inline std::vector<std::pair<Element, Element>> parse_pairs(const std::string& s)
{
    std::vector<std::pair<Element, Element>> out;
    if (s.find_first_not_of(" \t") == std::string::npos)
        return out;
    for (const auto& item : split(s, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw Failure{"bad pair '" + item + "', expected a-b"};
        out.emplace_back(parse_element(item.substr(0, dash)), parse_element(item.substr(dash + 1)));
    }
    return out;
}

inline nlohmann::json blocks_json(const Partition& p)
{
    auto j = nlohmann::json::array();
    for (const auto& b : p.blocks())
        j.push_back(b);
    return j;
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text))
        throw Failure{"cannot write '" + out_path + "'"};
}

inline std::string tuple_text(const Tuple& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? ", " : "") + std::to_string(t[i]);
    return s + ")";
}

} // namespace detail

/// Runs the `ual` command line. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite universal algebra toolkit", "ual"};
    app.require_subcommand(1);
    std::size_t max_size = kDefaultEnumerationBound;
    app.add_option("--max-size", max_size, "Largest carrier for congruence enumeration")->capture_default_str();

    std::string file, alg_name, part_name, rel_name, pairs, out_path, algebras, format = "text";
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Spec-language file (.ual)")->required(); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* check = app.add_subcommand("check", "Parse and validate a file");
    add_file(check);

    auto* congruences = app.add_subcommand("congruences", "List every congruence of an algebra");
    add_file(congruences);
    congruences->add_option("--algebra", alg_name)->required();
    add_format(congruences);

    auto* generated = app.add_subcommand("generated", "Smallest congruence containing the given pairs");
    add_file(generated);
    generated->add_option("--algebra", alg_name)->required();
    generated->add_option("--pairs", pairs, "Pairs as a-b,c-d")->required();

    auto* quotient = app.add_subcommand("quotient", "Quotient of an algebra by a congruence");
    add_file(quotient);
    quotient->add_option("--algebra", alg_name)->required();
    quotient->add_option("--partition", part_name)->required();
    quotient->add_option("--out", out_path, "Write the quotient to this file");

    auto* product = app.add_subcommand("product", "Direct product of algebras");
    add_file(product);
    product->add_option("--algebras", algebras, "Comma-separated factor names")->required();
    product->add_option("--out", out_path, "Write the product to this file");
    add_format(product);

    auto* compatible = app.add_subcommand("compatible", "Does an algebra preserve a relation or partition?");
    add_file(compatible);
    compatible->add_option("--algebra", alg_name)->required();
    auto* rel_opt = compatible->add_option("--relation", rel_name);
    auto* part_opt = compatible->add_option("--partition", part_name);
    rel_opt->excludes(part_opt);
    part_opt->excludes(rel_opt);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "ual: " << e.what() << '\n';
        return kExitError;
    }

    try {
        if (check->parsed()) {
            auto doc = detail::load(file, err);
            out << "ok: " << doc.signatures().size() << " signature(s), " << doc.algebras().size()
                << " algebra(s), " << doc.relations().size() << " relation(s), " << doc.partitions().size()
                << " partition(s)\n";
            return kExitOk;
        }

        if (congruences->parsed()) {
            auto doc = detail::load(file, err);
            const auto& a = detail::algebra(doc, alg_name);
            auto cons = all_congruences(a, max_size);
            if (format == "json") {
                nlohmann::json j;
                j["algebra"] = a.name();
                j["count"] = cons.size();
                j["congruences"] = nlohmann::json::array();
                for (const auto& c : cons)
                    j["congruences"].push_back(detail::blocks_json(c.partition()));
                out << j.dump() << '\n';
            } else {
                out << a.name() << ": " << cons.size() << " congruence(s)\n";
                for (const auto& c : cons)
                    out << c.partition().to_string() << '\n';
            }
            return kExitOk;
        }

        if (generated->parsed()) {
            auto doc = detail::load(file, err);
            const auto& a = detail::algebra(doc, alg_name);
            auto prs = detail::parse_pairs(pairs);
            auto theta = generated_congruence(a, prs);
            out << theta.partition().to_string() << '\n';
            return kExitOk;
        }

        if (quotient->parsed()) {
            auto doc = detail::load(file, err);
            const auto& a = detail::algebra(doc, alg_name);
            const auto& p = detail::partition_for(doc, part_name, a);
            auto checked = check_congruence(a, p);
            if (auto* v = std::get_if<CongruenceViolation>(&checked)) {
                out << "not a congruence: " << v->to_string() << '\n';
                return kExitFalse;
            }
            const auto& theta = std::get<Congruence>(checked);
            spec::SpecDocument result;
            result.add(a.signature());
            result.add(quotient_algebra(a, theta, a.name() + "_" + part_name));
            detail::emit(spec::serialize(result), out_path, out);
            if (!out_path.empty())
                out << "wrote " << out_path << '\n';
            return kExitOk;
        }

        if (product->parsed()) {
            auto doc = detail::load(file, err);
            std::vector<FinAlgebra> factors;
            for (const auto& name : detail::split(algebras, ','))
                factors.push_back(detail::algebra(doc, name));
            if (factors.empty())
                throw detail::Failure{"no factors given"};
            const Signature sig = factors.front().signature();
            for (const auto& f : factors)
                if (f.signature() != sig)
                    throw detail::Failure{"algebra '" + f.name() + "' is not over signature '" + sig.name() + "'"};
            const auto prod = ualg::product(sig, factors);
            const auto layout = product_layout(factors);

            spec::SpecDocument result;
            result.add(sig);
            result.add(prod);
            const std::string text = spec::serialize(result);
            if (!out_path.empty())
                detail::emit(text, out_path, out);

            if (format == "json") {
                nlohmann::json j;
                j["algebra"] = prod.name();
                j["carrier"] = prod.carrier().size;
                j["factors"] = nlohmann::json::array();
                for (const auto& f : factors)
                    j["factors"].push_back(f.name());
                j["elements"] = nlohmann::json::array();
                for (Element e = 0; e < prod.carrier().size; ++e)
                    j["elements"].push_back({{"index", e}, {"tuple", layout.decode(e)}});
                out << j.dump() << '\n';
            } else {
                if (out_path.empty())
                    out << text;
                for (Element e = 0; e < prod.carrier().size; ++e)
                    out << "# " << e << " = " << detail::tuple_text(layout.decode(e)) << '\n';
            }
            return kExitOk;
        }

        if (compatible->parsed()) {
            auto doc = detail::load(file, err);
            const auto& a = detail::algebra(doc, alg_name);
            if (rel_opt->count() == 0 && part_opt->count() == 0)
                throw detail::Failure{"one of --relation or --partition is required"};
            if (part_opt->count() > 0) {
                const auto& p = detail::partition_for(doc, part_name, a);
                auto checked = check_congruence(a, p);
                if (auto* v = std::get_if<CongruenceViolation>(&checked)) {
                    out << "not compatible: " << v->to_string() << '\n';
                    return kExitFalse;
                }
                out << "compatible\n";
                return kExitOk;
            }
            auto* r = doc.find_relation(rel_name);
            if (!r)
                throw detail::Failure{"no relation named '" + rel_name + "'"};
            if (r->relation.carrier() != a.carrier())
                throw detail::Failure{"relation '" + rel_name + "' is not over the carrier of algebra '" + a.name() +
                                      "'"};
            if (r->relation.arity() == 2) {
                if (auto w = find_incompatibility(a, cont_as_binary(r->relation))) {
                    out << "not compatible: symbol '" << w->symbol << "' maps related " << to_string(w->witness.u)
                        << " and " << to_string(w->witness.v) << " to unrelated " << w->witness.fu << " and "
                        << w->witness.fv << '\n';
                    return kExitFalse;
                }
            } else if (auto w = find_cont_incompatibility(a, r->relation)) {
                out << "not compatible: symbol '" << w->symbol << "' maps columns";
                for (std::size_t j = 0; j < w->witness.args.cols(); ++j)
                    out << ' ' << to_string(w->witness.args.column(j));
                out << " to " << to_string(w->witness.result) << ", not in the relation\n";
                return kExitFalse;
            }
            out << "compatible\n";
            return kExitOk;
        }
    } catch (const detail::Failure& f) {
        if (!f.message.empty())
            err << "ual: " << f.message << '\n';
        return kExitError;
    } catch (const Error& e) {
        err << "ual: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

} // namespace ualg::cli

#endif // UALG_TOOLS_UAL_CLI_HPP
