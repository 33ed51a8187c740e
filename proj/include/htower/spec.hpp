#pragma once

#include "htower/classical.hpp"
#include "htower/errors.hpp"
#include "htower/forms.hpp"
#include "htower/rootsys.hpp"

#include <cctype>
#include <optional>
#include <regex>
#include <string>
#include <variant>

namespace htower {

// An SL_n(R) handled by the type II dictionary.
struct SLGroup {
    int n = 0;
    std::string name() const { return "SL(" + std::to_string(n) + ",R)"; }
    bool operator==(const SLGroup& o) const { return n == o.n; }
};

struct GroupSpec {
    std::string raw;
    std::variant<SimpleType, FormDescriptor, TypeIGroup, SLGroup> resolved;

    bool is_split_type() const { return std::holds_alternative<SimpleType>(resolved); }
    bool is_form() const { return std::holds_alternative<FormDescriptor>(resolved); }
    bool is_classical() const { return std::holds_alternative<TypeIGroup>(resolved); }
    bool is_sl() const { return std::holds_alternative<SLGroup>(resolved); }

    // The Lie algebra as a catalog form; split types use their split form.
    FormDescriptor form() const {
        if (auto t = std::get_if<SimpleType>(&resolved)) return split_form(*t);
        if (auto f = std::get_if<FormDescriptor>(&resolved)) return *f;
        if (auto g = std::get_if<TypeIGroup>(&resolved)) return lookup_form(g->form_label);
        return lookup_form("sl_" + std::to_string(std::get<SLGroup>(resolved).n) + "(R)");
    }
};

struct SpecParseError : InputError {
    std::size_t position;
    SpecParseError(const std::string& input, std::size_t pos, const std::string& msg)
        : InputError("cannot parse '" + input + "' at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline std::optional<GroupSpec> parse_classical(const std::string& raw, const std::string& s) {
    static const std::regex head(R"(^(SO\*|SO|SU|Sp|SL)\s*\()");
    std::smatch m;
    if (!std::regex_search(s, m, head)) return std::nullopt;
    const std::string kind = m[1];
    std::size_t pos = m.length(0);
    std::vector<std::string> args;
    std::string cur;
    for (; pos < s.size() && s[pos] != ')'; ++pos) {
        if (s[pos] == ',') {
            args.push_back(trim(cur));
            cur.clear();
        } else {
            cur += s[pos];
        }
    }
    if (pos >= s.size()) throw SpecParseError(raw, s.size(), "missing ')'");
    if (pos + 1 != s.size()) throw SpecParseError(raw, pos + 1, "trailing characters after ')'");
    args.push_back(trim(cur));
    auto number = [&](std::size_t k) {
        const std::string& a = args.at(k);
        if (a.empty() || a.find_first_not_of("0123456789") != std::string::npos)
            throw SpecParseError(raw, s.find(a, m.length(0)), "expected a number, got '" + a + "'");
        return std::stoi(a);
    };
    auto field_R = [&](std::size_t k) {
        if (args.at(k) != "R") throw SpecParseError(raw, s.find(args[k], m.length(0)), "only R is supported here");
    };
    GroupSpec g{raw, SimpleType{}};
    if (kind == "SO*") {
        if (args.size() != 1) throw SpecParseError(raw, m.length(0), "SO*(2n) takes one argument");
        g.resolved = make_so_star(number(0));
    } else if (kind == "SO" || kind == "SU") {
        if (args.size() != 2) throw SpecParseError(raw, m.length(0), kind + "(p,q) takes two arguments");
        g.resolved = kind == "SO" ? make_so(number(0), number(1)) : make_su(number(0), number(1));
    } else if (kind == "Sp") {
        if (args.size() != 2) throw SpecParseError(raw, m.length(0), "use Sp(2n,R) or Sp(p,q)");
        if (args[1] == "R") g.resolved = make_sp_real(number(0));
        else g.resolved = make_sp_quat(number(0), number(1));
    } else {
        if (args.size() != 2) throw SpecParseError(raw, m.length(0), "use SL(n,R)");
        field_R(1);
        int n = number(0);
        if (n < 2) throw SpecParseError(raw, m.length(0), "SL(n,R) needs n >= 2");
        g.resolved = SLGroup{n};
    }
    return g;
}

} // namespace detail

// Cartan labels ("E8", "C3 split"), catalog real forms and Tits indices, and
// classical groups ("SO(6,6)", "SL(5,R)", "Sp(6,R)", "SU(2,3)", "SO*(12)", "Sp(2,3)").
inline GroupSpec parse_group_spec(const std::string& input) {
    std::string s = detail::trim(input);
    if (s.empty()) throw SpecParseError(input, 0, "empty group specification");
    static const std::string suffix = " split";
    std::string base = s;
    bool split_suffix = false;
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
        base = detail::trim(s.substr(0, s.size() - suffix.size()));
        split_suffix = true;
    }
    if (auto t = parse_simple_type(base); t && std::isupper(static_cast<unsigned char>(base[0]))) {
        require_legal(*t);
        return {input, *t};
    }
    if (split_suffix) throw SpecParseError(input, 0, "'split' follows a Cartan label such as C3");
    if (auto g = detail::parse_classical(input, s)) return *g;
    try {
        return {input, lookup_form(s)};
    } catch (const CatalogMiss& e) {
        throw SpecParseError(input, 0, e.what());
    }
}

inline std::string format_group_spec(const GroupSpec& g) {
    return std::visit(
        [](const auto& x) -> std::string {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, SimpleType>) return x.str();
            else if constexpr (std::is_same_v<X, FormDescriptor>) return x.label;
            else if constexpr (std::is_same_v<X, TypeIGroup>) return x.name;
            else return x.name();
        },
        g.resolved);
}

inline bool same_group(const GroupSpec& a, const GroupSpec& b) { return a.resolved == b.resolved; }

} // namespace htower
