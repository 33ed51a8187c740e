#pragma once

#include "htower/errors.hpp"
#include "htower/expr.hpp"
#include "htower/label_template.hpp"
#include "htower/rootsys.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#if __has_include("htower_catalog_data.hpp")
#include "htower_catalog_data.hpp"
#define HTOWER_HAS_EMBEDDED_CATALOG 1
#endif

namespace htower {

enum class FieldKind { real, padic };

inline std::string field_name(FieldKind f) { return f == FieldKind::real ? "real" : "padic"; }

struct FormDescriptor {
    std::string label;
    FieldKind field = FieldKind::real;
    SimpleType absolute;
    int split_rank = 0;
    int anisotropic_dim = 0;
    SimpleType restricted;
    std::map<std::string, int> mult;  // length class -> multiplicity
    std::string successor;            // label of the next form in the cascade, "" if none

    friend bool operator==(const FormDescriptor& a, const FormDescriptor& b) {
        return a.label == b.label && a.field == b.field;
    }
};

struct RestrictedRootSystem {
    RootSystem roots;
    std::map<std::string, int> mult;

    int mult_of(const Root& a) const {
        Root p = is_positive(a) ? a : -a;
        return mult.at(roots.length_class(p));
    }
    int total_mult() const {
        int s = 0;
        for (const auto& r : roots.positive_roots()) s += 2 * mult_of(r);
        return s;
    }
};

// Absolute type of so(n) for n >= 5.
inline SimpleType orthogonal_type(long n) {
    if (n == 3) return {Family::A, 1};
    if (n == 5) return {Family::B, 2};
    if (n == 6) return {Family::A, 3};
    if (n < 5) throw InputError("so(" + std::to_string(n) + ") is not absolutely simple");
    if (n % 2) return {Family::B, static_cast<int>((n - 1) / 2)};
    return {Family::D, static_cast<int>(n / 2)};
}

inline int lie_algebra_dimension(const SimpleType& t) {
    const int l = t.rank;
    switch (t.family) {
    case Family::A: return l * (l + 2);
    case Family::B:
    case Family::C: return l * (2 * l + 1);
    case Family::D: return l * (2 * l - 1);
    case Family::E: return l == 6 ? 78 : (l == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
    case Family::BC: break;
    }
    throw InputError("no Lie algebra of type " + t.str());
}

inline std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

class Catalog {
public:
    struct Entry {
        LabelTemplate label;
        Expr when;
        FieldKind field = FieldKind::real;
        std::string absolute;  // type template or orth(<n>)
        Expr split_rank, anisotropic_dim;
        LabelTemplate restricted;
        std::vector<std::pair<std::string, Expr>> mults;
        std::optional<LabelTemplate> successor;
        Expr successor_when;
        int line = 0;
    };
    struct Alias {
        LabelTemplate label;
        Expr when;
        LabelTemplate target;
        int line = 0;
    };

    Catalog() = default;

    static Catalog parse(const std::string& text) {
        Catalog c;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto f = split(line);
            if (f.empty() || (f.size() == 1 && f[0].empty())) continue;
            auto where = [&](const std::string& m) {
                return InputError("catalog line " + std::to_string(lineno) + ": " + m);
            };
            if (f[0] == "form") {
                if (f.size() != 10) throw where("expected 10 fields, got " + std::to_string(f.size()));
                Entry e;
                e.line = lineno;
                e.label = LabelTemplate(f[1]);
                e.when = Expr(f[2] == "-" ? "1" : f[2]);
                if (f[3] == "real") e.field = FieldKind::real;
                else if (f[3] == "padic") e.field = FieldKind::padic;
                else throw where("unknown field '" + f[3] + "'");
                e.absolute = f[4];
                e.split_rank = Expr(f[5]);
                e.anisotropic_dim = Expr(f[6]);
                e.restricted = LabelTemplate(f[7]);
                std::stringstream ms(f[8]);
                std::string item;
                while (std::getline(ms, item, ',')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos) throw where("bad multiplicity '" + item + "'");
                    e.mults.emplace_back(trim(item.substr(0, eq)), Expr(item.substr(eq + 1)));
                }
                if (f[9] != "-") {
                    std::string s = f[9], cond = "1";
                    auto pos = s.find(" if ");
                    if (pos != std::string::npos) {
                        cond = s.substr(pos + 4);
                        s = trim(s.substr(0, pos));
                    }
                    e.successor = LabelTemplate(s);
                    e.successor_when = Expr(cond);
                }
                c.entries_.push_back(std::move(e));
            } else if (f[0] == "alias") {
                if (f.size() != 4) throw where("expected 4 fields, got " + std::to_string(f.size()));
                c.aliases_.push_back({LabelTemplate(f[1]), Expr(f[2] == "-" ? "1" : f[2]), LabelTemplate(f[3]), lineno});
            } else {
                throw where("unknown record '" + f[0] + "'");
            }
        }
        return c;
    }

    static Catalog load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open catalog " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse(ss.str());
    }

    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<Alias>& aliases() const { return aliases_; }

    std::optional<FormDescriptor> find(const std::string& label, int depth = 0) const {
        for (const auto& e : entries_) {
            auto env = e.label.match(label);
            if (env && e.when.eval(*env)) return instantiate(e, *env);
        }
        if (depth > 4) return std::nullopt;
        for (const auto& a : aliases_) {
            auto env = a.label.match(label);
            if (env && a.when.eval(*env)) return find(a.target.instantiate(*env), depth + 1);
        }
        return std::nullopt;
    }

    FormDescriptor lookup(const std::string& label) const {
        if (auto f = find(label)) return *f;
        std::string msg = "no form '" + label + "' in catalog";
        auto near = nearest(label, 3);
        if (!near.empty()) {
            msg += "; nearest:";
            for (const auto& n : near) msg += " " + n;
        }
        throw CatalogMiss(msg);
    }

    // Small instances of every entry, used for suggestions and validation.
    std::vector<std::pair<int, Expr::Env>> sample_instances(int max_value = 12) const {
        std::vector<std::pair<int, Expr::Env>> out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            std::vector<std::string> vars;
            for (const auto& v : entries_[i].label.variables()) vars.push_back(v);
            std::vector<long> val(vars.size(), 0);
            while (true) {
                Expr::Env env;
                for (std::size_t k = 0; k < vars.size(); ++k) env[vars[k]] = val[k];
                if (entries_[i].when.eval(env)) out.emplace_back(static_cast<int>(i), env);
                std::size_t k = 0;
                while (k < vars.size() && ++val[k] > max_value) val[k++] = 0;
                if (k == vars.size()) break;
            }
        }
        return out;
    }

    std::vector<std::string> all_sample_labels(int max_value = 12) const {
        std::vector<std::string> out;
        for (const auto& [i, env] : sample_instances(max_value)) out.push_back(entries_[i].label.instantiate(env));
        return out;
    }

    std::vector<std::string> nearest(const std::string& label, std::size_t k) const {
        std::string n = normalize_label(label);
        std::vector<std::pair<std::size_t, std::string>> scored;
        for (const auto& s : all_sample_labels(8)) scored.emplace_back(edit_distance(n, normalize_label(s)), s);
        std::sort(scored.begin(), scored.end());
        std::vector<std::string> out;
        for (const auto& [d, s] : scored) {
            if (out.size() == k) break;
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
        return out;
    }

    FormDescriptor instantiate(const Entry& e, const Expr::Env& env) const {
        FormDescriptor f;
        f.label = e.label.instantiate(env);
        f.field = e.field;
        if (e.absolute.rfind("orth(", 0) == 0) {
            LabelTemplate t(e.absolute);
            f.absolute = orthogonal_type(Expr(e.absolute.substr(6, e.absolute.size() - 8)).eval(env));
        } else {
            auto t = parse_simple_type(LabelTemplate(e.absolute).instantiate(env));
            if (!t) throw InputError("catalog line " + std::to_string(e.line) + ": bad absolute type");
            f.absolute = *t;
        }
        require_legal(f.absolute);
        f.split_rank = static_cast<int>(e.split_rank.eval(env));
        f.anisotropic_dim = static_cast<int>(e.anisotropic_dim.eval(env));
        auto rt = parse_simple_type(e.restricted.instantiate(env));
        if (!rt) throw InputError("catalog line " + std::to_string(e.line) + ": bad restricted type");
        f.restricted = *rt;
        require_legal(f.restricted, true);
        RootSystem rs = build_restricted_root_system(f.restricted);
        std::set<std::string> classes;
        for (const auto& r : rs.positive_roots()) classes.insert(rs.length_class(r));
        for (const auto& [cls, ex] : e.mults) {
            int v = static_cast<int>(ex.eval(env));
            if (cls == "all") {
                for (const auto& c : classes) f.mult[c] = v;
            } else {
                if (!classes.count(cls))
                    throw InputError("catalog line " + std::to_string(e.line) + ": class '" + cls + "' absent from " +
                                     f.restricted.str());
                f.mult[cls] = v;
            }
        }
        for (const auto& c : classes)
            if (!f.mult.count(c))
                throw InputError("catalog line " + std::to_string(e.line) + ": no multiplicity for class '" + c + "'");
        if (e.successor && e.successor_when.eval(env)) f.successor = e.successor->instantiate(env);
        return f;
    }

private:
    static std::string trim(const std::string& s) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }
    static std::vector<std::string> split(const std::string& line) {
        std::vector<std::string> out;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, '|')) out.push_back(trim(item));
        if (!line.empty() && line.back() == '|') out.emplace_back();
        if (out.size() == 1 && out[0].empty()) out.clear();
        return out;
    }

    std::vector<Entry> entries_;
    std::vector<Alias> aliases_;
};

namespace detail {
inline std::unique_ptr<Catalog>& catalog_slot() {
    static std::unique_ptr<Catalog> slot;
    return slot;
}
} // namespace detail

// Process-wide catalog: the embedded data unless replaced by load_catalog().
inline const Catalog& default_catalog() {
    auto& slot = detail::catalog_slot();
    if (!slot) {
#ifdef HTOWER_HAS_EMBEDDED_CATALOG
        slot = std::make_unique<Catalog>(Catalog::parse(embedded_catalog_text()));
#else
        throw InputError("no embedded forms catalog; call load_catalog(path)");
#endif
    }
    return *slot;
}

inline void load_catalog(const std::string& path) {
    detail::catalog_slot() = std::make_unique<Catalog>(Catalog::load(path));
}

inline FormDescriptor lookup_form(const std::string& label) { return default_catalog().lookup(label); }

inline RestrictedRootSystem restricted_system(const FormDescriptor& f) {
    return {build_restricted_root_system(f.restricted), f.mult};
}

inline int form_dimension(const FormDescriptor& f) { return lie_algebra_dimension(f.absolute); }

struct GdefineResult {
    bool ok = false;
    std::string reason;
};

inline GdefineResult check_gdefine(const FormDescriptor& f) {
    if (f.absolute == SimpleType{Family::A, 1}) return {false, "absolute type is A1"};
    RestrictedRootSystem r = restricted_system(f);
    int m = r.mult_of(r.roots.highest_root());
    if (m != 1) return {false, "highest restricted root multiplicity " + std::to_string(m)};
    return {true, ""};
}

inline bool satisfies_gdefine(const FormDescriptor& f) { return check_gdefine(f).ok; }

// Dimension accounting, label round trips and successor resolution over
// small instances of every entry. Returns one line per problem.
inline std::vector<std::string> validate_catalog(const Catalog& c, int max_value = 9) {
    std::vector<std::string> problems;
    for (const auto& [i, env] : c.sample_instances(max_value)) {
        const auto& e = c.entries()[i];
        try {
            FormDescriptor f = c.instantiate(e, env);
            RestrictedRootSystem r = restricted_system(f);
            int lhs = form_dimension(f), rhs = f.anisotropic_dim + f.split_rank + r.total_mult();
            if (lhs != rhs)
                problems.push_back(f.label + ": dimension " + std::to_string(lhs) + " != " + std::to_string(rhs));
            if (f.split_rank != f.restricted.rank)
                problems.push_back(f.label + ": split rank differs from restricted rank");
            auto back = c.find(f.label);
            if (!back || back->label != f.label) problems.push_back(f.label + ": label does not resolve to itself");
            if (!f.successor.empty() && !c.find(f.successor))
                problems.push_back(f.label + ": successor " + f.successor + " not in catalog");
        } catch (const std::exception& ex) {
            problems.push_back("catalog line " + std::to_string(e.line) + ": " + ex.what());
        }
    }
    return problems;
}

inline std::string split_form_label(const SimpleType& t) {
    require_legal(t);
    const std::string l = std::to_string(t.rank);
    switch (t.family) {
    case Family::A: return "sl_" + std::to_string(t.rank + 1) + "(R)";
    case Family::B: return "so(" + l + "," + std::to_string(t.rank + 1) + ")";
    case Family::C: return "sp_" + std::to_string(2 * t.rank) + "(R)";
    case Family::D: return "so(" + l + "," + l + ")";
    case Family::E: return t.rank == 6 ? "(e6,sp4)" : (t.rank == 7 ? "(e7,su8)" : "(e8,so(12))");
    case Family::F: return "(f4,sp3xsu2)";
    case Family::G: return "(g2,su2xsu2)";
    case Family::BC: break;
    }
    throw InputError("no split form for " + t.str());
}

inline FormDescriptor split_form(const SimpleType& t) { return lookup_form(split_form_label(t)); }

inline bool is_split(const FormDescriptor& f) {
    if (f.split_rank != f.absolute.rank) return false;
    return std::all_of(f.mult.begin(), f.mult.end(), [](const auto& kv) { return kv.second == 1; });
}

} // namespace htower
