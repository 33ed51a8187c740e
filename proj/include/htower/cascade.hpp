#pragma once

#include "htower/errors.hpp"
#include "htower/forms.hpp"
#include "htower/heisenberg.hpp"
#include "htower/rootsys.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace htower {

// The m of one cascade step, or nullopt when the cascade stops.
inline std::optional<SimpleType> next_m(const SimpleType& t) {
    require_legal(t);
    const int l = t.rank;
    switch (t.family) {
    case Family::A:
        if (l == 1) throw PreconditionError("gdefine", "g is sl2");
        if (l <= 3) return std::nullopt;
        return SimpleType{Family::A, l - 2};
    case Family::B:
        if (l <= 3) return std::nullopt;
        if (l == 4) return SimpleType{Family::B, 2};
        return SimpleType{Family::B, l - 2};
    case Family::C:
        if (l == 2) return std::nullopt;
        return SimpleType{Family::C, l - 1};
    case Family::D:
        if (l == 4) return std::nullopt;
        if (l == 5) return SimpleType{Family::A, 3};
        return SimpleType{Family::D, l - 2};
    case Family::E:
        if (l == 6) return SimpleType{Family::A, 5};
        if (l == 7) return SimpleType{Family::D, 6};
        return SimpleType{Family::E, 7};
    case Family::F: return SimpleType{Family::C, 3};
    case Family::G: return std::nullopt;
    case Family::BC: break;
    }
    throw InputError("next_m: unsupported type " + t.str());
}

// B2 and C2 name the same root system.
inline bool same_root_system(const SimpleType& a, const SimpleType& b) {
    auto canon = [](SimpleType t) {
        if (t.family == Family::C && t.rank == 2) t.family = Family::B;
        return t;
    };
    return canon(a) == canon(b);
}

struct CascadeStep {
    std::string ambient;     // type or form label of this step
    std::vector<int> nodes;  // J_i: simple roots of the ambient, in original coordinates
    Root beta_tilde;         // original coordinates
    std::vector<int> removed;
    std::string next;  // "" when the cascade stops here
    int layer_dim = 0;
};

struct HTower {
    std::string form;
    std::vector<CascadeStep> steps;
    std::vector<int> layer_dims;  // dim h^i
    std::vector<int> n_values;    // (dim h^i - 1) / 2
    int height = 0;
    std::vector<int> gamma_set;  // simple roots outside every removed set

    // m of the first step as printed in the tables: the successor label, or "--".
    std::string m_label() const { return steps.empty() || steps[0].next.empty() ? "--" : steps[0].next; }
};

namespace detail {

// Positive roots of span(J) at level 1 or 2 for the coroot of `top`.
inline std::vector<Root> layer_roots(const RootSystem& rs, const std::vector<int>& J, const Root& top) {
    std::vector<Root> out;
    for (const auto& a : rs.positive_roots_in(J)) {
        int lvl = rs.pairing(a, top);
        if (lvl == 1 || lvl == 2) out.push_back(a);
    }
    return out;
}

inline std::vector<int> removed_nodes(const RootSystem& rs, const std::vector<int>& J, const Root& top) {
    std::vector<int> S;
    for (int j : J)
        if (rs.inner(rs.simple(j), top) != 0) S.push_back(j);
    return S;
}

inline std::vector<int> minus(const std::vector<int>& J, const std::vector<int>& S) {
    std::vector<int> out;
    for (int j : J)
        if (std::find(S.begin(), S.end(), j) == S.end()) out.push_back(j);
    return out;
}

// Multiplicities a component inherits, keyed by the component's own length classes.
inline std::optional<std::map<std::string, int>> inherited_mults(const RestrictedRootSystem& r,
                                                                  const std::vector<int>& nodes) {
    auto roots = r.roots.positive_roots_in(nodes);
    std::set<Q> lengths;
    for (const auto& a : roots) lengths.insert(r.roots.norm2(a));
    std::vector<Q> sorted(lengths.begin(), lengths.end());
    static const std::vector<std::vector<std::string>> names = {{"all"}, {"short", "long"}, {"short", "mid", "long"}};
    std::map<std::string, int> out;
    for (const auto& a : roots) {
        auto k = std::find(sorted.begin(), sorted.end(), r.roots.norm2(a)) - sorted.begin();
        const std::string& cls = names.at(sorted.size() - 1).at(k);
        int m = r.mult_of(a);
        auto it = out.find(cls);
        if (it == out.end()) out[cls] = m;
        else if (it->second != m) return std::nullopt;
    }
    return out;
}

inline void finish(HTower& t, int rank) {
    t.height = static_cast<int>(t.steps.size());
    std::set<int> removed;
    for (const auto& s : t.steps) {
        t.layer_dims.push_back(s.layer_dim);
        t.n_values.push_back((s.layer_dim - 1) / 2);
        removed.insert(s.removed.begin(), s.removed.end());
    }
    for (int i = 0; i < rank; ++i)
        if (!removed.count(i)) t.gamma_set.push_back(i);
}

} // namespace detail

// Absolute cascade of a split type.
inline std::vector<CascadeStep> cascade_absolute(const SimpleType& t) {
    if (t == SimpleType{Family::A, 1}) throw PreconditionError("gdefine", "g is sl2");
    RootSystem rs = build_root_system(t);
    std::vector<CascadeStep> steps;
    std::vector<int> J(t.rank);
    for (int i = 0; i < t.rank; ++i) J[i] = i;
    SimpleType cur = t;
    while (true) {
        CascadeStep s;
        s.ambient = cur.str();
        s.nodes = J;
        s.beta_tilde = rs.highest_root_in(J);
        s.removed = detail::removed_nodes(rs, J, s.beta_tilde);
        s.layer_dim = static_cast<int>(detail::layer_roots(rs, J, s.beta_tilde).size());
        auto m = next_m(cur);
        if (m) {
            auto levi = rs.components(detail::minus(J, s.removed));
            auto it = std::find_if(levi.begin(), levi.end(), [&](const Component& c) { return same_root_system(c.type, *m); });
            if (it == levi.end()) throw ConsistencyError("cascade: no Levi component of type " + m->str());
            s.next = m->str();
            J = it->nodes;
            std::sort(J.begin(), J.end());
            cur = *m;
        }
        steps.push_back(std::move(s));
        if (!m) break;
    }
    return steps;
}

inline HTower cascade_form(const FormDescriptor& f) {
    auto gd = check_gdefine(f);
    if (!gd.ok) throw PreconditionError("gdefine", f.label + ": " + gd.reason);
    RestrictedRootSystem r = restricted_system(f);
    HTower tower;
    tower.form = f.label;
    std::vector<int> J(r.roots.rank());
    for (int i = 0; i < r.roots.rank(); ++i) J[i] = i;
    FormDescriptor cur = f;
    while (true) {
        CascadeStep s;
        s.ambient = cur.label;
        s.nodes = J;
        s.beta_tilde = r.roots.highest_root_in(J);
        s.removed = detail::removed_nodes(r.roots, J, s.beta_tilde);
        for (const auto& a : detail::layer_roots(r.roots, J, s.beta_tilde)) s.layer_dim += r.mult_of(a);

        std::optional<FormDescriptor> m;
        if (next_m(cur.absolute) && !cur.successor.empty()) {
            auto cand = lookup_form(cur.successor);
            if (satisfies_gdefine(cand)) m = cand;
        }
        if (m) {
            auto levi = r.roots.components(detail::minus(J, s.removed));
            std::vector<const Component*> hits;
            for (const auto& c : levi) {
                if (!same_root_system(c.type, m->restricted)) continue;
                auto mults = detail::inherited_mults(r, c.nodes);
                if (mults && *mults == m->mult) hits.push_back(&c);
            }
            if (hits.size() != 1)
                throw ConsistencyError("cascade of " + f.label + ": successor " + m->label + " matches " +
                                       std::to_string(hits.size()) + " Levi components");
            s.next = m->label;
            J = hits[0]->nodes;
            std::sort(J.begin(), J.end());
            cur = *m;
        }
        tower.steps.push_back(std::move(s));
        if (!m) break;
    }
    detail::finish(tower, r.roots.rank());
    return tower;
}

inline HTower cascade_split(const SimpleType& t) { return cascade_form(split_form(t)); }

struct ConsistencyReport {
    bool ok = true;
    int layer_total = 0;
    int ngamma_dim = 0;
    std::vector<std::string> failures;
};

inline ConsistencyReport htower_consistency(const HTower& t) {
    ConsistencyReport rep;
    FormDescriptor f = lookup_form(t.form);
    RestrictedRootSystem r = restricted_system(f);
    for (int d : t.layer_dims) rep.layer_total += d;
    for (const auto& a : r.roots.positive_roots())
        if (!r.roots.in_span(a, t.gamma_set)) rep.ngamma_dim += r.mult_of(a);
    if (rep.layer_total != rep.ngamma_dim)
        rep.failures.push_back("sum of layer dims " + std::to_string(rep.layer_total) + " != dim n_gamma " +
                               std::to_string(rep.ngamma_dim));
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        if (t.layer_dims[i] % 2 == 0 || t.layer_dims[i] < 3)
            rep.failures.push_back("layer " + std::to_string(i + 1) + " has dim " + std::to_string(t.layer_dims[i]));
        for (std::size_t j = i + 1; j < t.steps.size(); ++j) {
            const Root &a = t.steps[i].beta_tilde, &b = t.steps[j].beta_tilde;
            if (r.roots.inner(a, b) != 0 || r.roots.is_root(a + b) || r.roots.is_root(a - b))
                rep.failures.push_back("highest roots " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                       " are not strongly orthogonal");
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

} // namespace htower
