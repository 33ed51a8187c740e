#pragma once

#include "htower/chevalley.hpp"
#include "htower/errors.hpp"
#include "htower/forms.hpp"
#include "htower/matrix.hpp"
#include "htower/rootsys.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace htower {

// One irreducible summand of g_1 under [g_0, g_0]: its highest root and the
// highest weight on each Levi component (fundamental-weight coordinates, in
// the component's own node order).
struct G1Summand {
    Root highest;
    std::vector<std::vector<int>> weights;
};

struct HeisenbergParabolicInfo {
    std::vector<int> removed;  // S, 0-based simple-root indices
    std::vector<Component> levi;
    int g1_dim = 0;
    std::vector<G1Summand> summands;
    Root center;

    std::string levi_str() const;
    std::string g1_str() const;
};

struct RestrictedHeisenbergInfo {
    std::vector<int> removed;  // T
    int nilradical_dim = 0;
    int n_value = 0;
    Root center;
};

inline std::string weight_str(const std::vector<int>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i]) continue;
        if (!out.empty()) out += "+";
        if (w[i] != 1) out += std::to_string(w[i]);
        out += "w" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

inline std::string HeisenbergParabolicInfo::levi_str() const {
    std::string out;
    for (const auto& c : levi) out += (out.empty() ? "" : "x") + c.type.str();
    return out;
}

inline std::string HeisenbergParabolicInfo::g1_str() const {
    auto tensor = [](const G1Summand& s) {
        std::string out;
        for (const auto& w : s.weights) out += (out.empty() ? "" : "(x)") + ("V(" + weight_str(w) + ")");
        return out;
    };
    if (summands.size() == 2 && summands[0].weights.size() == 1) {
        auto a = summands[0].weights[0], b = summands[1].weights[0];
        std::vector<int> rb(b.rbegin(), b.rend());
        if (a == rb) {
            // Present the pair as V(w)+V(w)* with w the weight on the earliest node.
            const auto& w = std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()) ? a : b;
            return "V(" + weight_str(w) + ")+V(" + weight_str(w) + ")*";
        }
    }
    std::string out;
    for (const auto& s : summands) out += (out.empty() ? "" : "+") + tensor(s);
    return out;
}

namespace detail {

// Level-1 roots split into connected pieces under adding or subtracting Levi simple roots.
inline std::vector<std::vector<Root>> g1_pieces(const RootSystem& rs, const std::vector<Root>& level1,
                                                const std::vector<int>& J) {
    std::set<Root> left(level1.begin(), level1.end());
    std::vector<std::vector<Root>> out;
    while (!left.empty()) {
        std::vector<Root> piece{*left.begin()};
        left.erase(left.begin());
        for (std::size_t k = 0; k < piece.size(); ++k)
            for (int j : J)
                for (int sgn : {1, -1}) {
                    Root nb = piece[k] + scaled(rs.simple(j), sgn);
                    auto it = left.find(nb);
                    if (it != left.end()) {
                        piece.push_back(nb);
                        left.erase(it);
                    }
                }
        out.push_back(std::move(piece));
    }
    return out;
}

} // namespace detail

inline HeisenbergParabolicInfo heisenberg_parabolic(const RootSystem& rs) {
    if (rs.type() == SimpleType{Family::A, 1}) throw PreconditionError("gdefine", "g is sl2");
    HeisenbergParabolicInfo info;
    info.center = rs.highest_root();
    std::vector<int> J;
    for (int i = 0; i < rs.rank(); ++i) {
        if (rs.inner(rs.simple(i), info.center) != 0) info.removed.push_back(i);
        else J.push_back(i);
    }
    info.levi = rs.components(J);
    auto grading = rs.coroot_grading(info.center);
    const auto& level1 = grading[1];
    info.g1_dim = static_cast<int>(level1.size());
    for (auto& piece : detail::g1_pieces(rs, level1, J)) {
        G1Summand s;
        for (const auto& r : piece) {
            bool top = std::none_of(J.begin(), J.end(), [&](int j) {
                return std::find(piece.begin(), piece.end(), r + rs.simple(j)) != piece.end();
            });
            if (top) s.highest = r;
        }
        for (const auto& c : info.levi) {
            std::vector<int> w;
            for (int node : c.nodes) w.push_back(rs.pairing(s.highest, rs.simple(node)));
            // The short end node of B_l alone is B_1 = so(3): its fundamental weight is the vector representation.
            if (rs.type().family == Family::B && c.type == SimpleType{Family::A, 1} && c.nodes[0] == rs.rank() - 1)
                w[0] /= 2;
            s.weights.push_back(w);
        }
        info.summands.push_back(std::move(s));
    }
    std::sort(info.summands.begin(), info.summands.end(),
              [](const G1Summand& a, const G1Summand& b) { return a.highest > b.highest; });
    return info;
}

// Rank of <X, Y>_1 on g_1, read off [e_a, e_b] = N_{a,b} e_{highest}.
inline int symplectic_form_rank_check(const RootSystem& rs, const ChevalleyConstants* nc = nullptr) {
    if (rs.type() == SimpleType{Family::A, 1}) throw PreconditionError("gdefine", "g is sl2");
    std::unique_ptr<ChevalleyConstants> own;
    if (!nc) {
        own = std::make_unique<ChevalleyConstants>(rs);
        nc = own.get();
    }
    Root top = rs.highest_root();
    auto level1 = rs.coroot_grading(top)[1];
    std::vector<SparseRow> rows;
    for (const auto& a : level1) {
        SparseRow row;
        for (std::size_t j = 0; j < level1.size(); ++j)
            if (a + level1[j] == top) row.emplace_back(static_cast<int>(j), Q(nc->N(a, level1[j])));
        rows.push_back(std::move(row));
    }
    return static_cast<int>(sparse_rank(rows));
}

inline RestrictedHeisenbergInfo restricted_heisenberg(const FormDescriptor& f) {
    auto g = check_gdefine(f);
    if (!g.ok) throw PreconditionError("gdefine", g.reason);
    RestrictedRootSystem r = restricted_system(f);
    RestrictedHeisenbergInfo info;
    info.center = r.roots.highest_root();
    for (int i = 0; i < r.roots.rank(); ++i)
        if (r.roots.inner(r.roots.simple(i), info.center) != 0) info.removed.push_back(i);
    for (const auto& a : r.roots.positive_roots()) {
        int lvl = r.roots.pairing(a, info.center);
        if (lvl == 1 || lvl == 2) info.nilradical_dim += r.mult_of(a);
    }
    if (info.nilradical_dim % 2 == 0)
        throw ConsistencyError(f.label + ": Heisenberg nilradical has even dimension");
    info.n_value = (info.nilradical_dim - 1) / 2;
    return info;
}

} // namespace htower
