#pragma once

#include "htower/errors.hpp"
#include "htower/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace htower {

enum class Family { A, B, C, D, E, F, G, BC };

inline std::string family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
    }
    return "?";
}

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    std::string str() const { return family_name(family) + std::to_string(rank); }
    friend bool operator==(const SimpleType&, const SimpleType&) = default;
    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

// Absolute (reduced, irreducible) types. D needs rank >= 4: D3 is A3.
inline bool is_legal_absolute(const SimpleType& t) {
    switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
    case Family::BC: return false;
    }
    return false;
}

inline bool is_legal_restricted(const SimpleType& t) {
    return t.family == Family::BC ? t.rank >= 1 : is_legal_absolute(t);
}

inline void require_legal(const SimpleType& t, bool restricted = false) {
    if (restricted ? is_legal_restricted(t) : is_legal_absolute(t)) return;
    std::string hint;
    if (t.family == Family::D && t.rank == 3) hint = " (use A3)";
    if (t.family == Family::D && t.rank == 2) hint = " (use A1xA1)";
    if ((t.family == Family::B || t.family == Family::C) && t.rank == 1) hint = " (use A1)";
    throw InputError("illegal family/rank pair " + t.str() + hint);
}

// Accepts "E8", "E_8", "E_{8}", "BC2".
inline std::optional<SimpleType> parse_simple_type(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_' && ch != '{' && ch != '}') t += ch;
    if (t.empty()) return std::nullopt;
    SimpleType st;
    std::size_t pos = 1;
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    if (t.size() >= 2 && f == 'B' && std::toupper(static_cast<unsigned char>(t[1])) == 'C') {
        st.family = Family::BC;
        pos = 2;
    } else {
        switch (f) {
        case 'A': st.family = Family::A; break;
        case 'B': st.family = Family::B; break;
        case 'C': st.family = Family::C; break;
        case 'D': st.family = Family::D; break;
        case 'E': st.family = Family::E; break;
        case 'F': st.family = Family::F; break;
        case 'G': st.family = Family::G; break;
        default: return std::nullopt;
        }
    }
    if (pos >= t.size() || t.size() - pos > 3) return std::nullopt;
    for (std::size_t i = pos; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
    st.rank = std::stoi(t.substr(pos));
    return st;
}

using Root = std::vector<int>;

inline Root operator+(const Root& a, const Root& b) {
    Root c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}
inline Root operator-(const Root& a, const Root& b) {
    Root c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}
inline Root operator-(const Root& a) {
    Root c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}
inline Root scaled(const Root& a, int k) {
    Root c(a);
    for (auto& x : c) x *= k;
    return c;
}
inline int height(const Root& a) { return std::accumulate(a.begin(), a.end(), 0); }
inline bool is_positive(const Root& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; }) &&
           std::any_of(a.begin(), a.end(), [](int x) { return x > 0; });
}
inline Root unit_root(int rank, int i) {
    Root r(rank, 0);
    r[i] = 1;
    return r;
}

inline std::string root_str(const Root& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

// A connected piece of a Dynkin diagram, nodes listed in Bourbaki order
// (as indices into the ambient simple roots).
struct Component {
    SimpleType type;
    std::vector<int> nodes;
};

class RootSystem {
public:
    RootSystem() = default;

    const SimpleType& type() const { return type_; }
    int rank() const { return static_cast<int>(gram_.size()); }
    const std::vector<std::vector<Q>>& gram() const { return gram_; }
    const std::vector<Root>& positive_roots() const { return pos_; }
    std::size_t num_roots() const { return 2 * pos_.size(); }

    std::vector<Root> all_roots() const {
        std::vector<Root> out = pos_;
        for (const auto& r : pos_) out.push_back(-r);
        return out;
    }

    Q inner(const Root& a, const Root& b) const {
        Q s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < rank(); ++j)
                if (b[j]) s += a[i] * b[j] * gram_[i][j];
        }
        return s;
    }
    Q norm2(const Root& a) const { return inner(a, a); }

    // <a, b^vee> = 2(a,b)/(b,b)
    int pairing(const Root& a, const Root& b) const {
        Q v = 2 * inner(a, b) / norm2(b);
        if (v.get_den() != 1) throw ConsistencyError("non-integral Cartan pairing");
        return static_cast<int>(v.get_num().get_si());
    }

    std::optional<int> index_of(const Root& a) const {
        auto it = idx_.find(a);
        if (it == idx_.end()) return std::nullopt;
        return it->second;
    }
    bool is_root(const Root& a) const {
        return idx_.count(a) > 0 || idx_.count(-a) > 0;
    }
    bool is_positive_root(const Root& a) const { return idx_.count(a) > 0; }

    Root simple(int i) const { return unit_root(rank(), i); }

    Root highest_root() const {
        int best = -1;
        std::vector<const Root*> tied;
        for (const auto& r : pos_) {
            int h = height(r);
            if (h > best) {
                best = h;
                tied.assign(1, &r);
            } else if (h == best) {
                tied.push_back(&r);
            }
        }
        if (tied.size() != 1) throw ConsistencyError("highest root not unique");
        return *tied.front();
    }

    // Level k -> roots (positive and negative) with <alpha, beta^vee> = k.
    std::map<int, std::vector<Root>> coroot_grading(const Root& beta) const {
        if (!is_root(beta)) throw InputError("coroot_grading: " + root_str(beta) + " is not a root");
        std::map<int, std::vector<Root>> levels;
        for (const auto& r : all_roots()) levels[pairing(r, beta)].push_back(r);
        return levels;
    }

    std::vector<Q> squared_lengths() const {
        std::set<Q> s;
        for (const auto& r : pos_) s.insert(norm2(r));
        return {s.begin(), s.end()};
    }

    // Length class of a root: "all" for one length, "short"/"long", or "short"/"mid"/"long".
    std::string length_class(const Root& a) const {
        auto lens = squared_lengths();
        Q n = norm2(a);
        auto pos = std::find(lens.begin(), lens.end(), n) - lens.begin();
        if (lens.size() == 1) return "all";
        if (lens.size() == 2) return pos == 0 ? "short" : "long";
        return pos == 0 ? "short" : (pos == 1 ? "mid" : "long");
    }

    bool in_span(const Root& a, const std::vector<int>& J) const {
        for (int i = 0; i < rank(); ++i)
            if (a[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) return false;
        return true;
    }

    std::vector<Root> positive_roots_in(const std::vector<int>& J) const {
        std::vector<Root> out;
        for (const auto& r : pos_)
            if (in_span(r, J)) out.push_back(r);
        return out;
    }

    // Highest root of the sub-system spanned by the simple roots J (J connected).
    Root highest_root_in(const std::vector<int>& J) const {
        int best = -1;
        std::vector<Root> tied;
        for (const auto& r : positive_roots_in(J)) {
            // In a non-reduced system the highest root is 2x a short root; the
            // maximal coefficient sum still singles it out.
            int h = height(r);
            if (h > best) {
                best = h;
                tied.assign(1, r);
            } else if (h == best) {
                tied.push_back(r);
            }
        }
        if (tied.size() != 1) throw ConsistencyError("highest root of sub-system not unique");
        return tied.front();
    }

    std::vector<Component> components(const std::vector<int>& J) const;

    friend RootSystem build_root_system(const SimpleType& t);
    friend RootSystem build_restricted_root_system(const SimpleType& t);

private:
    void generate(bool add_doubles);

    SimpleType type_;
    std::vector<std::vector<Q>> gram_;
    std::vector<Root> pos_;
    std::map<Root, int> idx_;
};

namespace detail {

inline std::vector<std::vector<Q>> zero_gram(int n) { return std::vector<std::vector<Q>>(n, std::vector<Q>(n, Q(0))); }

inline void link(std::vector<std::vector<Q>>& g, int i, int j, Q v) {
    g[i][j] = v;
    g[j][i] = v;
}

inline std::vector<std::vector<Q>> bourbaki_gram(const SimpleType& t) {
    const int l = t.rank;
    auto g = zero_gram(l);
    switch (t.family) {
    case Family::A:
        for (int i = 0; i < l; ++i) g[i][i] = 2;
        for (int i = 0; i + 1 < l; ++i) link(g, i, i + 1, -1);
        break;
    case Family::B:
        for (int i = 0; i < l; ++i) g[i][i] = (i + 1 < l) ? 2 : 1;
        for (int i = 0; i + 1 < l; ++i) link(g, i, i + 1, -1);
        break;
    case Family::BC:
        // B_l scaled so that the doubled short roots have squared length 2.
        for (int i = 0; i < l; ++i) g[i][i] = (i + 1 < l) ? Q(1) : make_q(1, 2);
        for (int i = 0; i + 1 < l; ++i) link(g, i, i + 1, make_q(-1, 2));
        break;
    case Family::C:
        for (int i = 0; i < l; ++i) g[i][i] = (i + 1 < l) ? 1 : 2;
        for (int i = 0; i + 2 < l; ++i) link(g, i, i + 1, make_q(-1, 2));
        link(g, l - 2, l - 1, -1);
        break;
    case Family::D:
        for (int i = 0; i < l; ++i) g[i][i] = 2;
        for (int i = 0; i + 2 < l; ++i) link(g, i, i + 1, -1);
        link(g, l - 3, l - 1, -1);
        break;
    case Family::E:
        for (int i = 0; i < l; ++i) g[i][i] = 2;
        link(g, 0, 2, -1);
        link(g, 1, 3, -1);
        for (int i = 2; i + 1 < l; ++i) link(g, i, i + 1, -1);
        break;
    case Family::F:
        g[0][0] = 2, g[1][1] = 2, g[2][2] = 1, g[3][3] = 1;
        link(g, 0, 1, -1);
        link(g, 1, 2, -1);
        link(g, 2, 3, make_q(-1, 2));
        break;
    case Family::G:
        g[0][0] = make_q(2, 3), g[1][1] = 2;
        link(g, 0, 1, -1);
        break;
    }
    return g;
}

} // namespace detail

inline void RootSystem::generate(bool add_doubles) {
    const int l = rank();
    pos_.clear();
    idx_.clear();
    auto add = [&](const Root& r) {
        if (idx_.count(r)) return false;
        idx_[r] = 0;
        pos_.push_back(r);
        return true;
    };
    for (int i = 0; i < l; ++i) add(simple(i));
    // pos_ grows in height order, so every root below the current one is known.
    for (std::size_t k = 0; k < pos_.size(); ++k) {
        Root beta = pos_[k];
        for (int i = 0; i < l; ++i) {
            Root a = simple(i);
            int p = 0;
            Root down = beta - a;
            while (idx_.count(down)) {
                ++p;
                down = down - a;
            }
            int q = p - pairing(beta, a);
            if (q > 0) add(beta + a);
        }
    }
    if (add_doubles) {
        Q short_len = squared_lengths().front();
        std::vector<Root> doubles;
        for (const auto& r : pos_)
            if (norm2(r) == short_len) doubles.push_back(scaled(r, 2));
        for (const auto& d : doubles) add(d);
    }
    std::stable_sort(pos_.begin(), pos_.end(), [](const Root& a, const Root& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    for (std::size_t k = 0; k < pos_.size(); ++k) idx_[pos_[k]] = static_cast<int>(k);
}

inline RootSystem build_root_system(const SimpleType& t) {
    require_legal(t);
    RootSystem rs;
    rs.type_ = t;
    rs.gram_ = detail::bourbaki_gram(t);
    rs.generate(false);
    return rs;
}

// Like build_root_system but also accepts BC_r (non-reduced, long roots 2e_i).
inline RootSystem build_restricted_root_system(const SimpleType& t) {
    require_legal(t, true);
    if (t.family != Family::BC) return build_root_system(t);
    RootSystem rs;
    rs.type_ = t;
    rs.gram_ = detail::bourbaki_gram(t);
    rs.generate(true);
    return rs;
}

inline std::vector<Component> RootSystem::components(const std::vector<int>& J) const {
    std::vector<int> nodes(J.begin(), J.end());
    std::sort(nodes.begin(), nodes.end());
    auto adjacent = [&](int i, int j) { return i != j && sgn(gram_[i][j]) != 0; };
    auto bond = [&](int i, int j) {
        return pairing(simple(i), simple(j)) * pairing(simple(j), simple(i));
    };

    std::vector<Component> out;
    std::set<int> seen;
    for (int start : nodes) {
        if (seen.count(start)) continue;
        std::vector<int> comp{start};
        seen.insert(start);
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (int v : nodes)
                if (!seen.count(v) && adjacent(comp[k], v)) {
                    seen.insert(v);
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        const int n = static_cast<int>(comp.size());

        auto nbrs = [&](int v) {
            std::vector<int> out_n;
            for (int w : comp)
                if (adjacent(v, w)) out_n.push_back(w);
            return out_n;
        };
        // Walk a path starting at an end node.
        auto walk = [&](int from) {
            std::vector<int> path{from};
            int prev = -1, cur = from;
            while (true) {
                int next = -1;
                for (int w : nbrs(cur))
                    if (w != prev) next = w;
                if (next < 0 || static_cast<int>(path.size()) == n) break;
                path.push_back(next);
                prev = cur;
                cur = next;
            }
            return path;
        };

        bool doubled = false;
        for (int v : comp)
            if (is_positive_root(scaled(simple(v), 2))) doubled = true;

        Component c;
        int max_bond = 1;
        for (int a : comp)
            for (int b : comp)
                if (adjacent(a, b)) max_bond = std::max(max_bond, bond(a, b));

        if (n == 1) {
            c.type = {doubled ? Family::BC : Family::A, 1};
            c.nodes = comp;
        } else if (max_bond == 3) {
            int a = comp[0], b = comp[1];
            if (norm2(simple(a)) > norm2(simple(b))) std::swap(a, b);
            c.type = {Family::G, 2};
            c.nodes = {a, b};
        } else if (max_bond == 2) {
            std::vector<int> ends;
            for (int v : comp)
                if (nbrs(v).size() == 1) ends.push_back(v);
            if (n == 2) {
                int a = comp[0], b = comp[1];
                bool a_long = norm2(simple(a)) > norm2(simple(b));
                if (doubled) {
                    int lng = a_long ? a : b, sht = a_long ? b : a;
                    c.type = {Family::BC, 2};
                    c.nodes = {lng, sht};
                } else if (a_long) {
                    c.type = {Family::B, 2};
                    c.nodes = {a, b};
                } else {
                    c.type = {Family::C, 2};
                    c.nodes = {a, b};
                }
            } else {
                // Orient the chain so the double bond is at the end.
                std::vector<int> path = walk(ends.at(0));
                if (bond(path[0], path[1]) == 2) std::reverse(path.begin(), path.end());
                if (bond(path[n - 2], path[n - 1]) == 2) {
                    bool last_short = norm2(simple(path[n - 1])) < norm2(simple(path[n - 2]));
                    c.type = {doubled ? Family::BC : (last_short ? Family::B : Family::C), n};
                    c.nodes = path;
                } else {
                    if (n != 4) throw ConsistencyError("unrecognized doubly-laced diagram");
                    if (norm2(simple(path[0])) < norm2(simple(path[3]))) std::reverse(path.begin(), path.end());
                    c.type = {Family::F, 4};
                    c.nodes = path;
                }
            }
        } else {
            int branch = -1;
            for (int v : comp)
                if (nbrs(v).size() == 3) branch = v;
            if (branch < 0) {
                int e0 = comp[0];
                for (int v : comp)
                    if (nbrs(v).size() <= 1) {
                        e0 = v;
                        break;
                    }
                c.type = {Family::A, n};
                c.nodes = walk(e0);
            } else {
                // Arms: paths from the branch node outwards.
                std::vector<std::vector<int>> arms;
                for (int w : nbrs(branch)) {
                    std::vector<int> arm{w};
                    int prev = branch, cur = w;
                    while (true) {
                        int next = -1;
                        for (int x : nbrs(cur))
                            if (x != prev) next = x;
                        if (next < 0) break;
                        arm.push_back(next);
                        prev = cur;
                        cur = next;
                    }
                    arms.push_back(arm);
                }
                std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
                    if (x.size() != y.size()) return x.size() < y.size();
                    return x.back() < y.back();
                });
                std::size_t a = arms[0].size(), b = arms[1].size(), d = arms[2].size();
                if (a == 1 && b == 1) {
                    c.type = {Family::D, n};
                    if (d == 1) std::rotate(arms.begin(), arms.begin() + 1, arms.end());
                    std::vector<int> path(arms[2].rbegin(), arms[2].rend());
                    path.push_back(branch);
                    path.push_back(arms[0][0]);
                    path.push_back(arms[1][0]);
                    c.nodes = path;
                } else if (a == 1 && b == 2 && d >= 2 && d <= 4) {
                    c.type = {Family::E, n};
                    // 1-3-4-5-..., 2 attached to 4.
                    c.nodes = {arms[1][1], arms[0][0], arms[1][0], branch};
                    for (int v : arms[2]) c.nodes.push_back(v);
                } else {
                    throw ConsistencyError("unrecognized simply-laced diagram");
                }
            }
        }
        out.push_back(c);
    }
    return out;
}

} // namespace htower
