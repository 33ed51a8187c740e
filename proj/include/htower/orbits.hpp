#pragma once

#include "htower/cascade.hpp"
#include "htower/chevalley.hpp"
#include "htower/errors.hpp"
#include "htower/matrix.hpp"
#include "htower/random.hpp"
#include "htower/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace htower {

// n_gamma of a split form: basis e_a for the positive roots outside span(gamma),
// [e_a, e_b] = N_{a,b} e_{a+b}.
class NilpotentAlgebra {
public:
    struct Term {
        int index;
        Q coeff;
    };

    NilpotentAlgebra() = default;

    static NilpotentAlgebra build(const SimpleType& t, ChevalleyConstants::SignRule sign = nullptr) {
        NilpotentAlgebra n;
        n.type_ = t;
        n.rs_ = std::make_shared<RootSystem>(build_root_system(t));
        n.nc_ = std::make_shared<ChevalleyConstants>(*n.rs_, std::move(sign));
        n.tower_ = cascade_split(t);
        for (const auto& a : n.rs_->positive_roots())
            if (!n.rs_->in_span(a, n.tower_.gamma_set)) n.basis_.push_back(a);
        n.index_rebuild();
        n.layer_.assign(n.basis_.size(), -1);
        for (std::size_t i = 0; i < n.basis_.size(); ++i)
            for (std::size_t s = 0; s < n.tower_.steps.size() && n.layer_[i] < 0; ++s) {
                const auto& st = n.tower_.steps[s];
                int lvl = n.rs_->pairing(n.basis_[i], st.beta_tilde);
                if (n.rs_->in_span(n.basis_[i], st.nodes) && (lvl == 1 || lvl == 2)) n.layer_[i] = static_cast<int>(s);
            }
        for (int l : n.layer_)
            if (l < 0) throw ConsistencyError("n_gamma basis element outside every layer");
        for (const auto& st : n.tower_.steps) n.centers_.push_back(n.index_.at(st.beta_tilde));
        n.fill_brackets();
        return n;
    }

    // The subalgebra on a subset of basis roots (must be bracket-closed).
    NilpotentAlgebra subalgebra(const std::vector<Root>& roots) const {
        NilpotentAlgebra n;
        n.type_ = type_;
        n.rs_ = rs_;
        n.nc_ = nc_;
        n.tower_ = tower_;
        n.basis_ = roots;
        n.index_rebuild();
        for (const auto& r : roots) n.layer_.push_back(layer_.at(index_.at(r)));
        for (int c : centers_)
            n.centers_.push_back(n.index_.count(basis_[c]) ? n.index_.at(basis_[c]) : -1);
        n.fill_brackets();
        return n;
    }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Root>& basis() const { return basis_; }
    const RootSystem& roots() const { return *rs_; }
    const HTower& tower() const { return tower_; }
    const SimpleType& type() const { return type_; }
    int layer_of(int i) const { return layer_[i]; }
    // Basis index of the centre of layer s, or -1 if absent from this algebra.
    int center(int s) const { return centers_.at(s); }
    int index_of(const Root& r) const {
        auto it = index_.find(r);
        return it == index_.end() ? -1 : it->second;
    }

    // [e_i, e_j] as at most one term.
    const std::vector<Term>& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim() + j]; }

    long jacobi_violations() const {
        long bad = 0;
        const int d = dim();
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                const auto &a = bracket(x, y), &b = bracket(y, x);
                if (a.size() != b.size() || (!a.empty() && (a[0].index != b[0].index || a[0].coeff != -b[0].coeff)))
                    ++bad;
            }
        for (int x = 0; x < d; ++x)
            for (int y = x + 1; y < d; ++y)
                for (int z = y + 1; z < d; ++z) {
                    std::map<int, Q> acc;
                    auto add = [&](int a, int b, int c) {
                        for (const auto& t : bracket(b, c))
                            for (const auto& u : bracket(a, t.index)) acc[u.index] += t.coeff * u.coeff;
                    };
                    add(x, y, z);
                    add(y, z, x);
                    add(z, x, y);
                    for (const auto& [k, v] : acc)
                        if (v != 0) {
                            ++bad;
                            break;
                        }
                }
        return bad;
    }

    // Length of the lower central series until it reaches zero, or -1.
    int nilpotency_class() const {
        std::set<int> cur;
        for (int i = 0; i < dim(); ++i) cur.insert(i);
        for (int step = 1; step <= dim() + 1; ++step) {
            if (cur.empty()) return step - 1;
            std::set<int> next;
            for (int i = 0; i < dim(); ++i)
                for (int j : cur)
                    for (const auto& t : bracket(i, j)) next.insert(t.index);
            cur = std::move(next);
        }
        return -1;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["type"] = type_.str();
        j["basis"] = nlohmann::json::array();
        for (std::size_t i = 0; i < basis_.size(); ++i)
            j["basis"].push_back({{"root", basis_[i]}, {"layer", layer_[i] + 1}});
        j["brackets"] = nlohmann::json::array();
        for (int a = 0; a < dim(); ++a)
            for (int b = a + 1; b < dim(); ++b)
                for (const auto& t : bracket(a, b)) j["brackets"].push_back({a, b, t.index, t.coeff.get_str()});
        return j;
    }

private:
    void index_rebuild() {
        index_.clear();
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
    }
    void fill_brackets() {
        const int d = dim();
        table_.assign(static_cast<std::size_t>(d) * d, {});
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Root s = basis_[i] + basis_[j];
                if (!rs_->is_root(s)) continue;
                auto it = index_.find(s);
                if (it == index_.end()) throw ConsistencyError("basis not closed under brackets at " + root_str(s));
                table_[static_cast<std::size_t>(i) * d + j].push_back({it->second, Q(nc_->N(basis_[i], basis_[j]))});
            }
    }

    SimpleType type_;
    std::shared_ptr<RootSystem> rs_;
    std::shared_ptr<ChevalleyConstants> nc_;
    HTower tower_;
    std::vector<Root> basis_;
    std::map<Root, int> index_;
    std::vector<int> layer_;
    std::vector<int> centers_;
    std::vector<std::vector<Term>> table_;
};

inline NilpotentAlgebra build_ngamma(const SimpleType& t) {
    if (t == SimpleType{Family::A, 1}) throw PreconditionError("gdefine", "g is sl2");
    return NilpotentAlgebra::build(t);
}

using Functional = std::vector<Q>;

// The skew form B_ij = lambda([e_i, e_j]) restricted to `idx` (all if empty).
inline std::vector<SparseRow> skew_form(const NilpotentAlgebra& n, const Functional& lambda,
                                        const std::vector<int>& idx = {}) {
    if (static_cast<int>(lambda.size()) != n.dim()) throw InputError("functional dimension mismatch");
    std::vector<int> use = idx;
    if (use.empty())
        for (int i = 0; i < n.dim(); ++i) use.push_back(i);
    std::vector<SparseRow> rows;
    for (int i : use) {
        SparseRow row;
        for (std::size_t c = 0; c < use.size(); ++c)
            for (const auto& t : n.bracket(i, use[c]))
                if (lambda[t.index] != 0) row.emplace_back(static_cast<int>(c), t.coeff * lambda[t.index]);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline int orbit_dimension(const NilpotentAlgebra& n, const Functional& lambda) {
    return static_cast<int>(sparse_rank(skew_form(n, lambda)));
}

// Orbit dimension of lambda restricted to the subalgebra spanned by `idx`.
inline int orbit_dimension_on(const NilpotentAlgebra& n, const Functional& lambda, const std::vector<int>& idx) {
    return static_cast<int>(sparse_rank(skew_form(n, lambda, idx)));
}

// Rank of M^T B M for the skew form of lambda; equals orbit_dimension for invertible M.
inline int congruent_rank(const NilpotentAlgebra& n, const Functional& lambda, const Matrix<Q>& M) {
    const int d = n.dim();
    Matrix<Q> B(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& t : n.bracket(i, j)) B(i, j) += t.coeff * lambda[t.index];
    return static_cast<int>(sparse_rank(M.transpose() * B * M));
}

struct RankableSpec {
    int k = 0;
    std::vector<Q> central_values;
};

inline Functional rankable_functional(const NilpotentAlgebra& n, const RankableSpec& spec) {
    if (spec.k < 0 || spec.k > n.tower().height)
        throw InputError("rank k=" + std::to_string(spec.k) + " outside 0.." + std::to_string(n.tower().height));
    if (static_cast<int>(spec.central_values.size()) != spec.k) throw InputError("need one central value per layer");
    Functional lambda(n.dim(), Q(0));
    for (int s = 0; s < spec.k; ++s) {
        if (spec.central_values[s] == 0) throw InputError("central values must be nonzero");
        lambda[n.center(s)] = spec.central_values[s];
    }
    return lambda;
}

inline int expected_rankable_dimension(const HTower& t, int k) {
    int s = 0;
    for (int i = 0; i < k; ++i) s += t.n_values[i];
    return 2 * s;
}

// lambda o exp(-ad X) for a random X in n: a generic point of the coadjoint orbit of lambda.
inline Functional generic_orbit_point(const NilpotentAlgebra& n, const Functional& lambda, RationalSampler& rng) {
    const int d = n.dim();
    std::vector<Q> x(d);
    for (auto& v : x) v = rng.integer(-3, 3);
    // term_m(e_j) = lambda(ad_X^m e_j) / m!, with ad_X e_j = sum_i x_i [e_i, e_j].
    Functional mu = lambda, term = lambda;
    for (int m = 1; m <= d; ++m) {
        Functional next(d, Q(0));
        bool any = false;
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) {
                if (x[i] == 0) continue;
                for (const auto& t : n.bracket(i, j))
                    if (term[t.index] != 0) next[j] += x[i] * t.coeff * term[t.index];
            }
        for (int j = 0; j < d; ++j) {
            next[j] /= -m;
            if (next[j] != 0) any = true;
            mu[j] += next[j];
        }
        if (!any) break;
        term = std::move(next);
    }
    return mu;
}

struct SGammaResult {
    Root beta;
    std::vector<Root> s_gamma;
    int c = 0;           // codimension of n_gamma^beta in n_gamma
    int c_formula = 0;   // #{beta + delta : delta in Sigma^L+ or 0}
    std::vector<Root> abelian;  // highest - gamma for gamma in layer 1 outside S_gamma
    std::vector<std::string> failures;
};

inline SGammaResult s_gamma_set(const NilpotentAlgebra& n) {
    const HTower& t = n.tower();
    if (t.height <= 1) throw PreconditionError("ht>1", "height of N_gamma is " + std::to_string(t.height));
    const RootSystem& rs = n.roots();
    SGammaResult out;
    out.beta = rs.simple(t.steps[0].removed.at(0));
    auto in_levi = [&](const Root& r) { return rs.is_root(r) && rs.in_span(r, t.gamma_set); };
    for (const auto& g : n.basis())
        if (g != out.beta && !in_levi(g - out.beta)) out.s_gamma.push_back(g);
    out.c = n.dim() - static_cast<int>(out.s_gamma.size());
    std::vector<Root> deltas{Root(rs.rank(), 0)};
    for (const auto& d : rs.positive_roots())
        if (rs.in_span(d, t.gamma_set)) deltas.push_back(d);
    for (const auto& d : deltas)
        if (rs.is_positive_root(out.beta + d)) ++out.c_formula;
    if (out.c != out.c_formula)
        out.failures.push_back("codimension " + std::to_string(out.c) + " != " + std::to_string(out.c_formula));

    std::set<Root> S(out.s_gamma.begin(), out.s_gamma.end());
    for (const auto& a : out.s_gamma) {
        for (const auto& b : out.s_gamma)
            if (rs.is_root(a + b) && !S.count(a + b))
                out.failures.push_back("not bracket-closed: " + root_str(a) + " + " + root_str(b));
        for (int sgn : {1, -1}) {
            Root sh = a + scaled(out.beta, sgn);
            if (rs.is_positive_root(sh) && !S.count(sh))
                out.failures.push_back("not closed under beta shift: " + root_str(a));
        }
    }
    const Root top = t.steps[0].beta_tilde;
    for (const auto& g : n.basis())
        if (rs.inner(g, top) > 0 && !S.count(g)) out.abelian.push_back(top - g);
    return out;
}

struct Ordim2Report {
    int k = 0;
    int expected = 0;
    int computed = 0;
    int c = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline Ordim2Report ordim2_check(const NilpotentAlgebra& n, int k, RationalSampler& rng) {
    const HTower& t = n.tower();
    if (k < 1 || k > t.height) throw InputError("k outside 1..height");
    SGammaResult sg = s_gamma_set(n);
    Ordim2Report rep;
    rep.k = k;
    rep.c = sg.c;
    rep.failures = sg.failures;
    NilpotentAlgebra sub = n.subalgebra(sg.s_gamma);
    if (sub.jacobi_violations()) rep.failures.push_back("Jacobi fails on n_gamma^beta");

    Functional lambda(n.dim(), Q(0));
    for (int s = 0; s < k; ++s) lambda[n.center(s)] = rng.nonzero();
    Functional mu = generic_orbit_point(n, lambda, rng);
    Functional restricted(sub.dim(), Q(0));
    for (int i = 0; i < sub.dim(); ++i) restricted[i] = mu[n.index_of(sub.basis()[i])];
    std::vector<int> ab;
    for (const auto& a : sg.abelian) {
        int i = sub.index_of(a);
        if (i < 0) rep.failures.push_back("abelian direction " + root_str(a) + " not in n_gamma^beta");
        else ab.push_back(i);
    }
    // The abelian directions are central in n_gamma^beta.
    for (int i : ab)
        for (int j = 0; j < sub.dim(); ++j)
            if (!sub.bracket(i, j).empty()) {
                rep.failures.push_back("abelian direction " + root_str(sub.basis()[i]) + " not central");
                break;
            }
    // Layer 1 of n_gamma^beta = Heisenberg(2(n_1 - c) + 1) x abelian(c).
    std::vector<int> h1;
    for (int i = 0; i < sub.dim(); ++i)
        if (sub.layer_of(i) == 0 && std::find(ab.begin(), ab.end(), i) == ab.end()) h1.push_back(i);
    if (static_cast<int>(h1.size()) != 2 * (t.n_values[0] - sg.c) + 1 || static_cast<int>(ab.size()) != sg.c)
        rep.failures.push_back("layer 1 of n_gamma^beta has the wrong shape");
    Functional z(sub.dim(), Q(0));
    z[sub.center(0)] = 1;
    if (orbit_dimension_on(sub, z, h1) != 2 * (t.n_values[0] - sg.c))
        rep.failures.push_back("Heisenberg factor of layer 1 is degenerate");

    rep.expected = expected_rankable_dimension(t, k) - 2 * sg.c;
    rep.computed = orbit_dimension(sub, restricted);
    if (rep.computed != rep.expected)
        rep.failures.push_back("orbit dimension " + std::to_string(rep.computed) + " != " +
                               std::to_string(rep.expected));
    return rep;
}

inline SGammaResult s_gamma_set(const SimpleType& t) { return s_gamma_set(build_ngamma(t)); }

inline Ordim2Report ordim2_check(const SimpleType& t, int k, RationalSampler& rng) {
    return ordim2_check(build_ngamma(t), k, rng);
}

inline nlohmann::json to_json(const Ordim2Report& r) {
    return {{"k", r.k}, {"c", r.c}, {"expected", r.expected}, {"computed", r.computed}, {"ok", r.ok()},
            {"failures", r.failures}};
}

struct AdditivityReport {
    int whole = 0, first = 0, second = 0;
    bool ok() const { return whole == first + second; }
};

// Layers are split into a first block and the rest; lambda1 lives on the first,
// lambda2 on the rest. Compares the rank of lambda1 + lambda2 with the block ranks.
inline AdditivityReport additivity_check(const NilpotentAlgebra& n, const Functional& lambda1,
                                         const Functional& lambda2, int split_layer = 1) {
    std::vector<int> b1, b2;
    for (int i = 0; i < n.dim(); ++i) (n.layer_of(i) < split_layer ? b1 : b2).push_back(i);
    for (int i = 0; i < n.dim(); ++i) {
        bool in1 = n.layer_of(i) < split_layer;
        if ((in1 && lambda2[i] != 0) || (!in1 && lambda1[i] != 0))
            throw PreconditionError("disjoint supports", "functional leaves its layer block");
    }
    Functional sum(n.dim());
    for (int i = 0; i < n.dim(); ++i) sum[i] = lambda1[i] + lambda2[i];
    AdditivityReport rep;
    rep.whole = orbit_dimension(n, sum);
    rep.first = b1.empty() ? 0 : orbit_dimension_on(n, lambda1, b1);
    rep.second = b2.empty() ? 0 : orbit_dimension_on(n, lambda2, b2);
    return rep;
}

} // namespace htower
