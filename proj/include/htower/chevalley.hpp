#pragma once

#include "htower/errors.hpp"
#include "htower/rootsys.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace htower {

// Structure constants N_{a,b} of a Chevalley basis: [e_a, e_b] = N_{a,b} e_{a+b}.
// Signs are fixed on extraspecial pairs (default +(p+1)); everything else follows.
class ChevalleyConstants {
public:
    using SignRule = std::function<int(const Root&)>;

    explicit ChevalleyConstants(const RootSystem& rs, SignRule sign = nullptr) : rs_(&rs) {
        const auto& pos = rs.positive_roots();
        const int l = rs.rank();
        for (const auto& xi : pos) {
            if (height(xi) < 2) continue;
            int a1 = -1;
            for (int i = 0; i < l && a1 < 0; ++i)
                if (rs.is_positive_root(xi - rs.simple(i))) a1 = i;
            if (a1 < 0) continue;  // 2*alpha in a non-reduced system: no bracket
            Root alpha1 = rs.simple(a1), beta1 = xi - alpha1;
            int p = 0;
            for (Root d = beta1 - alpha1; rs.is_root(d); d = d - alpha1) ++p;
            int s = sign ? sign(xi) : 1;
            set_pos(alpha1, beta1, s * (p + 1));

            for (const auto& a : pos) {
                Root b = xi - a;
                if (!rs.is_positive_root(b) || !(a < b)) continue;
                if ((a == alpha1 && b == beta1) || (a == beta1 && b == alpha1)) continue;
                Q xx = rs.norm2(xi);
                Q acc = 0;
                Root eta = b - alpha1, zeta = a - alpha1;
                if (rs.is_positive_root(eta)) {
                    Q n_b_ma1 = -rs.norm2(eta) / rs.norm2(b) * pos_value(alpha1, eta);
                    Q n_a_mb1 = rs.norm2(eta) / rs.norm2(beta1) * pos_value(eta, a);
                    acc += n_b_ma1 * n_a_mb1 / rs.norm2(eta);
                }
                if (rs.is_positive_root(zeta)) {
                    Q n_ma1_a = -rs.norm2(zeta) / rs.norm2(a) * pos_value(zeta, alpha1);
                    Q n_b_mb1 = rs.norm2(zeta) / rs.norm2(beta1) * pos_value(zeta, b);
                    acc += n_ma1_a * n_b_mb1 / rs.norm2(zeta);
                }
                Q v = xx / Q(pos_value(alpha1, beta1)) * acc;
                if (v.get_den() != 1 || v == 0)
                    throw ConsistencyError("structure constant not a nonzero integer at " + root_str(a) + "+" +
                                           root_str(b));
                set_pos(a, b, static_cast<int>(v.get_num().get_si()));
            }
        }
    }

    const RootSystem& roots() const { return *rs_; }

    // N_{x,y} for arbitrary roots x, y (0 if x+y is not a root).
    int N(const Root& x, const Root& y) const {
        Root s = x + y;
        if (!rs_->is_root(s)) return 0;
        bool px = is_positive(x), py = is_positive(y);
        if (px && py) return pos_value(x, y);
        if (!px && !py) return -pos_value(-x, -y);
        Root z = -s;
        bool pz = is_positive(z);
        Q v;
        if (py == pz) v = rs_->norm2(z) / rs_->norm2(x) * Q(N(y, z));
        else v = rs_->norm2(z) / rs_->norm2(y) * Q(N(z, x));
        if (v.get_den() != 1) throw ConsistencyError("non-integral mixed structure constant");
        return static_cast<int>(v.get_num().get_si());
    }

private:
    void set_pos(const Root& a, const Root& b, int v) {
        table_[{a, b}] = v;
        table_[{b, a}] = -v;
    }
    int pos_value(const Root& a, const Root& b) const {
        auto it = table_.find({a, b});
        if (it == table_.end()) {
            if (!rs_->is_root(a + b)) return 0;
            throw ConsistencyError("structure constant requested before it was computed");
        }
        return it->second;
    }

    const RootSystem* rs_;
    std::map<std::pair<Root, Root>, int> table_;
};

// Integer sparse vector in a fixed basis.
using IVec = std::map<int, long>;

// The whole Lie algebra in the basis h_1..h_l, e_a (a > 0), e_{-a} (a > 0).
class ChevalleyAlgebra {
public:
    explicit ChevalleyAlgebra(const ChevalleyConstants& nc) : nc_(&nc) {
        const RootSystem& rs = nc.roots();
        l_ = rs.rank();
        P_ = static_cast<int>(rs.positive_roots().size());
        const int d = dim();
        table_.assign(static_cast<std::size_t>(d) * d, {});
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) table_[x * d + y] = basis_bracket(x, y);
    }

    int dim() const { return l_ + 2 * P_; }

    std::string label(int x) const {
        if (x < l_) return "h" + std::to_string(x + 1);
        return "e" + root_str(root_of(x));
    }

    const IVec& bracket(int x, int y) const { return table_[x * dim() + y]; }

    IVec bracket(const IVec& u, const IVec& v) const {
        IVec out;
        for (const auto& [i, a] : u)
            for (const auto& [j, b] : v)
                for (const auto& [k, c] : bracket(i, j)) out[k] += a * b * c;
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    // Exhaustive check over basis triples; returns the number of violations.
    long jacobi_violations() const {
        const int d = dim();
        long bad = 0;
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                IVec s = bracket(x, y), t = bracket(y, x);
                for (auto& [k, c] : t) s[k] += c;
                for (auto& [k, c] : s)
                    if (c != 0) ++bad;
            }
        for (int x = 0; x < d; ++x)
            for (int y = x + 1; y < d; ++y)
                for (int z = y + 1; z < d; ++z) {
                    IVec acc;
                    auto add = [&](int a, int b, int c) {
                        for (const auto& [k, v] : bracket(b, c))
                            for (const auto& [m, w] : bracket(a, k)) acc[m] += v * w;
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

    Root root_of(int x) const {
        const auto& pos = nc_->roots().positive_roots();
        if (x < l_) throw InputError("Cartan element has no root");
        if (x < l_ + P_) return pos[x - l_];
        return -pos[x - l_ - P_];
    }
    int index_of_root(const Root& r) const {
        const RootSystem& rs = nc_->roots();
        if (is_positive(r)) return l_ + *rs.index_of(r);
        return l_ + P_ + *rs.index_of(-r);
    }

private:
    IVec basis_bracket(int x, int y) const {
        const RootSystem& rs = nc_->roots();
        IVec out;
        if (x < l_ && y < l_) return out;
        if (x < l_) {
            Root b = root_of(y);
            int v = rs.pairing(b, rs.simple(x));
            if (v) out[y] = v;
            return out;
        }
        if (y < l_) {
            IVec t = basis_bracket(y, x);
            for (auto& [k, c] : t) c = -c;
            return t;
        }
        Root a = root_of(x), b = root_of(y);
        Root s = a + b;
        if (std::all_of(s.begin(), s.end(), [](int c) { return c == 0; })) {
            // h_a = sum_i c_i (a_i,a_i)/(a,a) h_i
            for (int i = 0; i < l_; ++i) {
                if (!a[i]) continue;
                Q c = a[i] * rs.norm2(rs.simple(i)) / rs.norm2(a);
                if (c.get_den() != 1) throw ConsistencyError("non-integral coroot coordinate");
                out[i] = c.get_num().get_si();
            }
            return out;
        }
        int n = nc_->N(a, b);
        if (n) out[index_of_root(s)] = n;
        return out;
    }

    const ChevalleyConstants* nc_;
    int l_ = 0, P_ = 0;
    std::vector<IVec> table_;
};

} // namespace htower
