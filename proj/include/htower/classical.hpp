#pragma once

#include "htower/cascade.hpp"
#include "htower/errors.hpp"
#include "htower/forms.hpp"
#include "htower/matrix.hpp"
#include "htower/random.hpp"
#include "htower/scalar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace htower {

enum class DivisionKind { R, C, H };

inline std::string division_name(DivisionKind d) {
    switch (d) {
    case DivisionKind::R: return "R";
    case DivisionKind::C: return "C";
    case DivisionKind::H: return "H";
    }
    return "?";
}

// A type I group: the isometry group of an eps-Hermitian form on D^n with
// Witt index r. Basis order e_1..e_r, e*_1..e*_r, f_1..f_{n-2r}.
struct TypeIGroup {
    std::string name;
    DivisionKind D = DivisionKind::R;
    bool hermitian = true;  // false: skew-Hermitian (skew-symmetric over R)
    int n = 0;
    int r = 0;
    std::string form_label;  // catalog label of the Lie algebra

    int anisotropic() const { return n - 2 * r; }
    int k1() const { return D == DivisionKind::R && hermitian ? 2 : 1; }
    bool operator==(const TypeIGroup& o) const {
        return D == o.D && hermitian == o.hermitian && n == o.n && r == o.r;
    }
};

inline int k1_of(const TypeIGroup& g) { return g.k1(); }

inline TypeIGroup make_so(int p, int q) {
    if (p < 0 || q < 0 || p + q < 3) throw InputError("SO(p,q) needs p+q >= 3");
    return {"SO(" + std::to_string(p) + "," + std::to_string(q) + ")", DivisionKind::R, true, p + q, std::min(p, q),
            "so(" + std::to_string(std::min(p, q)) + "," + std::to_string(std::max(p, q)) + ")"};
}
inline TypeIGroup make_sp_real(int two_n) {
    if (two_n < 2 || two_n % 2) throw InputError("Sp(2n,R) needs an even positive size");
    return {"Sp(" + std::to_string(two_n) + ",R)", DivisionKind::R, false, two_n, two_n / 2,
            "sp_" + std::to_string(two_n) + "(R)"};
}
inline TypeIGroup make_su(int p, int q) {
    if (p < 0 || q < 0 || p + q < 2) throw InputError("SU(p,q) needs p+q >= 2");
    return {"SU(" + std::to_string(p) + "," + std::to_string(q) + ")", DivisionKind::C, true, p + q, std::min(p, q),
            "su(" + std::to_string(std::min(p, q)) + "," + std::to_string(std::max(p, q)) + ")"};
}
inline TypeIGroup make_sp_quat(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) throw InputError("Sp(p,q) needs p+q >= 1");
    return {"Sp(" + std::to_string(p) + "," + std::to_string(q) + ")", DivisionKind::H, true, p + q, std::min(p, q),
            "sp(" + std::to_string(std::min(p, q)) + "," + std::to_string(std::max(p, q)) + ")"};
}
inline TypeIGroup make_so_star(int two_n) {
    if (two_n < 4 || two_n % 2) throw InputError("SO*(2n) needs an even size >= 4");
    int n = two_n / 2;
    return {"SO*(" + std::to_string(two_n) + ")", DivisionKind::H, false, n, n / 2,
            "so*(" + std::to_string(two_n) + ")"};
}

// Random scalars over each division algebra.
template <class T> T random_scalar(RationalSampler& rng);
template <> inline Q random_scalar<Q>(RationalSampler& rng) { return rng.any(); }
template <> inline CQ random_scalar<CQ>(RationalSampler& rng) { return {rng.any(), rng.any()}; }
template <> inline HQ random_scalar<HQ>(RationalSampler& rng) { return {rng.any(), rng.any(), rng.any(), rng.any()}; }

template <class T> T unit_i();
template <> inline CQ unit_i<CQ>() { return {Q(0), Q(1)}; }
template <> inline HQ unit_i<HQ>() { return {Q(0), Q(1), Q(0), Q(0)}; }

// The form (u, v) = u* G v on column vectors of a right D-module.
template <class T>
class FormSpace {
public:
    explicit FormSpace(const TypeIGroup& g) : g_(g), n_(g.n) {
        const int r = g.r, eps = g.hermitian ? 1 : -1;
        G_ = Matrix<T>(n_, n_);
        for (int i = 0; i < r; ++i) {
            G_(i, r + i) = T(1);
            G_(r + i, i) = T(eps);
        }
        T f(1);
        if (!g.hermitian) {
            if constexpr (std::is_same_v<T, Q>) {
                if (g.anisotropic()) throw InputError("a real skew form has no anisotropic part");
            } else {
                f = unit_i<T>();
            }
        }
        for (int a = 2 * r; a < n_; ++a) G_(a, a) = f;
        Ginv_ = inverse(G_);
    }

    const TypeIGroup& group() const { return g_; }
    int n() const { return n_; }
    const Matrix<T>& gram() const { return G_; }

    // Basis indices, 1-based as in e_1..e_r.
    int e(int i) const { return i - 1; }
    int estar(int i) const { return g_.r + i - 1; }
    int f(int a) const { return 2 * g_.r + a - 1; }

    std::vector<int> X(int k) const { return span(k, [&](int i) { return e(i); }); }
    std::vector<int> Xstar(int k) const { return span(k, [&](int i) { return estar(i); }); }
    std::vector<int> Y(int k) const { return range(k, [&](int i) { return e(i); }); }
    std::vector<int> Ystar(int k) const { return range(k, [&](int i) { return estar(i); }); }
    std::vector<int> Vc() const {
        std::vector<int> out;
        for (int a = 1; a <= g_.anisotropic(); ++a) out.push_back(f(a));
        return out;
    }
    // V_k^perp = Y_{k+1} + Y*_{k+1} + V_c.
    std::vector<int> Vperp(int k) const {
        auto out = Y(k + 1);
        for (int i : Ystar(k + 1)) out.push_back(i);
        for (int i : Vc()) out.push_back(i);
        return out;
    }

    T form(const Matrix<T>& u, const Matrix<T>& v) const { return (u.conj_transpose() * G_ * v)(0, 0); }

    // (T u, v) = (u, T# v).
    Matrix<T> sharp(const Matrix<T>& t) const { return Ginv_ * t.conj_transpose() * G_; }

    bool in_lie_algebra(const Matrix<T>& t) const { return sharp(t) == -t; }

    // A random map from span(src) to span(dst), zero on the other basis vectors.
    Matrix<T> random_hom(const std::vector<int>& src, const std::vector<int>& dst, RationalSampler& rng) const {
        Matrix<T> m(n_, n_);
        for (int j : src)
            for (int i : dst) m(i, j) = random_scalar<T>(rng);
        return m;
    }
    // A random element of Hom^inv(src, dst): B - B#.
    Matrix<T> random_inv(const std::vector<int>& src, const std::vector<int>& dst, RationalSampler& rng) const {
        Matrix<T> b = random_hom(src, dst, rng);
        return b - sharp(b);
    }

    bool supported(const Matrix<T>& m, const std::vector<int>& src, const std::vector<int>& dst) const {
        std::set<int> s(src.begin(), src.end()), d(dst.begin(), dst.end());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!is_zero(m(i, j)) && (!s.count(j) || !d.count(i))) return false;
        return true;
    }

    // T^t = -T#, the partner map with (T v, x) + (v, T^t x) = 0.
    Matrix<T> partner(const Matrix<T>& t) const { return -sharp(t); }
    // T~ = T + T^t as an endomorphism of V.
    Matrix<T> tilde(const Matrix<T>& t) const { return t + partner(t); }

private:
    template <class F>
    static std::vector<int> span(int k, F idx) {
        std::vector<int> out;
        for (int i = 1; i <= k; ++i) out.push_back(idx(i));
        return out;
    }
    template <class F>
    std::vector<int> range(int k, F idx) const {
        std::vector<int> out;
        for (int i = k; i <= g_.r; ++i) out.push_back(idx(i));
        return out;
    }

    TypeIGroup g_;
    int n_;
    Matrix<T> G_, Ginv_;
};

template <class T>
std::string matrix_str(const Matrix<T>& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

struct LemmaReport {
    std::string lemma;
    std::string group;
    int trials = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const {
        return {{"lemma", lemma}, {"group", group}, {"trials", trials}, {"failures", failures}};
    }
};

template <class F>
decltype(auto) with_scalar(DivisionKind d, F&& f) {
    switch (d) {
    case DivisionKind::C: return f(CQ{});
    case DivisionKind::H: return f(HQ{});
    default: return f(Q{});
    }
}

namespace detail {

inline void require_gdefine(const TypeIGroup& g) {
    auto gd = check_gdefine(lookup_form(g.form_label));
    if (!gd.ok) throw PreconditionError("gdefine", g.name + ": " + gd.reason);
}

inline void require_room(const TypeIGroup& g) {
    if (g.r < g.k1() + 1)
        throw PreconditionError("r>=k1+1", g.name + " has split rank " + std::to_string(g.r) + " and k1=" +
                                                 std::to_string(g.k1()));
}

template <class T>
void record(LemmaReport& rep, int trial, const std::string& what, const Matrix<T>& lhs, const Matrix<T>& rhs) {
    if (rep.failures.size() < 5)
        rep.failures.push_back("trial " + std::to_string(trial) + ": " + what + "\nlhs:\n" + matrix_str(lhs) +
                               "rhs:\n" + matrix_str(rhs));
    else if (rep.failures.size() == 5)
        rep.failures.push_back("further failures suppressed");
}

// S = S(Y): e*_i -> e*_i for i <= k1, e*_i -> Y e*_i for i > k1.
template <class T>
Matrix<T> weil_S(const FormSpace<T>& V, const Matrix<T>& Y) {
    const int k1 = V.group().k1();
    Matrix<T> S = Y;
    for (int i = 1; i <= k1; ++i) S(V.estar(i), V.estar(i)) = T(1);
    return S;
}

// V e*_l = (-1)^{l+1} e_{k1-l+1}.
template <class T>
Matrix<T> weil_V(const FormSpace<T>& V) {
    const int k1 = V.group().k1();
    Matrix<T> M(V.n(), V.n());
    for (int l = 1; l <= k1; ++l) M(V.e(k1 - l + 1), V.estar(l)) = T(l % 2 ? 1 : -1);
    return M;
}

template <class T>
T real_part(const T& x) {
    return x;
}
template <>
inline HQ real_part<HQ>(const HQ& x) {
    return HQ(x.a);
}

} // namespace detail

// [X~, Y~] = X Y^t - Y X^t for X in Hom(Y_{k1+1}, X*_{k1}), Y in Hom(Y*_{k1+1}, X*_{k1}).
template <class T>
LemmaReport verify_lemmafortrans_t(const TypeIGroup& g, int trials, RationalSampler& rng) {
    detail::require_room(g);
    FormSpace<T> V(g);
    const int k1 = g.k1();
    LemmaReport rep{"lemmafortrans", g.name, trials, {}};
    for (int t = 0; t < trials; ++t) {
        auto X = V.random_hom(V.Y(k1 + 1), V.Xstar(k1), rng);
        auto Y = V.random_hom(V.Ystar(k1 + 1), V.Xstar(k1), rng);
        if (t == 0) X = Matrix<T>(V.n(), V.n());
        auto Xt = V.tilde(X), Yt = V.tilde(Y);
        auto lhs = Xt * Yt - Yt * Xt;
        auto rhs = X * V.partner(Y) - Y * V.partner(X);
        if (!V.in_lie_algebra(Xt) || !V.in_lie_algebra(Yt)) detail::record(rep, t, "tilde leaves g", Xt, Yt);
        if (lhs != rhs) detail::record(rep, t, "bracket", lhs, rhs);
        if (!V.supported(rhs, V.X(k1), V.Xstar(k1)) || V.sharp(rhs) != -rhs)
            detail::record(rep, t, "bracket not in Hom^inv(X_k1, X*_k1)", rhs, V.sharp(rhs));
    }
    return rep;
}

// ad_X(Y~) = -(Y X)~ for X in Hom^inv(Y_{k+1}, Y*_{k+1}), Y in Hom(V_k^perp, X*_k).
template <class T>
LemmaReport verify_actionHOM_t(const TypeIGroup& g, int trials, RationalSampler& rng, int k = 0) {
    detail::require_room(g);
    if (k == 0) k = g.k1();
    FormSpace<T> V(g);
    LemmaReport rep{"actionHOM", g.name, trials, {}};
    for (int t = 0; t < trials; ++t) {
        auto X = V.random_inv(V.Y(k + 1), V.Ystar(k + 1), rng);
        auto Y = V.random_hom(V.Vperp(k), V.Xstar(k), rng);
        if (t == 0) Y = Matrix<T>(V.n(), V.n());
        if (!V.in_lie_algebra(X)) detail::record(rep, t, "X not in g", X, V.sharp(X));
        auto Yt = V.tilde(Y);
        auto lhs = X * Yt - Yt * X;
        auto rhs = -V.tilde(Y * X);
        if (lhs != rhs) detail::record(rep, t, "ad_X(Y~)", lhs, rhs);
    }
    return rep;
}

// -S X S^t on the three summands of Hom^inv(Y_1, Y_1*), and the cyclic trace
// identity behind the dual element -S^t V S.
template <class T>
LemmaReport verify_weilaction_t(const TypeIGroup& g, int trials, RationalSampler& rng) {
    detail::require_room(g);
    FormSpace<T> V(g);
    const int k1 = g.k1();
    LemmaReport rep{"weilaction", g.name, trials, {}};
    for (int t = 0; t < trials; ++t) {
        auto Y = V.random_hom(V.Ystar(k1 + 1), V.Xstar(k1), rng);
        if (t == 0) Y = Matrix<T>(V.n(), V.n());
        auto S = detail::weil_S(V, Y);
        auto St = V.partner(S);
        // S^t e_i = -e_i + Y^t e_i
        Matrix<T> expect = V.partner(Y);
        for (int i = 1; i <= k1; ++i) expect(V.e(i), V.e(i)) -= T(1);
        if (St != expect) detail::record(rep, t, "S^t", St, expect);

        auto Xa = V.tilde(V.random_hom(V.Y(k1 + 1), V.Xstar(k1), rng));
        auto Xb = V.random_inv(V.Y(k1 + 1), V.Ystar(k1 + 1), rng);
        auto Xc = V.random_inv(V.X(k1), V.Xstar(k1), rng);
        auto Yt = V.tilde(Y);
        auto a_lhs = -(S * Xa * St), a_rhs = Yt * Xa - Xa * Yt;
        if (a_lhs != a_rhs) detail::record(rep, t, "case (a)", a_lhs, a_rhs);
        auto b_lhs = -(S * Xb * St), b_rhs = -(Y * Xb * V.partner(Y));
        if (b_lhs != b_rhs) detail::record(rep, t, "case (b)", b_lhs, b_rhs);
        if (V.partner(Y * Xb) != -(Xb * V.partner(Y)))
            detail::record(rep, t, "(YX)^t = -X Y^t", V.partner(Y * Xb), Matrix<T>(-(Xb * V.partner(Y))));
        auto c_lhs = -(S * Xc * St);
        if (c_lhs != Xc) detail::record(rep, t, "case (c)", c_lhs, Xc);

        // -S^t V S lies in Hom(Y_1*, Y_1); tr(V (-S X S^t)) = tr(-S^t V S X).
        auto X = Xa + Xb + Xc;
        auto W = detail::weil_V(V);
        auto dual = -(St * W * S);
        Matrix<T> ystar1(V.n(), V.n());
        if (!V.supported(dual, V.Ystar(1), V.Y(1)))
            detail::record(rep, t, "S^t V S outside Hom(Y_1*, Y_1)", dual, ystar1);
        T lhs = detail::real_part((W * (-(S * X * St))).trace());
        T rhs = detail::real_part((dual * X).trace());
        if (lhs != rhs) {
            Matrix<T> a(1, 1), b(1, 1);
            a(0, 0) = lhs;
            b(0, 0) = rhs;
            detail::record(rep, t, "trace identity", a, b);
        }
    }
    return rep;
}

// Rank over D of an element of Hom^inv(Y_1*, Y_1); rejects anything else.
template <class T>
int char_rank_t(const FormSpace<T>& V, const Matrix<T>& A) {
    if (!V.supported(A, V.Ystar(1), V.Y(1))) throw InputError("character element must map Y_1* to Y_1");
    if (V.sharp(A) != -A) throw InputError("character element violates the inv constraint");
    return static_cast<int>(rank(A));
}

// The inv constraint up to the purely imaginary scalar a of the dual element.
template <class T>
bool inv_up_to_imaginary(const FormSpace<T>& V, const Matrix<T>& M) {
    if (V.sharp(M) == -M) return true;
    if constexpr (!std::is_same_v<T, Q>) {
        Matrix<T> iM = unit_i<T>() * M;
        if (V.group().D == DivisionKind::C) return V.sharp(iM) == -iM;
    }
    return false;
}

// S^t V S has rank k1, also with its domain restricted to X*_{k1}.
template <class T>
LemmaReport verify_svs_t(const TypeIGroup& g, int trials, RationalSampler& rng) {
    detail::require_gdefine(g);
    detail::require_room(g);
    FormSpace<T> V(g);
    const int k1 = g.k1();
    LemmaReport rep{"svs", g.name, trials, {}};
    for (int t = 0; t < trials; ++t) {
        auto Y = V.random_hom(V.Ystar(k1 + 1), V.Xstar(k1), rng);
        auto S = detail::weil_S(V, Y);
        auto M = V.partner(S) * detail::weil_V(V) * S;
        Matrix<T> none(1, 1);
        if (!V.supported(M, V.Ystar(1), V.Y(1))) detail::record(rep, t, "outside Hom(Y_1*, Y_1)", M, none);
        if (!inv_up_to_imaginary(V, M)) detail::record(rep, t, "not inv", M, V.sharp(M));
        std::vector<int> all(V.n());
        for (int i = 0; i < V.n(); ++i) all[i] = i;
        int full = static_cast<int>(rank(M));
        int restricted = static_cast<int>(rank(M.submatrix(all, V.Xstar(k1))));
        if (full != k1 || restricted != k1)
            rep.failures.push_back("trial " + std::to_string(t) + ": rank " + std::to_string(full) + ", restricted " +
                                   std::to_string(restricted) + ", expected " + std::to_string(k1));
    }
    return rep;
}

// rank(A1 + A2) = rank(A1) + rank(A2) for A1 = S^t V S and A2 in Hom^inv(Y*_{k1+1}, Y_{k1+1}).
template <class T>
LemmaReport verify_rank_additivity_t(const TypeIGroup& g, int trials, RationalSampler& rng) {
    detail::require_gdefine(g);
    detail::require_room(g);
    FormSpace<T> V(g);
    const int k1 = g.k1();
    LemmaReport rep{"rank-additivity", g.name, trials, {}};
    for (int t = 0; t < trials; ++t) {
        auto Y = V.random_hom(V.Ystar(k1 + 1), V.Xstar(k1), rng);
        auto S = detail::weil_S(V, Y);
        auto A1 = V.partner(S) * detail::weil_V(V) * S;
        // A2 on a random sub-block e*_{k1+1..k1+m} -> e_{k1+1..k1+m}, so its rank varies.
        int m = rng.integer(0, g.r - k1);
        std::vector<int> src, dst;
        for (int i = k1 + 1; i <= k1 + m; ++i) {
            src.push_back(V.estar(i));
            dst.push_back(V.e(i));
        }
        Matrix<T> A2 = V.random_inv(src, dst, rng);
        int r1 = static_cast<int>(rank(A1)), r2 = static_cast<int>(rank(A2)), r12 = static_cast<int>(rank(A1 + A2));
        if (r12 != r1 + r2)
            rep.failures.push_back("trial " + std::to_string(t) + ": rank(A1+A2)=" + std::to_string(r12) + " but " +
                                   std::to_string(r1) + "+" + std::to_string(r2));
    }
    return rep;
}

inline LemmaReport verify_lemmafortrans(const TypeIGroup& g, int trials, RationalSampler& rng) {
    return with_scalar(g.D, [&](auto s) { return verify_lemmafortrans_t<decltype(s)>(g, trials, rng); });
}
inline LemmaReport verify_actionHOM(const TypeIGroup& g, int trials, RationalSampler& rng) {
    return with_scalar(g.D, [&](auto s) { return verify_actionHOM_t<decltype(s)>(g, trials, rng); });
}
inline LemmaReport verify_weilaction(const TypeIGroup& g, int trials, RationalSampler& rng) {
    return with_scalar(g.D, [&](auto s) { return verify_weilaction_t<decltype(s)>(g, trials, rng); });
}
inline LemmaReport verify_svs(const TypeIGroup& g, int trials, RationalSampler& rng) {
    return with_scalar(g.D, [&](auto s) { return verify_svs_t<decltype(s)>(g, trials, rng); });
}
inline LemmaReport verify_rank_additivity(const TypeIGroup& g, int trials, RationalSampler& rng) {
    return with_scalar(g.D, [&](auto s) { return verify_rank_additivity_t<decltype(s)>(g, trials, rng); });
}

// SL_{l+1}(R): Y_1^+ X Y_2^+ against the case formulas, and the rank-one dual operator.
inline LemmaReport sl_case_verify(int l, int trials, RationalSampler& rng) {
    if (l < 2) throw PreconditionError("l>=2", "SL_" + std::to_string(l + 1) + "(R) has no Heisenberg tower");
    const int N = l + 1, r = (l + 1) / 2;
    LemmaReport rep{"sl-case", "SL(" + std::to_string(N) + ",R)", trials, {}};
    // 0-based: e_1 -> 0, e_{l+1} -> l.
    auto rand_block = [&](int r0, int r1, int c0, int c1) {
        Matrix<Q> m(N, N);
        for (int i = r0; i <= r1; ++i)
            for (int j = c0; j <= c1; ++j) m(i, j) = rng.any();
        return m;
    };
    for (int t = 0; t < trials; ++t) {
        Matrix<Q> Y1 = rand_block(0, 0, 1, r - 1);  // Hom(X_r, R e_1)
        Matrix<Q> Y2 = rand_block(r, l - 1, l, l);  // Hom(R e_{l+1}, Y_{r+1})
        if (t == 0) Y1 = Y2 = Matrix<Q>(N, N);
        Matrix<Q> Y1p = Y1, Y2p = -Y2;
        Y1p(0, 0) = 1;
        Y2p(l, l) = 1;
        auto entry = [&](const Matrix<Q>& X) { return (Y1p * X * Y2p)(0, l); };

        Matrix<Q> Xm = rand_block(1, r - 1, r, l - 1);  // Hom(Y_{r+1}, X_r)
        Q want = -(Y1 * Xm * Y2)(0, l);
        if (entry(Xm) != want) rep.failures.push_back("trial " + std::to_string(t) + ": middle block");

        Matrix<Q> X1 = rand_block(0, 0, r, l - 1), X2 = rand_block(1, r - 1, l, l);
        Matrix<Q> X = X1 + X2, Y = Y1 + Y2;
        Q polar = -(X1 * Y2)(0, l) + (Y1 * X2)(0, l);
        if (entry(X) != polar) rep.failures.push_back("trial " + std::to_string(t) + ": polarization block");
        // The bracket -X1 Y2 + Y1 X2 is the matrix Y X - X Y.
        Matrix<Q> br = Y * X - X * Y;
        if (br(0, l) != polar) rep.failures.push_back("trial " + std::to_string(t) + ": bracket sign");

        Matrix<Q> Xz(N, N);
        Xz(0, l) = rng.nonzero();
        if (entry(Xz) != Xz(0, l)) rep.failures.push_back("trial " + std::to_string(t) + ": centre");

        // Dual operator under tr(X^T Z): Z = u v^T with u = row 1 of Y1+, v = column l+1 of Y2+.
        Matrix<Q> Z(N, N);
        for (int i = 0; i < r; ++i)
            for (int j = r; j <= l; ++j) Z(i, j) = Y1p(0, i) * Y2p(j, l);
        Matrix<Q> Xg = rand_block(0, r - 1, r, l);
        if ((Xg.transpose() * Z).trace() != entry(Xg))
            rep.failures.push_back("trial " + std::to_string(t) + ": trace duality");
        std::vector<int> all(N), last{l};
        for (int i = 0; i < N; ++i) all[i] = i;
        if (rank(Z) != 1 || rank(Z.submatrix(all, last)) != 1)
            rep.failures.push_back("trial " + std::to_string(t) + ": dual operator is not rank one on R e_{l+1}");
    }
    return rep;
}

// New rank k -> set of old ranks.
struct RankChart {
    std::string group;
    int height = 0;
    int k1 = 1;
    int max_old = 0;
    std::map<int, std::vector<int>> rows;

    nlohmann::json to_json() const {
        nlohmann::json j{{"group", group}, {"height", height}, {"k1", k1}, {"max_old_rank", max_old}};
        j["chart"] = nlohmann::json::array();
        for (const auto& [k, olds] : rows) j["chart"].push_back({{"new", k}, {"old", olds}});
        return j;
    }
    std::string to_text() const {
        std::ostringstream os;
        os << group << "  (height " << height << ", k1 " << k1 << ")\n";
        os << "new | old\n";
        for (const auto& [k, olds] : rows) {
            os << std::string(k < 10 ? 2 : 1, ' ') << k << " | ";
            for (std::size_t i = 0; i < olds.size(); ++i) os << (i ? ", " : "") << olds[i];
            os << "\n";
        }
        return os.str();
    }
};

namespace detail {

inline RankChart chart_from(const std::string& name, int ht, int k1, const std::set<int>& achievable) {
    RankChart c{name, ht, k1, achievable.empty() ? 0 : *achievable.rbegin(), {}};
    for (int k = 0; k <= ht; ++k) {
        std::vector<int> olds;
        if (k < ht) olds.push_back(k * k1);
        else
            for (int v : achievable)
                if (v >= ht * k1) olds.push_back(v);
        if (olds.empty() || !achievable.count(olds.front()))
            throw ConsistencyError(name + ": old rank " + std::to_string(k * k1) + " is not attained");
        c.rows[k] = olds;
    }
    return c;
}

template <class T>
std::set<int> achievable_old_ranks(const TypeIGroup& g, RationalSampler& rng) {
    FormSpace<T> V(g);
    std::set<int> out{0};
    for (int m = 1; m <= g.r; ++m) {
        std::vector<int> src, dst;
        for (int i = 1; i <= m; ++i) {
            src.push_back(V.estar(i));
            dst.push_back(V.e(i));
        }
        out.insert(char_rank_t(V, V.random_inv(src, dst, rng)));
    }
    return out;
}

} // namespace detail

inline int tower_height(const std::string& form_label) {
    FormDescriptor f = lookup_form(form_label);
    auto gd = check_gdefine(f);
    if (!gd.ok) throw PreconditionError("gdefine", f.label + ": " + gd.reason);
    return cascade_form(f).height;
}

inline RankChart rank_chart(const TypeIGroup& g, RationalSampler& rng) {
    int ht = tower_height(g.form_label);
    auto ach = with_scalar(g.D, [&](auto s) { return detail::achievable_old_ranks<decltype(s)>(g, rng); });
    return detail::chart_from(g.name, ht, g.k1(), ach);
}

// SL_{l+1}(R): the old ranks are the ranks of (r x (l+1-r)) real matrices.
inline RankChart rank_chart_sl(int l, RationalSampler& rng) {
    if (l < 2) throw PreconditionError("l>=2", "SL_" + std::to_string(l + 1) + "(R)");
    int ht = tower_height("sl_" + std::to_string(l + 1) + "(R)");
    const int r = (l + 1) / 2, c = l + 1 - r;
    std::set<int> ach{0};
    for (int m = 1; m <= std::min(r, c); ++m) {
        Matrix<Q> a(r, m), b(m, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = rng.nonzero();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < c; ++j) b(i, j) = rng.nonzero();
        ach.insert(static_cast<int>(rank(a * b)));
    }
    return detail::chart_from("SL(" + std::to_string(l + 1) + ",R)", ht, 1, ach);
}

} // namespace htower
