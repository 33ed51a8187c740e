// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "htower/cascade.hpp"
#include "htower/chevalley.hpp"
#include "htower/classical.hpp"
#include "htower/forms.hpp"
#include "htower/orbits.hpp"
#include "htower/random.hpp"
#include "htower/tables.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace htower;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail.clear();
        ok = false;
        if (detail.size() < 600) detail += (detail.empty() ? "" : "; ") + why;
    }
};

int failed = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) out.fail("over the time limit");
    if (!out.ok) ++failed;
    std::printf("criterion %d %-34s %s  %7.2fs", id, name.c_str(), out.ok ? "PASS" : "FAIL", secs);
    if (limit_s > 0) std::printf(" (limit %.0fs)", limit_s);
    if (!out.detail.empty()) std::printf("  %s", out.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
}

std::vector<SimpleType> split_types_up_to(int max_rank) {
    std::vector<SimpleType> out;
    for (int l = 2; l <= max_rank; ++l) out.push_back({Family::A, l});
    for (int l = 2; l <= max_rank; ++l) out.push_back({Family::B, l});
    for (int l = 3; l <= max_rank; ++l) out.push_back({Family::C, l});
    for (int l = 4; l <= max_rank; ++l) out.push_back({Family::D, l});
    for (int l = 6; l <= std::min(8, max_rank); ++l) out.push_back({Family::E, l});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

Outcome table_outcome(int which) {
    Outcome o;
    int rows = 0, good = 0;
    for (const auto& r : check_table(which)) {
        ++rows;
        if (r.match()) {
            ++good;
            continue;
        }
        for (const auto& i : r.instances)
            if (!i.match) {
                o.fail(i.label + ": expected " + i.expected_a + " | " + i.expected_b + ", got " + i.got_a + " | " +
                       i.got_b);
                break;
            }
    }
    std::string count = std::to_string(good) + "/" + std::to_string(rows) + " rows";
    o.detail = o.ok ? count : count + "; " + o.detail;
    return o;
}

// Remark list of real forms whose highest root is not defined over R.
bool on_exclusion_list(const std::string& label) {
    return label == "(f4,so(9))" || label == "(e6,f4)" || label.rfind("sp(", 0) == 0 ||
           (label.rfind("sl_", 0) == 0 && label.size() > 3 && label.substr(label.size() - 3) == "(H)");
}

} // namespace

int main() {
    RationalSampler rng(seed_from_env());
    std::printf("seed %llu\n", static_cast<unsigned long long>(seed_from_env()));

    criterion(1, "Table I regeneration", 1, [] { return table_outcome(1); });
    criterion(2, "Table II regeneration", 5, [] { return table_outcome(2); });
    criterion(3, "Table III regeneration", 5, [] { return table_outcome(3); });

    criterion(4, "rankable orbit dimensions", 30, [&] {
        Outcome o;
        int cases = 0;
        for (const auto& t : split_types_up_to(8)) {
            NilpotentAlgebra n = build_ngamma(t);
            for (int k = 0; k <= n.tower().height; ++k) {
                RankableSpec spec{k, {}};
                for (int s = 0; s < k; ++s) spec.central_values.push_back(rng.nonzero());
                int got = orbit_dimension(n, rankable_functional(n, spec));
                int want = expected_rankable_dimension(n.tower(), k);
                ++cases;
                if (got != want)
                    o.fail(t.str() + " k=" + std::to_string(k) + ": " + std::to_string(got) + " != " +
                           std::to_string(want));
            }
        }
        if (o.ok) o.detail = std::to_string(cases) + " (type, k) cases";
        return o;
    });

    criterion(5, "restricted orbit dimensions", 60, [&] {
        Outcome o;
        int cases = 0;
        for (const char* name : {"A4", "C3", "C4", "B4", "B5", "D5", "E6", "F4"}) {
            NilpotentAlgebra n = build_ngamma(*parse_simple_type(name));
            for (int k = 1; k <= n.tower().height; ++k) {
                Ordim2Report r = ordim2_check(n, k, rng);
                ++cases;
                if (!r.ok()) o.fail(std::string(name) + " k=" + std::to_string(k) + ": " + r.failures.front());
            }
        }
        if (o.ok) o.detail = std::to_string(cases) + " (type, k) cases";
        return o;
    });

    criterion(6, "additivity over disjoint supports", 30, [&] {
        Outcome o;
        int towers = 0;
        for (const auto& t : split_types_up_to(8)) {
            NilpotentAlgebra n = build_ngamma(t);
            const int ht = n.tower().height;
            if (ht < 2) continue;
            ++towers;
            for (int trial = 0; trial < 50; ++trial) {
                int split = rng.integer(1, ht - 1);
                // lambda' represents the canonical extension from the first block: it lives on the
                // block's centres. lambda'' is an arbitrary functional on the complementary block.
                Functional l1(n.dim(), Q(0)), l2(n.dim(), Q(0));
                for (int s = 0; s < split; ++s) l1[n.center(s)] = rng.nonzero();
                for (int i = 0; i < n.dim(); ++i)
                    if (n.layer_of(i) >= split) l2[i] = rng.any();
                AdditivityReport r = additivity_check(n, l1, l2, split);
                if (!r.ok()) {
                    o.fail(t.str() + " trial " + std::to_string(trial) + ": " + std::to_string(r.whole) +
                           " != " + std::to_string(r.first) + " + " + std::to_string(r.second));
                    break;
                }
            }
        }
        if (o.ok) o.detail = std::to_string(towers) + " towers x 50 pairs";
        return o;
    });

    criterion(7, "classical matrix identities", 60, [&] {
        Outcome o;
        const int trials = 200;
        int suites = 0;
        std::vector<TypeIGroup> groups{make_sp_real(6), make_sp_real(8), make_su(3, 4), make_su(2, 2),
                                       make_so(5, 7),   make_so(4, 6),   make_so(3, 3), make_so_star(8),
                                       make_so_star(10)};
        using Verifier = LemmaReport (*)(const TypeIGroup&, int, RationalSampler&);
        for (const auto& g : groups)
            for (Verifier v : {Verifier(verify_lemmafortrans), Verifier(verify_actionHOM),
                               Verifier(verify_weilaction), Verifier(verify_svs), Verifier(verify_rank_additivity)}) {
                LemmaReport r = v(g, trials, rng);
                ++suites;
                if (!r.ok()) o.fail(r.lemma + " " + r.group + ": " + r.failures.front().substr(0, 80));
            }
        for (int l : {4, 5}) {
            LemmaReport r = sl_case_verify(l, trials, rng);
            ++suites;
            if (!r.ok()) o.fail(r.lemma + " " + r.group + ": " + r.failures.front().substr(0, 80));
        }
        if (o.ok) o.detail = std::to_string(suites) + " suites x " + std::to_string(trials) + " trials over R, C, H";
        return o;
    });

    criterion(8, "rank charts", 0, [&] {
        Outcome o;
        auto expect = [&](const RankChart& c, const std::map<int, std::vector<int>>& want) {
            if (c.rows != want) o.fail(c.group + " chart differs:\n" + c.to_text());
        };
        expect(rank_chart(make_so(6, 6), rng), {{0, {0}}, {1, {2}}, {2, {4, 6}}});
        expect(rank_chart(make_so(5, 11), rng), {{0, {0}}, {1, {2}}, {2, {4}}});
        if (o.ok) o.detail = "SO(6,6) and SO(5,11) as printed";
        return o;
    });

    criterion(9, "structural invariants", 30, [&] {
        Outcome o;
        long algebras = 0;
        for (const auto& t : split_types_up_to(8)) {
            NilpotentAlgebra n = build_ngamma(t);
            ++algebras;
            if (long v = n.jacobi_violations()) o.fail("Jacobi fails on n_gamma of " + t.str() + " (" +
                                                        std::to_string(v) + ")");
            if (n.tower().height > 1) {
                SGammaResult sg = s_gamma_set(n);
                ++algebras;
                if (n.subalgebra(sg.s_gamma).jacobi_violations()) o.fail("Jacobi fails on n_gamma^beta of " + t.str());
            }
            if (t.rank <= 4) {
                RootSystem rs = build_root_system(t);
                ChevalleyConstants nc(rs);
                ++algebras;
                if (ChevalleyAlgebra(nc).jacobi_violations()) o.fail("Jacobi fails on " + t.str());
            }
        }
        // Strong orthogonality and layer sums over every catalog form admitted by gdefine.
        int towers = 0;
        std::vector<std::string> outside_list, listed_but_fine;
        const Catalog& cat = default_catalog();
        for (const auto& [i, env] : cat.sample_instances(9)) {
            FormDescriptor f = cat.instantiate(cat.entries()[i], env);
            GdefineResult gd = check_gdefine(f);
            if (f.field == FieldKind::real && f.absolute != SimpleType{Family::A, 1}) {
                if (!gd.ok && !on_exclusion_list(f.label)) outside_list.push_back(f.label);
                if (gd.ok && on_exclusion_list(f.label)) listed_but_fine.push_back(f.label);
            }
            if (!gd.ok) continue;
            ConsistencyReport rep = htower_consistency(cascade_form(f));
            ++towers;
            if (!rep.ok) o.fail(f.label + ": " + rep.failures.front());
        }
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size() && i < 6; ++i) s += (i ? " " : "") + v[i];
            return s + (v.size() > 6 ? " ..." : "");
        };
        if (!outside_list.empty())
            o.fail("gdefine fails outside the exclusion list: " + join(outside_list));
        if (!listed_but_fine.empty()) o.fail("listed forms passing gdefine: " + join(listed_but_fine));
        // Every instance admitted by Tables II and III passes gdefine.
        std::vector<std::string> refused;
        for (int which : {2, 3})
            for (const auto& row : golden_table(which))
                for (const auto& env : row_instances(row)) {
                    std::string label = row.label().instantiate(env);
                    if (!satisfies_gdefine(lookup_form(label))) refused.push_back(label);
                }
        if (!refused.empty()) o.fail("table rows refused by gdefine: " + join(refused));
        if (o.ok)
            o.detail = std::to_string(algebras) + " algebras, " + std::to_string(towers) + " towers, gdefine list agrees";
        return o;
    });

    std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
