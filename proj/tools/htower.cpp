#include "htower/cascade.hpp"
#include "htower/classical.hpp"
#include "htower/heisenberg.hpp"
#include "htower/orbits.hpp"
#include "htower/random.hpp"
#include "htower/spec.hpp"
#include "htower/tables.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace htower;
using nlohmann::json;

namespace {

struct Options {
    std::string spec;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::string which = "all";
    int trials = 200;
    int k = -1;
    std::string catalog;
};

std::uint64_t seed_of(const Options& o) { return o.seed ? *o.seed : seed_from_env(); }

std::string join(const std::vector<int>& v, const std::string& sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string one_based(const std::vector<int>& nodes) {
    std::vector<int> v;
    for (int n : nodes) v.push_back(n + 1);
    return join(v);
}

void emit(OutputFormat fmt, const json& j, const std::string& text, const std::string& csv) {
    switch (fmt) {
    case OutputFormat::json: std::cout << j.dump(2) << "\n"; break;
    case OutputFormat::csv: std::cout << csv; break;
    case OutputFormat::text: std::cout << text; break;
    }
}

int cmd_info(const Options& o) {
    auto fmt = parse_output_format(o.format);
    GroupSpec g = parse_group_spec(o.spec);
    FormDescriptor f = g.form();
    RootSystem rs = build_root_system(f.absolute);
    auto info = heisenberg_parabolic(rs);
    json j{{"spec", format_group_spec(g)},       {"form", f.label},
           {"absolute", f.absolute.str()},        {"restricted", f.restricted.str()},
           {"split_rank", f.split_rank},          {"removed", one_based(info.removed)},
           {"levi", info.levi_str()},             {"g1", info.g1_str()},
           {"g1_dim", info.g1_dim},               {"center", info.center}};
    auto gd = check_gdefine(f);
    j["gdefine"] = gd.ok;
    if (!gd.ok) j["gdefine_reason"] = gd.reason;
    std::ostringstream text, csv;
    text << "spec        " << format_group_spec(g) << "\n"
         << "form        " << f.label << "\n"
         << "absolute    " << f.absolute.str() << "\n"
         << "restricted  " << f.restricted.str() << " (split rank " << f.split_rank << ")\n"
         << "removed     {" << one_based(info.removed) << "}\n"
         << "levi        " << info.levi_str() << "\n"
         << "g1          " << info.g1_str() << " (dim " << info.g1_dim << ")\n"
         << "highest     " << root_str(info.center) << "\n"
         << "gdefine     " << (gd.ok ? "holds" : "fails: " + gd.reason) << "\n";
    if (gd.ok) {
        auto rh = restricted_heisenberg(f);
        j["restricted_nilradical_dim"] = rh.nilradical_dim;
        text << "nilradical  dim " << rh.nilradical_dim << " over the base field (n = " << rh.n_value << ")\n";
    }
    csv << "form,absolute,levi,g1,g1_dim\n"
        << csv_cell(f.label) << "," << f.absolute.str() << "," << csv_cell(info.levi_str()) << ","
        << csv_cell(info.g1_str()) << "," << info.g1_dim << "\n";
    emit(fmt, j, text.str(), csv.str());
    return 0;
}

int cmd_cascade(const Options& o) {
    auto fmt = parse_output_format(o.format);
    GroupSpec g = parse_group_spec(o.spec);
    HTower t = cascade_form(g.form());
    auto cons = htower_consistency(t);
    json j{{"form", t.form},       {"height", t.height},           {"layer_dims", t.layer_dims},
           {"n", t.n_values},      {"m", t.m_label()},             {"gamma", one_based(t.gamma_set)},
           {"consistent", cons.ok}, {"failures", cons.failures}};
    j["steps"] = json::array();
    std::ostringstream text, csv;
    text << t.form << ": height " << t.height << ", m = " << t.m_label() << "\n";
    csv << "step,ambient,nodes,highest,removed,layer_dim,next\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        j["steps"].push_back({{"ambient", s.ambient},
                              {"nodes", one_based(s.nodes)},
                              {"highest", s.beta_tilde},
                              {"removed", one_based(s.removed)},
                              {"layer_dim", s.layer_dim},
                              {"next", s.next.empty() ? "--" : s.next}});
        text << "  " << i + 1 << ". " << s.ambient << "  nodes {" << one_based(s.nodes) << "}  highest "
             << root_str(s.beta_tilde) << "  removed {" << one_based(s.removed) << "}  dim h = " << s.layer_dim
             << "\n";
        csv << i + 1 << "," << csv_cell(s.ambient) << "," << csv_cell(one_based(s.nodes)) << ","
            << csv_cell(root_str(s.beta_tilde)) << "," << csv_cell(one_based(s.removed)) << "," << s.layer_dim << ","
            << csv_cell(s.next.empty() ? "--" : s.next) << "\n";
    }
    text << "layers [" << join(t.layer_dims) << "], n = [" << join(t.n_values) << "]\n";
    for (const auto& f : cons.failures) text << "INCONSISTENT: " << f << "\n";
    emit(fmt, j, text.str(), csv.str());
    return cons.ok ? 0 : 1;
}

int cmd_tables(const Options& o) {
    auto fmt = parse_output_format(o.format);
    std::vector<int> which;
    if (o.which == "all") which = {1, 2, 3};
    else if (o.which == "1" || o.which == "2" || o.which == "3") which = {std::stoi(o.which)};
    else throw InputError("--which takes 1, 2, 3 or all");
    bool ok = true;
    json all = json::array();
    for (int w : which) {
        auto rows = check_table(w);
        for (const auto& r : rows) ok = ok && r.match();
        std::string out = render_table(w, rows, fmt);
        if (fmt == OutputFormat::json && which.size() > 1) all.push_back(json::parse(out));
        else std::cout << out << (fmt == OutputFormat::text && which.size() > 1 ? "\n" : "");
    }
    if (fmt == OutputFormat::json && which.size() > 1) std::cout << all.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_orbit(const Options& o) {
    auto fmt = parse_output_format(o.format);
    GroupSpec g = parse_group_spec(o.spec);
    FormDescriptor f = g.form();
    if (!is_split(f))
        throw PreconditionError("split", f.label + " is not split; orbit computations need exact structure constants");
    NilpotentAlgebra n = build_ngamma(f.absolute);
    RationalSampler rng(seed_of(o));
    const HTower& t = n.tower();
    json j{{"form", f.label}, {"dim", n.dim()}, {"height", t.height}, {"n", t.n_values}, {"seed", seed_of(o)}};
    j["rankable"] = json::array();
    std::ostringstream text, csv;
    text << f.label << ": dim n_gamma = " << n.dim() << ", height " << t.height << ", n = [" << join(t.n_values)
         << "]\n";
    csv << "check,k,expected,computed,ok\n";
    bool ok = true;
    int lo = o.k >= 0 ? o.k : 0, hi = o.k >= 0 ? o.k : t.height;
    if (o.k > t.height) throw InputError("k exceeds the height " + std::to_string(t.height));
    for (int k = lo; k <= hi; ++k) {
        RankableSpec spec{k, {}};
        for (int i = 0; i < k; ++i) spec.central_values.push_back(rng.nonzero());
        int got = orbit_dimension(n, rankable_functional(n, spec));
        int want = expected_rankable_dimension(t, k);
        ok = ok && got == want;
        j["rankable"].push_back({{"k", k}, {"expected", want}, {"computed", got}});
        text << "  rankable k=" << k << ": orbit dim " << got << " (expected " << want << ")"
             << (got == want ? "" : "  MISMATCH") << "\n";
        csv << "rankable," << k << "," << want << "," << got << "," << (got == want) << "\n";
    }
    if (t.height > 1) {
        auto sg = s_gamma_set(n);
        j["c"] = sg.c;
        j["ordim2"] = json::array();
        text << "  S_gamma: " << sg.s_gamma.size() << " roots, c = " << sg.c << "\n";
        for (int k = std::max(lo, 1); k <= hi; ++k) {
            auto rep = ordim2_check(n, k, rng);
            ok = ok && rep.ok();
            j["ordim2"].push_back(to_json(rep));
            text << "  restricted k=" << k << ": orbit dim " << rep.computed << " (expected " << rep.expected << ")"
                 << (rep.ok() ? "" : "  FAILED") << "\n";
            for (const auto& fl : rep.failures) text << "    " << fl << "\n";
            csv << "ordim2," << k << "," << rep.expected << "," << rep.computed << "," << rep.ok() << "\n";
        }
    }
    j["ok"] = ok;
    emit(fmt, j, text.str(), csv.str());
    return ok ? 0 : 1;
}

int cmd_rankchart(const Options& o) {
    auto fmt = parse_output_format(o.format);
    GroupSpec g = parse_group_spec(o.spec);
    RationalSampler rng(seed_of(o));
    RankChart c;
    if (auto t = std::get_if<TypeIGroup>(&g.resolved)) c = rank_chart(*t, rng);
    else if (auto s = std::get_if<SLGroup>(&g.resolved)) c = rank_chart_sl(s->n - 1, rng);
    else throw InputError("rankchart needs a classical group such as SO(6,6) or SL(5,R)");
    std::ostringstream csv;
    csv << "new,old\n";
    for (const auto& [k, olds] : c.rows)
        for (int v : olds) csv << k << "," << v << "\n";
    emit(fmt, c.to_json(), c.to_text(), csv.str());
    return 0;
}

std::vector<TypeIGroup> default_verify_groups() {
    return {make_sp_real(6), make_sp_real(8), make_su(3, 4), make_su(2, 2), make_so(5, 7),
            make_so(4, 6),   make_so(3, 3),   make_so_star(8), make_so_star(10)};
}

int cmd_verify(const Options& o) {
    auto fmt = parse_output_format(o.format);
    RationalSampler rng(seed_of(o));
    std::vector<TypeIGroup> groups;
    std::vector<int> sl;
    if (o.spec.empty()) {
        groups = default_verify_groups();
        sl = {4, 5};
    } else {
        GroupSpec g = parse_group_spec(o.spec);
        if (auto t = std::get_if<TypeIGroup>(&g.resolved)) groups.push_back(*t);
        else if (auto s = std::get_if<SLGroup>(&g.resolved)) sl.push_back(s->n - 1);
        else throw InputError("verify needs a classical group such as Sp(6,R) or SL(5,R)");
    }
    std::vector<LemmaReport> reps;
    for (const auto& g : groups) {
        reps.push_back(verify_lemmafortrans(g, o.trials, rng));
        reps.push_back(verify_actionHOM(g, o.trials, rng));
        reps.push_back(verify_weilaction(g, o.trials, rng));
        reps.push_back(verify_svs(g, o.trials, rng));
        reps.push_back(verify_rank_additivity(g, o.trials, rng));
    }
    for (int l : sl) reps.push_back(sl_case_verify(l, o.trials, rng));
    bool ok = true;
    json j = json::array();
    std::ostringstream text, csv;
    csv << "lemma,group,trials,failures\n";
    for (const auto& r : reps) {
        ok = ok && r.ok();
        j.push_back(r.to_json());
        text << (r.ok() ? "ok    " : "FAIL  ") << r.lemma << "  " << r.group << "  (" << r.trials << " trials)\n";
        for (const auto& f : r.failures) text << f << "\n";
        csv << r.lemma << "," << csv_cell(r.group) << "," << r.trials << "," << r.failures.size() << "\n";
    }
    emit(fmt, j, text.str(), csv.str());
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heisenberg towers, cascades and rank computations"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--catalog", o.catalog, "Load forms from this catalog file instead of the built-in one");

    auto with_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto with_seed = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "Random seed (default: $HTOWER_SEED or a fixed value)");
    };

    auto* info = app.add_subcommand("info", "Heisenberg parabolic data");
    info->add_option("spec", o.spec, "Group, e.g. E8, \"C3 split\", su(2,3), SO(6,6)")->required();
    with_format(info);

    auto* cascade = app.add_subcommand("cascade", "Cascade and H-tower data");
    cascade->add_option("spec", o.spec, "Group")->required();
    with_format(cascade);

    auto* tables = app.add_subcommand("tables", "Regenerate and check the reference tables");
    tables->add_option("--which", o.which, "1, 2, 3 or all");
    with_format(tables);

    auto* orbit = app.add_subcommand("orbit", "Orbit dimensions of rankable functionals (split forms)");
    orbit->add_option("spec", o.spec, "Split type, e.g. C4")->required();
    orbit->add_option("--k", o.k, "Only this rank");
    with_format(orbit);
    with_seed(orbit);

    auto* chart = app.add_subcommand("rankchart", "New rank versus old rank for a classical group");
    chart->add_option("spec", o.spec, "Group, e.g. SO(6,6) or SL(5,R)")->required();
    with_format(chart);
    with_seed(chart);

    auto* verify = app.add_subcommand("verify", "Run the classical matrix identities");
    verify->add_option("spec", o.spec, "Restrict to one group");
    verify->add_option("--trials", o.trials, "Trials per identity")->check(CLI::PositiveNumber);
    with_format(verify);
    with_seed(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    try {
        if (!o.catalog.empty()) load_catalog(o.catalog);
        if (info->parsed()) return cmd_info(o);
        if (cascade->parsed()) return cmd_cascade(o);
        if (tables->parsed()) return cmd_tables(o);
        if (orbit->parsed()) return cmd_orbit(o);
        if (chart->parsed()) return cmd_rankchart(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const PreconditionError& e) {
        std::cerr << "htower: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "htower: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
