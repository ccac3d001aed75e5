#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyfun/cli/harness.hpp"
#include "polyfun/cli/serialize.hpp"
#include "polyfun/finmonoid/algebra.hpp"
#include "polyfun/finmonoid/groups.hpp"
#include "polyfun/magnus/series.hpp"

using namespace polyfun;
using cli::Json;

namespace {

gradeds::Caps gradeds_caps(const std::string& text)
{
    auto c = cli::parse_caps(text);
    if (c.size() != 3)
        throw std::invalid_argument("caps must look like n,m,D");
    return {c[0], c[1], c[2]};
}

// "3" means cells up to (3,3); "3,2" bounds targets and sources separately.
lawvere::CellCaps cell_caps(const std::string& text)
{
    auto c = cli::parse_caps(text);
    if (c.size() == 1)
        return {c[0], c[0]};
    if (c.size() == 2)
        return {c[0], c[1]};
    throw std::invalid_argument("cell caps must look like k or m,n");
}

int parse_class(const std::string& text)
{
    if (text == "inf" || text == "infinity")
        return gradeds::kInfinity;
    return std::stoi(text);
}

finmonoid::FiniteMonoid load_monoid(const std::string& spec, const std::string& file)
{
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw std::invalid_argument("cannot read " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        return finmonoid::FiniteMonoid::parse(ss.str());
    }
    if (spec.empty())
        throw std::invalid_argument("give --spec or --file");
    return finmonoid::FiniteMonoid::from_spec(spec);
}

lawvere::FiniteModule build_module(const lawvere::Theory& t, const Field& f, const std::string& what, int cap)
{
    if (what == "constant")
        return lawvere::FiniteModule::constant(t, f, cap);
    if (what == "zero")
        return lawvere::FiniteModule::zero(t, f, cap);
    if (what == "tautological")
        return lawvere::FiniteModule::tautological(t, f, cap);
    if (what == "tensor-square")
        return lawvere::FiniteModule::tensor_square(t, f, cap);
    if (what.rfind("rep:", 0) == 0) {
        // rep:k or rep:k:d
        auto rest = what.substr(4);
        auto colon = rest.find(':');
        int k = std::stoi(rest.substr(0, colon));
        int d = colon == std::string::npos ? -1 : std::stoi(rest.substr(colon + 1));
        return lawvere::FiniteModule::representable_quotient(t, f, k, d, cap);
    }
    throw std::invalid_argument("unknown module: " + what);
}

cli::CheckSpec spec_from_json(const Json& j)
{
    cli::CheckSpec s;
    s.check = j.at("check").get<std::string>();
    if (j.contains("params"))
        for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
            s.params[it.key()] = it->is_string() ? it->get<std::string>() : it->dump();
    if (j.contains("caps")) {
        if (j["caps"].is_string())
            s.caps = cli::parse_caps(j["caps"].get<std::string>());
        else if (j["caps"].is_number_integer())
            s.caps = {j["caps"].get<int>()};
        else
            s.caps = j["caps"].get<std::vector<int>>();
    }
    if (j.contains("field"))
        s.field = j["field"].get<std::string>();
    return s;
}

void print(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"polyfun: exact checks for polynomial functors, augmentation ideals and Lawvere theories"};
    app.require_subcommand(1);
    int exit_code = 0;

    // check ------------------------------------------------------------------
    auto* check = app.add_subcommand("check", "run one registered check");
    std::string check_name, field, caps_text, format = "json";
    std::vector<std::string> params;
    bool list = false, no_ms = false;
    check->add_option("--check", check_name, "check name");
    check->add_option("--param", params, "parameter k=v (repeatable)");
    check->add_option("--field", field, "Q, Fp:p or a comma list");
    check->add_option("--caps", caps_text, "caps such as 3 or 2,2,5");
    check->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    check->add_flag("--list", list, "list registered checks");
    check->add_flag("--no-ms", no_ms, "omit durations for byte-stable output");
    check->callback([&] {
        if (list) {
            for (const auto& n : cli::registered_checks())
                std::cout << n << "  " << cli::check_summary(n) << "\n";
            return;
        }
        if (check_name.empty())
            throw CLI::ValidationError("--check", "a check name is required");
        cli::CheckSpec spec{check_name, {}, {}, field};
        for (const auto& p : params)
            spec.params.insert(cli::parse_param(p));
        if (!caps_text.empty())
            spec.caps = cli::parse_caps(caps_text);
        auto r = cli::run_check(spec);
        std::cout << cli::emit_report(r, format, !no_ms);
        exit_code = cli::passed(r.verdict) ? 0 : 1;
    });

    // batch ------------------------------------------------------------------
    auto* batch = app.add_subcommand("batch", "run checks from a JSON spec file, or all with --all");
    std::string batch_file;
    bool all = false;
    batch->add_option("file", batch_file, "JSON array of {check, params, caps, field}");
    batch->add_flag("--all", all, "run every registered check with defaults");
    batch->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    batch->add_flag("--no-ms", no_ms, "omit durations");
    batch->callback([&] {
        std::vector<cli::CheckSpec> specs;
        if (all) {
            for (const auto& n : cli::registered_checks())
                specs.push_back({n, {}, {}, ""});
        } else {
            std::ifstream in(batch_file);
            if (!in)
                throw std::invalid_argument("cannot read " + batch_file);
            for (const auto& j : Json::parse(in))
                specs.push_back(spec_from_json(j));
        }
        std::vector<cli::Report> reports;
        for (const auto& s : specs) {
            reports.push_back(cli::run_check(s));
            if (!cli::passed(reports.back().verdict))
                exit_code = 1;
        }
        std::cout << cli::emit_reports(reports, format, !no_ms);
    });

    // gamma ------------------------------------------------------------------
    auto* gamma = app.add_subcommand("gamma", "agreement interval of a group quotient functor");
    std::string kind = "nil", c1_text = "2";
    int c0 = 1, p = 0;
    std::string gcaps = "2,2,5";
    gamma->add_option("--kind", kind, "nil, dim or nil-dim");
    gamma->add_option("--c0", c0, "target class");
    gamma->add_option("--c1", c1_text, "source class or inf");
    gamma->add_option("--p", p, "prime for dimension series");
    gamma->add_option("--caps", gcaps, "n,m,D");
    gamma->callback([&] {
        gradeds::GammaSetting s{gradeds::GammaSetting::parse_kind(kind), c0, parse_class(c1_text),
                                static_cast<std::uint32_t>(p)};
        auto r = gradeds::gamma_interval(s, gradeds_caps(gcaps));
        print(cli::gamma_json(r));
    });

    // dset -------------------------------------------------------------------
    auto* dset = app.add_subcommand("dset", "degree-set probe of augmentation quotients");
    std::string dkind = "dim", dfield = "F2", dcaps = "3,3,4";
    int dc = 2, dp = 2;
    dset->add_option("--kind", dkind, "nil, dim or trivial");
    dset->add_option("--c", dc, "class");
    dset->add_option("--p", dp, "prime of the dimension series");
    dset->add_option("--field", dfield, "coefficient field");
    dset->add_option("--caps", dcaps, "n,m,D");
    dset->callback([&] {
        gradeds::DsetSetting s{gradeds::DsetSetting::parse_kind(dkind), dc, static_cast<std::uint32_t>(dp)};
        print(cli::dset_json(gradeds::dset_probe(s, Field::parse(dfield), gradeds_caps(dcaps))));
    });

    // monoid -----------------------------------------------------------------
    auto* monoid = app.add_subcommand("monoid", "finite monoid tools: info, augdims, qints, jennings");
    std::string action, mspec, mfile, mfield = "F2";
    int mD = 5, md = 1, mp = 2;
    monoid->add_option("action", action, "info, augdims, qints or jennings")
        ->required()
        ->check(CLI::IsMember({"info", "augdims", "qints", "jennings"}));
    monoid->add_option("--spec", mspec, "cyclic:4, elab:2:3, band:2, cband:3, ut3:2, A*B");
    monoid->add_option("--file", mfile, "table file: 'k identity' then k rows");
    monoid->add_option("--field", mfield, "field for augdims");
    monoid->add_option("--D", mD, "degree cap");
    monoid->add_option("--d", md, "degree for qints");
    monoid->add_option("--p", mp, "prime for jennings");
    monoid->callback([&] {
        auto m = load_monoid(mspec, mfile);
        Json j;
        j["monoid"] = m.name();
        j["size"] = m.size();
        if (action == "info") {
            j["group"] = m.is_group();
            j["generators"] = m.generators();
            j["stabilizationIndex"] = finmonoid::stabilization_index(m, Field::parse(mfield));
            j["field"] = Field::parse(mfield).name();
        } else if (action == "augdims") {
            j["field"] = Field::parse(mfield).name();
            j["dims"] = cli::to_json(finmonoid::aug_power_dims(m, Field::parse(mfield), mD));
        } else if (action == "qints") {
            j["d"] = md;
            Json inv = Json::array();
            for (const auto& x : finmonoid::q_invariants_integral(m, md))
                inv.push_back(x.get_str());
            j["invariants"] = inv;
        } else {
            auto js = finmonoid::jennings_series(m, mp);
            j["p"] = mp;
            j["degenerate"] = js.degenerate;
            j["termSizes"] = Json::array();
            for (const auto& t : js.terms)
                j["termSizes"].push_back(t.size());
            j["factorDims"] = cli::to_json(js.factor_dims);
            if (!js.degenerate) {
                auto q = finmonoid::quillen_check(m, mp, mD);
                j["augDims"] = cli::to_json(q.aug_dims);
                j["pbwDims"] = cli::to_json(q.pbw_dims);
                j["quillenAgree"] = q.agree;
            }
        }
        print(j);
    });

    // ideal ------------------------------------------------------------------
    auto* ideal = app.add_subcommand("ideal", "compare polynomiality ideals with augmentation powers");
    std::string theory = "mod2", lfield = "F2", lcaps = "3";
    int ld = 1;
    ideal->add_option("--theory", theory, "mod2, mod3, mod4, cband, band (optionally :arity)");
    ideal->add_option("--d", ld, "degree");
    ideal->add_option("--field", lfield, "coefficient field");
    ideal->add_option("--caps", lcaps, "cell caps k or m,n");
    ideal->callback([&] {
        auto t = lawvere::Theory::from_name(theory);
        auto f = Field::parse(lfield);
        auto caps = cell_caps(lcaps);
        auto r = lawvere::ideal_equality_check(t, ld, caps, f);
        print(cli::ideal_json(r, f, caps));
        exit_code = r.all_equal() ? 0 : 1;
    });

    // degree -----------------------------------------------------------------
    auto* degree = app.add_subcommand("degree", "polynomial degree of a module");
    std::string module = "tautological";
    int mcap = 3;
    degree->add_option("--theory", theory, "theory name");
    degree->add_option("--module", module, "constant, zero, tautological, tensor-square, rep:k[:d]");
    degree->add_option("--field", lfield, "coefficient field");
    degree->add_option("--cap", mcap, "largest object");
    degree->callback([&] {
        auto M = build_module(lawvere::Theory::from_name(theory), Field::parse(lfield), module, mcap);
        auto r = lawvere::module_poly_degree(M);
        auto j = cli::degree_json(M, r);
        Json cr = Json::array();
        for (int d = 0; d <= r.max_tested; ++d)
            cr.push_back(lawvere::cross_effects_vanish(M, d + 1));
        j["crossEffectsVanish"] = cr;
        print(j);
    });

    // gamma-finite -----------------------------------------------------------
    auto* gfin = app.add_subcommand("gamma-finite", "kernel containment for Z/r -> Z/s");
    int from = 4, to = 2;
    std::string gf_caps = "3";
    gfin->add_option("--from", from, "r");
    gfin->add_option("--to", to, "s, dividing r");
    gfin->add_option("--d", ld, "degree");
    gfin->add_option("--field", lfield, "coefficient field");
    gfin->add_option("--caps", gf_caps, "cell caps k or m,n");
    gfin->callback([&] {
        auto xi = lawvere::TheoryMap::reduction(from, to);
        auto f = Field::parse(lfield);
        auto caps = cell_caps(gf_caps);
        auto g = lawvere::gamma_membership(xi, ld, caps, f);
        print(cli::gamma_membership_json(xi, g, f, caps));
        exit_code = g.member ? 0 : 1;
    });

    // annihilator ------------------------------------------------------------
    auto* ann = app.add_subcommand("annihilator", "annihilator of representable quotients against the ideal");
    ann->add_option("--theory", theory, "theory name");
    ann->add_option("--d", ld, "degree");
    ann->add_option("--field", lfield, "coefficient field");
    ann->add_option("--caps", lcaps, "cell caps k or m,n");
    ann->callback([&] {
        auto t = lawvere::Theory::from_name(theory);
        auto f = Field::parse(lfield);
        auto caps = cell_caps(lcaps);
        const int cap = std::min(std::max(caps.max_target, caps.max_source), t.arity_cap());
        std::vector<lawvere::FiniteModule> parts;
        for (int X = 0; X * (ld + 1) <= t.arity_cap(); ++X)
            parts.push_back(lawvere::FiniteModule::representable_quotient(t, f, X, ld, cap));
        auto sum = lawvere::FiniteModule::direct_sum(parts);
        Json j;
        j["theory"] = t.name();
        j["field"] = f.name();
        j["d"] = ld;
        j["module"] = sum.name();
        j["cells"] = Json::array();
        bool ok = true;
        for (auto [m, n] : lawvere::ideal_cells(t, ld, {std::min(caps.max_target, cap), std::min(caps.max_source, cap)})) {
            auto a = lawvere::annihilator_cell(sum, m, n);
            auto i = lawvere::polynomiality_ideal_cell(t, ld, m, n, f);
            bool eq = lawvere::cells_equal(a, i);
            ok = ok && eq;
            j["cells"].push_back(Json{{"m", m}, {"n", n}, {"dimAnn", a.dim()}, {"dimIdeal", i.dim()}, {"equal", eq}});
        }
        j["verdict"] = ok ? "pass" : "fail";
        print(j);
        exit_code = ok ? 0 : 1;
    });

    // magnus -----------------------------------------------------------------
    auto* mag = app.add_subcommand("magnus", "Magnus expansion of a word");
    std::string word, model = "nilpotent";
    int wn = 2, wc = 3, wp = 2;
    mag->add_option("--word", word, "letters x1, X1 separated by spaces")->required();
    mag->add_option("--n", wn, "rank");
    mag->add_option("--c", wc, "class / truncation degree");
    mag->add_option("--p", wp, "prime for the dimension model");
    mag->add_option("--model", model, "nilpotent or dimension")
        ->check(CLI::IsMember({"nilpotent", "dimension"}));
    mag->callback([&] {
        if (wn < 1 || wn > 4 || wc < 1 || wc > 10)
            throw CapExceeded("magnus expansions are limited to n <= 4 and c <= 10");
        auto w = freegroup::Word::parse(wn, word);
        auto gm = model == "nilpotent" ? magnus::GroupModel::nilpotent(wn, wc)
                                       : magnus::GroupModel::dimension(wn, wc, static_cast<std::uint32_t>(wp));
        Json j;
        j["word"] = w.to_string();
        j["model"] = model;
        j["series"] = magnus::magnus_embed(w, gm).to_string();
        auto g = magnus::gamma_weight(w, wc);
        if (g)
            j["gammaWeight"] = *g;
        else
            j["gammaWeight"] = "> " + std::to_string(wc);
        print(j);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
