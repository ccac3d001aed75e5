#include "polyfun/cli/serialize.hpp"

namespace polyfun::cli {

namespace {

// Integers that fit are emitted as numbers, larger ones as strings.
Json big_json(const BigInt& x)
{
    if (x.fits_slong_p())
        return Json(x.get_si());
    return Json(x.get_str());
}

Json witness_json(const gradeds::Witness& w)
{
    Json j;
    j["n"] = w.n;
    j["m"] = w.m;
    j["d"] = w.d;
    j["source"] = big_json(w.source);
    j["target"] = big_json(w.target);
    return j;
}

Json lawvere_caps_json(const lawvere::CellCaps& caps)
{
    Json j;
    j["maxTarget"] = caps.max_target;
    j["maxSource"] = caps.max_source;
    return j;
}

Json skipped_json(const std::vector<lawvere::SkippedCell>& skipped)
{
    Json j = Json::array();
    for (const auto& s : skipped)
        j.push_back(Json{{"m", s.m}, {"n", s.n}, {"reason", s.reason}});
    return j;
}

} // namespace

Json to_json(const IntSeries& s)
{
    Json j = Json::array();
    for (const auto& c : s.coeffs())
        j.push_back(big_json(c));
    return j;
}

Json to_json(const gradeds::GradedRanks& r)
{
    Json j = Json::array();
    for (const auto& c : r.ranks)
        j.push_back(big_json(c));
    return j;
}

Json to_json(const gradeds::Caps& c)
{
    Json j;
    j["n"] = c.n_max;
    j["m"] = c.m_max;
    j["D"] = c.D;
    return j;
}

Json gamma_json(const gradeds::GammaReport& r)
{
    Json j;
    j["setting"] = r.setting.name();
    Json params;
    params["c0"] = r.setting.c0;
    if (r.setting.kind == gradeds::GammaSetting::Kind::NilToNil ||
        r.setting.kind == gradeds::GammaSetting::Kind::DimToDim) {
        if (r.setting.c1 == gradeds::kInfinity)
            params["c1"] = "inf";
        else
            params["c1"] = r.setting.c1;
    }
    if (r.setting.p)
        params["p"] = r.setting.p;
    j["params"] = params;
    j["caps"] = to_json(r.caps);
    j["perDegree"] = Json::array();
    for (const auto& v : r.per_degree) {
        Json d;
        d["d"] = v.d;
        d["agree"] = v.agree;
        if (v.witness)
            d["witness"] = witness_json(*v.witness);
        j["perDegree"].push_back(d);
    }
    j["interval"] = r.interval();
    j["dominated"] = r.dominated;
    j["monotone"] = r.monotone_ok;
    j["scope"] = "within caps";
    return j;
}

Json dset_json(const gradeds::DsetReport& r)
{
    Json j;
    j["setting"] = r.setting.name();
    Json params;
    params["c"] = r.setting.c;
    params["p"] = r.setting.p;
    params["field"] = r.field.name();
    j["params"] = params;
    j["caps"] = to_json(r.caps);
    j["perDegree"] = Json::array();
    for (const auto& v : r.per_degree) {
        Json d;
        d["d"] = v.d;
        d["strict"] = v.strict;
        d["inDegreeSet"] = v.in_degree_set;
        if (v.witness)
            d["witness"] = Json{{"n", v.witness->n}, {"m", v.witness->m}, {"rank", big_json(v.witness->source)}};
        j["perDegree"].push_back(d);
    }
    return j;
}

Json ideal_json(const lawvere::EqualityReport& r, const Field& f, const lawvere::CellCaps& caps)
{
    Json j;
    j["theory"] = r.theory;
    j["field"] = f.name();
    j["d"] = r.d;
    j["caps"] = lawvere_caps_json(caps);
    j["cells"] = Json::array();
    for (const auto& c : r.cells)
        j["cells"].push_back(
            Json{{"m", c.m}, {"n", c.n}, {"dimIdeal", c.dim_ideal}, {"dimAug", c.dim_aug}, {"equal", c.equal}});
    j["skipped"] = skipped_json(r.skipped);
    j["verdict"] = r.all_equal() ? (r.skipped.empty() ? "pass" : "within-caps") : "fail";
    return j;
}

Json gamma_membership_json(const lawvere::TheoryMap& xi, const lawvere::GammaMembership& g, const Field& f,
                           const lawvere::CellCaps& caps)
{
    Json j;
    j["map"] = xi.name;
    j["field"] = f.name();
    j["d"] = g.d;
    j["caps"] = lawvere_caps_json(caps);
    j["cells"] = Json::array();
    for (const auto& c : g.cells)
        j["cells"].push_back(Json{{"m", c.m},
                                  {"n", c.n},
                                  {"dimKernel", c.dim_kernel},
                                  {"dimIdeal", c.dim_ideal},
                                  {"contained", c.contained},
                                  {"dimSourceQuotient", c.dim_source_quotient},
                                  {"dimTargetQuotient", c.dim_target_quotient}});
    j["skipped"] = skipped_json(g.skipped);
    j["member"] = g.member;
    j["verdict"] = g.member ? "within-caps" : "fail";
    return j;
}

Json degree_json(const lawvere::FiniteModule& M, const lawvere::DegreeReport& r)
{
    Json j;
    j["theory"] = M.theory().name();
    j["field"] = M.field().name();
    j["module"] = M.name();
    j["objectCap"] = M.object_cap();
    j["dims"] = Json::array();
    for (int n = 0; n <= M.object_cap(); ++n)
        j["dims"].push_back(M.dim(n));
    if (r.degree)
        j["degree"] = *r.degree;
    else
        j["degree"] = "exceeds caps";
    j["maxTested"] = r.max_tested;
    j["piZero"] = r.zero_at;
    return j;
}

} // namespace polyfun::cli
