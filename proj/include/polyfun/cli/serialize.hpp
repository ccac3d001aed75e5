#pragma once

#include <json.hpp>

#include "polyfun/finmonoid/groups.hpp"
#include "polyfun/gradeds/gamma.hpp"
#include "polyfun/lawvere/ideal.hpp"
#include "polyfun/lawvere/module.hpp"

namespace polyfun::cli {

using Json = nlohmann::ordered_json;

Json to_json(const IntSeries& s);
Json to_json(const gradeds::GradedRanks& r);
Json to_json(const gradeds::Caps& c);

// {setting, params, caps, perDegree:[{d, agree, witness?}], interval}
Json gamma_json(const gradeds::GammaReport& r);
// {setting, params, caps, perDegree:[{d, strict, inDegreeSet, witness?}]}
Json dset_json(const gradeds::DsetReport& r);
// {theory, field, caps, cells:[{m,n,dimIdeal,dimAug,equal}], verdict}
Json ideal_json(const lawvere::EqualityReport& r, const Field& f, const lawvere::CellCaps& caps);
Json gamma_membership_json(const lawvere::TheoryMap& xi, const lawvere::GammaMembership& g, const Field& f,
                           const lawvere::CellCaps& caps);
Json degree_json(const lawvere::FiniteModule& M, const lawvere::DegreeReport& r);

} // namespace polyfun::cli
