#include "polyfun/gradeds/gamma.hpp"

#include <stdexcept>

namespace polyfun::gradeds {

namespace {

std::string class_name(int c) { return c == kInfinity ? "inf" : std::to_string(c); }

} // namespace

std::string GammaSetting::name() const
{
    switch (kind) {
    case Kind::NilToNil:
        return "nil(" + class_name(c1) + ")->nil(" + class_name(c0) + ")";
    case Kind::DimToDim:
        return "dim(" + class_name(c1) + "," + std::to_string(p) + ")->dim(" + class_name(c0) + "," +
               std::to_string(p) + ")";
    default:
        return "nil(" + class_name(c0) + ")->dim(" + class_name(c0) + "," + std::to_string(p) + ")";
    }
}

GammaSetting::Kind GammaSetting::parse_kind(const std::string& s)
{
    if (s == "nil" || s == "nilpotent")
        return Kind::NilToNil;
    if (s == "dim" || s == "dimension")
        return Kind::DimToDim;
    if (s == "nil-dim" || s == "nil_dim")
        return Kind::NilToDim;
    throw std::invalid_argument("unknown gamma setting: " + s);
}

IntSeries GammaSetting::source_ranks(int n, int m, int D) const
{
    switch (kind) {
    case Kind::NilToNil:
        return q_ranks_nilpotent(n, m, c1, D);
    case Kind::DimToDim:
        return q_ranks_dimension(n, m, c1, p, D);
    default:
        return q_ranks_nilpotent(n, m, c0, D);
    }
}

GradedRanks GammaSetting::source_lie(int n, int m, int D) const
{
    if (kind == Kind::NilToNil)
        return product_scale(free_nilpotent_lie_ranks(n, std::min(c1, std::max(D, 1))), m);
    if (kind == Kind::DimToDim)
        return product_scale(truncate(free_restricted_lie_dims(n, p, D), c1), m);
    throw std::logic_error("no common Lie-rank description for this setting");
}

GradedRanks GammaSetting::target_lie(int n, int m, int D) const
{
    if (kind == Kind::NilToNil)
        return product_scale(free_nilpotent_lie_ranks(n, std::min(c0, std::max(D, 1))), m);
    if (kind == Kind::DimToDim)
        return product_scale(truncate(free_restricted_lie_dims(n, p, D), c0), m);
    throw std::logic_error("no common Lie-rank description for this setting");
}

IntSeries GammaSetting::target_ranks(int n, int m, int D) const
{
    if (kind == Kind::NilToNil)
        return q_ranks_nilpotent(n, m, c0, D);
    return q_ranks_dimension(n, m, c0, p, D);
}

std::vector<int> GammaReport::interval() const
{
    std::vector<int> out;
    for (int d = 0; d <= interval_max; ++d)
        out.push_back(d);
    return out;
}

GammaReport gamma_interval(const GammaSetting& s, const Caps& caps)
{
    if (caps.n_max < 1 || caps.m_max < 1 || caps.D < 0)
        throw std::invalid_argument("gamma_interval: caps must be positive");
    if (s.c0 < 1)
        throw std::invalid_argument("gamma_interval: c0 must be positive");
    if (s.kind != GammaSetting::Kind::NilToDim && !(s.c0 < s.c1))
        throw std::invalid_argument("gamma_interval: need c0 < c1");
    if (s.kind != GammaSetting::Kind::NilToNil && !is_prime(s.p))
        throw std::invalid_argument("gamma_interval: p must be prime");

    const int D = caps.D;
    GammaReport rep{s, caps, {}, -1, std::nullopt, true, true};
    std::vector<std::vector<IntSeries>> src, tgt;
    for (int n = 1; n <= caps.n_max; ++n) {
        src.emplace_back();
        tgt.emplace_back();
        for (int m = 1; m <= caps.m_max; ++m) {
            src.back().push_back(s.source_ranks(n, m, D));
            tgt.back().push_back(s.target_ranks(n, m, D));
        }
    }

    for (int d = 0; d <= D; ++d) {
        DegreeVerdict v{d, true, std::nullopt};
        for (int n = 1; n <= caps.n_max && v.agree; ++n)
            for (int m = 1; m <= caps.m_max && v.agree; ++m) {
                const auto& a = src[n - 1][m - 1][d];
                const auto& b = tgt[n - 1][m - 1][d];
                if (a != b) {
                    v.agree = false;
                    v.witness = Witness{n, m, d, a, b};
                }
            }
        if (!v.agree && !rep.first_failure)
            rep.first_failure = v.witness;
        rep.per_degree.push_back(std::move(v));
    }
    while (rep.interval_max + 1 <= D && rep.per_degree[rep.interval_max + 1].agree)
        ++rep.interval_max;

    for (int n = 1; n <= caps.n_max; ++n)
        for (int m = 1; m <= caps.m_max; ++m) {
            const auto& a = src[n - 1][m - 1];
            const auto& b = tgt[n - 1][m - 1];
            for (int d = 0; d <= D; ++d)
                if (a[d] < b[d])
                    rep.dominated = false;
            if (s.kind == GammaSetting::Kind::NilToDim)
                continue;
            const GradedRanks la = s.source_lie(n, m, D), lb = s.target_lie(n, m, D);
            int drop = -1;
            for (int i = 1; i <= D && drop < 0; ++i)
                if (la.at(i) != lb.at(i))
                    drop = i;
            if (drop < 0) {
                for (int d = 0; d <= D; ++d)
                    if (a[d] != b[d])
                        rep.monotone_ok = false;
                continue;
            }
            for (int d = 0; d < drop; ++d)
                if (a[d] != b[d])
                    rep.monotone_ok = false;
            if (a[drop] <= b[drop])
                rep.monotone_ok = false;
            // symmetric algebras with r_1 > 0 have no vanishing coefficients
            if (s.kind == GammaSetting::Kind::NilToNil && sgn(la.at(1)) > 0)
                for (int d = drop; d <= D; ++d)
                    if (a[d] <= b[d])
                        rep.monotone_ok = false;
        }
    return rep;
}

std::string DsetSetting::name() const
{
    switch (kind) {
    case Kind::Nilpotent:
        return "nil(" + class_name(c) + ")";
    case Kind::Dimension:
        return "dim(" + class_name(c) + "," + std::to_string(p) + ")";
    default:
        return "trivial";
    }
}

DsetSetting::Kind DsetSetting::parse_kind(const std::string& s)
{
    if (s == "nil" || s == "nilpotent")
        return Kind::Nilpotent;
    if (s == "dim" || s == "dimension")
        return Kind::Dimension;
    if (s == "trivial")
        return Kind::Trivial;
    throw std::invalid_argument("unknown dset setting: " + s);
}

IntSeries DsetSetting::ranks(int n, int m, const Field& k, int D) const
{
    if (kind == Kind::Trivial)
        return IntSeries::one(D);
    if (kind == Kind::Nilpotent)
        // the integral quotients are free, so ranks do not depend on k
        return q_ranks_nilpotent(n, m, c, D);
    if (!is_prime(p))
        throw std::invalid_argument("dimension setting needs a prime");
    if (k.characteristic() == p)
        return q_ranks_dimension(n, m, c, p, D);
    // C_n^m has abelianisation (Z/p^j)^(nm) with p^j >= c + 1. Tensoring with a
    // field of other characteristic kills it, so Aug = Aug^2 and the graded
    // pieces above degree 0 vanish.
    return IntSeries::one(D);
}

DsetReport dset_probe(const DsetSetting& s, const Field& k, const Caps& caps)
{
    if (caps.n_max < 1 || caps.m_max < 1 || caps.D < 0)
        throw std::invalid_argument("dset_probe: caps must be positive");
    if (!k.is_field())
        throw std::invalid_argument("dset_probe needs a field");
    const int D = caps.D;
    std::vector<std::vector<IntSeries>> r;
    for (int n = 1; n <= caps.n_max; ++n) {
        r.emplace_back();
        for (int m = 1; m <= caps.m_max; ++m)
            r.back().push_back(s.ranks(n, m, k, D + 1));
    }
    auto positive_at = [&](int deg) -> std::optional<Witness> {
        for (int n = 1; n <= caps.n_max; ++n)
            for (int m = 1; m <= caps.m_max; ++m)
                if (sgn(r[n - 1][m - 1][deg]) > 0)
                    return Witness{n, m, deg, r[n - 1][m - 1][deg], 0};
        return std::nullopt;
    };
    DsetReport rep{s, k, caps, {}};
    for (int d = 0; d <= D; ++d) {
        auto w = positive_at(d + 1);
        bool in_set = d == 0 || positive_at(d).has_value();
        rep.per_degree.push_back({d, w.has_value(), in_set, w});
    }
    return rep;
}

} // namespace polyfun::gradeds
