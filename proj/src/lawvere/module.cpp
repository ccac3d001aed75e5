#include "polyfun/lawvere/module.hpp"

#include <numeric>
#include <stdexcept>

namespace polyfun::lawvere {

namespace {

// Subspace of F^D with a reduced row echelon basis; coordinates of a member
// are its entries on the pivot columns.
struct EchelonBasis {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> pivots;
};

EchelonBasis echelon_of(const Field& f, std::size_t D, const std::vector<std::vector<Scalar>>& vectors)
{
    if (vectors.empty())
        return {};
    ExactMatrix m(f, vectors.size(), D);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < D; ++j)
            m(i, j) = vectors[i][j];
    auto e = row_echelon(m);
    return {e.basis, e.pivots};
}

std::vector<Scalar> column(const ExactMatrix& a, std::size_t j)
{
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < a.rows(); ++i)
        out.push_back(a(i, j));
    return out;
}

std::vector<Scalar> mat_vec(const ExactMatrix& a, const std::vector<Scalar>& v)
{
    std::vector<Scalar> out(a.rows(), Scalar::zero(a.field()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

SparseVector to_sparse(const std::vector<Scalar>& v)
{
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return out;
}

std::uint32_t linear_modulus(const Theory& t, const Field& f)
{
    if (f.kind() != Field::Kind::Prime || t.name() != "mod" + std::to_string(f.characteristic()))
        throw std::invalid_argument("tautological module needs the linear theory over Z/p with field F_p");
    return f.characteristic();
}

ExactMatrix coefficient_matrix(const Field& f, std::uint32_t p, const Morphism& g)
{
    ExactMatrix a(f, g.m, g.n);
    for (int j = 0; j < g.m; ++j) {
        Elem c = g.comps[j];
        for (int i = 0; i < g.n; ++i, c /= p)
            a(j, i) = Scalar(f, static_cast<long>(c % p));
    }
    return a;
}

std::vector<std::size_t> dims_upto(int cap, const std::function<std::size_t(int)>& dim)
{
    if (cap < 0)
        throw std::invalid_argument("negative object cap");
    std::vector<std::size_t> out;
    for (int n = 0; n <= cap; ++n)
        out.push_back(dim(n));
    return out;
}

} // namespace

FiniteModule::FiniteModule(Theory t, Field f, std::vector<std::size_t> dims, Action act, std::string name)
    : t_(std::move(t)), f_(std::move(f)), dims_(std::move(dims)), act_(std::move(act)), name_(std::move(name))
{
    if (dims_.empty())
        throw std::invalid_argument("module needs at least the object 0");
    if (object_cap() > t_.arity_cap())
        throw CapExceeded("module objects beyond the arity cap of " + t_.name());
}

std::size_t FiniteModule::dim(int n) const
{
    if (n < 0 || n > object_cap())
        throw CapExceeded("object " + std::to_string(n) + " outside module " + name_);
    return dims_[n];
}

ExactMatrix FiniteModule::act(const Morphism& f) const
{
    const std::size_t rows = dim(f.m), cols = dim(f.n);
    ExactMatrix a = act_(f);
    if (a.rows() != rows || a.cols() != cols)
        throw std::logic_error("action matrix of " + name_ + " has the wrong shape");
    return a;
}

ExactMatrix FiniteModule::act(const LinCombo& x) const
{
    ExactMatrix out(f_, dim(x.m), dim(x.n));
    for (const auto& [col, c] : x.terms)
        out += act(morphism_at(t_, x.n, x.m, col)).scaled(c);
    return out;
}

FiniteModule FiniteModule::constant(const Theory& t, const Field& f, int cap)
{
    return FiniteModule(t, f, dims_upto(cap, [](int) { return 1; }),
                        [f](const Morphism&) { return ExactMatrix::identity(f, 1); }, "constant");
}

FiniteModule FiniteModule::zero(const Theory& t, const Field& f, int cap)
{
    return FiniteModule(t, f, dims_upto(cap, [](int) { return 0; }),
                        [f](const Morphism&) { return ExactMatrix(f, 0, 0); }, "zero");
}

FiniteModule FiniteModule::tautological(const Theory& t, const Field& f, int cap)
{
    const std::uint32_t p = linear_modulus(t, f);
    return FiniteModule(t, f, dims_upto(cap, [](int n) { return n; }),
                        [f, p](const Morphism& g) { return coefficient_matrix(f, p, g); }, "tautological");
}

FiniteModule FiniteModule::tensor_square(const Theory& t, const Field& f, int cap)
{
    const std::uint32_t p = linear_modulus(t, f);
    return FiniteModule(t, f, dims_upto(cap, [](int n) { return n * n; }),
                        [f, p](const Morphism& g) {
                            auto a = coefficient_matrix(f, p, g);
                            return a.kron(a);
                        },
                        "tensor-square");
}

FiniteModule FiniteModule::representable_quotient(const Theory& t, const Field& f, int k, int d, int cap)
{
    // M(Y) = k[C(k,Y)] / I(Y,k) with basis the non-pivot columns of I(Y,k)
    struct Object {
        Subspace ideal;
        std::vector<std::uint32_t> basis;
        std::vector<std::int64_t> position;
    };
    auto objects = std::make_shared<std::vector<Object>>();
    for (int Y = 0; Y <= cap; ++Y) {
        Subspace ideal = d < 0 ? Subspace(f, t.hom_size(k, Y)) : polynomiality_ideal_cell(t, d, Y, k, f).space;
        Object o{std::move(ideal), {}, std::vector<std::int64_t>(t.hom_size(k, Y), -1)};
        for (std::uint32_t c = 0; c < o.ideal.ambient_dim(); ++c)
            if (!o.ideal.is_pivot(c)) {
                o.position[c] = static_cast<std::int64_t>(o.basis.size());
                o.basis.push_back(c);
            }
        objects->push_back(std::move(o));
    }
    std::vector<std::size_t> dims;
    for (const auto& o : *objects)
        dims.push_back(o.basis.size());
    auto act = [t, f, k, objects](const Morphism& g) {
        const Object& src = (*objects)[g.n];
        const Object& dst = (*objects)[g.m];
        ExactMatrix a(f, dst.basis.size(), src.basis.size());
        for (std::size_t c = 0; c < src.basis.size(); ++c) {
            Morphism x = morphism_at(t, k, g.n, src.basis[c]);
            SparseVector v = {{morphism_index(t, compose(t, g, x)), Scalar::one(f)}};
            for (const auto& [col, s] : dst.ideal.reduce(std::move(v)))
                a(static_cast<std::size_t>(dst.position[col]), c) = s;
        }
        return a;
    };
    std::string name = "L(-," + std::to_string(k) + ")";
    if (d >= 0)
        name += "/I^(" + std::to_string(d) + ")";
    return FiniteModule(t, f, dims, act, name);
}

FiniteModule FiniteModule::direct_sum(const std::vector<FiniteModule>& parts, std::string name)
{
    if (parts.empty())
        throw std::invalid_argument("empty direct sum");
    int cap = parts[0].object_cap();
    for (const auto& p : parts)
        cap = std::min(cap, p.object_cap());
    std::vector<std::size_t> dims(cap + 1, 0);
    for (const auto& p : parts)
        for (int n = 0; n <= cap; ++n)
            dims[n] += p.dim(n);
    if (name.empty())
        for (const auto& p : parts)
            name += (name.empty() ? "" : " + ") + p.name();
    const Field f = parts[0].field();
    auto act = [parts, f, dims](const Morphism& g) {
        ExactMatrix a(f, dims[g.m], dims[g.n]);
        std::size_t r0 = 0, c0 = 0;
        for (const auto& p : parts) {
            auto b = p.act(g);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    a(r0 + i, c0 + j) = b(i, j);
            r0 += b.rows();
            c0 += b.cols();
        }
        return a;
    };
    return FiniteModule(parts[0].theory(), f, dims, act, name);
}

std::string check_functoriality(const FiniteModule& M, int samples, std::uint64_t seed)
{
    const Theory& t = M.theory();
    const int cap = M.object_cap();
    for (int n = 0; n <= cap; ++n)
        if (!(M.act(identity_morphism(t, n)) == ExactMatrix::identity(M.field(), M.dim(n))))
            return "identity of " + std::to_string(n) + " does not act as the identity";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> obj(0, cap);
    for (int s = 0; s < samples; ++s) {
        int n = obj(rng), k = obj(rng), m = obj(rng);
        Morphism f = random_morphism(t, n, k, rng);
        Morphism g = random_morphism(t, k, m, rng);
        if (!(M.act(compose(t, g, f)) == M.act(g) * M.act(f)))
            return "composition not respected on objects " + std::to_string(n) + "," + std::to_string(k) + "," +
                   std::to_string(m);
    }
    return {};
}

std::size_t cross_effect_dim(const FiniteModule& M, const std::vector<int>& objects)
{
    const Theory& t = M.theory();
    int N = 0;
    for (int n : objects) {
        if (n < 0)
            throw std::invalid_argument("negative object in cross effect");
        N += n;
    }
    if (N > M.object_cap())
        throw CapExceeded("cross effect needs object " + std::to_string(N));
    const std::size_t D = M.dim(N);
    std::vector<std::vector<Scalar>> rows;
    int start = 0;
    for (int n : objects) {
        Morphism r{N, N - n, {}};
        for (int j = 0; j < N; ++j)
            if (j < start || j >= start + n)
                r.comps.push_back(t.projection(N, j));
        auto a = M.act(r);
        for (std::size_t i = 0; i < a.rows(); ++i)
            rows.push_back(a.row(i));
        start += n;
    }
    if (rows.empty() || D == 0)
        return D;
    ExactMatrix stacked(M.field(), rows.size(), D);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < D; ++j)
            stacked(i, j) = rows[i][j];
    return D - rank_over_field(stacked);
}

bool cross_effects_vanish(const FiniteModule& M, int k)
{
    if (k < 1)
        throw std::invalid_argument("cross effects start at k = 1");
    const int cap = M.object_cap();
    std::vector<int> objs(k, 1);
    if (k > cap)
        return true; // no positive tuple fits within the cap
    for (;;) {
        if (std::accumulate(objs.begin(), objs.end(), 0) <= cap && cross_effect_dim(M, objs) != 0)
            return false;
        int i = 0;
        while (i < k && ++objs[i] > cap) {
            objs[i] = 1;
            ++i;
        }
        if (i == k)
            return true;
    }
}

DegreeReport module_poly_degree(const FiniteModule& M)
{
    DegreeReport out;
    const int cap = M.object_cap();
    for (int d = 0; d + 1 <= cap; ++d) {
        bool zero = true;
        for (int n = 1; n * (d + 1) <= cap && zero; ++n)
            zero = M.act(pi_element(M.theory(), d, n, M.field())).is_zero();
        out.zero_at.push_back(zero);
        out.max_tested = d;
        if (zero && !out.degree)
            out.degree = d;
    }
    return out;
}

FiniteModule vanishing_submodule(const FiniteModule& M, const IdealFamily& J)
{
    const Field& f = M.field();
    const int cap = M.object_cap();
    std::vector<EchelonBasis> sub;
    for (int n = 0; n <= cap; ++n) {
        bool covered = true;
        for (int m = 0; m <= cap && covered; ++m)
            covered = J.count({m, n}) > 0;
        if (!covered)
            break;
        const std::size_t D = M.dim(n);
        std::vector<std::vector<Scalar>> rows;
        for (int m = 0; m <= cap; ++m)
            for (const auto& v : J.at({m, n}).space.basis()) {
                auto a = M.act(LinCombo{m, n, f, v});
                for (std::size_t i = 0; i < a.rows(); ++i)
                    rows.push_back(a.row(i));
            }
        std::vector<std::vector<Scalar>> kernel;
        if (rows.empty()) {
            for (std::size_t i = 0; i < D; ++i) {
                std::vector<Scalar> e(D, Scalar::zero(f));
                e[i] = Scalar::one(f);
                kernel.push_back(e);
            }
        } else if (D > 0) {
            ExactMatrix stacked(f, rows.size(), D);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < D; ++j)
                    stacked(i, j) = rows[i][j];
            kernel = left_kernel(stacked.transpose());
        }
        sub.push_back(echelon_of(f, D, kernel));
    }
    if (sub.empty())
        throw CapExceeded("ideal family does not cover the object 0");
    std::vector<std::size_t> dims;
    for (const auto& b : sub)
        dims.push_back(b.rows.size());
    auto act = [M, f, sub](const Morphism& g) {
        auto a = M.act(g);
        const auto& src = sub[g.n];
        const auto& dst = sub[g.m];
        ExactMatrix out(f, dst.rows.size(), src.rows.size());
        for (std::size_t c = 0; c < src.rows.size(); ++c) {
            auto img = mat_vec(a, src.rows[c]);
            for (std::size_t r = 0; r < dst.rows.size(); ++r)
                out(r, c) = img[dst.pivots[r]];
        }
        return out;
    };
    return FiniteModule(M.theory(), f, dims, act, "V(" + M.name() + ")");
}

FiniteModule covanishing_quotient(const FiniteModule& M, const IdealFamily& J)
{
    const Field& f = M.field();
    const int cap = M.object_cap();
    struct Object {
        Subspace image;
        std::vector<std::uint32_t> basis;
        std::vector<std::int64_t> position;
    };
    auto objects = std::make_shared<std::vector<Object>>();
    for (int Y = 0; Y <= cap; ++Y) {
        const std::size_t D = M.dim(Y);
        Object o{Subspace(f, D), {}, std::vector<std::int64_t>(D, -1)};
        for (int X = 0; X <= cap; ++X) {
            auto it = J.find({Y, X});
            if (it == J.end())
                continue;
            for (const auto& v : it->second.space.basis()) {
                auto a = M.act(LinCombo{Y, X, f, v});
                for (std::size_t j = 0; j < a.cols(); ++j)
                    o.image.insert(to_sparse(column(a, j)));
            }
        }
        for (std::uint32_t c = 0; c < D; ++c)
            if (!o.image.is_pivot(c)) {
                o.position[c] = static_cast<std::int64_t>(o.basis.size());
                o.basis.push_back(c);
            }
        objects->push_back(std::move(o));
    }
    std::vector<std::size_t> dims;
    for (const auto& o : *objects)
        dims.push_back(o.basis.size());
    auto act = [M, f, objects](const Morphism& g) {
        auto a = M.act(g);
        const Object& src = (*objects)[g.n];
        const Object& dst = (*objects)[g.m];
        ExactMatrix out(f, dst.basis.size(), src.basis.size());
        for (std::size_t c = 0; c < src.basis.size(); ++c)
            for (const auto& [row, s] : dst.image.reduce(to_sparse(column(a, src.basis[c]))))
                out(static_cast<std::size_t>(dst.position[row]), c) = s;
        return out;
    };
    return FiniteModule(M.theory(), f, dims, act, "Lambda(" + M.name() + ")");
}

IdealCell annihilator_cell(const FiniteModule& M, int m, int n)
{
    const Theory& t = M.theory();
    const Field& f = M.field();
    const std::size_t hom = t.hom_size(n, m);
    const std::size_t width = M.dim(m) * M.dim(n);
    IdealCell out{m, n, Subspace(f, hom)};
    if (width == 0) {
        for (std::uint32_t x = 0; x < hom; ++x)
            out.space.insert({{x, Scalar::one(f)}});
        return out;
    }
    ExactMatrix rows(f, hom, width);
    for (std::uint32_t x = 0; x < hom; ++x) {
        auto a = M.act(morphism_at(t, n, m, x));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                rows(x, i * a.cols() + j) = a(i, j);
    }
    for (const auto& v : left_kernel(rows))
        out.space.insert(to_sparse(v));
    return out;
}

} // namespace polyfun::lawvere
