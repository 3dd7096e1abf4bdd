#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "quiver.hpp"
#include "word.hpp"

namespace sbalg {

// dims per vertex; mats[a] has shape dims[t(a)] x dims[s(a)].
template <class F>
struct Representation {
    std::vector<int> dims;
    std::vector<Matrix<F>> mats;

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    bool operator==(const Representation&) const = default;
};

template <class F>
Representation<F> zero_representation(const Quiver& q) {
    Representation<F> r;
    r.dims.assign(q.num_vertices(), 0);
    for (int a = 0; a < q.num_arrows(); ++a) r.mats.emplace_back(0, 0);
    return r;
}

// Action of a path (traversal order) as a matrix.
template <class F>
Matrix<F> evaluate_path(const Quiver& q, const Representation<F>& M, const Path& p) {
    if (p.empty()) throw PreconditionError("evaluate_path: empty path");
    Matrix<F> r = Matrix<F>::identity(M.dims[q.arrow(p.front()).src]);
    for (int a : p) r = M.mats[a] * r;
    return r;
}

template <class F>
void check_representation(const MonomialAlgebra& alg, const Representation<F>& M) {
    const auto& q = alg.quiver();
    if (M.dims.size() != static_cast<std::size_t>(q.num_vertices()) ||
        M.mats.size() != static_cast<std::size_t>(q.num_arrows()))
        throw PreconditionError("representation does not match the quiver");
    for (int a = 0; a < q.num_arrows(); ++a) {
        const auto& m = M.mats[a];
        if (m.rows() != static_cast<std::size_t>(M.dims[q.arrow(a).tgt]) ||
            m.cols() != static_cast<std::size_t>(M.dims[q.arrow(a).src]))
            throw PreconditionError("matrix of arrow " + q.arrow(a).name + " has the wrong shape");
    }
    for (const auto& r : alg.relations())
        if (!evaluate_path(q, M, r).is_zero())
            throw InvariantError("relation " + alg.path_string(r) + " does not act as zero");
}

// Positions 0..n of w; a direct letter l_i sends position i to i-1, an inverse letter i-1 to i.
template <class F>
Representation<F> string_module(const MonomialAlgebra& alg, const Word& w) {
    const auto& q = alg.quiver();
    validate_word(alg, w.letters, w.base);
    std::size_t n = w.size();
    std::vector<int> vert(n + 1), local(n + 1);
    Representation<F> M;
    M.dims.assign(q.num_vertices(), 0);
    for (std::size_t i = 0; i <= n; ++i) {
        vert[i] = word_vertex(q, w, i);
        local[i] = M.dims[vert[i]]++;
    }
    for (int a = 0; a < q.num_arrows(); ++a) M.mats.emplace_back(M.dims[q.arrow(a).tgt], M.dims[q.arrow(a).src]);
    for (std::size_t i = 1; i <= n; ++i) {
        Letter l = w.letters[i - 1];
        if (l.inv) M.mats[l.arrow](local[i], local[i - 1]) = F(1);
        else M.mats[l.arrow](local[i - 1], local[i]) = F(1);
    }
    check_representation(alg, M);
    return M;
}

template <class F>
struct BandSpec {
    Word word;
    Matrix<F> companion;
};

// Rotation of a cyclic word ending with a direct letter followed by an inverse letter.
inline Word normalize_band(const Quiver& q, const Word& w) {
    std::size_t n = w.size();
    for (std::size_t r = 0; r < n; ++r) {
        Word c = rotate(q, w, r);
        if (!c.letters[n - 2].inv && c.letters[n - 1].inv) return c;
    }
    throw PreconditionError("band word must contain both directions");
}

// Copies V_0..V_{n-1} of V; identity blocks except the last (inverse) letter, which carries phi.
template <class F>
Representation<F> band_module(const MonomialAlgebra& alg, const BandSpec<F>& spec) {
    const auto& q = alg.quiver();
    if (!is_primitive(alg, spec.word)) throw PreconditionError("band word is not a primitive cyclic word");
    const auto& phi = spec.companion;
    if (phi.rows() == 0 || !phi.invertible()) throw PreconditionError("companion matrix is singular");
    Word w = normalize_band(q, spec.word);
    std::size_t n = w.size(), d = phi.rows();
    std::vector<int> vert(n), local(n);
    Representation<F> M;
    M.dims.assign(q.num_vertices(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        vert[i] = word_vertex(q, w, i);
        local[i] = M.dims[vert[i]];
        M.dims[vert[i]] += static_cast<int>(d);
    }
    for (int a = 0; a < q.num_arrows(); ++a) M.mats.emplace_back(M.dims[q.arrow(a).tgt], M.dims[q.arrow(a).src]);
    for (std::size_t i = 1; i <= n; ++i) {
        Letter l = w.letters[i - 1];
        std::size_t from = l.inv ? i - 1 : i % n, to = l.inv ? i % n : i - 1;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                F v = (i == n) ? phi(r, c) : F(r == c ? 1 : 0);
                M.mats[l.arrow](local[to] + r, local[from] + c) = v;
            }
    }
    check_representation(alg, M);
    return M;
}

template <class F>
BandSpec<F> scalar_band(const Word& w, const F& lambda) {
    Matrix<F> m(1, 1);
    m(0, 0) = lambda;
    return {w, m};
}

// Morphisms as per-vertex matrices.
template <class F>
using Morphism = std::vector<Matrix<F>>;

template <class F>
struct HomBasis {
    std::vector<Morphism<F>> basis;
    std::size_t dimension() const { return basis.size(); }
};

template <class F>
HomBasis<F> hom_basis(const MonomialAlgebra& alg, const Representation<F>& M, const Representation<F>& N) {
    const auto& q = alg.quiver();
    check_representation(alg, M);
    check_representation(alg, N);
    int nv = q.num_vertices();
    std::vector<std::size_t> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + static_cast<std::size_t>(N.dims[v]) * M.dims[v];
    std::size_t unknowns = off[nv];
    std::size_t eqs = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
        eqs += static_cast<std::size_t>(N.dims[q.arrow(a).tgt]) * M.dims[q.arrow(a).src];
    Matrix<F> sys(eqs, unknowns);
    // T_y M_a - N_a T_x = 0 for a : x -> y; T_v(i, j) is unknown off[v] + i * dimM_v + j
    std::size_t row = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int x = q.arrow(a).src, y = q.arrow(a).tgt;
        const auto& Ma = M.mats[a];
        const auto& Na = N.mats[a];
        for (int i = 0; i < N.dims[y]; ++i)
            for (int j = 0; j < M.dims[x]; ++j, ++row) {
                for (int k = 0; k < M.dims[y]; ++k)
                    if (!Ma(k, j).is_zero()) sys(row, off[y] + i * M.dims[y] + k) += Ma(k, j);
                for (int k = 0; k < N.dims[x]; ++k)
                    if (!Na(i, k).is_zero()) sys(row, off[x] + k * M.dims[x] + j) -= Na(i, k);
            }
    }
    Matrix<F> ns = sys.nullspace();
    HomBasis<F> h;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        Morphism<F> T;
        for (int v = 0; v < nv; ++v) {
            Matrix<F> t(N.dims[v], M.dims[v]);
            for (int i = 0; i < N.dims[v]; ++i)
                for (int j = 0; j < M.dims[v]; ++j) t(i, j) = ns(off[v] + i * M.dims[v] + j, c);
            T.push_back(t);
        }
        h.basis.push_back(std::move(T));
    }
    return h;
}

template <class F>
std::size_t hom_dimension(const MonomialAlgebra& alg, const Representation<F>& M, const Representation<F>& N) {
    return hom_basis(alg, M, N).dimension();
}

template <class F>
Morphism<F> combine(const std::vector<Morphism<F>>& basis, const std::vector<F>& coeff) {
    Morphism<F> r;
    for (const auto& m : basis.at(0)) r.emplace_back(m.rows(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeff[i].is_zero()) continue;
        for (std::size_t v = 0; v < r.size(); ++v)
            for (std::size_t a = 0; a < r[v].rows(); ++a)
                for (std::size_t b = 0; b < r[v].cols(); ++b) {
                    const F& x = basis[i][v](a, b);
                    if (!x.is_zero()) r[v](a, b) += coeff[i] * x;
                }
    }
    return r;
}

template <class F>
bool is_invertible_morphism(const Morphism<F>& T) {
    return std::all_of(T.begin(), T.end(), [](const Matrix<F>& m) { return m.invertible(); });
}

// Equal dimension vectors and a random element of Hom(M, N) is invertible. The determinant is a
// nonzero polynomial in the coefficients when an isomorphism exists, so a few random points suffice.
template <class F>
bool is_isomorphic(const MonomialAlgebra& alg, const Representation<F>& M, const Representation<F>& N) {
    if (M.dims != N.dims) return false;
    if (M.total_dim() == 0) return true;
    auto h = hom_basis(alg, M, N);
    if (h.basis.empty()) return false;
    std::minstd_rand rng(20240917u);
    std::uniform_int_distribution<long> dist(-997, 997);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<F> c;
        for (std::size_t i = 0; i < h.basis.size(); ++i) c.push_back(F(dist(rng)));
        if (is_invertible_morphism(combine(h.basis, c))) return true;
    }
    return false;
}

template <class F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f) {
    Morphism<F> r;
    for (std::size_t v = 0; v < f.size(); ++v) r.push_back(g[v] * f[v]);
    return r;
}

template <class F>
Representation<F> direct_sum(const Representation<F>& A, const Representation<F>& B) {
    Representation<F> r;
    for (std::size_t v = 0; v < A.dims.size(); ++v) r.dims.push_back(A.dims[v] + B.dims[v]);
    for (std::size_t a = 0; a < A.mats.size(); ++a) {
        const auto &x = A.mats[a], &y = B.mats[a];
        Matrix<F> m(x.rows() + y.rows(), x.cols() + y.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
        r.mats.push_back(std::move(m));
    }
    return r;
}

// Nonzero paths including the trivial ones, with lookup by (start vertex, arrows).
struct PathBasis {
    struct Entry {
        int src, tgt;
        Path arrows;
    };
    std::vector<Entry> paths;
    std::map<std::pair<int, Path>, int> index;

    explicit PathBasis(const MonomialAlgebra& alg) {
        const auto& q = alg.quiver();
        for (int v = 0; v < q.num_vertices(); ++v) add({v, v, {}});
        auto nz = nonzero_paths(alg);
        if (!nz) throw PreconditionError("algebra is infinite dimensional");
        for (auto& p : *nz) add({q.arrow(p.front()).src, q.arrow(p.back()).tgt, p});
    }
    int find(int src, const Path& p) const {
        auto it = index.find({src, p});
        return it == index.end() ? -1 : it->second;
    }
    // Paths from x to y, in basis order.
    std::vector<int> between(int x, int y) const {
        std::vector<int> r;
        for (std::size_t i = 0; i < paths.size(); ++i)
            if (paths[i].src == x && paths[i].tgt == y) r.push_back(static_cast<int>(i));
        return r;
    }

private:
    void add(Entry e) {
        index[{e.src, e.arrows}] = static_cast<int>(paths.size());
        paths.push_back(std::move(e));
    }
};

// P(v) = paths starting at v, placed at their end; arrows extend paths.
template <class F>
Representation<F> projective(const MonomialAlgebra& alg, const PathBasis& pb, int v) {
    const auto& q = alg.quiver();
    Representation<F> P;
    std::vector<std::vector<int>> at(q.num_vertices());
    for (int z = 0; z < q.num_vertices(); ++z) at[z] = pb.between(v, z);
    for (int z = 0; z < q.num_vertices(); ++z) P.dims.push_back(static_cast<int>(at[z].size()));
    for (int a = 0; a < q.num_arrows(); ++a) {
        int x = q.arrow(a).src, y = q.arrow(a).tgt;
        Matrix<F> m(at[y].size(), at[x].size());
        for (std::size_t j = 0; j < at[x].size(); ++j) {
            Path e = pb.paths[at[x][j]].arrows;
            e.push_back(a);
            int k = pb.find(v, e);
            if (k < 0) continue;
            auto it = std::find(at[y].begin(), at[y].end(), k);
            m(it - at[y].begin(), j) = F(1);
        }
        P.mats.push_back(std::move(m));
    }
    return P;
}

// I(v) = dual of the paths ending at v; an arrow strips itself off the front.
template <class F>
Representation<F> injective(const MonomialAlgebra& alg, const PathBasis& pb, int v) {
    const auto& q = alg.quiver();
    Representation<F> I;
    std::vector<std::vector<int>> at(q.num_vertices());
    for (int z = 0; z < q.num_vertices(); ++z) at[z] = pb.between(z, v);
    for (int z = 0; z < q.num_vertices(); ++z) I.dims.push_back(static_cast<int>(at[z].size()));
    for (int a = 0; a < q.num_arrows(); ++a) {
        int x = q.arrow(a).src, y = q.arrow(a).tgt;
        Matrix<F> m(at[y].size(), at[x].size());
        for (std::size_t j = 0; j < at[x].size(); ++j) {
            const Path& p = pb.paths[at[x][j]].arrows;
            if (p.empty() || p.front() != a) continue;
            int k = pb.find(y, Path(p.begin() + 1, p.end()));
            auto it = std::find(at[y].begin(), at[y].end(), k);
            m(it - at[y].begin(), j) = F(1);
        }
        I.mats.push_back(std::move(m));
    }
    return I;
}

template <class F>
Representation<F> projective(const MonomialAlgebra& alg, int v) {
    return projective<F>(alg, PathBasis(alg), v);
}
template <class F>
Representation<F> injective(const MonomialAlgebra& alg, int v) {
    return injective<F>(alg, PathBasis(alg), v);
}

// Some composite M -> X -> M ... is a split mono of the indecomposable X into M.
template <class F>
bool has_summand(const MonomialAlgebra& alg, const Representation<F>& M, const Representation<F>& X) {
    auto in = hom_basis(alg, X, M), out = hom_basis(alg, M, X);
    for (const auto& f : in.basis)
        for (const auto& g : out.basis)
            if (is_invertible_morphism(compose(g, f))) return true;
    return false;
}

template <class F>
bool has_projective_summand(const MonomialAlgebra& alg, const Representation<F>& M) {
    PathBasis pb(alg);
    for (int v = 0; v < alg.quiver().num_vertices(); ++v)
        if (has_summand(alg, M, projective<F>(alg, pb, v))) return true;
    return false;
}

template <class F>
bool has_injective_summand(const MonomialAlgebra& alg, const Representation<F>& M) {
    PathBasis pb(alg);
    for (int v = 0; v < alg.quiver().num_vertices(); ++v)
        if (has_summand(alg, M, injective<F>(alg, pb, v))) return true;
    return false;
}

// Subrepresentation on column bases B_v (closed under the arrows).
template <class F>
Representation<F> subrepresentation(const Quiver& q, const Representation<F>& M, const std::vector<Matrix<F>>& B) {
    Representation<F> S;
    for (int v = 0; v < q.num_vertices(); ++v) S.dims.push_back(static_cast<int>(B[v].cols()));
    // left inverses from row subsets where each B_v is invertible
    std::vector<Matrix<F>> left(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        auto rows = B[v].transpose().column_basis_indices();
        if (rows.size() != B[v].cols()) throw InvariantError("subspace basis is not independent");
        auto inv = B[v].select_rows(rows).inverse();
        Matrix<F> L(B[v].cols(), B[v].rows());
        for (std::size_t i = 0; i < L.rows(); ++i)
            for (std::size_t k = 0; k < rows.size(); ++k) L(i, rows[k]) = (*inv)(i, k);
        left[v] = std::move(L);
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int x = q.arrow(a).src, y = q.arrow(a).tgt;
        Matrix<F> img = M.mats[a] * B[x];
        Matrix<F> sol = left[y] * img;
        if (!(B[y] * sol == img)) throw InvariantError("subspace is not closed under arrow " + q.arrow(a).name);
        S.mats.push_back(std::move(sol));
    }
    return S;
}

// Radical of M at each vertex (sum of arrow images) and a complement spanned by unit vectors.
template <class F>
std::vector<std::vector<std::size_t>> top_complement(const Quiver& q, const Representation<F>& M) {
    std::vector<std::vector<std::size_t>> tops(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        std::size_t d = M.dims[v];
        Matrix<F> span(d, 0);
        for (int a : q.arrows_into(v)) span = Matrix<F>::hcat(span, M.mats[a]);
        std::size_t k = span.cols();
        // pivots of [span | I] past the span columns pick the complement
        Matrix<F> ext = Matrix<F>::hcat(span, Matrix<F>::identity(d));
        for (auto c : ext.rref())
            if (c >= k) tops[v].push_back(c - k);
    }
    return tops;
}

namespace detail {

struct Generator {
    int vertex;
    std::size_t unit; // index of the unit vector in M_vertex
};

} // namespace detail

// tau M = ker(nu(p1)) for a minimal projective presentation P1 -> P0 -> M.
// Block diagonal sum of the listed modules.
template <class F>
Representation<F> block_sum(const Quiver& q, const std::vector<const Representation<F>*>& parts) {
    Representation<F> r = zero_representation<F>(q);
    std::vector<std::vector<int>> off(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        int o = 0;
        for (auto* p : parts) {
            off[v].push_back(o);
            o += p->dims[v];
        }
        r.dims[v] = o;
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int x = q.arrow(a).src, y = q.arrow(a).tgt;
        Matrix<F> m(r.dims[y], r.dims[x]);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const auto& b = parts[k]->mats[a];
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) m(off[y][k] + i, off[x][k] + j) = b(i, j);
        }
        r.mats[a] = std::move(m);
    }
    return r;
}

// Path basis with all indecomposable projectives and injectives.
template <class F>
struct ProjectiveData {
    const MonomialAlgebra& alg;
    PathBasis pb;
    std::vector<Representation<F>> P, I;

    explicit ProjectiveData(const MonomialAlgebra& a) : alg(a), pb(a) {
        for (int v = 0; v < a.quiver().num_vertices(); ++v) {
            P.push_back(projective<F>(a, pb, v));
            I.push_back(injective<F>(a, pb, v));
        }
    }
};

// Unchecked: M must have no projective summand.
template <class F>
Representation<F> tau_dtr(const ProjectiveData<F>& data, const Representation<F>& M) {
    const auto& alg = data.alg;
    const auto& pb = data.pb;
    const auto& q = alg.quiver();
    int nv = q.num_vertices();

    // P0 = sum of P(v) over top generators; basis of P0_z: (generator, path from its vertex to z)
    std::vector<detail::Generator> gens0;
    auto tops = top_complement(q, M);
    for (int v = 0; v < nv; ++v)
        for (auto i : tops[v]) gens0.push_back({v, i});
    std::vector<std::vector<std::pair<int, int>>> basis0(nv); // (generator index, path index)
    for (int z = 0; z < nv; ++z)
        for (std::size_t g = 0; g < gens0.size(); ++g)
            for (int p : pb.between(gens0[g].vertex, z)) basis0[z].push_back({static_cast<int>(g), p});
    std::vector<const Representation<F>*> parts0;
    for (const auto& g : gens0) parts0.push_back(&data.P[g.vertex]);
    // blocks per generator, matching basis0 ordering within each vertex
    Representation<F> P0 = block_sum(q, parts0);
    std::vector<Matrix<F>> kerB;
    for (int z = 0; z < nv; ++z) {
        Matrix<F> pi(M.dims[z], basis0[z].size());
        for (std::size_t c = 0; c < basis0[z].size(); ++c) {
            auto [g, p] = basis0[z][c];
            Matrix<F> e(M.dims[gens0[g].vertex], 1);
            e(gens0[g].unit, 0) = F(1);
            const Path& path = pb.paths[p].arrows;
            Matrix<F> img = path.empty() ? e : evaluate_path(q, M, path) * e;
            for (int r = 0; r < M.dims[z]; ++r) pi(r, c) = img(r, 0);
        }
        kerB.push_back(pi.nullspace());
    }
    Representation<F> K = subrepresentation(q, P0, kerB);
    auto tops1 = top_complement(q, K);

    // P1 generators h in K_v, expressed in P0_v coordinates
    struct Gen1 {
        int vertex;
        Matrix<F> coords; // column over basis0[vertex]
    };
    std::vector<Gen1> gens1;
    for (int v = 0; v < nv; ++v)
        for (auto i : tops1[v]) {
            Matrix<F> e(K.dims[v], 1);
            e(i, 0) = F(1);
            gens1.push_back({v, kerB[v] * e});
        }
    if (gens1.empty()) throw InvariantError("module is projective");

    // nu P1 -> nu P0 : sum of I(h.vertex) -> sum of I(g.vertex)
    std::vector<std::vector<std::pair<int, int>>> ibasis1(nv), ibasis0(nv); // (generator, path z ~> vertex)
    for (int z = 0; z < nv; ++z) {
        for (std::size_t j = 0; j < gens1.size(); ++j)
            for (int p : pb.between(z, gens1[j].vertex)) ibasis1[z].push_back({static_cast<int>(j), p});
        for (std::size_t i = 0; i < gens0.size(); ++i)
            for (int p : pb.between(z, gens0[i].vertex)) ibasis0[z].push_back({static_cast<int>(i), p});
    }
    std::vector<const Representation<F>*> parts1;
    for (const auto& h : gens1) parts1.push_back(&data.I[h.vertex]);
    Representation<F> I1 = block_sum(q, parts1);
    std::vector<Matrix<F>> tauB;
    for (int z = 0; z < nv; ++z) {
        std::map<std::pair<int, int>, std::size_t> row0;
        for (std::size_t r = 0; r < ibasis0[z].size(); ++r) row0[ibasis0[z][r]] = r;
        Matrix<F> m(ibasis0[z].size(), ibasis1[z].size());
        for (std::size_t c = 0; c < ibasis1[z].size(); ++c) {
            auto [j, qi] = ibasis1[z][c];
            const Path& qp = pb.paths[qi].arrows;
            const auto& h = gens1[j];
            // h = sum over (generator i, path p from gens0[i].vertex to h.vertex) of coefficients
            for (std::size_t k = 0; k < basis0[h.vertex].size(); ++k) {
                const F& coef = h.coords(k, 0);
                if (coef.is_zero()) continue;
                auto [i, pp] = basis0[h.vertex][k];
                const Path& p = pb.paths[pp].arrows;
                if (p.size() > qp.size() || !std::equal(p.begin(), p.end(), qp.end() - p.size())) continue;
                Path y(qp.begin(), qp.end() - p.size());
                int yi = pb.find(z, y);
                if (yi < 0) continue;
                m(row0.at({i, yi}), c) += coef;
            }
        }
        tauB.push_back(m.nullspace());
    }
    return subrepresentation(q, I1, tauB);
}

template <class F>
Representation<F> tau_dtr(const MonomialAlgebra& alg, const Representation<F>& M) {
    check_representation(alg, M);
    if (has_projective_summand(alg, M)) throw PreconditionError("module has a projective direct summand");
    return tau_dtr(ProjectiveData<F>(alg), M);
}

inline MonomialAlgebra opposite_algebra(const MonomialAlgebra& alg) {
    const auto& q = alg.quiver();
    Quiver r;
    for (const auto& v : q.vertices()) r.add_vertex(v);
    for (const auto& a : q.arrows()) r.add_arrow(a.name, a.tgt, a.src);
    std::vector<Path> rels;
    for (auto p : alg.relations()) {
        std::reverse(p.begin(), p.end());
        rels.push_back(p);
    }
    return MonomialAlgebra(std::move(r), std::move(rels), alg.name() + "^op");
}

template <class F>
Representation<F> dual(const Representation<F>& M) {
    Representation<F> D;
    D.dims = M.dims;
    for (const auto& m : M.mats) D.mats.push_back(m.transpose());
    return D;
}

// Unchecked; `op` holds the data of the opposite algebra.
template <class F>
Representation<F> tau_inv_dtr(const ProjectiveData<F>& op, const Representation<F>& M) {
    return dual(tau_dtr(op, dual(M)));
}

template <class F>
Representation<F> tau_inv_dtr(const MonomialAlgebra& alg, const Representation<F>& M) {
    check_representation(alg, M);
    if (has_injective_summand(alg, M)) throw PreconditionError("module has an injective direct summand");
    auto op = opposite_algebra(alg);
    return dual(tau_dtr(op, dual(M)));
}

struct EndRadical {
    std::size_t rad_dim = 0;
    std::size_t nilpotency = 0;
    std::size_t semisimple_image_ideal_dim = 0;
};

namespace detail {

template <class F>
Matrix<F> flatten(const std::vector<Morphism<F>>& ms) {
    std::size_t len = 0;
    if (!ms.empty())
        for (const auto& m : ms[0]) len += m.rows() * m.cols();
    Matrix<F> r(len, ms.size());
    for (std::size_t c = 0; c < ms.size(); ++c) {
        std::size_t k = 0;
        for (const auto& m : ms[c])
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) r(k++, c) = m(i, j);
    }
    return r;
}

template <class F>
Morphism<F> unflatten(const Matrix<F>& col, std::size_t c, const Morphism<F>& shape) {
    Morphism<F> r;
    std::size_t k = 0;
    for (const auto& m : shape) {
        Matrix<F> x(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) x(i, j) = col(k++, c);
        r.push_back(std::move(x));
    }
    return r;
}

template <class F>
std::vector<Morphism<F>> span_basis(const std::vector<Morphism<F>>& ms, const Morphism<F>& shape) {
    if (ms.empty()) return {};
    Matrix<F> b = flatten(ms).column_basis();
    std::vector<Morphism<F>> r;
    for (std::size_t c = 0; c < b.cols(); ++c) r.push_back(unflatten(b, c, shape));
    return r;
}

template <class F>
bool is_nilpotent(const Morphism<F>& T) {
    for (const auto& m : T) {
        Matrix<F> p = m;
        for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
        if (!p.is_zero()) return false;
    }
    return true;
}

} // namespace detail

// End(M) is local: the radical is the trace-zero part, verified to consist of nilpotents.
template <class F>
EndRadical end_radical(const MonomialAlgebra& alg, const Representation<F>& M) {
    const auto& q = alg.quiver();
    auto E = hom_basis(alg, M, M).basis;
    EndRadical out;
    if (E.empty()) return out;
    int n = M.total_dim();
    if (F(n).is_zero()) throw PreconditionError("field characteristic divides the dimension");
    Matrix<F> tr(1, E.size());
    for (std::size_t i = 0; i < E.size(); ++i)
        for (const auto& m : E[i])
            for (std::size_t k = 0; k < m.rows(); ++k) tr(0, i) += m(k, k);
    Matrix<F> coeffs = tr.nullspace();
    Matrix<F> flatE = detail::flatten(E);
    std::vector<Morphism<F>> rad;
    for (std::size_t c = 0; c < coeffs.cols(); ++c) rad.push_back(detail::unflatten(flatE * coeffs, c, E[0]));
    for (const auto& x : rad)
        if (!detail::is_nilpotent(x)) throw PreconditionError("endomorphism ring is not local");
    out.rad_dim = rad.size();
    // powers of the radical
    std::vector<Morphism<F>> power = rad;
    out.nilpotency = 1;
    while (!power.empty()) {
        std::vector<Morphism<F>> next;
        for (const auto& x : power)
            for (const auto& y : rad) next.push_back(compose(x, y));
        power = detail::span_basis(next, E[0]);
        auto nonzero = [](const Morphism<F>& m) {
            return std::any_of(m.begin(), m.end(), [](const Matrix<F>& x) { return !x.is_zero(); });
        };
        power.erase(std::remove_if(power.begin(), power.end(), [&](const auto& m) { return !nonzero(m); }), power.end());
        ++out.nilpotency;
        if (out.nilpotency > static_cast<std::size_t>(n) + 1) throw InvariantError("radical is not nilpotent");
    }
    // f with M_a f = 0 for every arrow a: image inside the socle
    std::vector<Morphism<F>> images;
    std::size_t rows = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
        rows += static_cast<std::size_t>(M.dims[q.arrow(a).tgt]) * M.dims[q.arrow(a).src];
    Matrix<F> sys(rows, E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
        std::size_t r = 0;
        for (int a = 0; a < q.num_arrows(); ++a) {
            Matrix<F> prod = M.mats[a] * E[i][q.arrow(a).src];
            for (std::size_t x = 0; x < prod.rows(); ++x)
                for (std::size_t y = 0; y < prod.cols(); ++y) sys(r++, i) = prod(x, y);
        }
    }
    out.semisimple_image_ideal_dim = sys.nullspace().cols();
    return out;
}

namespace detail {

// Polynomials with coefficients low to high.
template <class F>
using Poly = std::vector<F>;

template <class F>
void trim(Poly<F>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
Poly<F> poly_mod(Poly<F> a, const Poly<F>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        F f = a.back() / b.back();
        std::size_t s = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
        trim(a);
    }
    return a;
}

template <class F>
Poly<F> poly_div(Poly<F> a, const Poly<F>& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    Poly<F> quo(a.size() - b.size() + 1, F(0));
    while (a.size() >= b.size() && !a.empty()) {
        F f = a.back() / b.back();
        std::size_t s = a.size() - b.size();
        quo[s] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
        trim(a);
    }
    return quo;
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly<F> r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

template <class F>
Matrix<F> poly_eval(const Poly<F>& p, const Matrix<F>& m) {
    Matrix<F> r(m.rows(), m.cols()), pw = Matrix<F>::identity(m.rows());
    for (const auto& c : p) {
        r = r + pw.scaled(c);
        pw = pw * m;
    }
    return r;
}

// Smallest nonzero invariant subspace of an indecomposable phi: kernel of the squarefree part of its minimal polynomial.
template <class F>
Matrix<F> minimal_invariant_subspace(const Matrix<F>& phi) {
    std::size_t d = phi.rows();
    Matrix<F> krylov(d, 0), v(d, 1);
    for (std::size_t i = 0; i < d; ++i) v(i, 0) = F(static_cast<long>(i * i + 3 * i + 1));
    Poly<F> minpoly;
    for (std::size_t k = 0; k <= d; ++k) {
        auto sol = krylov.cols() ? krylov.solve(v) : std::optional<Matrix<F>>();
        if (sol && (krylov * *sol) == v) {
            for (std::size_t i = 0; i < k; ++i) minpoly.push_back(-(*sol)(i, 0));
            minpoly.push_back(F(1));
            break;
        }
        krylov = Matrix<F>::hcat(krylov, v);
        v = phi * v;
    }
    if (minpoly.empty()) throw InvariantError("minimal polynomial not found");
    Poly<F> deriv;
    for (std::size_t i = 1; i < minpoly.size(); ++i) deriv.push_back(minpoly[i] * F(static_cast<long>(i)));
    Poly<F> g = deriv.empty() ? Poly<F>{F(1)} : poly_gcd(minpoly, deriv);
    Poly<F> sqfree = poly_div(minpoly, g);
    Matrix<F> S = poly_eval(sqfree, phi).nullspace();
    if (S.cols() == 0) throw PreconditionError("could not find an invariant subspace of the companion matrix");
    return S;
}

} // namespace detail

template <class F>
struct StringSubmodule {
    Word word;
    std::vector<Matrix<F>> inclusion; // per vertex, columns span the submodule inside M
    Representation<F> module;
};

// Codimension-one string submodule: all copies of V except the one at position n-1, where only a
// complement U of a line x in the minimal invariant subspace of phi is kept.
template <class F>
StringSubmodule<F> maximal_string_submodule(const MonomialAlgebra& alg, const BandSpec<F>& spec) {
    const auto& q = alg.quiver();
    Representation<F> M = band_module(alg, spec);
    Word w = normalize_band(q, spec.word);
    std::size_t n = w.size(), d = spec.companion.rows();
    Matrix<F> S = detail::minimal_invariant_subspace(spec.companion);
    // U: complement of the first column of S inside V
    Matrix<F> x = S.select_columns({0});
    Matrix<F> U(d, 0);
    {
        Matrix<F> span = x;
        for (std::size_t i = 0; i < d; ++i) {
            Matrix<F> e(d, 1);
            e(i, 0) = F(1);
            Matrix<F> ext = Matrix<F>::hcat(span, e);
            if (ext.rank() > span.rank()) {
                span = ext;
                U = Matrix<F>::hcat(U, e);
            }
        }
    }
    std::vector<int> local(n);
    std::vector<int> fill(q.num_vertices(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        int v = word_vertex(q, w, i);
        local[i] = fill[v];
        fill[v] += static_cast<int>(d);
    }
    std::vector<Matrix<F>> B;
    for (int v = 0; v < q.num_vertices(); ++v) B.emplace_back(M.dims[v], 0);
    for (std::size_t i = 0; i < n; ++i) {
        int v = word_vertex(q, w, i);
        const Matrix<F>& part = (i == n - 1) ? U : Matrix<F>::identity(d);
        Matrix<F> block(M.dims[v], part.cols());
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < part.cols(); ++c) block(local[i] + r, c) = part(r, c);
        B[v] = Matrix<F>::hcat(B[v], block);
    }
    Representation<F> N = subrepresentation(q, M, B);
    check_representation(alg, N);
    // the string: d-1 turns around the band, then l_1 ... l_{n-2}
    Word sw = power(q, w, static_cast<int>(d) - 1);
    sw = concat(q, sw, subword(q, w, 0, n - 2));
    if (sw.empty()) sw.base = word_start(q, w);
    sw = validate_word(alg, sw.letters, sw.base);
    if (!is_isomorphic(alg, N, string_module<F>(alg, sw)))
        throw InvariantError("submodule is not the expected string module");
    return {sw, B, N};
}

} // namespace sbalg
