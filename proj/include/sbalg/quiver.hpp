#pragma once

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace sbalg {

using Path = std::vector<int>; // arrow indices, traversal order

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
    bool operator==(const Arrow&) const = default;
};

class Quiver {
public:
    Quiver() = default;

    int add_vertex(const std::string& id) {
        if (vindex_.count(id)) throw InputError("duplicate vertex " + id);
        vindex_[id] = static_cast<int>(vertices_.size());
        vertices_.push_back(id);
        return vindex_[id];
    }
    int add_arrow(const std::string& name, int s, int t) {
        if (aindex_.count(name)) throw InputError("duplicate arrow " + name);
        if (s < 0 || t < 0 || s >= num_vertices() || t >= num_vertices())
            throw InputError("arrow " + name + " has an undeclared endpoint");
        aindex_[name] = static_cast<int>(arrows_.size());
        arrows_.push_back({name, s, t});
        return aindex_[name];
    }
    int add_arrow(const std::string& name, const std::string& s, const std::string& t) {
        return add_arrow(name, vertex(s), vertex(t));
    }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::string& vertex_name(int v) const { return vertices_.at(v); }

    int vertex(const std::string& id) const {
        auto it = vindex_.find(id);
        if (it == vindex_.end()) throw InputError("unknown vertex " + id);
        return it->second;
    }
    int arrow_index(const std::string& name) const {
        auto it = aindex_.find(name);
        if (it == aindex_.end()) throw InputError("unknown arrow " + name);
        return it->second;
    }
    bool has_arrow(const std::string& name) const { return aindex_.count(name) > 0; }
    bool has_vertex(const std::string& id) const { return vindex_.count(id) > 0; }

    std::vector<int> arrows_into(int v) const {
        std::vector<int> r;
        for (int a = 0; a < num_arrows(); ++a)
            if (arrows_[a].tgt == v) r.push_back(a);
        return r;
    }
    std::vector<int> arrows_out(int v) const {
        std::vector<int> r;
        for (int a = 0; a < num_arrows(); ++a)
            if (arrows_[a].src == v) r.push_back(a);
        return r;
    }

    bool composable(const Path& p) const {
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (arrows_.at(p[i]).tgt != arrows_.at(p[i + 1]).src) return false;
        return true;
    }

    bool connected() const {
        if (vertices_.empty()) return true;
        std::vector<int> parent(vertices_.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : arrows_) parent[find(a.src)] = find(a.tgt);
        int root = find(0);
        for (int v = 0; v < num_vertices(); ++v)
            if (find(v) != root) return false;
        return true;
    }

    bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vindex_, aindex_;
};

inline bool is_subpath(const Path& small, const Path& big) {
    if (small.size() > big.size()) return false;
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

// Quiver plus a subpath-minimal set of monomial relations.
class MonomialAlgebra {
public:
    MonomialAlgebra() = default;
    MonomialAlgebra(Quiver q, std::vector<Path> rels, std::string name = "")
        : name_(std::move(name)), quiver_(std::move(q)) {
        for (const auto& r : rels) {
            if (r.size() < 2) throw InputError("relation must have length at least 2");
            for (int a : r)
                if (a < 0 || a >= quiver_.num_arrows()) throw InputError("relation uses unknown arrow");
            if (!quiver_.composable(r)) throw InputError("relation " + path_string(r) + " is not composable");
        }
        std::sort(rels.begin(), rels.end(), [](const Path& a, const Path& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
        for (const auto& r : rels) {
            bool subsumed = false;
            for (const auto& kept : relations_)
                if (is_subpath(kept, r)) { subsumed = true; break; }
            if (!subsumed) relations_.push_back(r);
        }
        std::sort(relations_.begin(), relations_.end());
    }

    const std::string& name() const { return name_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Path>& relations() const { return relations_; }
    int max_relation_length() const {
        std::size_t m = 0;
        for (const auto& r : relations_) m = std::max(m, r.size());
        return static_cast<int>(m);
    }

    bool is_relation(const Path& p) const {
        return std::binary_search(relations_.begin(), relations_.end(), p);
    }
    // Zero in the algebra: some relation is a subpath.
    bool is_zero_path(const Path& p) const {
        for (const auto& r : relations_)
            if (is_subpath(r, p)) return true;
        return false;
    }

    std::string path_string(const Path& p) const {
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) s += ' ';
            s += quiver_.arrow(p[i]).name;
        }
        return s;
    }

    Path parse_path(const std::string& text) const {
        std::istringstream in(text);
        Path p;
        std::string tok;
        while (in >> tok) p.push_back(quiver_.arrow_index(tok));
        return p;
    }

    bool operator==(const MonomialAlgebra& o) const { return quiver_ == o.quiver_ && relations_ == o.relations_; }

private:
    std::string name_;
    Quiver quiver_;
    std::vector<Path> relations_;
};

// algebra <name> / vertex <id>... / arrow <name> <src> <tgt> / rel <arrow>...
inline MonomialAlgebra parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line, name;
    Quiver q;
    std::vector<std::pair<int, std::vector<std::string>>> rel_lines;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        try {
            const auto& kw = tok[0];
            if (kw == "algebra") {
                if (tok.size() != 2) throw ParseError(lineno, "expected: algebra <name>");
                name = tok[1];
            } else if (kw == "vertex") {
                if (tok.size() < 2) throw ParseError(lineno, "expected: vertex <id>...");
                for (std::size_t i = 1; i < tok.size(); ++i) q.add_vertex(tok[i]);
            } else if (kw == "arrow") {
                if (tok.size() != 4) throw ParseError(lineno, "expected: arrow <name> <src> <tgt>");
                q.add_arrow(tok[1], tok[2], tok[3]);
            } else if (kw == "rel") {
                if (tok.size() < 3) throw ParseError(lineno, "relation needs at least two arrows");
                rel_lines.push_back({lineno, {tok.begin() + 1, tok.end()}});
            } else {
                throw ParseError(lineno, "unknown keyword '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    std::vector<Path> rels;
    std::set<Path> seen;
    for (const auto& [ln, names] : rel_lines) {
        Path p;
        for (const auto& n : names) {
            if (!q.has_arrow(n)) throw ParseError(ln, "unknown arrow " + n);
            p.push_back(q.arrow_index(n));
        }
        if (!q.composable(p)) throw ParseError(ln, "relation is not a composable path");
        if (!seen.insert(p).second) throw ParseError(ln, "duplicate relation");
        rels.push_back(p);
    }
    return MonomialAlgebra(std::move(q), std::move(rels), name);
}

inline std::string format_algebra(const MonomialAlgebra& alg) {
    std::ostringstream out;
    const auto& q = alg.quiver();
    if (!alg.name().empty()) out << "algebra " << alg.name() << "\n";
    out << "vertex";
    for (const auto& v : q.vertices()) out << ' ' << v;
    out << "\n";
    for (const auto& a : q.arrows())
        out << "arrow " << a.name << ' ' << q.vertex_name(a.src) << ' ' << q.vertex_name(a.tgt) << "\n";
    for (const auto& r : alg.relations()) out << "rel " << alg.path_string(r) << "\n";
    return out.str();
}

struct BiserialViolation {
    std::string tag; // C1-in, C1-out, C2, C2'
    std::string where;
};

struct BiserialVerdict {
    bool ok = true;
    std::vector<BiserialViolation> violations;
};

inline BiserialVerdict is_special_biserial(const MonomialAlgebra& alg) {
    BiserialVerdict v;
    const auto& q = alg.quiver();
    for (int x = 0; x < q.num_vertices(); ++x) {
        if (q.arrows_into(x).size() > 2) v.violations.push_back({"C1-in", q.vertex_name(x)});
        if (q.arrows_out(x).size() > 2) v.violations.push_back({"C1-out", q.vertex_name(x)});
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        // (2): successors of a
        auto out = q.arrows_out(q.arrow(a).tgt);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (!alg.is_relation({a, out[i]}) && !alg.is_relation({a, out[j]}))
                    v.violations.push_back({"C2", q.arrow(a).name + " -> " + q.arrow(out[i]).name + "," +
                                                      q.arrow(out[j]).name});
        // (2'): predecessors of a
        auto in = q.arrows_into(q.arrow(a).src);
        for (std::size_t i = 0; i < in.size(); ++i)
            for (std::size_t j = i + 1; j < in.size(); ++j)
                if (!alg.is_relation({in[i], a}) && !alg.is_relation({in[j], a}))
                    v.violations.push_back({"C2'", q.arrow(in[i]).name + "," + q.arrow(in[j]).name + " -> " +
                                                       q.arrow(a).name});
    }
    v.ok = v.violations.empty();
    return v;
}

// Number of neighbours, loops counted twice.
inline int vertex_degree(const MonomialAlgebra& alg, int v) {
    const auto& q = alg.quiver();
    if (v < 0 || v >= q.num_vertices()) throw InputError("unknown vertex");
    int d = 0;
    for (const auto& a : q.arrows()) d += (a.src == v) + (a.tgt == v);
    return d;
}

inline bool is_node(const MonomialAlgebra& alg, int v) {
    const auto& q = alg.quiver();
    if (v < 0 || v >= q.num_vertices()) throw InputError("unknown vertex");
    auto in = q.arrows_into(v), out = q.arrows_out(v);
    if (in.empty() || out.empty()) return false;
    for (int a : in)
        for (int b : out)
            if (!alg.is_relation({a, b})) return false;
    return true;
}

inline MonomialAlgebra resolve_nodes(const MonomialAlgebra& alg) {
    const auto& q = alg.quiver();
    std::vector<bool> node(q.num_vertices());
    bool any = false;
    for (int v = 0; v < q.num_vertices(); ++v) any |= (node[v] = is_node(alg, v));
    if (!any) return alg;
    Quiver r;
    std::vector<int> plus(q.num_vertices()), minus(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (node[v]) {
            plus[v] = r.add_vertex(q.vertex_name(v) + "+");
            minus[v] = r.add_vertex(q.vertex_name(v) + "-");
        } else {
            plus[v] = minus[v] = r.add_vertex(q.vertex_name(v));
        }
    }
    for (const auto& a : q.arrows()) r.add_arrow(a.name, minus[a.src], plus[a.tgt]);
    std::vector<Path> rels;
    for (const auto& p : alg.relations()) {
        bool through = false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) through |= node[q.arrow(p[i]).tgt];
        if (!through) rels.push_back(p);
    }
    return MonomialAlgebra(std::move(r), std::move(rels), alg.name());
}

// Quotient by a nonzero path: length >= 2 adds a relation, length 1 deletes the arrow.
inline MonomialAlgebra add_relation(const MonomialAlgebra& alg, const Path& p) {
    const auto& q = alg.quiver();
    if (p.empty()) throw PreconditionError("add_relation: empty path");
    for (int a : p)
        if (a < 0 || a >= q.num_arrows()) throw PreconditionError("add_relation: unknown arrow");
    if (!q.composable(p)) throw PreconditionError("add_relation: path not composable");
    if (alg.is_zero_path(p)) throw PreconditionError("add_relation: path " + alg.path_string(p) + " is already zero");
    if (p.size() >= 2) {
        auto rels = alg.relations();
        rels.push_back(p);
        return MonomialAlgebra(q, std::move(rels), alg.name());
    }
    int dead = p[0];
    Quiver r;
    for (const auto& v : q.vertices()) r.add_vertex(v);
    std::vector<int> remap(q.num_arrows(), -1);
    for (int a = 0; a < q.num_arrows(); ++a)
        if (a != dead) remap[a] = r.add_arrow(q.arrow(a).name, q.arrow(a).src, q.arrow(a).tgt);
    std::vector<Path> rels;
    for (const auto& rel : alg.relations()) {
        if (std::find(rel.begin(), rel.end(), dead) != rel.end()) continue;
        Path np;
        for (int a : rel) np.push_back(remap[a]);
        rels.push_back(np);
    }
    return MonomialAlgebra(std::move(r), std::move(rels), alg.name());
}

// Quotient by the idempotent of v: drops v and its arrows.
inline MonomialAlgebra remove_vertex(const MonomialAlgebra& alg, int v) {
    const auto& q = alg.quiver();
    Quiver r;
    std::vector<int> vmap(q.num_vertices(), -1), amap(q.num_arrows(), -1);
    for (int x = 0; x < q.num_vertices(); ++x)
        if (x != v) vmap[x] = r.add_vertex(q.vertex_name(x));
    for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(a).src != v && q.arrow(a).tgt != v)
            amap[a] = r.add_arrow(q.arrow(a).name, vmap[q.arrow(a).src], vmap[q.arrow(a).tgt]);
    std::vector<Path> rels;
    for (const auto& rel : alg.relations()) {
        Path np;
        bool ok = true;
        for (int a : rel) {
            if (amap[a] < 0) { ok = false; break; }
            np.push_back(amap[a]);
        }
        if (ok) rels.push_back(np);
    }
    return MonomialAlgebra(std::move(r), std::move(rels), alg.name());
}

// Every nonzero path of positive length; nullopt if some nonzero path exceeds `cap` (infinite dimensional).
inline std::optional<std::vector<Path>> nonzero_paths(const MonomialAlgebra& alg, std::size_t cap = 0) {
    const auto& q = alg.quiver();
    if (cap == 0) cap = static_cast<std::size_t>(q.num_arrows()) * std::max(1, alg.max_relation_length()) + 2;
    std::vector<Path> out;
    std::vector<Path> frontier;
    for (int a = 0; a < q.num_arrows(); ++a) frontier.push_back({a});
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (auto& p : frontier) {
            if (p.size() > cap) return std::nullopt;
            for (int b : q.arrows_out(q.arrow(p.back()).tgt)) {
                Path e = p;
                e.push_back(b);
                bool zero = false;
                for (const auto& r : alg.relations())
                    if (r.size() <= e.size() && std::equal(r.rbegin(), r.rend(), e.rbegin())) { zero = true; break; }
                if (!zero) next.push_back(std::move(e));
            }
            out.push_back(std::move(p));
        }
        frontier = std::move(next);
    }
    return out;
}

inline bool is_finite_dimensional(const MonomialAlgebra& alg) { return nonzero_paths(alg).has_value(); }

// Nonzero paths that extend on neither side, plus isolated vertices as length-0 entries (vertex index in `isolated`).
struct MaximalPaths {
    std::vector<Path> paths;
    std::vector<int> isolated;
};

inline MaximalPaths maximal_nonzero_paths(const MonomialAlgebra& alg) {
    auto all = nonzero_paths(alg);
    if (!all) throw PreconditionError("algebra is infinite dimensional");
    const auto& q = alg.quiver();
    std::set<Path> nz(all->begin(), all->end());
    MaximalPaths m;
    for (const auto& p : *all) {
        bool ext = false;
        for (int b : q.arrows_out(q.arrow(p.back()).tgt)) {
            Path e = p;
            e.push_back(b);
            if (nz.count(e)) { ext = true; break; }
        }
        if (!ext)
            for (int b : q.arrows_into(q.arrow(p.front()).src)) {
                Path e{b};
                e.insert(e.end(), p.begin(), p.end());
                if (nz.count(e)) { ext = true; break; }
            }
        if (!ext) m.paths.push_back(p);
    }
    for (int v = 0; v < q.num_vertices(); ++v)
        if (vertex_degree(alg, v) == 0) m.isolated.push_back(v);
    return m;
}

// Isomorphism of algebras: bijections on vertices and arrows respecting endpoints and relations.
struct AlgebraIso {
    std::vector<int> vmap, amap;
};

inline std::optional<AlgebraIso> find_isomorphism(const MonomialAlgebra& A, const MonomialAlgebra& B) {
    const auto& qa = A.quiver();
    const auto& qb = B.quiver();
    if (qa.num_vertices() != qb.num_vertices() || qa.num_arrows() != qb.num_arrows() ||
        A.relations().size() != B.relations().size())
        return std::nullopt;
    auto sig = [](const Quiver& q, int v) {
        int loops = 0;
        for (const auto& a : q.arrows()) loops += (a.src == v && a.tgt == v);
        return std::tuple<std::size_t, std::size_t, int>(q.arrows_into(v).size(), q.arrows_out(v).size(), loops);
    };
    int n = qa.num_vertices(), m = qa.num_arrows();
    std::vector<int> vmap(n, -1), vinv(n, -1), amap(m, -1);
    std::vector<bool> aused(m, false);
    // Order arrows of A by BFS so endpoints are usually already fixed.
    std::vector<int> order;
    {
        std::vector<bool> seenv(n, false), seena(m, false);
        for (int start = 0; start < n; ++start) {
            if (seenv[start]) continue;
            std::vector<int> queue{start};
            seenv[start] = true;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int v = queue[h];
                for (int a = 0; a < m; ++a) {
                    if (seena[a] || (qa.arrow(a).src != v && qa.arrow(a).tgt != v)) continue;
                    seena[a] = true;
                    order.push_back(a);
                    for (int w : {qa.arrow(a).src, qa.arrow(a).tgt})
                        if (!seenv[w]) { seenv[w] = true; queue.push_back(w); }
                }
            }
        }
    }
    std::set<Path> relsB(B.relations().begin(), B.relations().end());
    auto finish = [&]() -> bool {
        // isolated vertices
        std::vector<int> freeA, freeB;
        for (int v = 0; v < n; ++v) if (vmap[v] < 0) freeA.push_back(v);
        for (int v = 0; v < n; ++v) if (vinv[v] < 0) freeB.push_back(v);
        if (freeA.size() != freeB.size()) return false;
        for (std::size_t i = 0; i < freeA.size(); ++i) {
            vmap[freeA[i]] = freeB[i];
            vinv[freeB[i]] = freeA[i];
        }
        for (const auto& r : A.relations()) {
            Path p;
            for (int a : r) p.push_back(amap[a]);
            if (!relsB.count(p)) {
                for (std::size_t i = 0; i < freeA.size(); ++i) { vmap[freeA[i]] = -1; vinv[freeB[i]] = -1; }
                return false;
            }
        }
        return true;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
        if (k == order.size()) return finish();
        int a = order[k];
        const auto& ar = qa.arrow(a);
        for (int b = 0; b < m; ++b) {
            if (aused[b]) continue;
            const auto& br = qb.arrow(b);
            if ((ar.src == ar.tgt) != (br.src == br.tgt)) continue;
            std::vector<std::pair<int, int>> bound;
            bool ok = true;
            for (auto [x, y] : {std::pair{ar.src, br.src}, std::pair{ar.tgt, br.tgt}}) {
                if (vmap[x] == y) continue;
                if (vmap[x] >= 0 || vinv[y] >= 0 || sig(qa, x) != sig(qb, y)) { ok = false; break; }
                vmap[x] = y;
                vinv[y] = x;
                bound.push_back({x, y});
            }
            if (ok) {
                amap[a] = b;
                aused[b] = true;
                if (go(k + 1)) return true;
                aused[b] = false;
                amap[a] = -1;
            }
            for (auto [x, y] : bound) { vmap[x] = -1; vinv[y] = -1; }
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return AlgebraIso{vmap, amap};
}

inline bool are_isomorphic(const MonomialAlgebra& A, const MonomialAlgebra& B) {
    return find_isomorphism(A, B).has_value();
}

} // namespace sbalg
