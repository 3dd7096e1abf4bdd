#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sbalg/ar_quiver.hpp"
#include "sbalg/classify.hpp"
#include "sbalg/constructions.hpp"
#include "sbalg/corpus.hpp"
#include "sbalg/field.hpp"
#include "sbalg/json_io.hpp"
#include "sbalg/permutation.hpp"
#include "sbalg/representation.hpp"

using namespace sbalg;

namespace {

enum Exit { Ok = 0, Negative = 1, BadInput = 2, Breach = 3 };

struct Options {
    std::string file;
    bool json = false;
    bool expect_mri = false;
    std::size_t max_len = 6;
    std::size_t bound = 0;
    std::string word, eps, eta, eps2, band, lambda = "1", seed, dot_out, json_out;
    int radius = 2;
    int t = 1;
    int max_vertices = 3, max_arrows = 4;
};

enum class FieldKind { Rational, Fp };

FieldKind field_from_env() {
    const char* env = std::getenv("BISERIAL_FIELD");
    std::string s = env ? env : "rational";
    if (s == "rational") return FieldKind::Rational;
    if (s.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(s.substr(3));
        } catch (const std::exception&) {
            throw InputError("BISERIAL_FIELD: bad modulus in '" + s + "'");
        }
        if (p < 2 || p >= (1ull << 32)) throw InputError("BISERIAL_FIELD: modulus must lie in [2, 2^32)");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw InputError("BISERIAL_FIELD: " + std::to_string(p) + " is not prime");
        Fp::modulus() = p;
        return FieldKind::Fp;
    }
    throw InputError("BISERIAL_FIELD must be 'rational' or 'fp:<p>'");
}

MonomialAlgebra load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_check(const Options& o) {
    auto alg = load(o.file);
    const auto& q = alg.quiver();
    auto sb = is_special_biserial(alg);
    std::vector<std::string> nodes;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (is_node(alg, v)) nodes.push_back(q.vertex_name(v));
    json j{{"special_biserial", sb.ok}};
    json viol = json::array();
    for (const auto& v : sb.violations) viol.push_back({{"condition", v.tag}, {"at", v.where}});
    j["violations"] = viol;
    j["nodes"] = nodes;
    int code = sb.ok ? Ok : Negative;
    if (sb.ok) {
        auto c = classify(alg);
        j["tag"] = tag_name(c.tag);
        if (c.positive()) {
            bool thm = four_vertices_are_nodes(alg);
            j["four_vertices_are_nodes"] = thm;
            if (!thm) code = Breach;
        }
    }
    if (o.json) {
        emit(j);
    } else {
        std::cout << "special biserial: " << (sb.ok ? "yes" : "no") << "\n";
        for (const auto& v : sb.violations) std::cout << "  violates " << v.tag << " at " << v.where << "\n";
        std::cout << "nodes:";
        for (const auto& n : nodes) std::cout << ' ' << n;
        std::cout << "\n";
        if (j.contains("tag")) std::cout << "tag: " << j["tag"].get<std::string>() << "\n";
        if (j.contains("four_vertices_are_nodes"))
            std::cout << "degree-4 vertices are nodes: " << (j["four_vertices_are_nodes"].get<bool>() ? "yes" : "NO") << "\n";
    }
    return code;
}

int cmd_classify(const Options& o) {
    auto alg = load(o.file);
    auto c = classify(alg);
    if (o.json) {
        emit(to_json(c));
    } else {
        const auto& q = c.resolved.quiver();
        std::cout << tag_name(c.tag) << "\n";
        if (!c.reason.empty()) std::cout << "  reason: " << c.reason << "\n";
        if (c.band) std::cout << "  band: " << format_word(q, *c.band) << "\n";
        if (c.eps) std::cout << "  eps: " << c.eps->str() << "\n";
        if (c.barbell)
            std::cout << "  barbell: " << (*c.barbell)[0].str() << ' ' << (*c.barbell)[1].str() << ' '
                      << (*c.barbell)[2].str() << "\n";
        if (c.wind_wheel_word) std::cout << "  wind wheel: " << *c.wind_wheel_word << "\n";
    }
    return o.expect_mri && !c.positive() ? Negative : Ok;
}

int cmd_words(const Options& o, bool bands) {
    auto alg = load(o.file);
    require_special_biserial(alg);
    auto ws = bands ? enumerate_bands(alg, o.max_len) : enumerate_strings(alg, o.max_len);
    const auto& q = alg.quiver();
    if (o.json) {
        json a = json::array();
        for (const auto& w : ws) a.push_back(word_literal(q, w));
        emit({{bands ? "bands" : "strings", a}, {"max_len", o.max_len}});
    } else {
        for (const auto& w : ws) std::cout << word_literal(q, w) << "\n";
    }
    return Ok;
}

int cmd_oracle(const Options& o) {
    auto alg = load(o.file);
    require_special_biserial(alg);
    std::string verdict;
    bool minimal = false;
    if (!is_finite_dimensional(alg)) verdict = "infinite dimensional";
    else if (!is_representation_infinite(alg)) verdict = "representation-finite";
    else {
        minimal = minimality_oracle(alg);
        verdict = minimal ? "minimal representation-infinite" : "not minimal";
    }
    if (o.json) emit({{"minimal", minimal}, {"verdict", verdict}});
    else std::cout << verdict << "\n";
    return o.expect_mri && !minimal ? Negative : Ok;
}

int cmd_growth(const Options& o) {
    auto alg = load(o.file);
    std::size_t L = o.bound ? o.bound : default_growth_bound(alg);
    auto g = growth_witness(alg, L);
    const auto& q = alg.quiver();
    if (o.json) {
        json j{{"bound", L}, {"witness", nullptr}};
        if (g) j["witness"] = {{"arrow", q.arrow(g->arrow).name}, {"first", format_word(q, g->first)}, {"second", format_word(q, g->second)}};
        emit(j);
    } else if (g) {
        std::cout << "non-domestic witness at " << q.arrow(g->arrow).name << ":\n  " << format_word(q, g->first)
                  << "\n  " << format_word(q, g->second) << "\n";
    } else {
        std::cout << "no witness up to length " << L << "\n";
    }
    return Ok;
}

int cmd_windwheel(const Options& o) {
    auto d = wind_wheel(o.word);
    if (o.json) {
        emit(to_json(d));
        return Ok;
    }
    const auto& q = d.algebra.quiver();
    std::cout << "word: " << format_word(q, d.word) << "\n";
    std::cout << "t=" << d.t << "\n";
    for (std::size_t i = 0; i < d.factors.size(); ++i)
        std::cout << "  u" << i + 1 << " = " << format_word(q, d.factors[i].first) << "   v" << i + 1 << " = "
                  << format_word(q, d.factors[i].second) << "\n";
    for (std::size_t b = 0; b < d.bars.size(); ++b) std::cout << "bar " << b + 1 << ": " << format_word(q, d.bars[b]) << "\n";
    std::cout << "σ=" << d.sigma.str() << "\n";
    std::cout << "λ=" << d.lambda.str() << "\n";
    std::cout << "ρ=" << d.rho.str() << "\n";
    std::cout << "π=" << d.pi.str() << "\n";
    std::cout << "ramification " << ramification_sequence(d).str() << "\n";
    auto zs = z_words(d);
    std::cout << "z-words: " << zs.size() << "\n";
    for (const auto& z : zs)
        std::cout << "  (" << format_word(q, z.left_period) << ")^inf " << word_literal(q, z.middle) << " ("
                  << format_word(q, z.right_period) << ")^inf\n";
    std::cout << "χ=" << quilt_euler_characteristic(d.t) << "\n";
    std::cout << format_algebra(d.algebra);
    return Ok;
}

int cmd_barbell(const Options& o) {
    auto b = barbell(OrientationSequence::parse(o.eps), OrientationSequence::parse(o.eta), OrientationSequence::parse(o.eps2));
    const auto& q = b.algebra.quiver();
    bool minimal = minimality_oracle(b.algebra);
    if (o.json) {
        emit({{"algebra", to_json(b.algebra)}, {"bar", format_word(q, b.bar)}, {"band", format_word(q, b.band)},
              {"serial_bar", is_serial(b.bar)}, {"minimal", minimal}});
    } else {
        std::cout << format_algebra(b.algebra);
        std::cout << "bar: " << format_word(q, b.bar) << (is_serial(b.bar) ? " (serial)" : "") << "\n";
        std::cout << "band: " << format_word(q, b.band) << "\n";
        std::cout << (minimal ? "minimal representation-infinite" : "not minimal") << "\n";
    }
    return o.expect_mri && !minimal ? Negative : Ok;
}

template <class F>
int cmd_endo(const Options& o) {
    auto alg = load(o.file);
    require_special_biserial(alg);
    Word w = parse_word(alg, o.band);
    F lam;
    try {
        lam = F::parse(o.lambda);
    } catch (const std::exception&) {
        throw InputError("bad scalar '" + o.lambda + "'");
    }
    if (lam.is_zero()) throw InputError("lambda must be nonzero");
    auto M = band_module(alg, scalar_band(w, lam));
    auto r = end_radical(alg, M);
    if (o.json) {
        emit({{"field", F::name()}, {"band", format_word(alg.quiver(), w)}, {"lambda", lam.str()},
              {"rad_dim", r.rad_dim}, {"nilpotency", r.nilpotency},
              {"semisimple_image_ideal_dim", r.semisimple_image_ideal_dim}, {"module", to_json(alg.quiver(), M)}});
    } else {
        std::cout << "field " << F::name() << "\n";
        std::cout << "dim rad End = " << r.rad_dim << "\n";
        std::cout << "nilpotency = " << r.nilpotency << "\n";
        std::cout << "semisimple image ideal = " << r.semisimple_image_ideal_dim << "\n";
    }
    return Ok;
}

int cmd_ar(const Options& o) {
    auto alg = load(o.file);
    require_special_biserial(alg);
    if (o.radius < 0) throw InputError("radius must be nonnegative");
    Word seed = parse_word(alg, o.seed);
    auto p = generate_patch(alg, seed, o.radius);
    auto rep = classify_sectional_paths(p);
    auto vc = check_valley_corollary(p);
    if (!o.dot_out.empty()) write_file(o.dot_out, export_dot(p));
    if (!o.json_out.empty()) {
        json j = to_json(p);
        j["sectional"] = to_json(rep);
        j["valley_ok"] = vc.ok;
        write_file(o.json_out, j.dump(2) + "\n");
    }
    std::cout << "nodes: " << p.nodes.size() << "\n";
    std::cout << "arrows: " << p.arrows.size() << "\n";
    std::cout << "translates: " << p.tau_pairs.size() << "\n";
    std::cout << "sectional paths: " << rep.paths.size() << "\n";
    std::cout << "sectional violations: " << rep.violations.size() << " (+" << rep.truncated_violations << " truncated)\n";
    for (const auto& v : rep.violations) {
        std::cout << " ";
        for (const auto& x : v.vertices) std::cout << " [" << x << "]";
        std::cout << "\n";
    }
    std::cout << "valley failures: " << vc.failures.size() << "\n";
    for (const auto& f : vc.failures) std::cout << "  [" << f[0] << "] -> [" << f[1] << "] -> [" << f[2] << "]\n";
    return rep.violations.empty() && vc.ok ? Ok : Negative;
}

int cmd_ramify(const Options& o) {
    auto rs = possible_ramifications(o.t);
    if (o.json) {
        json a = json::array();
        for (const auto& r : rs) a.push_back(r.str());
        emit({{"t", o.t}, {"ramifications", a}});
    } else {
        for (const auto& r : rs) std::cout << r.str() << "\n";
    }
    return Ok;
}

int cmd_corpus(const Options& o) {
    CorpusOptions opt;
    opt.max_vertices = o.max_vertices;
    opt.max_arrows = o.max_arrows;
    auto corpus = generate_corpus(opt);
    std::size_t positives = 0, disagreements = 0, thm_fail = 0;
    json bad = json::array();
    for (const auto& alg : corpus) {
        auto c = classify(alg);
        bool oracle = is_finite_dimensional(alg) && is_representation_infinite(alg) && minimality_oracle(alg);
        if (c.positive()) {
            ++positives;
            if (!four_vertices_are_nodes(alg)) ++thm_fail;
        }
        if (c.positive() != oracle) {
            ++disagreements;
            bad.push_back(format_algebra(alg));
        }
    }
    if (o.json) {
        emit({{"algebras", corpus.size()}, {"positive", positives}, {"disagreements", disagreements},
              {"node_theorem_failures", thm_fail}, {"disagreeing", bad}});
    } else {
        std::cout << "algebras: " << corpus.size() << "\n";
        std::cout << "positive: " << positives << "\n";
        std::cout << "disagreements: " << disagreements << "\n";
        std::cout << "degree-4 non-node positives: " << thm_fail << "\n";
        for (const auto& b : bad) std::cout << "---\n" << b.get<std::string>();
    }
    return disagreements || thm_fail ? Breach : Ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"special biserial algebra toolkit"};
    app.require_subcommand(1);
    Options o;

    auto with_file = [&](CLI::App* s) { s->add_option("file", o.file, "algebra file")->required(); };
    auto common = [&](CLI::App* s) {
        s->add_flag("--json", o.json, "machine-readable output");
        s->add_flag("--expect-mri", o.expect_mri, "exit 1 unless the verdict is positive");
    };

    auto* check = app.add_subcommand("check", "special biserial conditions, nodes, degree-4 vertices");
    auto* cls = app.add_subcommand("classify", "classify a minimal representation-infinite candidate");
    auto* bands = app.add_subcommand("bands", "list bands up to rotation and inversion");
    auto* strings = app.add_subcommand("strings", "list strings up to inversion");
    auto* oracle = app.add_subcommand("oracle", "brute-force minimality test");
    auto* growth = app.add_subcommand("growth", "search for two distinct bands through one arrow");
    for (auto* s : {check, cls, bands, strings, oracle, growth}) {
        with_file(s);
        common(s);
    }
    for (auto* s : {bands, strings}) s->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
    growth->add_option("--bound", o.bound)->check(CLI::PositiveNumber);

    auto* ww = app.add_subcommand("windwheel", "build a wind wheel from a cyclic word");
    common(ww);
    ww->add_option("--word", o.word)->required();

    auto* bb = app.add_subcommand("barbell", "build a barbell algebra");
    common(bb);
    bb->add_option("--eps", o.eps)->required();
    bb->add_option("--eta", o.eta)->required();
    bb->add_option("--eps2", o.eps2)->required();

    auto* endo = app.add_subcommand("endo", "radical of the endomorphism ring of a band module");
    with_file(endo);
    common(endo);
    endo->add_option("--band", o.band)->required();
    endo->add_option("--lambda", o.lambda);

    auto* ar = app.add_subcommand("ar", "finite patch of the Auslander-Reiten quiver");
    with_file(ar);
    ar->add_option("--seed", o.seed)->required();
    ar->add_option("--radius", o.radius);
    ar->add_option("--dot", o.dot_out, "write the patch as DOT");
    ar->add_option("--json", o.json_out, "write the patch as JSON");

    auto* ram = app.add_subcommand("ramify", "possible ramification sequences");
    common(ram);
    ram->add_option("--t", o.t)->required()->check(CLI::PositiveNumber);

    auto* corpus = app.add_subcommand("corpus", "classifier against oracle on an exhaustive corpus");
    common(corpus);
    corpus->add_option("--max-vertices", o.max_vertices)->check(CLI::Range(1, 6));
    corpus->add_option("--max-arrows", o.max_arrows)->check(CLI::Range(0, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }

    try {
        FieldKind field = field_from_env();
        if (*check) return cmd_check(o);
        if (*cls) return cmd_classify(o);
        if (*bands) return cmd_words(o, true);
        if (*strings) return cmd_words(o, false);
        if (*oracle) return cmd_oracle(o);
        if (*growth) return cmd_growth(o);
        if (*ww) return cmd_windwheel(o);
        if (*bb) return cmd_barbell(o);
        if (*endo) return field == FieldKind::Fp ? cmd_endo<Fp>(o) : cmd_endo<Rational>(o);
        if (*ar) return cmd_ar(o);
        if (*ram) return cmd_ramify(o);
        if (*corpus) return cmd_corpus(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Breach;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Breach;
    }
    return BadInput;
}
