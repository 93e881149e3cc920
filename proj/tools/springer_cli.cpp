// springer: build, query and verify Springer groupoid datasets
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "springer/dataset.hpp"
#include "springer/verify.hpp"

using namespace springer;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kData = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Session {
    Dataset ds;
    std::shared_ptr<const Garside> E;
    std::unique_ptr<Parabolics> P;

    explicit Session(const std::string& path) : ds(load_dataset(path)) {
        E = std::make_shared<const Garside>(ds.groupoid);
        P = std::make_unique<Parabolics>(E);
    }
};

// "12,7^-1,3": simples left to right; positions are 1-based token numbers
Morphism parse_word(const Garside& E, const std::string& text) {
    const GroupoidData& G = E.data();
    std::vector<std::pair<int, bool>> word;
    std::stringstream ss(text);
    std::string tok;
    int pos = 0, cur = -1;
    while (std::getline(ss, tok, ',')) {
        ++pos;
        auto where = [&] { return "word token " + std::to_string(pos) + " '" + tok + "': "; };
        bool inv = false;
        std::string num = tok;
        if (num.size() > 3 && num.compare(num.size() - 3, 3, "^-1") == 0) {
            inv = true;
            num.resize(num.size() - 3);
        }
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError(where() + "expected a simple index with optional ^-1");
        long long s = std::stoll(num);
        if (s >= G.num_simples())
            throw UsageError(where() + "index out of range (dataset has " + std::to_string(G.num_simples()) +
                             " simples)");
        const Simple& x = G.simples[s];
        int from = inv ? x.target : x.source;
        if (cur >= 0 && from != cur)
            throw UsageError(where() + "not composable: previous letter ends at object " + std::to_string(cur) +
                             ", this one starts at " + std::to_string(from));
        cur = inv ? x.source : x.target;
        word.emplace_back(static_cast<int>(s), inv);
    }
    if (word.empty() || text.empty() || text.back() == ',') throw UsageError("empty word or trailing comma");
    return E.from_word(word);
}

// a word that parse_word reads back to m
std::string word_of(const Garside& E, const Morphism& m) {
    const GroupoidData& G = E.data();
    std::vector<std::string> out;
    int cur = m.src;
    for (int i = 0; i < m.k; ++i) {
        out.push_back(std::to_string(G.delta_of[cur]));
        cur = G.phi_obj[cur];
    }
    for (int i = 0; i > m.k; --i) {
        cur = G.phi_inv_obj[cur];
        out.push_back(std::to_string(G.delta_of[cur]) + "^-1");
    }
    for (int s : m.f) out.push_back(std::to_string(s));
    if (out.empty()) return std::to_string(G.identity_of[m.src]);
    std::string r;
    for (std::size_t i = 0; i < out.size(); ++i) r += (i ? "," : "") + out[i];
    return r;
}

std::string describe(const Garside& E, const Morphism& m) {
    std::ostringstream os;
    os << "Δ^" << m.k << ", " << m.f.size() << " factors";
    if (!m.f.empty()) {
        os << ":";
        for (int s : m.f) os << ' ' << s;
    }
    os << "  [object " << m.src << " -> " << E.target(m) << "]";
    return os.str();
}

void print_morphism(const Garside& E, const std::string& label, const Morphism& m) {
    std::cout << label << describe(E, m) << "\n" << std::string(label.size(), ' ') << "word " << word_of(E, m)
              << "\n";
}

Morphism endo_word(const Garside& E, const std::string& w) {
    Morphism x = parse_word(E, w);
    if (!E.is_endo(x)) throw UsageError("word is not an endomorphism");
    return x;
}

void print_handle(Session& S, ZCache& zc, const Morphism& x) {
    const Garside& E = *S.E;
    ParabolicHandle h = S.P->pc(x);
    const IntervalLattice& L = *S.ds.lattice;
    std::cout << "beta         " << h.beta << "  (length " << L.length(h.beta) << ", ribbon class "
              << S.P->ribbon_class_of(h.beta) << ")\n";
    std::cout << "base object  " << h.base << "\n";
    print_morphism(E, "conjugator   ", h.conjugator);
    print_morphism(E, "z-element    ", zc.z_of_handle(h));
    std::cout << "standard     " << (S.P->is_standard(h) ? "yes" : "no") << "\n";
    std::cout << "rank         " << L.length(S.ds.groupoid->objects[h.base]) - L.length(h.beta) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Springer groupoid datasets: build, query, verify"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for build and verify")->check(CLI::PositiveNumber);

    std::string file, word, word2, type = "E8", out;
    int d = 4, beta = -1, object = -1;
    std::size_t max_vertices = 200000;
    VerifyOptions vopt;
    bool exhaustive = false;

    auto* build = app.add_subcommand("build", "construct a dataset and save it");
    build->add_option("--type", type, "root system, e.g. E8, A3, B2")->required();
    build->add_option("--d", d, "regular degree")->required();
    build->add_option("--out", out, "output file")->required();

    auto* info = app.add_subcommand("info", "counts and parameters");
    info->add_option("FILE", file)->required();

    auto* nf = app.add_subcommand("nf", "normal form of a word");
    nf->add_option("FILE", file)->required();
    nf->add_option("WORD", word)->required();

    auto* swap = app.add_subcommand("swap-orbit", "recurrent swap orbit and conjugator");
    swap->add_option("FILE", file)->required();
    swap->add_option("WORD", word)->required();

    auto* graph = app.add_subcommand("conj-graph", "graph of positive conjugates");
    graph->add_option("FILE", file)->required();
    graph->add_option("WORD", word)->required();
    graph->add_option("--max-vertices", max_vertices);

    auto* pc = app.add_subcommand("pc", "parabolic closure");
    pc->add_option("FILE", file)->required();
    pc->add_option("WORD", word)->required();

    auto* z = app.add_subcommand("z", "z-element of a standard parabolic");
    z->add_option("FILE", file)->required();
    z->add_option("BETA", beta)->required();
    z->add_option("OBJECT", object)->required();

    auto* adj = app.add_subcommand("adjacent", "adjacency of the parabolic closures of two words");
    adj->add_option("FILE", file)->required();
    adj->add_option("WORD1", word)->required();
    adj->add_option("WORD2", word2)->required();

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("FILE", file)->required();
    verify->add_option("--suite", vopt.suite)->check(CLI::IsMember({"golden", "properties", "all"}));
    verify->add_option("--seed", vopt.seed);
    verify->add_option("--depth", vopt.depth, "starting depth of the generation check")->check(CLI::Range(1, 10));
    verify->add_option("--samples", vopt.samples, "random endomorphisms for the property suite")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--exhaustive", exhaustive, "property suite on all endomorphisms with |inf|,sup <= 2");

    auto* lattice = app.add_subcommand("lattice", "parabolic lattice of the G31 groupoid");
    lattice->add_option("FILE", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (build->parsed()) {
            Dataset ds = build_dataset(type, d, jobs);
            save_dataset(ds, out);
            const GroupoidData& G = *ds.groupoid;
            std::cout << "wrote " << out << ": |[1,c]|=" << ds.lattice->size() << " |O|=" << G.num_objects()
                      << " |S|=" << G.num_simples() << " |Rel|=" << G.relations.size() << "\n";
            return kOk;
        }

        Session S(file);
        const Garside& E = *S.E;
        const GroupoidData& G = *S.ds.groupoid;

        if (info->parsed()) {
            const RegularParams& p = G.params;
            std::size_t atoms = 0, with_loops = 0;
            for (const auto& a : G.atoms_of) atoms += a.size();
            for (int o = 0; o < G.num_objects(); ++o) with_loops += !S.P->atomic_loops(o).empty();
            std::cout << "type         " << S.ds.rs->type_label << "\n"
                      << "params       d=" << p.d << " h=" << p.h << " p=" << p.p << " q=" << p.q << " eta=" << p.eta
                      << "\n"
                      << "interval     " << S.ds.lattice->size() << "\n"
                      << "objects      " << G.num_objects() << "\n"
                      << "simples      " << G.num_simples() << "\n"
                      << "relations    " << G.relations.size() << "\n"
                      << "atoms        " << atoms << "\n"
                      << "admissible   " << S.P->admissible().size() << "\n"
                      << "loop objects " << with_loops << "\n";
        } else if (nf->parsed()) {
            Morphism x = parse_word(E, word);
            std::cout << describe(E, x) << "\n";
            Fraction fr = E.to_fraction(x);
            std::cout << "fraction     den " << describe(E, fr.den) << "\n             num " << describe(E, fr.num)
                      << "\n";
        } else if (swap->parsed()) {
            RecurrentOrbit r = E.recurrent_orbit(endo_word(E, word));
            print_morphism(E, "conjugator  ", r.conjugator);
            print_morphism(E, "recurrent   ", r.y);
            std::cout << "cycle length " << r.cycle.size() << "\n";
            for (std::size_t i = 0; i < r.cycle.size(); ++i) std::cout << "  " << i << ": " << describe(E, r.cycle[i]) << "\n";
        } else if (graph->parsed()) {
            ConjugacyGraph g = E.positive_conjugates_graph(endo_word(E, word), max_vertices);
            std::cout << "vertices " << g.vertices.size() << "  edges " << g.edges.size()
                      << (g.truncated ? "  (truncated)" : "") << "\n";
            for (std::size_t i = 0; i < g.vertices.size(); ++i)
                std::cout << "v " << i << ": " << describe(E, g.vertices[i]) << "\n";
            for (const auto& e : g.edges)
                std::cout << "e " << e.from << " -> " << e.to << ": " << word_of(E, e.label) << "\n";
        } else if (pc->parsed()) {
            ZCache zc(*S.P);
            print_handle(S, zc, endo_word(E, word));
        } else if (z->parsed()) {
            if (!S.P->is_admissible(beta)) throw UsageError("beta " + std::to_string(beta) + " is not admissible");
            if (object < 0 || object >= G.num_objects() || S.P->delta_beta(beta, object) < 0)
                throw UsageError("object " + std::to_string(object) + " does not lie in the parabolic of beta");
            ZElement ze = S.P->z_element(beta, object);
            std::cout << "exponent " << ze.exponent << "\n";
            print_morphism(E, "z        ", ze.morphism);
        } else if (adj->parsed()) {
            Morphism x = endo_word(E, word), y = endo_word(E, word2);
            if (x.src != y.src) throw UsageError("the two words are loops at different objects");
            ParabolicHandle h1 = S.P->pc(x), h2 = S.P->pc(y);
            ZCache zc(*S.P);
            print_morphism(E, "z1 ", zc.z_of_handle(h1));
            print_morphism(E, "z2 ", zc.z_of_handle(h2));
            std::cout << "adjacent " << (S.P->adjacent(h1, h2) ? "yes" : "no") << "\n";
        } else if (verify->parsed()) {
            vopt.jobs = jobs;
            VerifyReport rep;
            const bool golden_data = S.ds.rs->type_label == "E8" && G.params.d == 4;
            if (vopt.suite != "properties") {
                if (golden_data || vopt.suite == "golden") {
                    rep = verify_golden(*S.P, vopt);
                } else {
                    std::cout << "note: golden checks need the E8, d=4 dataset; skipped\n";
                }
            }
            if (vopt.suite != "golden") {
                VerifyReport pr = verify_properties(*S.P, vopt, exhaustive);
                rep.checks.insert(rep.checks.end(), pr.checks.begin(), pr.checks.end());
            }
            std::cout << rep.to_text();
            return rep.all_pass() ? kOk : kVerifyFailed;
        } else if (lattice->parsed()) {
            G31Reference ref = find_g31_reference(*S.P);
            std::cout << "u0 = object " << ref.u0 << "\n";
            for (int i = 0; i < 5; ++i)
                std::cout << "stuvw"[i] << " = " << word_of(E, ref.loops[ref.label[i]]) << "\n";
            LatticeResult lr = parabolic_lattice(*S.P, ref);
            std::cout << lr.num_ribbon_classes << " classes, diagram " << (lr.matches_diagram ? "matches" : "differs")
                      << "\n";
            for (std::size_t c = 0; c < lr.classes.size(); ++c) {
                const ClassInfo& ci = lr.classes[c];
                std::cout << "class " << c << "  <" << ci.gens << ">  beta " << ci.beta << "  ribbon class "
                          << ci.ribbon_class << (g31_irreducible()[c] ? "  irreducible" : "") << "  contains:";
                for (std::size_t b = 0; b < lr.classes.size(); ++b)
                    if (b != c && lr.contains[c][b]) std::cout << " <" << lr.classes[b].gens << ">";
                std::cout << "\n";
            }
        }
        return kOk;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractViolation& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kData;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kData;
    }
}
