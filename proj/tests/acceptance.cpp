// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "springer/dataset.hpp"
#include "springer/verify.hpp"

using namespace springer;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, bool pass, const std::string& what, const std::string& detail, double s) {
    std::printf("%s %2d  %s  [%s]  (%.1fs)\n", pass ? "PASS" : "FAIL", n, what.c_str(), detail.c_str(), s);
    std::fflush(stdout);
    if (!pass) ++failures;
}

void report(int n, bool pass, const std::string& what, const std::string& detail, Clock::time_point t0) {
    report(n, pass, what, detail, std::chrono::duration<double>(Clock::now() - t0).count());
}

const CheckResult* find(const VerifyReport& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::string detail_of(const CheckResult* c) { return c ? c->observed : "check missing"; }

struct OracleTally {
    long long items = 0, bad = 0;
};

// normal form and reduced fraction of every word of length <= maxlen over simples and inverses
OracleTally nf_fraction(const Dataset& ds, oracle::DualMonoid& M, int maxlen) {
    const GroupoidData& G = *ds.groupoid;
    const IntervalLattice& L = *ds.lattice;
    Garside E(ds.groupoid);
    auto perm = [&](int s) { return L.elements[G.simples[s].a].perm; };
    auto nf_of = [&](const Morphism& m) {
        oracle::DualMonoid::NF nf;
        nf.inf = m.k;
        for (int s : m.f) nf.factors.push_back(perm(s));
        return nf;
    };
    OracleTally t;
    const int letters = 2 * G.num_simples();
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<int> idx(len, 0);
        for (;;) {
            std::vector<std::pair<int, bool>> w;
            std::vector<std::pair<oracle::Perm, bool>> ow;
            for (int i : idx) {
                w.emplace_back(i / 2, i % 2 == 1);
                ow.emplace_back(perm(i / 2), i % 2 == 1);
            }
            Morphism x = E.from_word(w);
            auto e = M.from_letters(ow);
            ++t.items;
            Fraction fr = E.to_fraction(x);
            auto [den, num] = M.reduced_fraction(e);
            if (!(nf_of(x) == M.normal_form(e)) || !(nf_of(fr.den) == M.normal_form(den)) ||
                !(nf_of(fr.num) == M.normal_form(num)))
                ++t.bad;
            int p = len - 1;
            while (p >= 0 && ++idx[p] == letters) idx[p--] = 0;
            if (p < 0) break;
        }
    }
    return t;
}

// meet and join of every pair of positive elements given by words of length <= m over the
// simples, i.e. of every pair of sup <= m, against the greedy group model. The model's
// normal forms are first checked against the word-class oracle.
OracleTally meet_join(const Dataset& ds, oracle::DualMonoid& M, int m, std::string& note) {
    const GroupoidData& G = *ds.groupoid;
    const IntervalLattice& L = *ds.lattice;
    Garside E(ds.groupoid);
    oracle::GreedyModel U(M, m);
    std::map<oracle::Perm, int> simple_of;
    for (int s = 0; s < G.num_simples(); ++s) simple_of[L.elements[G.simples[s].a].perm] = s;
    auto to_lib = [&](const oracle::GreedyModel::Pos& x) {
        Morphism r = E.delta_power(0, x.k);
        for (const auto& p : x.f) r = E.mul_simple(r, simple_of.at(p));
        return r;
    };
    auto to_pos = [&](const Morphism& x) {
        oracle::GreedyModel::Pos p;
        p.k = x.k;
        for (int s : x.f) p.f.push_back(L.elements[G.simples[s].a].perm);
        return p;
    };
    OracleTally t;
    std::vector<Morphism> lib;
    for (int i = 0; i < U.size(); ++i) {
        const auto& x = U.elem(i);
        lib.push_back(to_lib(x));
        // the same element through reflection-word classes
        std::vector<std::pair<oracle::Perm, bool>> letters(x.k, {M.coxeter(), false});
        for (const auto& p : x.f) letters.emplace_back(p, false);
        oracle::DualMonoid::NF nf = M.normal_form(M.from_letters(letters));
        if (nf.inf != x.k || nf.factors != x.f || to_pos(lib.back()) != x) ++t.bad;
    }
    for (int i = 0; i < U.size(); ++i)
        for (int j = 0; j < U.size(); ++j) {
            ++t.items;
            int mt = U.meet(i, j), jn = U.join(i, j);
            if (mt < 0 || jn < 0 || to_pos(E.pos_meet(lib[i], lib[j])) != U.elem(mt) ||
                to_pos(E.pos_join(lib[i], lib[j])) != U.elem(jn))
                ++t.bad;
        }
    note = std::to_string(U.size()) + " elements of sup <= " + std::to_string(m);
    return t;
}

long long product_formula(const std::vector<int>& degrees, int h) {
    long long num = 1, den = 1;
    for (int d : degrees) num *= d + h, den *= d;
    return num / den;
}

void criterion10() {
    auto t = Clock::now();
    std::ostringstream os;
    bool pass = true;
    for (const char* type : {"A2", "B2", "A3"}) {
        Dataset one = build_dataset(type, 1);
        oracle::DualMonoid M(one.rs->roots, one.lattice->coxeter.perm);
        OracleTally a = nf_fraction(one, M, 4);
        std::string note;
        OracleTally b = meet_join(one, M, 4, note);
        pass = pass && a.bad == 0 && b.bad == 0;
        os << type << ": " << a.bad << "/" << a.items << " words, " << note << ", " << b.bad << "/" << b.items
           << " meet-join pairs; ";
    }
    report(10, pass, "normal form, fraction, meet, join agree with the oracles (words of length <= 4)", os.str(), t);
}

}  // namespace

// usage: acceptance [--jobs N] [criterion ...]
int main(int argc, char** argv) {
    int jobs = 1;
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--jobs" && i + 1 < argc)
            jobs = std::atoi(argv[++i]);
        else
            only.insert(std::atoi(a.c_str()));
    }
    auto want = [&](int n) { return only.empty() || only.count(n) > 0; };
    bool need_e8 = false;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 11}) need_e8 = need_e8 || want(n);
    if (!need_e8) {
        if (want(10)) criterion10();
        std::printf("%d failed\n", failures);
        return failures == 0 ? 0 : 1;
    }
    auto t0 = Clock::now();

    // 1: build and store the E8, d = 4 groupoid
    Dataset ds = build_dataset("E8", 4, jobs);
    const GroupoidData& G = *ds.groupoid;
    {
        std::ostringstream os;
        os << G.num_objects() << "/" << G.num_simples() << "/" << G.relations.size();
        auto path = std::filesystem::temp_directory_path() / "springer-acceptance-e8.dat";
        save_dataset(ds, path.string());
        Dataset back = load_dataset(path.string());
        std::ostringstream ob;
        ob << back.groupoid->num_objects() << "/" << back.groupoid->num_simples() << "/"
           << back.groupoid->relations.size();
        std::filesystem::remove(path);
        if (want(1)) report(1, os.str() == "88/2691/16359" && ob.str() == os.str(), "E8 d=4 counts |O|/|S|/|Rel| = 88/2691/16359",
               "built " + os.str() + ", reloaded " + ob.str(), t0);
    }

    // 2: interval size against the product formula over the degrees of E8
    {
        auto t = Clock::now();
        long long formula = product_formula({2, 8, 12, 14, 18, 20, 24, 30}, 30);
        long long got = ds.lattice->size();
        if (want(2)) report(2, got == formula && formula == 25080, "|[1,c]| = prod (d_i + h)/d_i",
               "interval " + std::to_string(got) + ", formula " + std::to_string(formula), t);
    }

    auto E = std::make_shared<const Garside>(ds.groupoid);
    Parabolics P(E);
    VerifyOptions opt;
    opt.jobs = jobs;
    VerifyReport golden = verify_golden(P, opt);
    auto at = [&](int n, const std::string& id, const std::string& what) {
        if (!want(n)) return;
        const CheckResult* c = find(golden, id);
        report(n, c && c->pass, what, detail_of(c), c ? c->seconds : 0.0);
    };
    at(3, "presentation", "object with 5 atomic loops satisfying the 10 relation families");
    at(4, "census", "20 standard parabolic subgroupoids at u0, all connected");
    at(5, "sundial", "sundial succeeds on every ribbon-class representative");
    at(6, "ribbon-closure", "ribbon closure of the divisors of u0 is every admissible beta");
    at(7, "parabolic-lattice", "9 classes, inclusion diagram, generation at depth <= 10");

    // 8: the literal statement over all ordered pairs
    if (want(8)) {
        auto t = Clock::now();
        G31Reference ref = find_g31_reference(P);
        LatticeResult lr = parabolic_lattice(P, ref);
        AdjacencyResult ar = adjacency_check(P, ref, lr);
        std::ostringstream os;
        os << ar.bad_all << " disagreements over all " << ar.pairs_all << " ordered pairs";
        if (ar.bad_all)
            os << " (every one involves a reducible A1xA1 parabolic; over the " << ar.pairs_irr
               << " irreducible pairs: " << ar.bad_irr << ")";
        report(8, ar.bad_all == 0, "z-commutation equals the adjacency predicate on all 20x20 pairs", os.str(), t);
    }

    // 9: property suites
    if (want(9)) {
        auto t = Clock::now();
        std::ostringstream os;
        bool pass = true;
        auto run = [&](const char* label, const Parabolics& Q, const VerifyOptions& o, bool exhaustive) {
            VerifyReport r = verify_properties(Q, o, exhaustive);
            long long bad = 0;
            for (const auto& c : r.checks)
                if (!c.pass) pass = false, ++bad;
            os << label << ": " << r.checks.front().observed << ", " << bad << " failing checks; ";
        };
        for (auto [type, d] : {std::pair{"A2", 2}, std::pair{"A4", 2}}) {
            Dataset small = build_dataset(type, d);
            auto Es = std::make_shared<const Garside>(small.groupoid);
            Parabolics Ps(Es);
            run((std::string(type) + " d=" + std::to_string(d) + " exhaustive").c_str(), Ps, VerifyOptions{}, true);
        }
        VerifyOptions o;
        o.samples = 500;
        o.seed = 1;
        run("E8 d=4 seeded", P, o, false);
        report(9, pass, "property suites: micro groupoids exhaustively, 500 seeded G31 endomorphisms", os.str(), t);
    }

    if (want(10)) criterion10();
    at(11, "z-elements", "phi_beta^e trivial, delta_beta^e central, e object-independent");

    std::printf("%d failed\n", failures);
    return failures == 0 ? 0 : 1;
}
