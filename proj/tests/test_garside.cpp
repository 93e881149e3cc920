#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace springer;

namespace {

// all positive morphisms of sup <= S from each object, by products of simples
std::vector<std::set<Morphism>> positives(const Garside& E, int S) {
    const GroupoidData& G = E.data();
    std::vector<std::set<Morphism>> out(G.num_objects());
    for (int o = 0; o < G.num_objects(); ++o) {
        std::vector<Morphism> level{E.identity(o)};
        out[o].insert(level[0]);
        for (int k = 0; k < S; ++k) {
            std::vector<Morphism> next;
            for (const Morphism& x : level) {
                int t = E.target(x);
                for (int s = G.first_simple[t]; s < G.first_simple[t + 1]; ++s) {
                    Morphism y = E.mul_simple(x, s);
                    if (out[o].insert(y).second) next.push_back(y);
                }
            }
            level = std::move(next);
        }
    }
    return out;
}

Morphism random_morphism(const Garside& E, std::mt19937_64& rng, int o, int len) {
    const GroupoidData& G = E.data();
    Morphism x = E.identity(o);
    for (int i = 0; i < len; ++i) {
        int t = E.target(x);
        if (rng() % 2) {
            int s = G.first_simple[t] + static_cast<int>(rng() % (G.first_simple[t + 1] - G.first_simple[t]));
            x = E.mul_simple(x, s);
        } else {
            // a simple ending at t, inverted
            std::vector<int> in;
            for (int s = 0; s < G.num_simples(); ++s)
                if (G.simples[s].target == t) in.push_back(s);
            x = E.mul(x, E.simple_inverse(in[rng() % in.size()]));
        }
    }
    return x;
}

}  // namespace

TEST_CASE("group laws and normal form invariants on the micro groupoid") {
    const auto& in = fixtures::get("A4", 2);
    const Garside& E = *in.E;
    const GroupoidData& G = E.data();
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        int o = static_cast<int>(rng() % G.num_objects());
        Morphism x = random_morphism(E, rng, o, 1 + static_cast<int>(rng() % 5));
        Morphism y = random_morphism(E, rng, E.target(x), 1 + static_cast<int>(rng() % 5));
        Morphism z = random_morphism(E, rng, E.target(y), 1 + static_cast<int>(rng() % 5));
        CHECK(E.left_weighted(x));
        CHECK(E.mul(E.mul(x, y), z) == E.mul(x, E.mul(y, z)));
        CHECK(E.mul(x, E.inverse(x)) == E.identity(o));
        CHECK(E.mul(E.inverse(x), x) == E.identity(E.target(x)));
        CHECK(E.inverse(E.inverse(x)) == x);
        CHECK(E.length(E.mul(x, y)) == E.length(x) + E.length(y));
        // Delta^-k x Delta^k = phi^k(x)
        for (int k : {1, 2, -1}) {
            Morphism d1 = E.delta_power(o, k);
            Morphism d2 = E.delta_power(E.target(x), k);
            CHECK(E.mul(E.mul(E.inverse(d1), x), d2) == E.phi_pow(x, k));
        }
        // fractions
        Fraction fr = E.to_fraction(x);
        CHECK(fr.den.positive());
        CHECK(fr.num.positive());
        CHECK(E.pos_meet(fr.den, fr.num) == E.identity(fr.den.src));
        CHECK(E.from_fraction(fr) == x);
    }
}

TEST_CASE("prefix and suffix lattices against exhaustive search") {
    const auto& in = fixtures::get("A4", 2);
    const Garside& E = *in.E;
    const GroupoidData& G = E.data();
    const int S = 2;
    auto pos = positives(E, S);
    // d <= x iff d w = x for some positive w
    auto brute_divides = [&](const Morphism& d, const Morphism& x) {
        if (d.src != x.src) return false;
        for (const Morphism& w : pos[E.target(d)])
            if (E.target(w) == E.target(x) && E.mul(d, w) == x) return true;
        return false;
    };
    for (int o = 0; o < G.num_objects(); o += 3) {
        std::vector<Morphism> xs(pos[o].begin(), pos[o].end());
        std::vector<Morphism> sample;
        for (std::size_t i = 0; i < xs.size(); i += 1 + xs.size() / 12) sample.push_back(xs[i]);
        for (const Morphism& x : sample)
            for (const Morphism& y : sample) {
                CHECK(E.pos_divides(x, y) == brute_divides(x, y));
                Morphism m = E.pos_meet(x, y), j = E.pos_join(x, y);
                // meet: longest common divisor; join: shortest common multiple, both unique
                Morphism bm, bj;
                int nbm = 0, nbj = 0;
                for (const Morphism& d : xs) {
                    if (brute_divides(d, x) && brute_divides(d, y)) {
                        if (nbm == 0 || E.length(d) > E.length(bm)) bm = d, nbm = 1;
                        else if (E.length(d) == E.length(bm)) ++nbm;
                    }
                    if (brute_divides(x, d) && brute_divides(y, d)) {
                        if (nbj == 0 || E.length(d) < E.length(bj)) bj = d, nbj = 1;
                        else if (E.length(d) == E.length(bj)) ++nbj;
                    }
                }
                CHECK(nbm == 1);
                CHECK(m == bm);
                CHECK(nbj == 1);
                CHECK(j == bj);
                CHECK(E.mul(x, E.right_complement(x, y)) == j);
            }
    }
    // suffix order through the same search, on morphisms with a common target
    std::map<int, std::vector<Morphism>> by_target;
    for (int o = 0; o < G.num_objects(); ++o)
        for (const Morphism& x : pos[o]) by_target[E.target(x)].push_back(x);
    auto brute_suffix = [&](const Morphism& d, const Morphism& x) {
        if (E.target(d) != E.target(x)) return false;
        for (const Morphism& w : by_target[d.src])
            if (w.src == x.src && E.mul(w, d) == x) return true;
        return false;
    };
    for (auto& [t, list] : by_target) {
        std::vector<Morphism> sample;
        for (std::size_t i = 0; i < list.size(); i += 1 + list.size() / 8) sample.push_back(list[i]);
        for (const Morphism& x : sample)
            for (const Morphism& y : sample) {
                CHECK(E.pos_left_divides(x, y) == brute_suffix(x, y));
                Morphism m = E.pos_left_meet(x, y), j = E.pos_left_join(x, y);
                CHECK(brute_suffix(m, x));
                CHECK(brute_suffix(m, y));
                CHECK(brute_suffix(x, j));
                CHECK(brute_suffix(y, j));
                for (const Morphism& d : list) {
                    if (brute_suffix(d, x) && brute_suffix(d, y)) CHECK(brute_suffix(d, m));
                    if (brute_suffix(x, d) && brute_suffix(y, d)) CHECK(brute_suffix(j, d));
                }
            }
    }
}

TEST_CASE("one-object instances agree with the reflection-word oracle (short words)") {
    for (const char* t : {"A2", "B2", "A3"}) {
        CAPTURE(t);
        const auto& in = fixtures::get(t, 1);
        const Garside& E = *in.E;
        const GroupoidData& G = E.data();
        const IntervalLattice& L = *in.ds.lattice;
        oracle::DualMonoid M(in.ds.rs->roots, L.coxeter.perm);
        auto nf_of = [&](const Morphism& m) {
            oracle::DualMonoid::NF nf;
            nf.inf = m.k;
            for (int s : m.f) nf.factors.push_back(L.elements[G.simples[s].a].perm);
            return nf;
        };
        const int n = G.num_simples();
        for (int a = 0; a < 2 * n; ++a)
            for (int b = 0; b < 2 * n; ++b) {
                std::vector<std::pair<int, bool>> w{{a / 2, a % 2 == 1}, {b / 2, b % 2 == 1}};
                std::vector<std::pair<oracle::Perm, bool>> ow;
                for (auto [s, inv] : w) ow.emplace_back(L.elements[G.simples[s].a].perm, inv);
                Morphism x = E.from_word(w);
                auto e = M.from_letters(ow);
                CHECK(nf_of(x) == M.normal_form(e));
                Fraction fr = E.to_fraction(x);
                auto [den, num] = M.reduced_fraction(e);
                CHECK(nf_of(fr.den) == M.normal_form(den));
                CHECK(nf_of(fr.num) == M.normal_form(num));
            }
    }
}

TEST_CASE("swap and recurrent orbits") {
    const auto& in = fixtures::get("A4", 2);
    const Garside& E = *in.E;
    const Parabolics& P = *in.P;
    std::mt19937_64 rng(5);
    for (const Morphism& x : random_endomorphisms(P, rng, 150, 4)) {
        Morphism c;
        Morphism s = E.swap(x, &c);
        CHECK(E.conj(x, c) == s);
        if (x.positive()) CHECK(s == x);
        RecurrentOrbit r = E.recurrent_orbit(x);
        CHECK(E.conj(x, r.conjugator) == r.y);
        CHECK(E.is_recurrent(r.y));
        for (std::size_t i = 0; i < r.cycle.size(); ++i) {
            CHECK(E.swap(r.cycle[i]) == r.cycle[(i + 1) % r.cycle.size()]);
            CHECK(E.conj(r.cycle[i], r.steps[i]) == r.cycle[(i + 1) % r.cycle.size()]);
        }
        // power and inverse
        CHECK(E.power(x, 2) == E.mul(x, x));
        CHECK(E.power(x, -1) == E.inverse(x));
    }
}

TEST_CASE("contract violations") {
    const auto& in = fixtures::get("A4", 2);
    const Garside& E = *in.E;
    const GroupoidData& G = E.data();
    int s = -1;
    for (int t = 0; t < G.num_simples() && s < 0; ++t)
        if (G.simples[t].source != G.simples[t].target) s = t;
    REQUIRE(s >= 0);
    Morphism x = E.from_simple(s);
    CHECK_THROWS_AS(E.mul(x, x), ContractViolation);
    CHECK_THROWS_AS(E.swap(x), ContractViolation);
    CHECK_THROWS_AS(E.power(x, 2), ContractViolation);
    CHECK_THROWS_AS(E.from_word({}), ContractViolation);
    CHECK_THROWS_AS(E.pos_meet(E.inverse(x), E.identity(x.src)), ContractViolation);
}

TEST_CASE("meet and join against the greedy group model") {
    for (const char* t : {"A2", "B2"}) {
        CAPTURE(t);
        const auto& in = fixtures::get(t, 1);
        const Garside& E = *in.E;
        const GroupoidData& G = E.data();
        const IntervalLattice& L = *in.ds.lattice;
        oracle::DualMonoid M(in.ds.rs->roots, L.coxeter.perm);
        oracle::GreedyModel U(M, 2);
        std::map<oracle::Perm, int> simple_of;
        for (int s = 0; s < G.num_simples(); ++s) simple_of[L.elements[G.simples[s].a].perm] = s;
        auto to_pos = [&](const Morphism& x) {
            oracle::GreedyModel::Pos p;
            p.k = x.k;
            for (int s : x.f) p.f.push_back(L.elements[G.simples[s].a].perm);
            return p;
        };
        std::vector<Morphism> lib;
        for (int i = 0; i < U.size(); ++i) {
            Morphism x = E.delta_power(0, U.elem(i).k);
            for (const auto& p : U.elem(i).f) x = E.mul_simple(x, simple_of.at(p));
            CHECK(to_pos(x) == U.elem(i));
            CHECK(E.length(x) == U.length(i));
            lib.push_back(x);
        }
        for (int i = 0; i < U.size(); ++i)
            for (int j = 0; j < U.size(); ++j) {
                CHECK(E.pos_divides(lib[i], lib[j]) == U.divides(i, j));
                REQUIRE(U.meet(i, j) >= 0);
                REQUIRE(U.join(i, j) >= 0);
                CHECK(to_pos(E.pos_meet(lib[i], lib[j])) == U.elem(U.meet(i, j)));
                CHECK(to_pos(E.pos_join(lib[i], lib[j])) == U.elem(U.join(i, j)));
            }
    }
}
