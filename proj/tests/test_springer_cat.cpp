#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace springer;

TEST_CASE("regular parameters") {
    CHECK(make_params(4, 30) == RegularParams{4, 30, 2, 15, 8});
    CHECK(make_params(1, 4) == RegularParams{1, 4, 1, 4, 1});
    CHECK(make_params(2, 3) == RegularParams{2, 3, 2, 3, 2});
    CHECK(make_params(2, 5) == RegularParams{2, 5, 2, 5, 3});
    CHECK(make_params(30, 30) == RegularParams{30, 30, 1, 1, 1});
}

TEST_CASE("object, simple and relation counts of small groupoids") {
    struct Row {
        const char* type;
        int d, objects, simples, relations, atoms;
    };
    for (Row r : {Row{"A2", 1, 1, 5, 0, 3}, Row{"A3", 1, 1, 14, 0, 6}, Row{"B2", 1, 1, 6, 0, 4},
                  Row{"A4", 1, 1, 42, 0, 10}, Row{"A2", 2, 3, 6, 9, 3}, Row{"A4", 2, 10, 45, 105, 25}}) {
        CAPTURE(r.type);
        CAPTURE(r.d);
        const GroupoidData& G = *fixtures::get(r.type, r.d).ds.groupoid;
        CHECK(G.num_objects() == r.objects);
        CHECK(G.num_simples() == r.simples);
        if (r.relations) CHECK(static_cast<int>(G.relations.size()) == r.relations);
        std::size_t atoms = 0;
        for (const auto& a : G.atoms_of) atoms += a.size();
        CHECK(static_cast<int>(atoms) == r.atoms);
    }
    // d = 1: relations are the comparable pairs of [1,c]
    for (const char* t : {"A2", "A3", "B2"}) {
        const auto& in = fixtures::get(t, 1);
        const IntervalLattice& L = *in.ds.lattice;
        int pairs = 0;
        for (int i = 0; i < L.size(); ++i)
            for (int j = 0; j < L.size(); ++j) pairs += L.divides(i, j);
        CHECK(static_cast<int>(in.ds.groupoid->relations.size()) == pairs);
    }
}

TEST_CASE("groupoid tables against the definitions") {
    for (auto [t, d] : {std::pair{"A2", 2}, std::pair{"A4", 2}, std::pair{"A3", 1}, std::pair{"B2", 1}}) {
        CAPTURE(t);
        CAPTURE(d);
        const auto& in = fixtures::get(t, d);
        const GroupoidData& G = *in.ds.groupoid;
        const IntervalLattice& L = *in.ds.lattice;
        const RootSystem& R = *in.ds.rs;
        const RegularParams& p = G.params;
        oracle::DualMonoid M(R.roots, L.coxeter.perm);
        const GroupElement cq = R.power(L.coxeter, p.q), ce = R.power(L.coxeter, p.eta);
        auto conj = [&](const oracle::Perm& x, const GroupElement& g) {
            return M.mul(M.mul(R.inverse(g).perm, x), g.perm);
        };

        // objects: fixed by c^q, length n/p, product of the p twisted copies is c
        std::set<oracle::Perm> objects;
        for (const auto& x : M.interval()) {
            if (M.length(x) * p.p != R.rank || conj(x, cq) != x) continue;
            oracle::Perm prod = M.mul(L.coxeter.perm, M.inv(L.coxeter.perm)), cur = x;
            for (int k = 0; k < p.p; ++k) {
                prod = M.mul(prod, cur);
                cur = conj(cur, ce);
            }
            if (prod == L.coxeter.perm) objects.insert(x);
        }
        std::set<oracle::Perm> lib;
        for (int u : G.objects) lib.insert(L.elements[u].perm);
        CHECK(lib == objects);

        for (int o = 0; o < G.num_objects(); ++o) {
            const int u = G.objects[o];
            CHECK(G.simples[G.delta_of[o]].a == u);
            CHECK(G.simples[G.delta_of[o]].b == 0);
            CHECK(G.simples[G.identity_of[o]].a == 0);
            // simples leaving o: the c^q-fixed divisors of u
            int count = 0;
            for (int a = 0; a < L.size(); ++a)
                if (L.divides(a, u) && L.conj(a, cq) == a) ++count;
            CHECK(G.first_simple[o + 1] - G.first_simple[o] == count);
        }
        for (int s = 0; s < G.num_simples(); ++s) {
            const Simple& x = G.simples[s];
            CHECK(L.mul(x.a, x.b) == G.objects[x.source]);
            CHECK(G.objects[x.target] == L.mul(x.b, L.conj(x.a, ce)));
            CHECK(x.length == L.length(x.a));
            // s followed by its complement is Delta
            const Simple& c = G.simples[G.complement[s]];
            CHECK(c.source == x.target);
            CHECK(L.length(x.a) + L.length(c.a) == L.length(G.objects[x.source]));
            CHECK(G.phi_inv_simple[G.phi_simple[s]] == s);
            // left complement: ends where s starts, and together they make Delta
            const Simple& lc = G.simples[G.left_complement[s]];
            CHECK(lc.target == x.source);
            CHECK(L.mul(lc.b, L.conj(lc.a, ce)) == G.objects[x.source]);
            CHECK(lc.length + x.length == L.length(G.objects[x.source]));
            CHECK(G.simples[G.phi_simple[s]].a == L.conj(x.a, ce));
        }
        for (const RelTriple& r : G.relations) {
            int xy = L.mul(r.x, r.y);
            REQUIRE(xy >= 0);
            int u = L.mul(xy, r.z);
            CHECK(G.object_index(u) >= 0);
            CHECK(L.length(r.x) + L.length(r.y) + L.length(r.z) == L.length(u));
        }
    }
}

TEST_CASE("simple lattice operations at each object") {
    const auto& in = fixtures::get("A4", 2);
    const GroupoidData& G = *in.ds.groupoid;
    const IntervalLattice& L = *G.lattice;
    for (int o = 0; o < G.num_objects(); ++o)
        for (int s = G.first_simple[o]; s < G.first_simple[o + 1]; ++s)
            for (int t = G.first_simple[o]; t < G.first_simple[o + 1]; ++t) {
                const int a = G.simples[s].a, b = G.simples[t].a;
                CHECK(G.simple_divides(s, t) == L.divides(a, b));
                CHECK(G.simples[G.simple_meet(s, t)].a == L.meet(a, b));
                CHECK(G.simples[G.simple_join(s, t)].a == L.join(a, b));
                if (G.simple_divides(s, t)) {
                    int q = G.left_quotient(s, t);
                    REQUIRE(q >= 0);
                    CHECK(G.compose_simples(s, q) == t);
                }
            }
}

TEST_CASE("construction errors") {
    auto rs = std::make_shared<const RootSystem>(build_root_system("A4"));
    auto L = std::make_shared<const IntervalLattice>(build_interval(rs, rs->coxeter_element()));
    CHECK_THROWS_AS(build_springer_data(L, make_params(3, 5)), ConfigError);  // 3 is not regular for A4
    RegularParams bad = make_params(2, 5);
    bad.eta = 2;
    CHECK_THROWS_AS(build_springer_data(L, bad), ConfigError);

    // finalize validates the raw tables
    GroupoidData G = *fixtures::get("A4", 2).ds.groupoid;
    GroupoidData shuffled = G;
    std::swap(shuffled.simples[1], shuffled.simples[2]);
    CHECK_THROWS_AS(shuffled.finalize(), DataError);
    GroupoidData retarget = G;
    retarget.simples[3].target = (retarget.simples[3].target + 1) % retarget.num_objects();
    CHECK_THROWS_AS(retarget.finalize(), DataError);
    GroupoidData ok = G;
    CHECK_NOTHROW(ok.finalize());
}
