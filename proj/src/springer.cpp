#include "springer/springer.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "springer/errors.hpp"

namespace springer {

RegularParams make_params(int d, int h) {
    if (d <= 0 || h <= 0) throw ConfigError("d and h must be positive");
    RegularParams r;
    r.d = d;
    r.h = h;
    int g = std::gcd(d, h);
    r.p = d / g;
    r.q = h / g;
    r.eta = 0;
    for (int e = 1; e <= r.q; ++e)
        if ((static_cast<long long>(r.p) * e) % r.q == 1 % r.q) {
            r.eta = e;
            break;
        }
    if (r.eta == 0) throw ConfigError("no eta with p*eta = 1 mod q");
    return r;
}

int GroupoidData::find_simple(int obj, int a) const {
    const auto& dv = tables[obj].divs;
    auto it = std::lower_bound(dv.begin(), dv.end(), a);
    if (it == dv.end() || *it != a) return -1;
    return first_simple[obj] + static_cast<int>(it - dv.begin());
}

static void same_source(const GroupoidData& g, int s, int t) {
    if (g.simples[s].source != g.simples[t].source) throw ContractViolation("simples with different sources");
}

bool GroupoidData::simple_divides(int s, int t) const {
    same_source(*this, s, t);
    const auto& T = tables[simples[s].source];
    return T.divides[local(s) * T.size() + local(t)];
}

int GroupoidData::simple_meet(int s, int t) const {
    same_source(*this, s, t);
    int o = simples[s].source;
    const auto& T = tables[o];
    return simple_at(o, T.meet[local(s) * T.size() + local(t)]);
}

int GroupoidData::simple_join(int s, int t) const {
    same_source(*this, s, t);
    int o = simples[s].source;
    const auto& T = tables[o];
    return simple_at(o, T.join[local(s) * T.size() + local(t)]);
}

int GroupoidData::compose_simples(int s, int t) const {
    if (simples[s].target != simples[t].source) throw ContractViolation("simples are not composable");
    return comp_[s][local(t)];
}

int GroupoidData::left_quotient(int s, int t) const {
    same_source(*this, s, t);
    return quot_[s][local(t)];
}

static void same_target(const GroupoidData& g, int s, int t) {
    if (g.simples[s].target != g.simples[t].target) throw ContractViolation("simples with different targets");
}

// t is a suffix of s iff the left complement of s divides that of t
bool GroupoidData::simple_left_divides(int t, int s) const {
    same_target(*this, s, t);
    return simple_divides(left_complement[s], left_complement[t]);
}

int GroupoidData::simple_left_meet(int s, int t) const {
    same_target(*this, s, t);
    return complement[simple_join(left_complement[s], left_complement[t])];
}

int GroupoidData::simple_left_join(int s, int t) const {
    same_target(*this, s, t);
    return complement[simple_meet(left_complement[s], left_complement[t])];
}

void GroupoidData::finalize() {
    const IntervalLattice& L = *lattice;
    const int nobj = num_objects();
    object_of.assign(L.size(), -1);
    for (int o = 0; o < nobj; ++o) object_of[objects[o]] = o;

    first_simple.assign(nobj + 1, 0);
    tables.assign(nobj, {});
    for (std::size_t s = 0; s < simples.size(); ++s) {
        const Simple& x = simples[s];
        if (x.source < 0 || x.source >= nobj) throw DataError("simple with bad source");
        if (s > 0 && x.source < simples[s - 1].source) throw DataError("simples not grouped by source");
        tables[x.source].divs.push_back(x.a);
        first_simple[x.source + 1]++;
    }
    for (int o = 0; o < nobj; ++o) first_simple[o + 1] += first_simple[o];

    delta_of.assign(nobj, -1);
    identity_of.assign(nobj, -1);
    for (int o = 0; o < nobj; ++o) {
        ObjectTables& T = tables[o];
        T.u = objects[o];
        if (!std::is_sorted(T.divs.begin(), T.divs.end())) throw DataError("simples not sorted");
        const int m = T.size();
        if (m == 0 || T.divs.front() != 0 || T.divs.back() != T.u) throw DataError("object without identity or delta");
        identity_of[o] = first_simple[o];
        delta_of[o] = first_simple[o] + m - 1;
        T.divides.assign(m * m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) T.divides[i * m + j] = L.divides(T.divs[i], T.divs[j]);
        T.meet.assign(m * m, -1);
        T.join.assign(m * m, -1);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                int lo = -1, hi = -1;
                for (int k = 0; k < m; ++k) {
                    if (T.divides[k * m + i] && T.divides[k * m + j] &&
                        (lo < 0 || L.length(T.divs[k]) > L.length(T.divs[lo])))
                        lo = k;
                    if (T.divides[i * m + k] && T.divides[j * m + k] &&
                        (hi < 0 || L.length(T.divs[k]) < L.length(T.divs[hi])))
                        hi = k;
                }
                T.meet[i * m + j] = T.meet[j * m + i] = lo;
                T.join[i * m + j] = T.join[j * m + i] = hi;
            }
    }

    for (std::size_t s = 0; s < simples.size(); ++s) {
        const Simple& x = simples[s];
        int tgt = object_index(L.mul(x.b, conj_eta[x.a]));
        if (tgt != x.target || L.mul(x.a, x.b) != objects[x.source] || x.length != L.length(x.a))
            throw DataError("simple table inconsistent");
    }

    phi_obj.assign(nobj, -1);
    phi_inv_obj.assign(nobj, -1);
    for (int o = 0; o < nobj; ++o) {
        phi_obj[o] = object_index(conj_eta[objects[o]]);
        if (phi_obj[o] < 0) throw DataError("phi does not preserve objects");
        phi_inv_obj[phi_obj[o]] = o;
    }

    const int ns = num_simples();
    phi_simple.assign(ns, -1);
    phi_inv_simple.assign(ns, -1);
    complement.assign(ns, -1);
    left_complement.assign(ns, -1);
    atoms_of.assign(nobj, {});
    for (int s = 0; s < ns; ++s) {
        const Simple& x = simples[s];
        phi_simple[s] = find_simple(phi_obj[x.source], conj_eta[x.a]);
        complement[s] = find_simple(x.target, x.b);
        if (phi_simple[s] < 0 || complement[s] < 0) throw DataError("phi or complement missing");
        phi_inv_simple[phi_simple[s]] = s;
        if (x.length == 1) atoms_of[x.source].push_back(s);
    }
    for (int s = 0; s < ns; ++s) left_complement[s] = phi_inv_simple[complement[s]];

    quot_.assign(ns, {});
    comp_.assign(ns, {});
    for (int s = 0; s < ns; ++s) {
        const Simple& x = simples[s];
        const ObjectTables& S = tables[x.source];
        const ObjectTables& Tg = tables[x.target];
        const int ls = local(s);
        quot_[s].assign(S.size(), -1);
        for (int j = 0; j < S.size(); ++j)
            if (S.divides[ls * S.size() + j]) quot_[s][j] = find_simple(x.target, L.left_div(x.a, S.divs[j]));
        comp_[s].assign(Tg.size(), -1);
        for (int j = 0; j < Tg.size(); ++j)
            if (L.divides(Tg.divs[j], x.b)) comp_[s][j] = find_simple(x.source, L.mul(x.a, Tg.divs[j]));
    }
}

std::shared_ptr<GroupoidData> build_springer_data(std::shared_ptr<const IntervalLattice> lattice,
                                                  const RegularParams& params, int jobs) {
    const IntervalLattice& L = *lattice;
    const RootSystem& R = *L.rs;
    RegularParams check = make_params(params.d, params.h);
    if (check.p != params.p || check.q != params.q || params.h != R.coxeter_number)
        throw ConfigError("inconsistent regular parameters");
    if (params.eta <= 0 || (static_cast<long long>(params.p) * params.eta) % params.q != 1 % params.q)
        throw ConfigError("eta does not satisfy p*eta = 1 mod q");

    auto G = std::make_shared<GroupoidData>();
    G->lattice = lattice;
    G->params = params;

    const GroupElement cq = R.power(L.coxeter, params.q);
    const GroupElement ce = R.power(L.coxeter, params.eta);
    const int N = L.size();
    std::vector<char> fixed(N, 0);
    G->conj_eta.assign(N, -1);

    if (jobs < 1) jobs = 1;
    auto work = [&](int t) {
        for (int i = t; i < N; i += jobs) {
            fixed[i] = L.conj(i, cq) == i;
            G->conj_eta[i] = L.conj(i, ce);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    if (L.rank % params.p == 0) {
        const int len = L.rank / params.p;
        for (int i = 0; i < N; ++i) {
            if (L.length(i) != len || !fixed[i]) continue;
            GroupElement prod = R.identity(), cur = L.elements[i];
            for (int k = 0; k < params.p; ++k) {
                prod = R.compose(prod, cur);
                cur = R.conj(cur, ce);
            }
            if (prod == L.coxeter) G->objects.push_back(i);
        }
    }
    if (G->objects.empty()) throw ConfigError("no objects: d is not regular or eta is wrong");

    for (int o = 0; o < G->num_objects(); ++o) G->object_of.resize(N, -1), G->object_of[G->objects[o]] = o;
    for (int o = 0; o < G->num_objects(); ++o) {
        int u = G->objects[o];
        std::vector<int> dv;
        for (int a : L.divisors(u))
            if (fixed[a]) dv.push_back(a);
        for (int a : dv) {
            Simple s;
            s.a = a;
            s.b = L.left_div(a, u);
            s.source = o;
            s.target = G->object_of[L.mul(s.b, G->conj_eta[a])];
            s.length = L.length(a);
            if (s.target < 0) throw InternalError("simple target is not an object");
            G->simples.push_back(s);
        }
        for (std::size_t i = 0; i < dv.size(); ++i)
            for (std::size_t j = 0; j < dv.size(); ++j)
                if (L.divides(dv[i], dv[j]))
                    G->relations.push_back({dv[i], L.left_div(dv[i], dv[j]), L.left_div(dv[j], u)});
    }
    G->finalize();
    return G;
}

}  // namespace springer
