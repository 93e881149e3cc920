#include "springer/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "springer/errors.hpp"

namespace springer {

Parabolics::Parabolics(std::shared_ptr<const Garside> engine) : E_(std::move(engine)), G_(E_->data()) {
    const IntervalLattice& L = *G_.lattice;
    admissible_flag_.assign(L.size(), 0);
    for (const auto& T : G_.tables)
        for (int a : T.divs) admissible_flag_[a] = 1;
    for (int i = 0; i < L.size(); ++i)
        if (admissible_flag_[i]) admissible_.push_back(i);
}

bool Parabolics::is_admissible(int beta) const {
    return beta >= 0 && beta < static_cast<int>(admissible_flag_.size()) && admissible_flag_[beta];
}

std::vector<int> Parabolics::objects_of(int beta) const {
    std::vector<int> out;
    if (!is_admissible(beta)) return out;
    for (int o = 0; o < G_.num_objects(); ++o)
        if (G_.lattice->divides(beta, G_.objects[o])) out.push_back(o);
    return out;
}

int Parabolics::delta_beta(int beta, int obj) const {
    const IntervalLattice& L = *G_.lattice;
    int u = G_.objects[obj];
    if (!L.divides(beta, u)) return -1;
    return G_.find_simple(obj, L.right_div(u, beta));
}

bool Parabolics::in_S(int beta, int s) const { return G_.lattice->divides(beta, G_.simples[s].b); }

static int as_simple(const Garside& E, const Morphism& m) {
    const GroupoidData& G = E.data();
    if (m.k == 0 && m.f.empty()) return G.identity_of[m.src];
    if (m.k == 0 && m.f.size() == 1) return m.f[0];
    if (m.k == 1 && m.f.empty()) return G.delta_of[m.src];
    return -1;
}

StandardParabolic Parabolics::build_standard(int beta) const {
    if (!is_admissible(beta)) throw ConfigError("beta is not admissible");
    const Garside& E = *E_;
    StandardParabolic P;
    P.beta = beta;
    P.objects = objects_of(beta);
    for (int o : P.objects) {
        int d = delta_beta(beta, o);
        P.delta[o] = d;
        P.phi_obj[o] = G_.simples[d].target;
        for (int s = G_.first_simple[o]; s < G_.first_simple[o + 1]; ++s)
            if (in_S(beta, s)) P.simples.push_back(s);
    }
    for (int s : P.simples) {
        const Simple& x = G_.simples[s];
        Morphism m = E.mul(E.mul(E.simple_inverse(P.delta.at(x.source)), E.from_simple(s)),
                           E.from_simple(P.delta.at(x.target)));
        int t = as_simple(E, m);
        if (t < 0 || !in_S(beta, t)) throw InternalError("phi_beta of a simple is not a simple of S_beta");
        P.phi_simple[s] = t;
    }
    // undirected reachability through S_beta
    std::set<int> seen{P.objects.front()};
    std::vector<int> stack{P.objects.front()};
    std::map<int, std::vector<int>> adj;
    for (int s : P.simples) {
        adj[G_.simples[s].source].push_back(G_.simples[s].target);
        adj[G_.simples[s].target].push_back(G_.simples[s].source);
    }
    while (!stack.empty()) {
        int o = stack.back();
        stack.pop_back();
        for (int v : adj[o])
            if (seen.insert(v).second) stack.push_back(v);
    }
    P.connected = seen.size() == P.objects.size();
    return P;
}

bool Parabolics::contains(int beta, const Morphism& x) const {
    if (!is_admissible(beta)) return false;
    Fraction fr = E_->to_fraction(x);
    for (const Morphism* part : {&fr.den, &fr.num}) {
        if (!G_.lattice->divides(beta, G_.objects[part->src])) return false;
        if (part->k > 0 && beta != 0) return false;
        for (int s : part->f)
            if (!in_S(beta, s)) return false;
    }
    return true;
}

int Parabolics::scpc(const Morphism& x) const {
    const IntervalLattice& L = *G_.lattice;
    Fraction fr = E_->to_fraction(x);
    int beta = -1;
    auto fold = [&](int b) { beta = beta < 0 ? b : L.meet(beta, b); };
    for (const Morphism* part : {&fr.den, &fr.num}) {
        if (part->k > 0) fold(0);
        for (int s : part->f) fold(G_.simples[s].b);
    }
    if (beta < 0) beta = G_.objects[x.src];
    return beta;
}

int Parabolics::intersect_standard(int b1, int b2) const {
    const IntervalLattice& L = *G_.lattice;
    for (int u : G_.objects)
        if (L.divides(b1, u) && L.divides(b2, u)) return L.join(b1, b2);
    return -1;
}

Ribbon Parabolics::ribbon(int beta, int s) const {
    const IntervalLattice& L = *G_.lattice;
    if (!L.divides(s, beta)) throw ContractViolation("ribbon needs s <= beta");
    Ribbon r;
    r.beta = beta;
    r.s = s;
    r.beta2 = L.mul(L.left_div(s, beta), G_.conj_eta[s]);
    if (r.beta2 < 0 || !is_admissible(r.beta2)) throw InternalError("ribbon image is not admissible");
    for (int o : objects_of(beta)) {
        int sim = G_.find_simple(o, s);
        if (sim < 0) throw InternalError("ribbon simple missing");
        r.obj_map[o] = G_.simples[sim].target;
    }
    const GroupElement& g = L.elements[s];
    for (int o : objects_of(beta))
        for (int t = G_.first_simple[o]; t < G_.first_simple[o + 1]; ++t) {
            if (!in_S(beta, t)) continue;
            const Simple& x = G_.simples[t];
            int img = G_.find_simple(r.obj_map.at(o), L.conj(x.a, g));
            int b2 = L.mul(L.left_div(s, x.b), G_.conj_eta[s]);
            if (img < 0 || G_.simples[img].b != b2) throw InternalError("ribbon does not map simples to simples");
            r.simple_map[t] = img;
        }
    return r;
}

namespace {
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};
}  // namespace

static int ribbon_target(const GroupoidData& G, int beta, int s) {
    const IntervalLattice& L = *G.lattice;
    return L.mul(L.left_div(s, beta), G.conj_eta[s]);
}

std::vector<std::vector<int>> Parabolics::ribbon_classes() const {
    const IntervalLattice& L = *G_.lattice;
    UnionFind uf(L.size());
    for (int beta : admissible_)
        for (int s : L.divisors(beta))
            if (is_admissible(s)) uf.unite(beta, ribbon_target(G_, beta, s));
    std::map<int, std::vector<int>> cls;
    for (int beta : admissible_) cls[uf.find(beta)].push_back(beta);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : cls) out.push_back(v);
    return out;
}

int Parabolics::ribbon_class_of(int beta) const {
    auto cls = ribbon_classes();
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (std::binary_search(cls[i].begin(), cls[i].end(), beta)) return static_cast<int>(i);
    return -1;
}

std::vector<std::pair<int, int>> Parabolics::ribbon_path_to(int beta, int u0_obj) const {
    const IntervalLattice& L = *G_.lattice;
    const int u0 = G_.objects[u0_obj];
    std::map<int, std::pair<int, int>> parent{{beta, {-1, -1}}};
    std::queue<int> q;
    q.push(beta);
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        if (L.divides(b, u0)) {
            std::vector<std::pair<int, int>> path;
            for (int x = b; parent.at(x).first >= 0; x = parent.at(x).first) path.push_back(parent.at(x));
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int s : L.divisors(b)) {
            if (!is_admissible(s)) continue;
            int b2 = ribbon_target(G_, b, s);
            if (parent.emplace(b2, std::make_pair(b, s)).second) q.push(b2);
        }
    }
    throw InternalError("no ribbon path reaches the reference object");
}

std::vector<int> Parabolics::ribbon_closure_from(int u0_obj) const {
    const IntervalLattice& L = *G_.lattice;
    std::set<int> seen;
    std::queue<int> q;
    for (int b : admissible_)
        if (L.divides(b, G_.objects[u0_obj])) seen.insert(b), q.push(b);
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        for (int s : L.divisors(b)) {
            if (!is_admissible(s)) continue;
            int b2 = ribbon_target(G_, b, s);
            if (seen.insert(b2).second) q.push(b2);
        }
    }
    return {seen.begin(), seen.end()};
}

SundialLadder Parabolics::sundial(int beta) const {
    const IntervalLattice& L = *G_.lattice;
    std::vector<int> inner, outer;  // A_beta, A^beta
    for (int o : objects_of(beta))
        for (int s : G_.atoms_of[o]) (in_S(beta, s) ? inner : outer).push_back(s);
    std::set<int> A;
    std::vector<int> a0;
    for (int s : outer)
        if (L.divides(G_.simples[s].a, beta)) a0.push_back(s), A.insert(s);
    SundialLadder out;
    out.levels.push_back(a0);
    for (;;) {
        std::vector<int> cand;
        for (int s : outer) {
            if (A.count(s)) continue;
            const Simple& x = G_.simples[s];
            bool ok = true;
            for (int sigma : inner) {
                if (G_.simples[sigma].source != x.source) continue;
                int q = G_.right_complement(sigma, s);
                if (G_.simples[q].a == x.a) continue;
                bool divided = false;
                for (int t : G_.atoms_of[G_.simples[q].source])
                    if (A.count(t) && G_.simple_divides(t, q)) {
                        divided = true;
                        break;
                    }
                if (!divided) {
                    ok = false;
                    break;
                }
            }
            if (ok) cand.push_back(s);
        }
        // keep s only if every outside atom with the same first term qualifies too
        std::set<int> cset(cand.begin(), cand.end());
        std::vector<int> next;
        for (int s : cand) {
            bool all = true;
            for (int t : outer)
                if (!A.count(t) && G_.simples[t].a == G_.simples[s].a && !cset.count(t)) all = false;
            if (all) next.push_back(s);
        }
        if (next.empty()) break;
        A.insert(next.begin(), next.end());
        out.levels.push_back(next);
    }
    out.success = A.size() == outer.size();
    return out;
}

std::vector<Morphism> Parabolics::atomic_loops(int obj) const {
    const Garside& E = *E_;
    std::set<Morphism> out;
    for (int a : G_.atoms_of[obj])
        for (int t : G_.atoms_of[G_.simples[a].target])
            if (G_.simples[t].target == obj) out.insert(E.mul_simple(E.from_simple(a), t));
    return {out.begin(), out.end()};
}

Morphism Parabolics::delta_beta_power(int beta, int obj, int e) const {
    const Garside& E = *E_;
    Morphism m = E.identity(obj);
    int cur = obj;
    for (int i = 0; i < e; ++i) {
        int d = delta_beta(beta, cur);
        if (d < 0) throw ContractViolation("object outside the parabolic");
        m = E.mul_simple(m, d);
        cur = G_.simples[d].target;
    }
    return m;
}

bool Parabolics::phi_beta_power_trivial(int beta, int e) const {
    StandardParabolic P = build_standard(beta);
    for (int o : P.objects) {
        int x = o;
        for (int i = 0; i < e; ++i) x = P.phi_obj.at(x);
        if (x != o) return false;
    }
    for (int s : P.simples) {
        int x = s;
        for (int i = 0; i < e; ++i) x = P.phi_simple.at(x);
        if (x != s) return false;
    }
    return true;
}

ZElement Parabolics::z_element(int beta, int obj, bool full) const {
    const Garside& E = *E_;
    if (delta_beta(beta, obj) < 0) throw ContractViolation("object outside the parabolic");
    StandardParabolic P = build_standard(beta);
    // order of phi_beta as a permutation of simples bounds e
    long long order = 1;
    std::set<int> done;
    for (int s : P.simples) {
        if (done.count(s)) continue;
        long long len = 0;
        int x = s;
        do {
            done.insert(x);
            x = P.phi_simple.at(x);
            ++len;
        } while (x != s);
        order = std::lcm(order, len);
    }
    std::vector<Morphism> loops;
    for (Morphism& m : atomic_loops(obj))
        if (contains(beta, m)) loops.push_back(std::move(m));
    const long long cap = 4 * order;
    for (int e = 1; e <= cap; ++e) {
        int x = obj;
        for (int i = 0; i < e; ++i) x = P.phi_obj.at(x);
        if (x != obj) continue;
        Morphism z = delta_beta_power(beta, obj, e);
        bool central = true;
        for (const Morphism& l : loops)
            if (!E.commute(z, l)) {
                central = false;
                break;
            }
        if (central && full) {
            for (int s : P.simples) {
                const Simple& sx = G_.simples[s];
                if (sx.source != obj) continue;
                if (E.mul(E.from_simple(s), delta_beta_power(beta, sx.target, e)) != E.mul(z, E.from_simple(s))) {
                    central = false;
                    break;
                }
            }
        }
        if (central) return {z, e};
    }
    throw InternalError("no central power of delta_beta below the cap");
}

Morphism Parabolics::z_of_handle(const ParabolicHandle& h) const {
    const Garside& E = *E_;
    Morphism z = z_element(h.beta, h.base).morphism;
    return E.mul(E.mul(h.conjugator, z), E.inverse(h.conjugator));
}

int Parabolics::spc_recurrent(const Morphism& x) const {
    if (!E_->is_recurrent(x)) throw ContractViolation("element is not recurrent");
    return scpc(x);
}

ParabolicHandle Parabolics::pc(const Morphism& x) const {
    RecurrentOrbit r = E_->recurrent_orbit(x);
    return {scpc(r.y), r.y.src, r.conjugator};
}

bool Parabolics::is_standard(const ParabolicHandle& h) const { return z_of_handle(h).positive(); }

int Parabolics::rank(const Morphism& x) const {
    ParabolicHandle h = pc(x);
    const IntervalLattice& L = *G_.lattice;
    return L.length(G_.objects[h.base]) - L.length(h.beta);
}

bool Parabolics::adjacent(const ParabolicHandle& h1, const ParabolicHandle& h2) const {
    if (h1.conjugator.src != h2.conjugator.src) throw ContractViolation("handles seen from different objects");
    Morphism z1 = z_of_handle(h1), z2 = z_of_handle(h2);
    return z1 != z2 && E_->commute(z1, z2);
}

}  // namespace springer
