#include "springer/garside.hpp"

#include <algorithm>
#include <unordered_map>

#include "springer/errors.hpp"

namespace springer {

std::size_t MorphismHash::operator()(const Morphism& m) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](long long v) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(m.src);
    mix(m.k);
    for (int s : m.f) mix(s);
    return h;
}

Garside::Garside(std::shared_ptr<const GroupoidData> g) : G_(std::move(g)) {
    const GroupoidData& G = *G_;
    delta_len_ = G.simples[G.delta_of[0]].length;
    // phi has finite order; on objects it is enough to know the order of each orbit
    phi_order_.assign(G.num_objects(), 0);
    for (int o = 0; o < G.num_objects(); ++o) {
        int x = G.phi_obj[o], n = 1;
        while (x != o) x = G.phi_obj[x], ++n;
        phi_order_[o] = n;
    }
}

int Garside::phi_obj_pow(int obj, int k) const {
    const GroupoidData& G = *G_;
    if (k >= 0)
        while (k--) obj = G.phi_obj[obj];
    else
        while (k++) obj = G.phi_inv_obj[obj];
    return obj;
}

int Garside::phi_simple_pow(int s, int k) const {
    const GroupoidData& G = *G_;
    if (k >= 0)
        while (k--) s = G.phi_simple[s];
    else
        while (k++) s = G.phi_inv_simple[s];
    return s;
}

Morphism Garside::phi_pow(const Morphism& x, int k) const {
    Morphism r{phi_obj_pow(x.src, k), x.k, x.f};
    for (int& s : r.f) s = phi_simple_pow(s, k);
    return r;
}

Morphism Garside::from_simple(int s) const {
    const GroupoidData& G = *G_;
    int src = G.simples[s].source;
    if (G.is_identity(s)) return identity(src);
    if (G.is_delta(s)) return delta_power(src, 1);
    return {src, 0, {s}};
}

// s^-1 = Delta^-1 . left_complement(s), starting at target(s)
Morphism Garside::simple_inverse(int s) const {
    const GroupoidData& G = *G_;
    Morphism r = delta_power(G.simples[s].target, -1);
    return mul_simple(r, G.left_complement[s]);
}

Morphism Garside::from_word(const std::vector<std::pair<int, bool>>& word) const {
    if (word.empty()) throw ContractViolation("empty word");
    const GroupoidData& G = *G_;
    for (auto [s, inv] : word)
        if (s < 0 || s >= G.num_simples()) throw ContractViolation("simple index out of range");
    Morphism r = word[0].second ? simple_inverse(word[0].first) : from_simple(word[0].first);
    for (std::size_t i = 1; i < word.size(); ++i) {
        auto [s, inv] = word[i];
        if (inv)
            r = mul(r, simple_inverse(s));
        else
            r = mul_simple(r, s);
    }
    return r;
}

int Garside::target(const Morphism& x) const {
    const GroupoidData& G = *G_;
    if (!x.f.empty()) return G.simples[x.f.back()].target;
    return phi_obj_pow(x.src, x.k);
}

Morphism Garside::mul_simple(Morphism x, int t) const {
    const GroupoidData& G = *G_;
    if (target(x) != G.simples[t].source) throw ContractViolation("morphisms are not composable");
    if (G.is_identity(t)) return x;
    if (G.is_delta(t)) {
        x.k += 1;
        for (int& s : x.f) s = G.phi_simple[s];
        return x;
    }
    auto& f = x.f;
    f.push_back(t);
    for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i) {
        int m = G.simple_meet(G.complement[f[i]], f[i + 1]);
        if (G.is_identity(m)) break;
        int a = G.compose_simples(f[i], m);
        int b = G.left_quotient(m, f[i + 1]);
        f[i] = a;
        f[i + 1] = b;
    }
    std::size_t lead = 0;
    while (lead < f.size() && G.is_delta(f[lead])) ++lead;
    if (lead) {
        x.k += static_cast<int>(lead);
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    f.erase(std::remove_if(f.begin(), f.end(), [&G](int s) { return G.is_identity(s); }), f.end());
    return x;
}

Morphism Garside::mul(const Morphism& x, const Morphism& y) const {
    if (target(x) != y.src) throw ContractViolation("morphisms are not composable");
    // P1 Delta^k = Delta^k phi^k(P1)
    Morphism r{x.src, x.k + y.k, x.f};
    if (y.k != 0)
        for (int& s : r.f) s = phi_simple_pow(s, y.k);
    for (int s : y.f) r = mul_simple(std::move(r), s);
    return r;
}

Morphism Garside::inverse(const Morphism& x) const {
    Morphism r = identity(target(x));
    for (auto it = x.f.rbegin(); it != x.f.rend(); ++it) r = mul(r, simple_inverse(*it));
    return mul(r, delta_power(target(r), -x.k));
}

Morphism Garside::power(const Morphism& x, int m) const {
    if (!is_endo(x)) throw ContractViolation("power of a non-endomorphism");
    Morphism base = m >= 0 ? x : inverse(x);
    Morphism r = identity(x.src);
    for (int i = 0; i < std::abs(m); ++i) r = mul(r, base);
    return r;
}

Morphism Garside::conj(const Morphism& x, const Morphism& g) const {
    if (!is_endo(x)) throw ContractViolation("conjugating a non-endomorphism");
    if (g.src != x.src) throw ContractViolation("conjugator does not start at the base object");
    return mul(mul(inverse(g), x), g);
}

bool Garside::commute(const Morphism& x, const Morphism& y) const {
    if (x.src != y.src || !is_endo(x) || !is_endo(y)) throw ContractViolation("commute needs endomorphisms at one object");
    return mul(x, y) == mul(y, x);
}

std::vector<int> Garside::expand(const Morphism& x) const {
    if (!x.positive()) throw ContractViolation("expand of a non-positive morphism");
    const GroupoidData& G = *G_;
    std::vector<int> out;
    int o = x.src;
    for (int i = 0; i < x.k; ++i) {
        out.push_back(G.delta_of[o]);
        o = G.phi_obj[o];
    }
    out.insert(out.end(), x.f.begin(), x.f.end());
    return out;
}

int Garside::length(const Morphism& x) const {
    const GroupoidData& G = *G_;
    int l = x.k * delta_len_;
    for (int s : x.f) l += G.simples[s].length;
    return l;
}

bool Garside::left_weighted(const Morphism& x) const {
    const GroupoidData& G = *G_;
    for (std::size_t i = 0; i < x.f.size(); ++i) {
        if (G.is_identity(x.f[i]) || G.is_delta(x.f[i])) return false;
        if (i + 1 < x.f.size() && !G.is_identity(G.simple_meet(G.complement[x.f[i]], x.f[i + 1]))) return false;
    }
    return true;
}

bool Garside::pos_divides(const Morphism& x, const Morphism& y) const {
    if (x.src != y.src) throw ContractViolation("prefix test needs a common source");
    return mul(inverse(x), y).positive();
}

int Garside::head(const Morphism& x) const {
    const GroupoidData& G = *G_;
    if (!x.positive()) throw ContractViolation("head of a non-positive morphism");
    if (x.k > 0) return G.delta_of[x.src];
    if (!x.f.empty()) return x.f[0];
    return G.identity_of[x.src];
}

Morphism Garside::pos_meet(Morphism x, Morphism y) const {
    if (x.src != y.src) throw ContractViolation("meet needs a common source");
    if (!x.positive() || !y.positive()) throw ContractViolation("meet of non-positive morphisms");
    const GroupoidData& G = *G_;
    Morphism r = identity(x.src);
    int m = std::min(x.k, y.k);
    if (m > 0) {
        r = delta_power(x.src, m);
        int o = phi_obj_pow(x.src, m);
        x.src = y.src = o;
        x.k -= m;
        y.k -= m;
    }
    for (;;) {
        int h = G.simple_meet(head(x), head(y));
        if (G.is_identity(h)) break;
        r = mul_simple(r, h);
        Morphism hi = simple_inverse(h);
        x = mul(hi, x);
        y = mul(hi, y);
    }
    return r;
}

Morphism Garside::right_complement(const Morphism& x, const Morphism& y) const {
    if (x.src != y.src) throw ContractViolation("complement needs a common source");
    const GroupoidData& G = *G_;
    std::vector<int> xs = expand(x), ys = expand(y);
    Morphism out = identity(target(x));
    for (int t : ys) {
        for (int& s : xs) {
            int nt = G.right_complement(s, t);
            s = G.right_complement(t, s);
            t = nt;
        }
        out = mul_simple(out, t);
    }
    return out;
}

Morphism Garside::pos_join(const Morphism& x, const Morphism& y) const {
    return mul(x, right_complement(x, y));
}

// x -> Delta^N x^-1 reverses the suffix order into the prefix order
bool Garside::pos_left_divides(const Morphism& x, const Morphism& y) const {
    if (target(x) != target(y)) throw ContractViolation("suffix test needs a common target");
    return mul(y, inverse(x)).positive();
}

Morphism Garside::pos_left_meet(const Morphism& x, const Morphism& y) const {
    if (target(x) != target(y)) throw ContractViolation("left meet needs a common target");
    int N = std::max(x.sup(), y.sup());
    int w = phi_obj_pow(target(x), -N);
    Morphism D = delta_power(w, N);
    Morphism m = pos_join(mul(D, inverse(x)), mul(D, inverse(y)));
    return mul(inverse(m), D);
}

Morphism Garside::pos_left_join(const Morphism& x, const Morphism& y) const {
    if (target(x) != target(y)) throw ContractViolation("left join needs a common target");
    int N = std::max(x.sup(), y.sup());
    int w = phi_obj_pow(target(x), -N);
    Morphism D = delta_power(w, N);
    Morphism m = pos_meet(mul(D, inverse(x)), mul(D, inverse(y)));
    return mul(inverse(m), D);
}

Fraction Garside::reduce_fraction(const Morphism& a, const Morphism& b) const {
    if (a.src != b.src) throw ContractViolation("fraction parts need a common source");
    Morphism g = pos_meet(a, b);
    Morphism gi = inverse(g);
    return {mul(gi, a), mul(gi, b)};
}

Fraction Garside::to_fraction(const Morphism& x) const {
    if (x.k >= 0) return {identity(x.src), x};
    int w = phi_obj_pow(x.src, x.k);
    return reduce_fraction(delta_power(w, -x.k), Morphism{w, 0, x.f});
}

Morphism Garside::swap(const Morphism& x, Morphism* conjugator) const {
    if (!is_endo(x)) throw ContractViolation("swap of a non-endomorphism");
    Fraction fr = to_fraction(x);
    Morphism fi = inverse(fr.den);
    if (conjugator) *conjugator = fi;
    return mul(fr.num, fi);
}

RecurrentOrbit Garside::recurrent_orbit(const Morphism& x) const {
    if (!is_endo(x)) throw ContractViolation("recurrent orbit of a non-endomorphism");
    std::unordered_map<Morphism, int, MorphismHash> seen;
    std::vector<Morphism> seq{x}, cum{identity(x.src)}, step;
    seen.emplace(x, 0);
    const long long cap = 10LL * (x.sup() - x.inf() + 1) * G_->num_simples();
    for (long long it = 0;; ++it) {
        if (it > cap) throw InternalError("swap orbit did not close within the safety cap");
        Morphism c;
        Morphism y = swap(seq.back(), &c);
        step.push_back(c);
        auto [pos, fresh] = seen.emplace(y, static_cast<int>(seq.size()));
        if (!fresh) {
            int j = pos->second;
            RecurrentOrbit r;
            r.conjugator = cum[j];
            r.y = seq[j];
            r.cycle.assign(seq.begin() + j, seq.end());
            r.steps.assign(step.begin() + j, step.end());
            return r;
        }
        cum.push_back(mul(cum.back(), c));
        seq.push_back(std::move(y));
    }
}

bool Garside::is_recurrent(const Morphism& x) const {
    RecurrentOrbit r = recurrent_orbit(x);
    return r.y == x;
}

Morphism Garside::transport(const Morphism& y, const Morphism& alpha, const Morphism& z) const {
    if (!alpha.positive()) throw ContractViolation("transport needs a positive conjugator");
    if (conj(y, alpha) != z) throw ContractViolation("alpha does not conjugate y to z");
    Fraction fy = to_fraction(y), fz = to_fraction(z);
    Morphism a1 = mul(mul(fy.den, alpha), inverse(fz.den));
    Morphism a2 = mul(mul(fy.num, alpha), inverse(fz.num));
    if (a1 != a2 || !a1.positive() || conj(swap(y), a1) != swap(z)) throw InternalError("transport identity failed");
    return a1;
}

Morphism Garside::rho(int atom, const Morphism& x, std::vector<Morphism>* prefixes) const {
    const GroupoidData& G = *G_;
    if (!x.positive() || !is_endo(x)) throw ContractViolation("rho needs a positive endomorphism");
    if (!G.is_atom(atom) || G.simples[atom].source != x.src) throw ContractViolation("rho needs an atom at the base object");
    Morphism c = from_simple(atom);
    if (prefixes) prefixes->push_back(c);
    for (;;) {
        Morphism nc = pos_join(c, right_complement(x, c));
        if (nc == c) return c;
        c = std::move(nc);
        if (prefixes) prefixes->push_back(c);
    }
}

std::vector<Morphism> Garside::minimal_positive_conjugators(const Morphism& x) const {
    std::vector<Morphism> all;
    for (int a : G_->atoms_of[x.src]) {
        Morphism r = rho(a, x);
        if (std::find(all.begin(), all.end(), r) == all.end()) all.push_back(std::move(r));
    }
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < all.size() && minimal; ++j)
            if (i != j && pos_divides(all[j], all[i])) minimal = false;
        if (minimal) out.push_back(all[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConjugacyGraph Garside::positive_conjugates_graph(const Morphism& x, std::size_t max_vertices) const {
    Morphism start = x;
    if (!start.positive()) {
        start = recurrent_orbit(x).y;
        if (!start.positive()) throw ContractViolation("element is not conjugate to a positive one");
    }
    ConjugacyGraph g;
    std::unordered_map<Morphism, int, MorphismHash> id;
    id.emplace(start, 0);
    g.vertices.push_back(start);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        Morphism v = g.vertices[i];
        for (Morphism& r : minimal_positive_conjugators(v)) {
            Morphism w = conj(v, r);
            auto [it, fresh] = id.emplace(w, static_cast<int>(g.vertices.size()));
            if (fresh) {
                if (g.vertices.size() >= max_vertices) {
                    g.truncated = true;
                    id.erase(it);
                    continue;
                }
                g.vertices.push_back(w);
            }
            g.edges.push_back({static_cast<int>(i), it->second, std::move(r)});
        }
    }
    return g;
}

}  // namespace springer
