#include "springer/interval.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "springer/errors.hpp"

namespace springer {

int IntervalLattice::index_of(const GroupElement& g) const { return index_of_key(rs->key(g)); }

int IntervalLattice::index_of_key(std::uint64_t k) const {
    auto it = index_.find(k);
    return it == index_.end() ? -1 : it->second;
}

int IntervalLattice::mul(int i, int j) const { return index_of_key(rs->key_of_product(elements[i], elements[j])); }
int IntervalLattice::left_div(int i, int j) const { return index_of_key(rs->key_of_product(inverses[i], elements[j])); }
int IntervalLattice::right_div(int i, int j) const { return index_of_key(rs->key_of_product(elements[i], inverses[j])); }
int IntervalLattice::inverse_in(int i) const { return index_of(inverses[i]); }

int IntervalLattice::conj(int i, const GroupElement& g) const {
    return index_of(rs->compose(rs->inverse(g), rs->compose(elements[i], g)));
}

bool IntervalLattice::divides(int i, int j) const {
    if (length_of[i] > length_of[j]) return false;
    int q = left_div(i, j);
    return q >= 0 && length_of[i] + length_of[q] == length_of[j];
}

std::vector<int> IntervalLattice::divisors(int i) const {
    std::vector<int> out{i};
    std::unordered_map<int, char> seen{{i, 1}};
    for (std::size_t k = 0; k < out.size(); ++k) {
        int z = out[k];
        for (int t : reflections_below[z]) {
            int y = index_of_key(rs->key_of_product(rs->reflections[t], elements[z]));
            if (seen.emplace(y, 1).second) out.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int IntervalLattice::meet(int i, int j) const {
    if (divides(i, j)) return i;
    if (divides(j, i)) return j;
    std::vector<int> a = divisors(i), b = divisors(j);
    int best = 0;
    std::size_t p = 0, q = 0;
    while (p < a.size() && q < b.size()) {
        if (a[p] == b[q]) {
            best = a[p];
            ++p;
            ++q;
        } else if (a[p] < b[q]) {
            ++p;
        } else {
            ++q;
        }
    }
    return best;
}

int IntervalLattice::join(int i, int j) const {
    if (divides(i, j)) return j;
    if (divides(j, i)) return i;
    // x -> x^-1 c reverses the order
    int m = meet(kreweras(i), kreweras(j));
    return right_div(top(), m);
}

std::vector<Factorization> IntervalLattice::factorizations(int w, int m) const {
    if (m < 1) throw ContractViolation("factorizations: arity must be positive");
    std::vector<Factorization> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int k) {
        if (k == 1) {
            cur.push_back(rest);
            out.push_back({cur, w});
            cur.pop_back();
            return;
        }
        for (int x : divisors(rest)) {
            cur.push_back(x);
            rec(left_div(x, rest), k - 1);
            cur.pop_back();
        }
    };
    rec(w, m);
    return out;
}

Factorization IntervalLattice::tau(const Factorization& f) const {
    if (f.product != top()) throw ContractViolation("tau: factorization is not of c");
    Factorization g;
    g.product = f.product;
    g.parts.assign(f.parts.begin() + 1, f.parts.end());
    g.parts.push_back(conj(f.parts[0], coxeter));
    return g;
}

std::vector<Factorization> IntervalLattice::tau_fixed(const std::vector<Factorization>& fs, int n) const {
    if (n < 1) throw ContractViolation("tau_fixed: n must be positive");
    std::vector<Factorization> out;
    for (const auto& f : fs) {
        Factorization g = f;
        for (int k = 0; k < n; ++k) g = tau(g);
        if (g == f) out.push_back(f);
    }
    return out;
}

std::vector<Factorization> IntervalLattice::enumerate_tau_fixed(int m, int n) const {
    if (m < 1 || n < 1) throw ContractViolation("enumerate_tau_fixed: m, n must be positive");
    // tau^n(x)_k = x_{src[k]}^{c^{ex[k]}}
    std::vector<int> src(m), ex(m, 0);
    for (int k = 0; k < m; ++k) src[k] = k;
    for (int step = 0; step < n; ++step) {
        int s0 = src[0], e0 = ex[0];
        for (int k = 0; k + 1 < m; ++k) {
            src[k] = src[k + 1];
            ex[k] = ex[k + 1];
        }
        src[m - 1] = s0;
        ex[m - 1] = e0 + 1;
    }
    std::unordered_map<int, GroupElement> cpow;
    auto cp = [&](int e) -> const GroupElement& {
        auto it = cpow.find(e);
        if (it == cpow.end()) it = cpow.emplace(e, rs->power(coxeter, e)).first;
        return it->second;
    };
    std::vector<Factorization> out;
    std::vector<int> cur(m, -1);
    auto forced = [&](int k) -> int {
        // value of x_k implied by an already assigned component, or -2 if free
        if (src[k] < k) return conj(cur[src[k]], cp(ex[k]));
        if (src[k] == k) return ex[k] == 0 ? -2 : -3;  // x = x^{c^e}: filter later
        for (int j = 0; j < k; ++j)
            if (src[j] == k) return conj(cur[j], cp(-ex[j]));
        return -2;
    };
    std::function<void(int, int)> rec = [&](int rest, int k) {
        int f = forced(k);
        auto place = [&](int x) {
            if (x < 0 || !divides(x, rest)) return;
            if (k == m - 1 && x != rest) return;
            cur[k] = x;
            if (k == m - 1) {
                for (int j = 0; j < m; ++j)
                    if (cur[j] != conj(cur[src[j]], cp(ex[j]))) return;
                out.push_back({cur, top()});
            } else {
                rec(left_div(x, rest), k + 1);
            }
        };
        if (f >= 0 || f == -1) {
            place(f);
        } else if (k == m - 1) {
            place(rest);
        } else {
            for (int x : divisors(rest)) place(x);
        }
    };
    rec(top(), 0);
    std::sort(out.begin(), out.end());
    return out;
}

Factorization IntervalLattice::hurwitz_move(const Factorization& f, int i, int direction) const {
    int m = f.arity();
    if (i < 1 || i >= m) throw ContractViolation("hurwitz_move: position out of range");
    Factorization g = f;
    int a = f.parts[i - 1], b = f.parts[i];
    const RootSystem& R = *rs;
    if (direction > 0) {
        g.parts[i - 1] = b;
        g.parts[i] = index_of(R.conj(elements[a], elements[b]));
    } else {
        g.parts[i - 1] = index_of(R.conj(elements[b], inverses[a]));
        g.parts[i] = a;
    }
    int p1 = mul(f.parts[i - 1], f.parts[i]);
    int p2 = mul(g.parts[i - 1], g.parts[i]);
    if (g.parts[i - 1] < 0 || g.parts[i] < 0 || p1 != p2)
        throw InternalError("hurwitz_move: product not preserved");
    return g;
}

void IntervalLattice::finalize() {
    index_.clear();
    index_.reserve(elements.size() * 2);
    inverses.resize(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        elements[i].cached_length = length_of[i];
        inverses[i] = rs->inverse(elements[i]);
        index_[rs->key(elements[i])] = static_cast<int>(i);
    }
    reflections_below.assign(elements.size(), {});
    for (std::size_t y = 0; y < elements.size(); ++y) {
        if (length_of[y] == 0) continue;
        for (std::size_t t = 0; t < rs->reflections.size(); ++t) {
            int z = index_of_key(rs->key_of_product(rs->reflections[t], elements[y]));
            if (z >= 0 && length_of[z] == length_of[y] - 1) reflections_below[y].push_back(static_cast<int>(t));
        }
    }
}

IntervalLattice build_interval(std::shared_ptr<const RootSystem> rs, const GroupElement& c, int jobs) {
    const RootSystem& R = *rs;
    int n = R.reflection_length(c);
    if (n != R.rank) throw ContractViolation("build_interval: c is not a Coxeter element");
    if (jobs < 1) jobs = 1;

    IntervalLattice L;
    L.rs = rs;
    L.coxeter = c;
    L.rank = n;
    std::vector<GroupElement> level{R.identity()};
    std::vector<GroupElement> all = level;
    std::vector<int> lens{0};
    for (int k = 0; k < n; ++k) {
        // distinct candidates x*r, first producer wins
        struct Cand {
            std::uint64_t key;
            int x, r;
        };
        std::vector<Cand> cand;
        cand.reserve(level.size() * R.reflections.size());
        for (std::size_t x = 0; x < level.size(); ++x)
            for (std::size_t r = 0; r < R.reflections.size(); ++r)
                cand.push_back({R.key_of_product(level[x], R.reflections[r]), static_cast<int>(x), static_cast<int>(r)});
        std::stable_sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) { return a.key < b.key; });
        cand.erase(std::unique(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) { return a.key == b.key; }),
                   cand.end());
        std::vector<GroupElement> rest(level.size());
        for (std::size_t x = 0; x < level.size(); ++x) rest[x] = R.compose(R.inverse(level[x]), c);
        std::vector<char> ok(cand.size(), 0);
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= cand.size()) break;
                auto [key, x, r] = cand[i];
                // x r <= c  iff  l(r x^-1 c) = n - k - 1
                if (R.length_of_product(R.reflections[r], rest[x]) == n - k - 1) ok[i] = 1;
            }
        };
        if (jobs == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        std::vector<GroupElement> next_level;
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (ok[i]) {
                auto [key, x, r] = cand[i];
                next_level.push_back(R.compose(level[x], R.reflections[r]));
            }
        std::sort(next_level.begin(), next_level.end());
        for (auto& g : next_level) {
            g.cached_length = k + 1;
            all.push_back(g);
            lens.push_back(k + 1);
        }
        level = std::move(next_level);
    }
    L.elements = std::move(all);
    L.length_of = std::move(lens);
    L.finalize();
    if (L.elements.back().perm != c.perm) throw InternalError("build_interval: top element is not c");
    return L;
}

long long catalan_number(const RootSystem& rs) {
    // exact: multiply all numerators, divide by all denominators at the end
    __int128 num = 1, den = 1;
    for (int d : rs.degrees) {
        num *= d + rs.coxeter_number;
        den *= d;
    }
    return static_cast<long long>(num / den);
}

}  // namespace springer
