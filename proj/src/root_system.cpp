#include "springer/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

namespace {

std::string vec_key(const Vec& v) {
    std::string s;
    for (int x : v) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

long long dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

Vec reflect(const Vec& v, const Vec& alpha) {
    long long k = 2 * dot(v, alpha) / dot(alpha, alpha);
    Vec r(v);
    for (std::size_t i = 0; i < v.size(); ++i) r[i] -= static_cast<int>(k * alpha[i]);
    return r;
}

Vec unit(int dim, int i, int scale) {
    Vec v(dim, 0);
    v[i] = scale;
    return v;
}

Vec sum(const Vec& a, const Vec& b, int sb = 1) {
    Vec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += sb * b[i];
    return r;
}

struct Raw {
    int dim = 0, rank = 0, h = 0;
    std::vector<int> degrees;
    std::vector<Vec> roots;
    std::vector<Vec> simple;
};

Raw raw_type(const std::string& t) {
    Raw r;
    if (t.size() == 2 && t[0] == 'A' && t[1] >= '1' && t[1] <= '4') {
        int n = t[1] - '0';
        r.dim = n + 1;
        r.rank = n;
        r.h = n + 1;
        for (int d = 2; d <= n + 1; ++d) r.degrees.push_back(d);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (i != j) r.roots.push_back(sum(unit(r.dim, i, 1), unit(r.dim, j, 1), -1));
        for (int i = 0; i < n; ++i) r.simple.push_back(sum(unit(r.dim, i, 1), unit(r.dim, i + 1, 1), -1));
    } else if (t == "B2") {
        r.dim = 2;
        r.rank = 2;
        r.h = 4;
        r.degrees = {2, 4};
        for (int s : {1, -1}) {
            r.roots.push_back(unit(2, 0, s));
            r.roots.push_back(unit(2, 1, s));
            r.roots.push_back(Vec{s, 1});
            r.roots.push_back(Vec{s, -1});
        }
        r.simple = {Vec{1, -1}, Vec{0, 1}};
    } else if (t == "E8") {
        // coordinates doubled so the half-integer roots stay integral
        r.dim = 8;
        r.rank = 8;
        r.h = 30;
        r.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (int si : {2, -2})
                    for (int sj : {2, -2}) {
                        Vec v(8, 0);
                        v[i] = si;
                        v[j] = sj;
                        r.roots.push_back(v);
                    }
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) % 2) continue;
            Vec v(8);
            for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? -1 : 1;
            r.roots.push_back(v);
        }
        r.simple.push_back(Vec{1, -1, -1, -1, -1, -1, -1, 1});
        r.simple.push_back(sum(unit(8, 0, 2), unit(8, 1, 2)));
        for (int i = 0; i < 6; ++i) r.simple.push_back(sum(unit(8, i + 1, 2), unit(8, i, 2), -1));
    } else if (t == "A1") {
        r.dim = 2;
        r.rank = 1;
        r.h = 2;
        r.degrees = {2};
        r.roots = {Vec{1, -1}, Vec{-1, 1}};
        r.simple = {Vec{1, -1}};
    } else {
        throw ConfigError("unsupported root system type: " + t);
    }
    return r;
}

}  // namespace

int integer_rank(std::vector<std::vector<long long>> m) {
    // Bareiss elimination; intermediate values are minors, products fit in 128 bits
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    long long prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k) {
                __int128 v = static_cast<__int128>(m[r][k]) * m[rank][c] - static_cast<__int128>(m[rank][k]) * m[r][c];
                m[r][k] = static_cast<long long>(v / prev);
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

int RootSystem::root_index(const Vec& v) const {
    auto it = index_of_vec_.find(vec_key(v));
    return it == index_of_vec_.end() ? -1 : it->second;
}

GroupElement RootSystem::identity() const {
    GroupElement e;
    e.perm.resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) e.perm[i] = static_cast<std::uint8_t>(i);
    e.cached_length = 0;
    return e;
}

GroupElement RootSystem::compose(const GroupElement& x, const GroupElement& y) const {
    GroupElement r;
    r.perm.resize(x.perm.size());
    for (std::size_t i = 0; i < x.perm.size(); ++i) r.perm[i] = x.perm[y.perm[i]];
    return r;
}

GroupElement RootSystem::inverse(const GroupElement& x) const {
    GroupElement r;
    r.perm.resize(x.perm.size());
    for (std::size_t i = 0; i < x.perm.size(); ++i) r.perm[x.perm[i]] = static_cast<std::uint8_t>(i);
    r.cached_length = x.cached_length;
    return r;
}

GroupElement RootSystem::power(const GroupElement& x, long long k) const {
    GroupElement base = k < 0 ? inverse(x) : x;
    if (k < 0) k = -k;
    GroupElement r = identity();
    while (k > 0) {
        if (k & 1) r = compose(r, base);
        base = compose(base, base);
        k >>= 1;
    }
    return r;
}

GroupElement RootSystem::conj(const GroupElement& x, const GroupElement& g) const {
    return compose(inverse(g), compose(x, g));
}

GroupElement RootSystem::coxeter_element() const {
    GroupElement c = identity();
    for (int i = 0; i < rank; ++i) c = compose(c, simple_reflection(i));
    return c;
}

int RootSystem::reflection_index_of_root(int root) const { return root_to_reflection_[root]; }

std::uint64_t RootSystem::key(const GroupElement& x) const {
    std::uint64_t k = 0;
    for (int j = 0; j < rank; ++j) k |= static_cast<std::uint64_t>(x.perm[simple[j]]) << (8 * j);
    return k;
}

std::uint64_t RootSystem::key_of_product(const GroupElement& x, const GroupElement& y) const {
    std::uint64_t k = 0;
    for (int j = 0; j < rank; ++j) k |= static_cast<std::uint64_t>(x.perm[y.perm[simple[j]]]) << (8 * j);
    return k;
}

namespace {
int small_rank(long long m[8][8], int n) {
    int rank = 0;
    long long prev = 1;
    for (int c = 0; c < n && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int k = 0; k < n; ++k) std::swap(m[piv][k], m[rank][k]);
        for (int r = rank + 1; r < n; ++r) {
            for (int k = c + 1; k < n; ++k) {
                __int128 v = static_cast<__int128>(m[r][k]) * m[rank][c] - static_cast<__int128>(m[rank][k]) * m[r][c];
                m[r][k] = static_cast<long long>(v / prev);
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}
}  // namespace

int RootSystem::length_from_images(const std::uint8_t* img) const {
    long long m[8][8];
    for (int j = 0; j < rank; ++j) {
        const Vec& col = simple_coords[img[j]];
        for (int i = 0; i < rank; ++i) m[i][j] = col[i] - (i == j ? 1 : 0);
    }
    return small_rank(m, rank);
}

int RootSystem::reflection_length(const GroupElement& w) const {
    if (w.cached_length >= 0) return w.cached_length;
    std::uint8_t img[8];
    for (int j = 0; j < rank; ++j) img[j] = w.perm[simple[j]];
    return length_from_images(img);
}

int RootSystem::length_of_product(const GroupElement& x, const GroupElement& y) const {
    std::uint8_t img[8];
    for (int j = 0; j < rank; ++j) img[j] = x.perm[y.perm[simple[j]]];
    return length_from_images(img);
}

bool RootSystem::divides(const GroupElement& a, const GroupElement& b) const {
    return reflection_length(a) + reflection_length(compose(inverse(a), b)) == reflection_length(b);
}

RootSystem build_root_system(const std::string& type_label) {
    Raw raw = raw_type(type_label);
    RootSystem rs;
    rs.type_label = type_label;
    rs.rank = raw.rank;
    rs.dim = raw.dim;
    rs.coxeter_number = raw.h;
    rs.degrees = raw.degrees;

    // closure of the simple roots under simple reflections, tracking coordinates
    std::map<Vec, Vec> coords;
    std::deque<Vec> queue;
    for (int i = 0; i < raw.rank; ++i) {
        Vec c(raw.rank, 0);
        c[i] = 1;
        coords[raw.simple[i]] = c;
        queue.push_back(raw.simple[i]);
    }
    while (!queue.empty()) {
        Vec b = queue.front();
        queue.pop_front();
        Vec cb = coords[b];
        for (int i = 0; i < raw.rank; ++i) {
            const Vec& a = raw.simple[i];
            long long k = 2 * dot(b, a) / dot(a, a);
            Vec nb = reflect(b, a);
            if (coords.count(nb)) continue;
            Vec nc(cb);
            nc[i] -= static_cast<int>(k);
            coords[nb] = nc;
            queue.push_back(nb);
        }
    }

    std::vector<Vec> roots = raw.roots;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots.size() != coords.size())
        throw InternalError("root list of " + type_label + " does not match the reflection closure");
    rs.roots = roots;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        auto it = coords.find(roots[i]);
        if (it == coords.end()) throw InternalError("root outside reflection closure in " + type_label);
        rs.simple_coords.push_back(it->second);
        rs.index_of_vec_[vec_key(roots[i])] = static_cast<int>(i);
    }
    for (const Vec& s : raw.simple) rs.simple.push_back(rs.root_index(s));
    rs.negation.resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Vec n(roots[i]);
        for (int& x : n) x = -x;
        rs.negation[i] = rs.root_index(n);
    }
    rs.root_to_reflection_.assign(roots.size(), -1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        bool pos = std::all_of(rs.simple_coords[i].begin(), rs.simple_coords[i].end(), [](int x) { return x >= 0; });
        if (!pos) continue;
        rs.root_to_reflection_[i] = static_cast<int>(rs.positive.size());
        rs.positive.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (rs.root_to_reflection_[i] < 0) rs.root_to_reflection_[i] = rs.root_to_reflection_[rs.negation[i]];
    for (int p : rs.positive) {
        GroupElement g;
        g.perm.resize(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i)
            g.perm[i] = static_cast<std::uint8_t>(rs.root_index(reflect(roots[i], roots[p])));
        g.cached_length = 1;
        rs.reflection_of_key[rs.key(g)] = static_cast<int>(rs.reflections.size());
        rs.reflections.push_back(std::move(g));
    }
    return rs;
}

}  // namespace springer
