#include "springer/dataset.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace springer {

Dataset build_dataset(const std::string& type, int d, int jobs) {
    auto rs = std::make_shared<const RootSystem>(build_root_system(type));
    auto L = std::make_shared<const IntervalLattice>(build_interval(rs, rs->coxeter_element(), jobs));
    auto G = build_springer_data(L, make_params(d, rs->coxeter_number), jobs);
    return {rs, L, G};
}

std::uint64_t order_fingerprint(const IntervalLattice& L) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const GroupElement& g : L.elements) {
        for (std::uint8_t b : g.perm) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;  // element separator
        h *= 1099511628211ULL;
    }
    return h;
}

void save_dataset(const Dataset& ds, std::ostream& out) {
    const RootSystem& R = *ds.rs;
    const IntervalLattice& L = *ds.lattice;
    const GroupoidData& G = *ds.groupoid;
    const RegularParams& p = G.params;
    std::size_t natoms = 0;
    for (const auto& a : G.atoms_of) natoms += a.size();

    out << "springer-dataset " << kDatasetVersion << '\n';
    out << "type " << R.type_label << '\n';
    out << "params " << p.d << ' ' << p.h << ' ' << p.p << ' ' << p.q << ' ' << p.eta << '\n';
    out << "fingerprint " << std::hex << std::setw(16) << std::setfill('0') << order_fingerprint(L) << std::dec
        << std::setfill(' ') << '\n';
    out << "counts " << R.num_roots() << ' ' << L.size() << ' ' << G.num_objects() << ' ' << G.num_simples() << ' '
        << G.relations.size() << ' ' << natoms << '\n';

    out << "roots " << R.num_roots() << '\n';
    for (const Vec& v : R.roots) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << '\n';
    }
    out << "elements " << L.size() << '\n';
    for (const GroupElement& g : L.elements) {
        for (std::size_t i = 0; i < g.perm.size(); ++i) out << (i ? " " : "") << static_cast<int>(g.perm[i]);
        out << '\n';
    }
    out << "lengths " << L.size() << '\n';
    for (int l : L.length_of) out << l << '\n';
    out << "objects " << G.num_objects() << '\n';
    for (int u : G.objects) out << u << '\n';
    out << "simples " << G.num_simples() << '\n';
    for (const Simple& s : G.simples) out << s.a << ' ' << s.b << ' ' << s.source << ' ' << s.target << '\n';
    out << "relations " << G.relations.size() << '\n';
    for (const RelTriple& r : G.relations) out << r.x << ' ' << r.y << ' ' << r.z << '\n';
    out << "atoms " << natoms << '\n';
    for (int o = 0; o < G.num_objects(); ++o)
        for (int a : G.atoms_of[o]) out << o << ' ' << a << '\n';
    out << "end\n";
}

void save_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw DataError("cannot open " + path + " for writing");
    save_dataset(ds, f);
    if (!f) throw DataError("write failed: " + path);
}

namespace {

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    // next line split into tokens; throws CountError at end of input
    std::istringstream line(const std::string& what) {
        std::string s;
        if (!std::getline(in_, s)) throw CountError("unexpected end of file in " + what);
        ++lineno_;
        return std::istringstream(s);
    }

    // "keyword value..." header line
    std::istringstream keyed(const std::string& key) {
        auto ls = line(key);
        std::string k;
        ls >> k;
        if (k != key) fail("expected '" + key + "', found '" + k + "'");
        return ls;
    }

    std::size_t section(const std::string& key, std::size_t expected) {
        auto ls = keyed(key);
        long long n = -1;
        ls >> n;
        if (n < 0 || static_cast<std::size_t>(n) != expected)
            throw CountError("section " + key + ": header records " + std::to_string(expected) + ", section has " +
                             std::to_string(n));
        return expected;
    }

    template <class T>
    std::vector<T> ints(const std::string& what, std::size_t n) {
        auto ls = line(what);
        std::vector<T> v;
        v.reserve(n);
        long long x;
        while (ls >> x) v.push_back(static_cast<T>(x));
        if (v.size() != n) fail(what + ": expected " + std::to_string(n) + " values, got " + std::to_string(v.size()));
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw DataError("line " + std::to_string(lineno_) + ": " + msg);
    }

private:
    std::istream& in_;
    long lineno_ = 0;
};

}  // namespace

Dataset load_dataset(std::istream& in) {
    Reader r(in);
    {
        auto ls = r.line("header");
        std::string magic;
        int version = -1;
        ls >> magic >> version;
        if (magic != "springer-dataset") r.fail("not a dataset file");
        if (version != kDatasetVersion)
            throw VersionError("unsupported dataset version " + std::to_string(version) + " (expected " +
                               std::to_string(kDatasetVersion) + ")");
    }
    std::string type;
    r.keyed("type") >> type;
    RegularParams p;
    r.keyed("params") >> p.d >> p.h >> p.p >> p.q >> p.eta;
    std::uint64_t fp = 0;
    r.keyed("fingerprint") >> std::hex >> fp;
    std::size_t nroots = 0, nelem = 0, nobj = 0, nsimp = 0, nrel = 0, natoms = 0;
    r.keyed("counts") >> nroots >> nelem >> nobj >> nsimp >> nrel >> natoms;

    auto rs = std::make_shared<RootSystem>(build_root_system(type));
    r.section("roots", nroots);
    if (nroots != rs->roots.size()) throw CountError("root count does not match type " + type);
    for (std::size_t i = 0; i < nroots; ++i)
        if (r.ints<int>("roots", rs->dim) != rs->roots[i]) r.fail("root table differs from type " + type);

    auto L = std::make_shared<IntervalLattice>();
    L->rs = rs;
    L->rank = rs->rank;
    r.section("elements", nelem);
    L->elements.resize(nelem);
    for (std::size_t i = 0; i < nelem; ++i) {
        auto v = r.ints<int>("elements", nroots);
        for (int x : v)
            if (x < 0 || static_cast<std::size_t>(x) >= nroots) r.fail("permutation image out of range");
        L->elements[i].perm.assign(v.begin(), v.end());
    }
    if (order_fingerprint(*L) != fp) throw FingerprintError("element order fingerprint mismatch");
    r.section("lengths", nelem);
    L->length_of.resize(nelem);
    for (std::size_t i = 0; i < nelem; ++i) L->length_of[i] = r.ints<int>("lengths", 1)[0];
    if (nelem == 0) throw CountError("empty interval");
    L->coxeter = L->elements.back();
    L->finalize();
    for (std::size_t i = 0; i < nelem; ++i)
        if (rs->reflection_length(L->elements[i]) != L->length_of[i]) r.fail("length table inconsistent");

    auto G = std::make_shared<GroupoidData>();
    G->lattice = L;
    G->params = p;
    if (make_params(p.d, p.h) != p || p.h != rs->coxeter_number) r.fail("inconsistent parameters");
    const GroupElement ce = rs->power(L->coxeter, p.eta);
    G->conj_eta.resize(nelem);
    for (std::size_t i = 0; i < nelem; ++i) G->conj_eta[i] = L->conj(static_cast<int>(i), ce);

    auto in_range = [&](long long x, std::size_t n) { return x >= 0 && static_cast<std::size_t>(x) < n; };
    r.section("objects", nobj);
    for (std::size_t i = 0; i < nobj; ++i) {
        int u = r.ints<int>("objects", 1)[0];
        if (!in_range(u, nelem)) r.fail("object out of range");
        G->objects.push_back(u);
    }
    r.section("simples", nsimp);
    for (std::size_t i = 0; i < nsimp; ++i) {
        auto v = r.ints<int>("simples", 4);
        if (!in_range(v[0], nelem) || !in_range(v[1], nelem) || !in_range(v[2], nobj) || !in_range(v[3], nobj))
            r.fail("simple out of range");
        G->simples.push_back({v[0], v[1], v[2], v[3], L->length(v[0])});
    }
    r.section("relations", nrel);
    for (std::size_t i = 0; i < nrel; ++i) {
        auto v = r.ints<int>("relations", 3);
        for (int x : v)
            if (!in_range(x, nelem)) r.fail("relation out of range");
        G->relations.push_back({v[0], v[1], v[2]});
    }
    std::vector<std::vector<int>> atoms(nobj);
    r.section("atoms", natoms);
    for (std::size_t i = 0; i < natoms; ++i) {
        auto v = r.ints<int>("atoms", 2);
        if (!in_range(v[0], nobj)) r.fail("atom object out of range");
        atoms[v[0]].push_back(v[1]);
    }
    if (r.line("end").str() != "end") r.fail("expected 'end'");

    G->finalize();
    if (G->atoms_of != atoms) throw DataError("atom table inconsistent with simples");
    for (const RelTriple& t : G->relations) {
        int xy = L->mul(t.x, t.y);
        if (xy < 0 || G->object_index(L->mul(xy, t.z)) < 0) throw DataError("relation does not compose to an object");
    }
    return {rs, L, G};
}

Dataset load_dataset(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open " + path);
    return load_dataset(f);
}

}  // namespace springer
