#pragma once

#include <memory>
#include <vector>

#include "springer/interval.hpp"

namespace springer {

struct RegularParams {
    int d = 0, h = 0, p = 0, q = 0, eta = 0;
    bool operator==(const RegularParams&) const = default;
};

// p = d/gcd(d,h), q = h/gcd(d,h); eta is the least positive solution of p*eta = 1 mod q
RegularParams make_params(int d, int h);

struct Simple {
    int a = -1, b = -1;           // interval indices
    int source = -1, target = -1; // object ids
    int length = 0;
};

struct RelTriple {
    int x, y, z;
};

// Per-object tables. Simples leaving an object are indexed by the position of
// their first component in `divs` (sorted interval indices, identity first, u last).
struct ObjectTables {
    int u = -1;             // interval index of the object
    std::vector<int> divs;  // first components
    std::vector<char> divides;  // m*m
    std::vector<int> meet, join;  // m*m local indices
    int size() const { return static_cast<int>(divs.size()); }
};

class GroupoidData {
public:
    std::shared_ptr<const IntervalLattice> lattice;
    RegularParams params;

    std::vector<int> objects;   // interval indices, sorted
    std::vector<Simple> simples;
    std::vector<RelTriple> relations;
    std::vector<int> first_simple;  // objects.size()+1 offsets into simples
    std::vector<ObjectTables> tables;

    std::vector<int> delta_of, identity_of;  // per object
    std::vector<int> phi_obj, phi_inv_obj;   // per object
    std::vector<int> phi_simple, phi_inv_simple, complement, left_complement;  // per simple
    std::vector<std::vector<int>> atoms_of;  // per object
    std::vector<int> conj_eta;   // x -> x^{c^eta} on the interval (-1 off the fixed set)
    std::vector<int> object_of;  // interval index -> object id or -1

    // quot_[s] maps local index j at source(s) to the simple s^-1 s_j (or -1)
    // comp_[s] maps local index j at target(s) to the simple s t_j (or -1)
    std::vector<std::vector<int>> quot_, comp_;

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_simples() const { return static_cast<int>(simples.size()); }
    int local(int s) const { return s - first_simple[simples[s].source]; }
    int simple_at(int obj, int local_idx) const { return first_simple[obj] + local_idx; }
    int find_simple(int obj, int a) const;  // -1 if no simple (a, -) leaves obj
    int object_index(int u) const { return u >= 0 && u < static_cast<int>(object_of.size()) ? object_of[u] : -1; }

    bool is_identity(int s) const { return simples[s].a == 0; }
    bool is_delta(int s) const { return simples[s].b == 0; }
    bool is_atom(int s) const { return simples[s].length == 1; }

    bool simple_divides(int s, int t) const;
    int simple_meet(int s, int t) const;
    int simple_join(int s, int t) const;
    int compose_simples(int s, int t) const;  // -1 if not simple
    int left_quotient(int s, int t) const;    // s^-1 t when s <= t, else -1
    int right_complement(int s, int t) const { return left_quotient(s, simple_join(s, t)); }  // s\t

    // suffix order: t <=^ s when s = x t
    bool simple_left_divides(int t, int s) const;
    int simple_left_meet(int s, int t) const;
    int simple_left_join(int s, int t) const;

    // rebuild derived tables from objects/simples (after load)
    void finalize();
};

std::shared_ptr<GroupoidData> build_springer_data(std::shared_ptr<const IntervalLattice> lattice,
                                                  const RegularParams& params, int jobs = 1);

}  // namespace springer
