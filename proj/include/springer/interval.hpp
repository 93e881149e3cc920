#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "springer/root_system.hpp"

namespace springer {

struct Factorization {
    std::vector<int> parts;  // interval indices
    int product = -1;        // interval index
    int arity() const { return static_cast<int>(parts.size()); }
    bool operator==(const Factorization& o) const { return parts == o.parts && product == o.product; }
    bool operator<(const Factorization& o) const { return parts < o.parts; }
};

// [1,c] with reflection lengths; element 0 is the identity, the last one is c.
class IntervalLattice {
public:
    std::shared_ptr<const RootSystem> rs;
    GroupElement coxeter;
    std::vector<GroupElement> elements;
    std::vector<GroupElement> inverses;
    std::vector<int> length_of;
    std::vector<std::vector<int>> reflections_below;  // reflection indices t with t <= x
    int rank = 0;

    int size() const { return static_cast<int>(elements.size()); }
    int top() const { return size() - 1; }
    int index_of(const GroupElement& g) const;
    int index_of_key(std::uint64_t k) const;
    int length(int i) const { return length_of[i]; }

    int mul(int i, int j) const;       // x_i x_j, -1 if outside [1,c]
    int left_div(int i, int j) const;  // x_i^-1 x_j
    int right_div(int i, int j) const; // x_i x_j^-1
    int conj(int i, const GroupElement& g) const;  // g^-1 x_i g
    int inverse_in(int i) const;       // x_i^-1, -1 if outside
    int kreweras(int i) const { return left_div(i, top()); }

    bool divides(int i, int j) const;
    std::vector<int> divisors(int i) const;  // sorted, canonical order
    int meet(int i, int j) const;
    int join(int i, int j) const;

    std::vector<Factorization> factorizations(int w, int m) const;
    Factorization tau(const Factorization& f) const;
    std::vector<Factorization> tau_fixed(const std::vector<Factorization>& fs, int n) const;
    // D_m^n(c) without materialising D_m(c)
    std::vector<Factorization> enumerate_tau_fixed(int m, int n) const;
    Factorization hurwitz_move(const Factorization& f, int i, int direction) const;

    // rebuild the lookup structures from elements/length_of (used after load)
    void finalize();

private:
    std::unordered_map<std::uint64_t, int> index_;
};

IntervalLattice build_interval(std::shared_ptr<const RootSystem> rs, const GroupElement& c, int jobs = 1);

// prod (d_i + h) / d_i over the degrees
long long catalan_number(const RootSystem& rs);

}  // namespace springer
