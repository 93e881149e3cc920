#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace springer {

using Vec = std::vector<int>;

// Element of W as the permutation it induces on the roots.
struct GroupElement {
    std::vector<std::uint8_t> perm;
    int cached_length = -1;

    bool operator==(const GroupElement& o) const { return perm == o.perm; }
    bool operator<(const GroupElement& o) const { return perm < o.perm; }
};

struct RootSystem {
    std::string type_label;
    int rank = 0;
    int dim = 0;               // ambient dimension
    int coxeter_number = 0;
    std::vector<int> degrees;
    std::vector<Vec> roots;         // ambient coordinates (E8 scaled by 2), sorted
    std::vector<Vec> simple_coords; // coordinates in the simple-root basis
    std::vector<int> simple;        // root index of each simple root, in canonical order
    std::vector<int> negation;      // negation[i] = index of -roots[i]
    std::vector<int> positive;      // indices of positive roots (sorted)
    std::vector<GroupElement> reflections;  // one per positive root, same order
    std::unordered_map<std::uint64_t, int> reflection_of_key;

    int num_roots() const { return static_cast<int>(roots.size()); }
    int root_index(const Vec& v) const;

    GroupElement identity() const;
    GroupElement compose(const GroupElement& x, const GroupElement& y) const;  // x after y
    GroupElement inverse(const GroupElement& x) const;
    GroupElement power(const GroupElement& x, long long k) const;
    GroupElement conj(const GroupElement& x, const GroupElement& g) const;     // g^-1 x g
    GroupElement simple_reflection(int i) const { return reflections[reflection_index_of_root(simple[i])]; }
    GroupElement coxeter_element() const;
    int reflection_index_of_root(int root) const;

    // images of the simple roots determine the element; packs them in a word
    std::uint64_t key(const GroupElement& x) const;
    std::uint64_t key_of_product(const GroupElement& x, const GroupElement& y) const;

    int reflection_length(const GroupElement& w) const;
    int length_of_product(const GroupElement& x, const GroupElement& y) const;  // l(x y)
    int length_from_images(const std::uint8_t* simple_images) const;
    bool divides(const GroupElement& a, const GroupElement& b) const;

    // internal
    std::unordered_map<std::string, int> index_of_vec_;
    std::vector<int> root_to_reflection_;
};

RootSystem build_root_system(const std::string& type_label);

// rank of an integer matrix (exact, fraction-free elimination)
int integer_rank(std::vector<std::vector<long long>> m);

}  // namespace springer
