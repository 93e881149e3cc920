#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "springer/springer.hpp"

namespace springer {

// Delta^k s_1 ... s_r, the s_i proper and left-weighted. Any k for general
// morphisms; equality of morphisms is equality of this struct.
struct Morphism {
    int src = -1;
    int k = 0;
    std::vector<int> f;

    int inf() const { return k; }
    int sup() const { return k + static_cast<int>(f.size()); }
    bool positive() const { return k >= 0; }
    bool operator==(const Morphism&) const = default;
    auto operator<=>(const Morphism&) const = default;
};

struct MorphismHash {
    std::size_t operator()(const Morphism& m) const;
};

// den^-1 num, den and num positive with a common source and trivial meet
struct Fraction {
    Morphism den, num;
    int inf() const { return -den.sup(); }
    int sup() const { return num.sup(); }
};

struct RecurrentOrbit {
    Morphism conjugator;  // x^conjugator = y
    Morphism y;
    std::vector<Morphism> cycle;  // y, sw(y), ...
    std::vector<Morphism> steps;  // conjugators between consecutive cycle members
};

struct ConjugacyGraph {
    std::vector<Morphism> vertices;
    struct Edge {
        int from, to;
        Morphism label;
    };
    std::vector<Edge> edges;
    bool truncated = false;
};

class Garside {
public:
    explicit Garside(std::shared_ptr<const GroupoidData> g);

    const GroupoidData& data() const { return *G_; }
    std::shared_ptr<const GroupoidData> data_ptr() const { return G_; }

    Morphism identity(int obj) const { return {obj, 0, {}}; }
    Morphism delta_power(int obj, int k) const { return {obj, k, {}}; }
    Morphism from_simple(int s) const;
    Morphism simple_inverse(int s) const;
    // (simple, inverted?) letters, read left to right
    Morphism from_word(const std::vector<std::pair<int, bool>>& word) const;

    int target(const Morphism& x) const;
    bool is_endo(const Morphism& x) const { return target(x) == x.src; }
    int phi_obj_pow(int obj, int k) const;
    int phi_simple_pow(int s, int k) const;
    Morphism phi_pow(const Morphism& x, int k) const;

    Morphism mul(const Morphism& x, const Morphism& y) const;
    Morphism mul_simple(Morphism x, int s) const;
    Morphism inverse(const Morphism& x) const;
    Morphism power(const Morphism& x, int m) const;  // endomorphisms only
    Morphism conj(const Morphism& x, const Morphism& g) const;  // g^-1 x g
    bool commute(const Morphism& x, const Morphism& y) const;

    // simples of a positive morphism, Delta factors expanded
    std::vector<int> expand(const Morphism& x) const;
    int length(const Morphism& x) const;
    bool left_weighted(const Morphism& x) const;

    // prefix order on positives with a common source
    bool pos_divides(const Morphism& x, const Morphism& y) const;
    int head(const Morphism& x) const;
    Morphism pos_meet(Morphism x, Morphism y) const;
    Morphism right_complement(const Morphism& x, const Morphism& y) const;  // x\y
    Morphism pos_join(const Morphism& x, const Morphism& y) const;
    // suffix order on positives with a common target
    bool pos_left_divides(const Morphism& x, const Morphism& y) const;  // x suffix of y
    Morphism pos_left_meet(const Morphism& x, const Morphism& y) const;
    Morphism pos_left_join(const Morphism& x, const Morphism& y) const;

    Fraction to_fraction(const Morphism& x) const;
    Fraction reduce_fraction(const Morphism& a, const Morphism& b) const;
    Morphism from_fraction(const Fraction& fr) const { return mul(inverse(fr.den), fr.num); }

    // sw(x) = g f^-1 for x = f^-1 g; the conjugator f^-1 is returned in `conjugator`
    Morphism swap(const Morphism& x, Morphism* conjugator = nullptr) const;
    RecurrentOrbit recurrent_orbit(const Morphism& x) const;
    bool is_recurrent(const Morphism& x) const;
    Morphism transport(const Morphism& y, const Morphism& alpha, const Morphism& z) const;

    Morphism rho(int atom, const Morphism& x, std::vector<Morphism>* prefixes = nullptr) const;
    std::vector<Morphism> minimal_positive_conjugators(const Morphism& x) const;
    ConjugacyGraph positive_conjugates_graph(const Morphism& x, std::size_t max_vertices = 200000) const;

private:
    std::shared_ptr<const GroupoidData> G_;
    std::vector<int> phi_order_;
    int delta_len_ = 0;
};

}  // namespace springer
