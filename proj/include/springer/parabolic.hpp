#pragma once

#include <map>
#include <memory>
#include <vector>

#include "springer/garside.hpp"

namespace springer {

struct StandardParabolic {
    int beta = -1;
    std::vector<int> objects;      // object ids with beta <= u
    std::vector<int> simples;      // S_beta, sorted
    std::map<int, int> delta;      // object -> delta_beta(u)
    std::map<int, int> phi_obj;    // object -> target of delta_beta(u)
    std::map<int, int> phi_simple; // s -> delta_beta(u)^-1 s delta_beta(v)
    bool connected = false;
};

struct Ribbon {
    int beta = -1, beta2 = -1, s = -1;  // s <= beta, beta2 = s^-1 beta s^{c^eta}
    std::map<int, int> obj_map;
    std::map<int, int> simple_map;
};

struct SundialLadder {
    std::vector<std::vector<int>> levels;  // A_0, then the atoms added at each round
    bool success = false;
};

struct ZElement {
    Morphism morphism;
    int exponent = 0;
};

// (G_beta(base, base))^{conjugator^-1}, seen from conjugator.src
struct ParabolicHandle {
    int beta = -1;
    int base = -1;
    Morphism conjugator;
};

class Parabolics {
public:
    explicit Parabolics(std::shared_ptr<const Garside> engine);

    const Garside& engine() const { return *E_; }
    const std::vector<int>& admissible() const { return admissible_; }
    bool is_admissible(int beta) const;

    std::vector<int> objects_of(int beta) const;
    int delta_beta(int beta, int obj) const;  // simple id, -1 when undefined
    bool in_S(int beta, int s) const;
    StandardParabolic build_standard(int beta) const;

    bool contains(int beta, const Morphism& x) const;
    int scpc(const Morphism& x) const;
    int intersect_standard(int b1, int b2) const;  // -1 when the object sets are disjoint

    Ribbon ribbon(int beta, int s) const;
    // union-find classes of admissible beta under ribbons
    std::vector<std::vector<int>> ribbon_classes() const;
    int ribbon_class_of(int beta) const;
    // betas s_1.. with beta_{i+1} = ribbon(beta_i, s_i).beta2 ending below u0
    std::vector<std::pair<int, int>> ribbon_path_to(int beta, int u0_obj) const;
    std::vector<int> ribbon_closure_from(int u0_obj) const;

    SundialLadder sundial(int beta) const;

    std::vector<Morphism> atomic_loops(int obj) const;

    Morphism delta_beta_power(int beta, int obj, int e) const;
    // smallest e with delta_beta(u)^e central; full = test every simple of S_beta
    ZElement z_element(int beta, int obj, bool full = false) const;
    bool phi_beta_power_trivial(int beta, int e) const;

    Morphism z_of_handle(const ParabolicHandle& h) const;
    ParabolicHandle pc(const Morphism& x) const;
    int spc_recurrent(const Morphism& x) const;
    bool is_standard(const ParabolicHandle& h) const;
    int rank(const Morphism& x) const;
    bool adjacent(const ParabolicHandle& h1, const ParabolicHandle& h2) const;

private:
    std::shared_ptr<const Garside> E_;
    const GroupoidData& G_;
    std::vector<int> admissible_;
    std::vector<char> admissible_flag_;
};

}  // namespace springer
