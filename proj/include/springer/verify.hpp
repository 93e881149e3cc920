#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "springer/parabolic.hpp"

namespace springer {

struct CheckResult {
    std::string id;
    std::string expected;
    std::string observed;
    bool pass = false;
    double seconds = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_text() const;
};

// memoised z-elements; not shared across threads
class ZCache {
public:
    explicit ZCache(const Parabolics& P) : P_(P) {}
    const ZElement& get(int beta, int obj);
    // z-element of the standard parabolic closure of x at its source
    Morphism z_of_spc(const Morphism& x);
    Morphism z_of_handle(const ParabolicHandle& h);

private:
    const Parabolics& P_;
    std::map<std::pair<int, int>, ZElement> z_;
};

// The distinguished object of the G31 groupoid and its five atomic loops.
struct G31Reference {
    int u0 = -1;
    std::vector<Morphism> loops;          // all atomic loops at u0, canonical order
    std::array<int, 5> label{};           // s,t,u,v,w -> index into loops
    const Morphism& gen(char c) const;    // c in "stuvw"
};

// The ten relation families of the presentation, as pairs of words over "stuvw".
const std::vector<std::pair<std::string, std::string>>& g31_relations();
// The nine generating subsets and the covering pairs (lower, upper) of their diagram.
const std::vector<std::string>& g31_classes();
const std::vector<std::pair<int, int>>& g31_hasse();
// per class of g31_classes()
const std::vector<char>& g31_irreducible();

Morphism word_in_loops(const Garside& E, const G31Reference& ref, const std::string& w);
G31Reference find_g31_reference(const Parabolics& P);

struct ClassInfo {
    std::string gens;
    int beta = -1;
    int ribbon_class = -1;
    std::vector<int> loops_inside;  // indices into ref.loops lying in G_beta
};

struct LatticeResult {
    std::vector<ClassInfo> classes;
    int num_ribbon_classes = 0;
    std::vector<std::vector<char>> contains;  // contains[a][b]: class b is conjugate into class a
    bool matches_diagram = false;
};
LatticeResult parabolic_lattice(const Parabolics& P, const G31Reference& ref);

// z-commutation against the loop predicate, over all ordered pairs of standard parabolics at u0
struct AdjacencyResult {
    int pairs_all = 0, bad_all = 0;
    int pairs_irr = 0, bad_irr = 0, adjacent_irr = 0;
    std::vector<std::pair<int, int>> bad_pairs;  // betas
};
AdjacencyResult adjacency_check(const Parabolics& P, const G31Reference& ref, const LatticeResult& lr);

struct GenerationResult {
    bool pass = false;
    int depth = 0;           // total word depth that sufficed
    int schreier = 0;        // nontrivial Schreier generators checked
    std::string failure;     // first generator that could not be reached
};
// every Schreier generator of G_beta(u0,u0) lies in <gens>
GenerationResult check_generation(const Parabolics& P, int beta, int u0, const std::vector<Morphism>& gens,
                                  int depth, int max_depth = 10);

struct VerifyOptions {
    std::string suite = "all";  // golden | properties | all
    std::uint64_t seed = 1;
    int depth = 6;
    int samples = 500;
    int jobs = 1;
};

// Golden checks need the E8, d = 4 data; properties run on any groupoid.
VerifyReport verify_golden(const Parabolics& P, const VerifyOptions& opt);
VerifyReport verify_properties(const Parabolics& P, const VerifyOptions& opt, bool exhaustive_small = false);

// Random endomorphisms at objects with atomic loops, |inf|,|sup| <= max_sup.
std::vector<Morphism> random_endomorphisms(const Parabolics& P, std::mt19937_64& rng, int count, int max_sup);

}  // namespace springer
