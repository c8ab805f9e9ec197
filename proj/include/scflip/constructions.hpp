#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scflip/ideal.hpp"

namespace scflip {

// Axis arguments are 1-based, like coordinates.
Ideal halfspace(const std::vector<int>& dims, int axis);
std::pair<Ideal, Ideal> sc_diameter_pair(const std::vector<int>& dims);
Ideal majority_ideal(const std::vector<int>& dims);
// axis = 0 picks the last dimension divisible by 4.
Ideal mod4_center(const std::vector<int>& dims, int axis = 0);

// Chvatal-derived self-complementary ideal of [2]^d built from a uniform family.
Ideal chvatal_block(int d);

struct Block {
    std::string label;
    std::vector<std::size_t> ranks;  // in the full poset
};
std::vector<Block> partition_blocks(const std::vector<int>& dims);

struct CenterCandidate {
    Ideal ideal;
    bool conjecture_conditional = false;
    std::string recipe;
};
CenterCandidate partitioned_center(const std::vector<int>& dims);

Ideal staircase_c2r(int r);
Ideal octant_ideal_cssc(int r);
Ideal pyramid_ideal(int r);

struct NamedIdeal {
    std::string name;
    std::vector<int> params;
    PosetPtr poset;
    std::vector<std::size_t> members;  // shells are member sets, not ideals
};
NamedIdeal shell_ideal(int k, int r);
Ideal compose(const Ideal& core, const NamedIdeal& shell);  // validates as CSSC
Ideal compose(const NamedIdeal& shell);                    // r = 1: no core

Ideal tssc_mandatory(int r);  // the forced region, as an ideal
std::pair<Ideal, Ideal> tssc_extremes(int r);

// Closed-form values used by verify and the CLI.
std::size_t sc_diameter_formula(const std::vector<int>& dims);
// Radius bound times 2^(d+1), exact: (2^(d-1) - C(d-1, floor((d-1)/2))) * V
std::size_t sc_radius_bound_scaled(const std::vector<int>& dims);
std::size_t sc_radius_formula(const std::vector<int>& dims);  // ceiling of the bound
bool sc_radius_exact_hypotheses(const std::vector<int>& dims);
inline std::size_t cssc_diameter_formula(int r) { return static_cast<std::size_t>((r - 1) * r * (r + 1) / 3); }
inline std::size_t cssc_radius_formula(int r) { return static_cast<std::size_t>((r - 1) * r * (r + 1) / 6); }
inline std::size_t tssc_diameter_formula(int r) { return static_cast<std::size_t>((r - 1) * r * (2 * r - 1) / 6); }
inline std::size_t tssc_radius_conjecture(int r) { return (tssc_diameter_formula(r) + 1) / 2; }

}  // namespace scflip
