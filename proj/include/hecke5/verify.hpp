#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace hecke5 {

struct Check {
    std::string name;
    bool passed = false;
    std::string computed;
    std::string expected;
    std::string source;  // where the expected value comes from
    std::string witness; // set when the check fails
};

struct VerificationReport {
    std::string name;
    std::vector<Check> checks;

    bool passed() const;
    void add(std::string check_name, bool ok, std::string computed, std::string expected,
             std::string source);
    const Check* find(const std::string& check_name) const;
};

/**
 * Linear action on the 3-dimensional F_5-space with basis (r, s, t).
 * Column j holds the coordinates of the image of basis vector j.
 */
using ActionMatrix = std::array<std::array<int, 3>, 3>;

// Conjugation actions of S, T and J on <r, s, t> read from the relation table.
std::array<ActionMatrix, 3> actions_from_relations();
// The same table with r^T = r s^-1 t^2, a variant that direct computation
// rules out. Kept so the subspace verdict can be checked against it.
std::array<ActionMatrix, 3> actions_with_variant_rT();
// The same actions recomputed by conjugating residue matrices modulo 5.
std::array<ActionMatrix, 3> actions_by_conjugation();

// All subspaces of F_5^3, each as its sorted list of vectors encoded 25i + 5j + k.
std::vector<std::vector<int>> subspaces_f5_cubed();
// Subspaces left invariant by every given action.
std::vector<std::vector<int>> invariant_subspaces(const std::vector<ActionMatrix>& actions);

// The six-generator layer group modulo p^(n+1): order p^6, abelian, exponent p,
// and its two halves of order p^4 and p^2 meet trivially.
VerificationReport verify_elementary_layer(unsigned p, unsigned n);

// The only S-, T- and J-invariant subgroups of the order-125 layer mod 5 are
// trivial and everything.
VerificationReport verify_invariant_subspaces();

// Finite facts about H5 / H(5) that the non-congruence argument for the
// fifth-power subgroup consumes.
VerificationReport verify_power_subgroup_mod5();

// Regression suite for the explicit matrices and congruences.
VerificationReport verify_matrix_identities();

// Parameters exercised by verify_all for the elementary layer.
const std::vector<std::pair<unsigned, unsigned>>& default_layer_parameters();

// Every report, sorted by name.
std::vector<VerificationReport> verify_all();

} // namespace hecke5
