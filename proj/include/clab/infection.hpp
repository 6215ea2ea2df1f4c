#pragma once

// Knot descriptors (Seifert leaves, connected sums, satellite infection
// along axis curves), abelian rho-invariant integrals, and the
// obstruction pipeline assembling reports from the other modules.

#include <optional>
#include <string>
#include <vector>

#include "clab/alexmodule.hpp"

namespace clab {

// Axis curve for an infection, described by its class in the seed's
// Alexander module (presentation coordinates; may be zero when the
// curve dies rationally).
struct InfectionAxis {
    std::vector<Laurent> module_class;
    int derived_depth = 1;  // >= 1, axis in the commutator subgroup
    bool disjoint_from_surface = true;
    std::string name;
};

// Tree of knot constructions.  An infection node stores its seed as
// children[0] and one companion child per axis; a step leaf is a knot
// known only through its Levine-Tristram signature function.
struct KnotDescriptor {
    enum class Kind { seifert_leaf, step_leaf, sum, infection };

    Kind kind = Kind::seifert_leaf;
    SeifertForm form;          // seifert_leaf
    SignatureFunction steps;   // step_leaf
    std::vector<KnotDescriptor> children;
    std::vector<InfectionAxis> axes;  // infection: parallel to children[1..]

    static KnotDescriptor leaf(SeifertForm s);
    static KnotDescriptor step_leaf_of(SignatureFunction sig);
    static KnotDescriptor sum(std::vector<KnotDescriptor> parts);
    static KnotDescriptor infection(
        KnotDescriptor seed,
        std::vector<std::pair<InfectionAxis, KnotDescriptor>> arms);
};

// Seifert form of the underlying knot.  Infection along axes that are
// disjoint from the surface and lie in the commutator subgroup does
// not change the Seifert matrix, so companions drop out; axes
// violating that or signature-only leaves are errors.
SeifertForm effective_seifert(const KnotDescriptor& d);

// Integral of a signature function over (0,1); exact when every jump
// location is exact, otherwise a narrow interval.
struct RhoValue {
    bool is_exact = true;
    Rat exact;       // valid when is_exact
    double lo = 0, hi = 0;  // always valid enclosure

    bool known_nonzero() const { return is_exact ? exact != 0 : lo > 0 || hi < 0; }
    bool known_zero() const { return is_exact && exact == 0; }
};

RhoValue rho_z(const SignatureFunction& sig);
// Abelian rho of a sum/leaf descriptor (additive over sums); infection
// nodes are rejected.
RhoValue rho_z_knot(const KnotDescriptor& d);

// Doubled-companion signature obstruction: each companion's J#J
// signature must vanish at 1/3 and 2/3.
enum class Check { pass, fail, indeterminate, inapplicable };
Check gilmer_livingston_check(const std::vector<SignatureFunction>& curve_sigs);

enum class Dof { obstructed, unobstructed, inconclusive, inapplicable };

struct ObstructionReport {
    int arf = 0;
    Tri alg_slice = Tri::inconclusive;
    Tri alg_doubly_slice = Tri::inconclusive;
    std::optional<LagrangianWitness> metabolizer;
    std::optional<LagrangianWitness> hyperbolic;
    int selfann_count = -1;  // -1 when the module shape is unsupported
    Check gilmer_livingston = Check::inapplicable;
    Dof double_one_five = Dof::inapplicable;
    std::vector<std::string> notes;
};

// Obstruction to being doubly (1.5)-solvable: quantifies over all
// ordered self-annihilating submodule assignments; OBSTRUCTED needs a
// nonzero-pairing axis with exactly nonzero companion rho for every
// assignment.
Dof double_one_five_obstruction(const KnotDescriptor& d,
                                std::vector<std::string>* notes = nullptr);

ObstructionReport classify(const KnotDescriptor& d, int search_bound = 2);

}  // namespace clab
