#pragma once

// Alexander-module decomposition over Q[t,t^-1], Blanchfield pairing,
// self-annihilating submodule enumeration, and generating-set tests.

#include <string>
#include <vector>

#include "clab/seifert.hpp"

namespace clab {

// Direct sum of cyclic pieces Lambda'/(d_i).  Each piece carries a
// generator lift in presentation (y-dual) coordinates so pairings can be
// evaluated against the Blanchfield matrix.
struct CyclicPiece {
    Laurent order;             // monic, nonunit
    std::vector<Laurent> lift; // generator in presentation coordinates
    std::string name;
};

struct AlexanderModule {
    int presentation_dim = 0;
    std::vector<CyclicPiece> pieces;
    LaurentMat to_module;  // presentation coords -> chain module coords (U)

    std::vector<Laurent> orders() const;
    // product of orders, associated to the Alexander polynomial
    Laurent order_product() const;
};

AlexanderModule decompose(const SeifertForm& s);

// Refine cyclic pieces into coprime-order pieces, splitting orders by
// gcds against the hint polynomials.  Unsplittable orders pass through.
AlexanderModule crt_split(const AlexanderModule& m,
                          const std::vector<Laurent>& hints);
// hints taken from the other orders and the presentation matrix entries
AlexanderModule crt_split(const AlexanderModule& m, const SeifertForm& s);

// Pairing matrix (1-t)(tA - A^T)^{-1} on presentation generators,
// entries reduced mod Lambda'.
struct BlanchfieldForm {
    std::vector<std::vector<RationalFn>> matrix;
};

BlanchfieldForm blanchfield(const SeifertForm& s);

// conj(u)^T B v reduced mod Lambda'; u, v in presentation coordinates
RationalFn pair(const BlanchfieldForm& b, const std::vector<Laurent>& u,
                const std::vector<Laurent>& v);

struct Submodule {
    std::vector<int> piece_indices;  // summands of the CRT decomposition
    std::vector<std::vector<Laurent>> generators;  // presentation coords
    std::vector<Laurent> orders;
};

// Requires a CRT-split module with pairwise-coprime square-free orders;
// enumerates sums of cyclic pieces X with pair = 0 on X and
// prod(orders(X)) * conj(prod) = Delta up to units.
std::vector<Submodule> self_annihilating_submodules(const AlexanderModule& m,
                                                    const BlanchfieldForm& b);

// True iff the Lambda'-span of the classes (module coordinates, one
// polynomial per cyclic piece) is the whole module.
bool generates(const std::vector<Laurent>& orders,
               const std::vector<std::vector<Laurent>>& classes);

class ModuleShapeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace clab
