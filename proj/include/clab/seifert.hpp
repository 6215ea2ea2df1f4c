#pragma once

// Seifert-form level invariants: Alexander polynomial, Arf,
// Levine-Tristram signature function, Fox-Milnor test, bounded
// metabolizer / hyperbolic-basis searches, connected sum and inverse.

#include <optional>
#include <vector>

#include "clab/matrix.hpp"
#include "clab/ring.hpp"

namespace clab {

// Square integer matrix A with det(A - A^T) = 1; the 0x0 matrix is the
// unknot.
class SeifertForm {
public:
    SeifertForm() = default;
    explicit SeifertForm(IntMat a);

    const IntMat& matrix() const { return a_; }
    int genus() const { return a_.rows() / 2; }
    int size() const { return a_.rows(); }

    bool operator==(const SeifertForm& o) const { return a_ == o.a_; }

private:
    IntMat a_;
};

SeifertForm connected_sum(const SeifertForm& s1, const SeifertForm& s2);
// the reverse mirror -A^T
SeifertForm inverse(const SeifertForm& s);

// normalize_units(det(tA - A^T)); 1 for the unknot
Laurent alexander_polynomial(const SeifertForm& s);
// 0 iff Delta(-1) = +-1 mod 8
int arf_invariant(const SeifertForm& s);

int levine_tristram(const SeifertForm& s, const Rat& r);

// Piecewise-constant representation of r -> sigma_{e^{2 pi i r}} on (0,1).
// Breakpoints are the unit-circle root parameters of the Alexander
// polynomial; exact when identified as roots of unity, numeric otherwise.
struct SigBreak {
    bool exact;
    Rat r;      // valid when exact
    double rd;  // always valid
};

struct SignatureFunction {
    std::vector<SigBreak> breaks;  // sorted, within (0,1)
    std::vector<int> values;       // arc values, size = breaks.size() + 1

    static SignatureFunction constant(int v) { return {{}, {v}}; }
    // value at r, or nullopt when r is a breakpoint
    std::optional<int> value_at(const Rat& r) const;
    bool all_breaks_exact() const;
    SignatureFunction negated() const;
    bool operator==(const SignatureFunction& o) const;
};

SignatureFunction signature_function(const SeifertForm& s);

enum class Tri { no, yes, inconclusive };

// Fox-Milnor: Delta = f(t) f(1/t) * unit for some integer f.  The search
// over integer divisors is complete within the Mignotte coefficient
// bound; oversized searches report inconclusive.
Tri fox_milnor(const SeifertForm& s);

// Unimodular congruence P^T A P with the upper-left (metabolic) or both
// diagonal (hyperbolic) g x g blocks zero.
struct LagrangianWitness {
    IntMat basis_change;
    enum class Kind { metabolic, hyperbolic } kind;
};

// Bounded search for a metabolizer: basis vectors with entries in
// [-entry_bound, entry_bound].  Absence at the bound is inconclusive,
// not a disproof.
std::optional<LagrangianWitness> find_metabolizer(const SeifertForm& s,
                                                  int entry_bound);
std::optional<LagrangianWitness> find_hyperbolic_basis(const SeifertForm& s,
                                                       int entry_bound);

// exact congruence re-verification used by the searches and callers
bool verify_witness(const SeifertForm& s, const LagrangianWitness& w);

}  // namespace clab
