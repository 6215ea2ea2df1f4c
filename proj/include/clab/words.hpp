#pragma once

// Word calculus in the free group on x1..x4: reduction, commutators,
// the recursive commutator-pair families, derived-series certificates,
// and abelianized Fox derivatives.

#include <array>
#include <compare>
#include <vector>

#include "clab/ring.hpp"

namespace clab {

struct Letter {
    int gen;  // 1..4
    int exp;  // +1 or -1
    auto operator<=>(const Letter&) const = default;
};

// Freely reduced words; the functions below keep reduction as an
// invariant of their outputs.
using GroupWord = std::vector<Letter>;

GroupWord reduce(const GroupWord& w);
GroupWord inverse_word(const GroupWord& w);
GroupWord concat(const GroupWord& u, const GroupWord& v);
GroupWord generator(int i, int exp = 1);

// [y,z] = y^-1 z^-1 y z
GroupWord commutator(const GroupWord& y, const GroupWord& z);
// y^x = x^-1 y x
GroupWord conjugate(const GroupWord& y, const GroupWord& x);

std::string word_str(const GroupWord& w);

struct FamilySpec {
    int a;  // 1 or 2
    int c;  // 3 or 4
    int n;  // depth, >= 1
};

// A pair at depth n, remembering which recursion branch (0..2) was
// taken at each level so the derivation can be replayed.
struct CommPair {
    GroupWord first, second;
    int a = 0, c = 0;
    int depth = 1;
    std::vector<int> derivation;  // length depth-1, entries 0..2
};

// All 3^{n-1} pairs at depth n, in branch order.
std::vector<CommPair> generate_family(const FamilySpec& spec);

// 2 * |P^{1,3}_{m-1} u P^{1,4}_{m-1} u P^{2,3}_{m-1}|, deduplicated by
// reduced-word equality and cross-checked against 2*3^{m-1}.
long family_union_count(int m);
// 2 * (|the union above at depth k-1| + |P^{2,4}_{l-1}|), cross-checked
// against 2*(3*3^{k-2} + 3^{l-2}); requires l >= k >= 2
long family_union_count(int k, int l);

std::array<long, 4> abelianization(const GroupWord& w);

// Abelianized Fox derivative dw/dx_i in Z[Z^4]; together with the
// abelianization this realizes the Magnus embedding of F/F''.
MultiLaurent fox_derivative_ab(const GroupWord& w, int i);

// Kernel test for the Magnus embedding: zero abelianization and all
// four Fox derivatives zero.
bool in_second_derived(const GroupWord& w);

// Replays the derivation recorded in the pair and compares against the
// stored words, certifying membership in F^{(depth)}.
bool certify_depth(const CommPair& p);

}  // namespace clab
