#pragma once

// Cell modules V_l ⊗ S(λ): bases, generator actions, cellular form, Gram ranks.

#include "pa/combinatorics.hpp"
#include "pa/diagrams.hpp"
#include "pa/scalars.hpp"
#include "pa/young.hpp"

#include <optional>
#include <vector>

namespace pa {

// One element of V_l (or V_{l+1/2}): a set partition of the top row plus the
// blocks attached to the propagating bottom slots, stored as a full diagram
// of n = d.columns() columns. Bottom dots before the slots are singletons;
// in the half case n' is joined to the block of n.
struct VBasis {
    int r = 0, l = 0;
    bool half = false;
    int n = 0;                                   // columns
    std::vector<Diagram> diagrams;
    int slot(int m) const { return r - l + 1 + m; }   // bottom column of slot m (0-based m)
    int size() const { return static_cast<int>(diagrams.size()); }
};

const VBasis& enumerate_V(int r, int l, bool half);

// flip(x)∘y = δ^a · (permutation π on the slots), or zero.
// pi[i] = top slot joined to bottom slot i (0-based image vector).
struct InflationValue {
    int exponent;
    std::vector<int> pi;
};
std::optional<InflationValue> inflation_form(const VBasis& V, int x, int y);

// g∘x = δ^a · rep ⊗ u, or zero (u acts on the Specht factor).
struct VAction {
    int exponent;
    int rep;
    std::vector<int> u;
};
std::optional<VAction> act_on_V(const VBasis& V, const Diagram& g, int x);

long cell_dim(const Partition& l, Degree d);

// excluded labels: ∅ at δ = 0 for integer degree
bool is_admissible_label(const Partition& l, Degree d, const FieldElement& delta);

// basis index of (V element x, standard tableau s) is x * syt + s
ExactMatrix cell_action(const Partition& l, Degree d, const FieldElement& delta, const Diagram& g);
ExactMatrix cell_action(const Partition& l, Degree d, const AlgebraElement& g);
ExactMatrix gram_matrix(const Partition& l, Degree d, const FieldElement& delta);

// the algebra generators of P_d: s_i, A_i, A_{i,i+1} inside the half subalgebra when d is half
std::vector<Diagram> algebra_generators(Degree d);

// rank of the Gram matrix; no admissibility check (∅ at δ = 0 gives 0)
long gram_rank(const Partition& l, Degree d, const FieldElement& delta);
long simple_dim(const Partition& l, Degree d, const FieldElement& delta);

// all Gram forms nondegenerate, including the ∅ cell when it exists as a cell
bool semisimple_oracle(Degree d, const FieldElement& delta);
void set_semisimple_bound(int r);

} // namespace pa
