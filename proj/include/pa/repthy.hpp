#pragma once

// Decomposition numbers, blocks, semisimplicity and the i-res/i-ind label calculus.

#include "pa/combinatorics.hpp"
#include "pa/scalars.hpp"
#include "pa/young.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pa {

// Λ⁺(d) in layer order (decreasing size, then reverse lexicographic);
// ∅ is dropped at δ = 0 for integer degree.
std::vector<Partition> label_set(Degree d, const FieldElement& delta);

// [Δ(μ−ε) : L(μ)] for the degree type of d (r = |μ|):
// integer: c(ε) ≡ δ − r + 1; half-integer: c(ε) ≡ δ − r.
int one_box_decnumber(const Partition& mu, const BoxRef& eps, bool half, const FieldElement& delta);

struct DecompositionMatrix {
    Degree d;
    FieldElement delta;
    std::vector<Partition> rows, cols;
    std::vector<std::vector<int>> entry;          // entry[row][col]
    int at(const Partition& l, const Partition& m) const;
    std::string table() const;
};

// requires p = 0 or p > floor(d)
DecompositionMatrix decomposition_matrix(Degree d, const FieldElement& delta);

// index i >= 1 with (0,i)∘μ = λ under the dot action, p = 0, integer δ
std::optional<int> transposition_equiv(const Partition& l, const Partition& mu, Degree d, long delta);

using BlockPartition = std::vector<std::vector<Partition>>;   // classes in label order
BlockPartition blocks(Degree d, const FieldElement& delta);
BlockPartition blocks_via_moves(Degree d, const FieldElement& delta);
BlockPartition blocks_via_weights(Degree d, const FieldElement& delta);   // closure of common JM weights
std::string format_blocks(const BlockPartition& b);

bool is_semisimple(Degree d, const FieldElement& delta);

// crude restriction d → d−1/2 and induction d → d+1/2 of cell modules (labels)
std::vector<Partition> restrict_cell_labels(const Partition& l, Degree d, int p);
std::vector<Partition> induce_cell_labels(const Partition& l, Degree d, int p);

// (submodule label, quotient label) of i-res Δ_d(λ) (at d−1/2) or i-ind Δ_d(λ) (at d+1/2)
struct LabelPair {
    std::optional<Partition> sub, quotient;
    std::vector<Partition> labels() const;
};
LabelPair i_res_cell(const Partition& l, const FieldElement& i, Degree d, const FieldElement& delta);
LabelPair i_ind_cell(const Partition& l, const FieldElement& i, Degree d, const FieldElement& delta);

// residues worth testing: all of GF(p), or integers near the diagram and δ minus them
std::vector<FieldElement> test_residues(Degree d, const FieldElement& delta);

struct IResSimple {
    char tag;                         // 'a'..'f'
    std::vector<Partition> socle;     // predicted socle labels of i-res L(λ)
    std::optional<Partition> partner; // (c)/(d): the other label of the λ⁺/λ⁻ pair
    bool plus = false;                // (c)/(d): λ is λ⁺
};
IResSimple i_res_simple(const Partition& l, const FieldElement& i, Degree d, const FieldElement& delta);
// independent classification read off the arrow shapes; returns every case whose shape matches
std::vector<std::string> i_res_shape_cases(const Partition& l, const FieldElement& i, Degree d, const FieldElement& delta);

} // namespace pa
