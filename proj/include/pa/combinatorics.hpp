#pragma once

// Up-down tableaux, JM weights and arrow diagrams.

#include "pa/scalars.hpp"
#include "pa/young.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pa {

struct Degree {
    int twice = 2;                      // d = twice/2
    Degree() = default;
    explicit Degree(int tw) : twice(tw) {
        if (tw < 0) throw std::invalid_argument("negative degree");
    }
    static Degree integer(int r) { return Degree(2 * r); }
    static Degree half(int r) { return Degree(2 * r + 1); }   // r + 1/2
    static Degree parse(const std::string& s);                 // "3", "3+1/2", "7/2"
    int floor() const { return twice / 2; }
    bool is_half() const { return twice % 2 == 1; }
    // number of columns of the diagrams
    int columns() const { return (twice + 1) / 2; }
    std::string str() const;
    bool operator==(const Degree&) const = default;
};

using UpDownTableau = std::vector<Partition>;   // t^{1/2}, t^1, ..., t^d
using JMWeight = std::vector<FieldElement>;

std::vector<UpDownTableau> enumerate_tableaux(Degree d, const Partition& l);
JMWeight jm_weight(const UpDownTableau& t, const FieldElement& delta);
bool common_jm_weight_bruteforce(const Partition& l, const Partition& m, Degree d, const FieldElement& delta);

// Arrow diagram: ∨ at λ_i - i (cofinite tail), one ∧ in the column with
// above-label δ - |λ|. Columns are above-labels (char 0) or residues (char p).
struct ArrowDiagram {
    int p = 0;
    Partition lambda;
    FieldElement delta;
    FieldElement wedge;                 // column of the ∧ (above-label)
    // μ-projection (p > r): window of above-labels [lo, hi], ∨ only for i <= k
    bool projected = false;
    int proj_k = 0;
    long proj_wedge = 0;                // integer label of the ∧ inside the window

    std::vector<long> vee_positions(int count) const;   // λ_i - i, i = 1..count
    std::string render(int lo, int hi) const;            // ASCII, columns hi..lo
};

ArrowDiagram arrow_diagram(const Partition& l, const FieldElement& delta);
ArrowDiagram tau(const ArrowDiagram& a, int sign = 1);   // ∧ up by one below the line
ArrowDiagram mu_projection(const Partition& l, const Partition& mu, const FieldElement& delta);

using ColumnProfile = std::map<FieldElement, int>;
ColumnProfile column_profile(const ArrowDiagram& a, int r);
bool same_arrow_counts(const Partition& l, const Partition& t, Degree d, const FieldElement& delta);
bool matches_pattern(const Partition& l, const Partition& mu, Degree d, const FieldElement& delta);

} // namespace pa
