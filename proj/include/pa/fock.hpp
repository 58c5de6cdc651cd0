#pragma once

// Fock space on the classes [Δ_k(λ)] with the E_i, F_i, K_i, K_d action.

#include "pa/combinatorics.hpp"
#include "pa/repthy.hpp"
#include "pa/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace pa {

// Where the ∧ sits in the reading order used for the above/below counts.
enum class WedgeOrder { Last, First, Interleaved };

// Level k carries the parameter δ_k = δ + k − r, so f moves P_k(δ_k) to P_{k+1}(δ_k + 1).
struct FockContext {
    int r = 0;
    FieldElement delta;
    WedgeOrder order = WedgeOrder::Last;
    int p() const { return delta.characteristic(); }
    FieldElement delta_at(int k) const { return delta + (k - r); }
};

struct FockKey {
    int k;
    Partition lambda;   // |λ| > k is allowed for intermediate (virtual) vectors
    auto operator<=>(const FockKey&) const = default;
};

using FockVector = std::map<FockKey, LaurentPoly>;

// residues: integers for p = 0, 0..p-1 for p > 0
struct Site {
    bool wedge;        // the ∧ (otherwise a ∨ bead)
    bool addable;      // otherwise removable
    long position;     // integer position on its track
};

struct ArrowCounts {
    int A = 0, R = 0;
    std::vector<Site> sites;   // in reading order
};

ArrowCounts addable_removable(const FockContext& c, const FockKey& v, long i);

std::string to_string(const FockVector& v);
FockVector basis_vector(const FockKey& v);
void add_to(FockVector& acc, const FockVector& x, const LaurentPoly& c = LaurentPoly(1));

// apply_E sets *truncated when a nonzero term would fall below level 0
FockVector apply_E(const FockContext& c, long i, const FockVector& v, bool* truncated = nullptr);
FockVector apply_F(const FockContext& c, long i, const FockVector& v);
FockVector apply_K(const FockContext& c, long i, const FockVector& v, int power = 1);
FockVector apply_Kd(const FockContext& c, const FockVector& v, int power = 1);   // p > 0 only

int K_exponent(const FockContext& c, const FockKey& v, long i);
int Kd_exponent(const FockContext& c, const FockKey& v);

// all K exponents (nonzero ones for p = 0) and K_d
struct FockWeight {
    std::map<long, int> k;
    int kd = 0;
    auto operator<=>(const FockWeight&) const = default;
};
FockWeight fock_weight(const FockContext& c, const FockKey& v);

int cartan(int p, long i, long j);
// residues used by the relation suite
std::vector<long> relation_residues(const FockContext& c, int max_level);

struct RelationRecord {
    std::string relation;
    long i = 0, j = 0;
    FockKey vector;
    bool pass = true;
};
struct RelationReport {
    long checked = 0, failed = 0, skipped = 0;
    std::vector<RelationRecord> failures;   // capped witnesses
    bool ok() const { return failed == 0 && checked > 0; }
};
RelationReport check_relations(const FockContext& c, int max_level, const std::vector<long>& residues);

// equal weights at level k ⇔ same block of P_k(δ_k)
bool weight_block_correspondence(const FockContext& c, int k);

// E_i^{k+1} kills [Δ_k(λ)]
bool e_nilpotent(const FockContext& c, int k, const std::vector<long>& residues);

// F_i at q = 1 reproduces the labels of i-ind after the half-integer shift (p = 0 or p > k+1)
bool f_matches_i_ind(const FockContext& c, int k, const std::vector<long>& residues);

} // namespace pa
