#pragma once

// Partitions, boxes, standard tableaux and integral Specht module data.

#include <cstdint>
#include <string>
#include <vector>

namespace pa {

using Partition = std::vector<int>;   // weakly decreasing, positive parts

struct BoxRef {
    int row, col;                     // 1-based
    int content() const { return col - row; }
    bool operator==(const BoxRef&) const = default;
};

int size(const Partition& l);
bool is_partition(const Partition& l);
std::string to_string(const Partition& l);          // "(3,1)", "()" for empty
Partition parse_partition(const std::string& s);    // "3,1", "(3,1)", "", "()", "0", "-"

std::vector<BoxRef> addable_boxes(const Partition& l);
std::vector<BoxRef> removable_boxes(const Partition& l);
Partition add_box(const Partition& l, const BoxRef& b);
Partition remove_box(const Partition& l, const BoxRef& b);
bool contained_in(const Partition& l, const Partition& m);   // l ⊆ m
int content_count(const Partition& l, int residue, int p);   // boxes with content ≡ residue

std::vector<Partition> partitions_of(int n);                 // reverse lexicographic
// all |λ| <= n; decreasing size, then reverse lexicographic
std::vector<Partition> partitions_up_to(int n);

long syt_count(const Partition& l);
bool is_p_regular(const Partition& l, int p);

// small dense integer matrix
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;
    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix&) const = default;
    static IntMatrix identity(int n);
};

using Tableau = std::vector<std::vector<int>>;   // rows of entries 1..n

// permutations of {0..n-1} as image vectors; index = lexicographic rank
std::vector<std::vector<int>> all_permutations(int n);
int permutation_index(const std::vector<int>& w);

struct SpechtData {
    Partition lambda;
    std::vector<Tableau> basis;          // standard tableaux, lex order on row-reading words
    std::vector<IntMatrix> generators;   // action of (i,i+1), i = 1..n-1 (index i-1)
    std::vector<IntMatrix> perm_action;  // action of every w, indexed by permutation_index
    IntMatrix form;                      // polytabloid inner products
    int dim() const { return static_cast<int>(basis.size()); }
};

std::vector<Tableau> standard_tableaux(const Partition& l);
// cached; throws past the size bound
const SpechtData& specht_data(const Partition& l);
void set_specht_bound(int n);
int specht_bound();

} // namespace pa
