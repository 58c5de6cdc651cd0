#pragma once

// Set-partition diagrams on {1..n, 1'..n'} and sparse algebra elements.

#include "pa/scalars.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pa {

// Points are interleaved 1 < 1' < 2 < 2' < ... ; top(i) = 2(i-1), bot(i) = 2(i-1)+1.
class Diagram {
public:
    Diagram() = default;
    // blocks given as lists of point indices (see top()/bot())
    static Diagram from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    // labels: block id per point (any ids); canonicalized
    static Diagram from_labels(int n, std::vector<int> labels);
    static Diagram identity(int n);

    static int top(int i) { return 2 * (i - 1); }
    static int bot(int i) { return 2 * (i - 1) + 1; }

    int degree() const { return n_; }
    int num_blocks() const { return nb_; }
    int block_of(int point) const { return lab_[point]; }
    std::vector<std::vector<int>> blocks() const;

    bool operator==(const Diagram& o) const { return n_ == o.n_ && lab_ == o.lab_; }
    bool operator!=(const Diagram& o) const { return !(*this == o); }
    bool operator<(const Diagram& o) const { return n_ != o.n_ ? n_ < o.n_ : lab_ < o.lab_; }

    const std::vector<uint8_t>& labels() const { return lab_; }

private:
    int n_ = 0, nb_ = 0;
    std::vector<uint8_t> lab_;
};

int propagating_number(const Diagram& d);
// a on top of b; returns (a∘b, number of deleted middle components)
std::pair<Diagram, int> concatenate(const Diagram& a, const Diagram& b);
Diagram flip(const Diagram& d);
// r and r' in the same block (element of the half-integer subalgebra)
bool is_half(const Diagram& d);

enum class GenKind { S, A, AA, E };
// s_i, A_i, A_{i,i+1}, e_l (l >= 1)
Diagram generator(GenKind kind, int index, int n);

Diagram parse_diagram(const std::string& text, int n = 0);   // n = 0: infer degree
std::string format_diagram(const Diagram& d);

std::vector<Diagram> all_diagrams(int n);                    // Bell(2n) of them

class AlgebraElement {
public:
    AlgebraElement(int n, bool half, FieldElement delta);
    static AlgebraElement basis(const Diagram& d, FieldElement delta, bool half = false);
    // e_0 = (1/δ)·(all top joined, all bottom joined); requires δ ≠ 0
    static AlgebraElement e0(int n, FieldElement delta);

    int degree() const { return n_; }
    bool half() const { return half_; }
    const FieldElement& delta() const { return delta_; }
    const std::map<Diagram, FieldElement>& terms() const { return t_; }
    void add(const Diagram& d, const FieldElement& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator*(const FieldElement& c) const;
    bool operator==(const AlgebraElement& o) const;

private:
    int n_;
    bool half_;
    FieldElement delta_;
    std::map<Diagram, FieldElement> t_;
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

} // namespace pa
