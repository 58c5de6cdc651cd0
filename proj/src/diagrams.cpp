#include "pa/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pa {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

Diagram Diagram::from_labels(int n, std::vector<int> labels) {
    if (static_cast<int>(labels.size()) != 2 * n) throw std::invalid_argument("label vector has wrong size");
    Diagram d;
    d.n_ = n;
    d.lab_.resize(2 * n);
    std::map<int, int> ren;
    for (int i = 0; i < 2 * n; ++i) {
        auto [it, fresh] = ren.try_emplace(labels[i], static_cast<int>(ren.size()));
        d.lab_[i] = static_cast<uint8_t>(it->second);
    }
    d.nb_ = static_cast<int>(ren.size());
    return d;
}

Diagram Diagram::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> lab(2 * n, -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block");
        for (int x : blocks[b]) {
            if (x < 0 || x >= 2 * n) throw std::invalid_argument("point out of range");
            if (lab[x] != -1) throw std::invalid_argument("blocks are not disjoint");
            lab[x] = static_cast<int>(b);
        }
    }
    for (int x : lab)
        if (x == -1) throw std::invalid_argument("blocks do not cover all points");
    return from_labels(n, lab);
}

Diagram Diagram::identity(int n) {
    std::vector<int> lab(2 * n);
    for (int i = 0; i < 2 * n; ++i) lab[i] = i / 2;
    return from_labels(n, lab);
}

std::vector<std::vector<int>> Diagram::blocks() const {
    std::vector<std::vector<int>> b(nb_);
    for (int i = 0; i < 2 * n_; ++i) b[lab_[i]].push_back(i);
    return b;
}

int propagating_number(const Diagram& d) {
    std::vector<char> t(d.num_blocks()), b(d.num_blocks());
    for (int i = 1; i <= d.degree(); ++i) {
        t[d.block_of(Diagram::top(i))] = 1;
        b[d.block_of(Diagram::bot(i))] = 1;
    }
    int c = 0;
    for (int k = 0; k < d.num_blocks(); ++k) c += t[k] && b[k];
    return c;
}

std::pair<Diagram, int> concatenate(const Diagram& a, const Diagram& b) {
    const int n = a.degree();
    if (b.degree() != n) throw std::invalid_argument("degree mismatch in concatenation");
    // nodes: top of a [0,n), middle [n,2n), bottom of b [2n,3n)
    UnionFind uf(3 * n);
    std::vector<int> first_a(a.num_blocks(), -1), first_b(b.num_blocks(), -1);
    for (int i = 1; i <= n; ++i) {
        int nodes_a[2] = {i - 1, n + i - 1};
        int pts_a[2] = {Diagram::top(i), Diagram::bot(i)};
        for (int s = 0; s < 2; ++s) {
            int blk = a.block_of(pts_a[s]);
            if (first_a[blk] < 0) first_a[blk] = nodes_a[s];
            else uf.unite(nodes_a[s], first_a[blk]);
        }
        int nodes_b[2] = {n + i - 1, 2 * n + i - 1};
        int pts_b[2] = {Diagram::top(i), Diagram::bot(i)};
        for (int s = 0; s < 2; ++s) {
            int blk = b.block_of(pts_b[s]);
            if (first_b[blk] < 0) first_b[blk] = nodes_b[s];
            else uf.unite(nodes_b[s], first_b[blk]);
        }
    }
    std::vector<char> outer(3 * n, 0);
    std::vector<int> lab(2 * n);
    for (int i = 1; i <= n; ++i) {
        int rt = uf.find(i - 1), rb = uf.find(2 * n + i - 1);
        outer[rt] = outer[rb] = 1;
        lab[Diagram::top(i)] = rt;
        lab[Diagram::bot(i)] = rb;
    }
    int deleted = 0;
    std::vector<char> seen(3 * n, 0);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(n + i);
        if (!outer[r] && !seen[r]) { seen[r] = 1; ++deleted; }
    }
    return {Diagram::from_labels(n, lab), deleted};
}

Diagram flip(const Diagram& d) {
    const int n = d.degree();
    std::vector<int> lab(2 * n);
    for (int i = 1; i <= n; ++i) {
        lab[Diagram::top(i)] = d.block_of(Diagram::bot(i));
        lab[Diagram::bot(i)] = d.block_of(Diagram::top(i));
    }
    return Diagram::from_labels(n, lab);
}

bool is_half(const Diagram& d) {
    int n = d.degree();
    return n > 0 && d.block_of(Diagram::top(n)) == d.block_of(Diagram::bot(n));
}

Diagram generator(GenKind kind, int i, int n) {
    std::vector<int> lab(2 * n);
    for (int k = 0; k < 2 * n; ++k) lab[k] = k / 2;   // identity
    auto T = Diagram::top, B = Diagram::bot;
    switch (kind) {
    case GenKind::S:
        if (i < 1 || i > n - 1) throw std::invalid_argument("s_i index out of range");
        lab[T(i)] = lab[B(i + 1)] = 1000;
        lab[T(i + 1)] = lab[B(i)] = 1001;
        break;
    case GenKind::A:
        if (i < 1 || i > n) throw std::invalid_argument("A_i index out of range");
        lab[T(i)] = 1000;
        lab[B(i)] = 1001;
        break;
    case GenKind::AA:
        if (i < 1 || i > n - 1) throw std::invalid_argument("A_{i,i+1} index out of range");
        lab[T(i)] = lab[B(i)] = lab[T(i + 1)] = lab[B(i + 1)] = 1000;
        break;
    case GenKind::E:
        if (i < 1 || i > n) throw std::invalid_argument("e_l index out of range (e_0 is an algebra element)");
        for (int k = 1; k <= n - i; ++k) lab[T(k)] = lab[B(k)] = 1000;
        break;
    }
    return Diagram::from_labels(n, lab);
}

// ---------------------------------------------------------------- text format

static std::string point_name(int x) {
    return std::to_string(x / 2 + 1) + (x % 2 ? "'" : "");
}

std::string format_diagram(const Diagram& d) {
    std::ostringstream os;
    auto bl = d.blocks();
    for (size_t b = 0; b < bl.size(); ++b) {
        if (b) os << ",";
        os << "{";
        for (size_t k = 0; k < bl[b].size(); ++k) os << (k ? "," : "") << point_name(bl[b][k]);
        os << "}";
    }
    return os.str();
}

Diagram parse_diagram(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks;
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    int maxpt = 0;
    skip();
    while (i < text.size()) {
        if (text[i] != '{') throw std::invalid_argument("malformed diagram: expected '{'");
        ++i;
        std::vector<int> blk;
        for (;;) {
            skip();
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw std::invalid_argument("malformed diagram: expected point");
            int v = std::stoi(text.substr(i, j - i));
            if (v < 1) throw std::invalid_argument("malformed diagram: points start at 1");
            i = j;
            bool primed = i < text.size() && text[i] == '\'';
            if (primed) ++i;
            maxpt = std::max(maxpt, v);
            blk.push_back(2 * (v - 1) + (primed ? 1 : 0));
            skip();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == '}') { ++i; break; }
            throw std::invalid_argument("malformed diagram: expected ',' or '}'");
        }
        blocks.push_back(blk);
        skip();
        if (i < text.size() && text[i] == ',') { ++i; skip(); }
    }
    if (n == 0) n = maxpt;
    if (maxpt > n) throw std::invalid_argument("point exceeds declared degree");
    if (n > 60) throw std::invalid_argument("degree too large");
    return Diagram::from_blocks(n, blocks);
}

std::vector<Diagram> all_diagrams(int n) {
    // restricted growth strings over 2n points
    std::vector<Diagram> out;
    std::vector<int> a(2 * n, 0);
    std::vector<int> mx(2 * n, 0);
    if (n == 0) return {Diagram::from_labels(0, {})};
    for (;;) {
        out.push_back(Diagram::from_labels(n, a));
        int k = 2 * n - 1;
        while (k > 0 && a[k] == mx[k - 1] + 1) --k;
        if (k == 0) break;
        ++a[k];
        mx[k] = std::max(mx[k - 1], a[k]);
        for (int j = k + 1; j < 2 * n; ++j) { a[j] = 0; mx[j] = mx[k]; }
    }
    return out;
}

// ---------------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(int n, bool half, FieldElement delta) : n_(n), half_(half), delta_(std::move(delta)) {}

AlgebraElement AlgebraElement::basis(const Diagram& d, FieldElement delta, bool half) {
    if (half && !is_half(d)) throw std::invalid_argument("diagram is not in the half-integer subalgebra");
    AlgebraElement x(d.degree(), half, delta);
    x.add(d, FieldElement::from_int(1, delta.characteristic()));
    return x;
}

AlgebraElement AlgebraElement::e0(int n, FieldElement delta) {
    if (delta.is_zero()) throw std::invalid_argument("e_0 is undefined for delta = 0");
    std::vector<int> lab(2 * n);
    for (int k = 0; k < 2 * n; ++k) lab[k] = k % 2;
    AlgebraElement x(n, false, delta);
    x.add(Diagram::from_labels(n, lab), delta.inv());
    return x;
}

void AlgebraElement::add(const Diagram& d, const FieldElement& c) {
    if (d.degree() != n_) throw std::invalid_argument("degree mismatch");
    if (half_ && !is_half(d)) throw std::invalid_argument("diagram is not in the half-integer subalgebra");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(d, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (o.n_ != n_ || o.delta_ != delta_) throw std::invalid_argument("degree/delta mismatch");
    AlgebraElement x(n_, half_ && o.half_, delta_);
    for (auto& [d, c] : t_) x.add(d, c);
    for (auto& [d, c] : o.t_) x.add(d, c);
    return x;
}

AlgebraElement AlgebraElement::operator*(const FieldElement& c) const {
    AlgebraElement x(n_, half_, delta_);
    for (auto& [d, a] : t_) x.add(d, a * c);
    return x;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return n_ == o.n_ && delta_ == o.delta_ && t_ == o.t_;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.degree() != y.degree() || x.delta() != y.delta()) throw std::invalid_argument("degree/delta mismatch");
    AlgebraElement z(x.degree(), x.half() && y.half(), x.delta());
    for (auto& [a, ca] : x.terms())
        for (auto& [b, cb] : y.terms()) {
            auto [d, e] = concatenate(a, b);
            z.add(d, ca * cb * x.delta().pow(e));
        }
    return z;
}

} // namespace pa
