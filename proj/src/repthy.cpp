#include "pa/repthy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pa {

namespace {

void require_regime(Degree d, int p, const char* what) {
    if (p != 0 && p <= d.floor())
        throw std::invalid_argument(std::string(what) + " requires p = 0 or p > floor(d) (p = " + std::to_string(p) +
                                    ", d = " + d.str() + ")");
}

FieldElement fe(long v, int p) { return FieldElement::from_int(v, p); }

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

BlockPartition classes(const std::vector<Partition>& labels, DSU& u) {
    std::map<int, std::vector<Partition>> by_root;
    std::vector<int> order;
    for (size_t i = 0; i < labels.size(); ++i) {
        int r = u.find(static_cast<int>(i));
        if (!by_root.count(r)) order.push_back(r);
        by_root[r].push_back(labels[i]);
    }
    BlockPartition out;
    for (int r : order) out.push_back(by_root[r]);
    return out;
}

Partition from_positions(std::vector<long> pos) {
    std::sort(pos.rbegin(), pos.rend());
    Partition l;
    for (size_t i = 0; i < pos.size(); ++i) {
        long part = pos[i] + static_cast<long>(i) + 1;
        if (part < 0) return {-1};
        if (part > 0) l.push_back(static_cast<int>(part));
    }
    return l;
}

} // namespace

std::vector<Partition> label_set(Degree d, const FieldElement& delta) {
    std::vector<Partition> out;
    for (auto& l : partitions_up_to(d.floor()))
        if (!(l.empty() && !d.is_half() && delta.is_zero() && d.floor() > 0)) out.push_back(l);
    return out;
}

int one_box_decnumber(const Partition& mu, const BoxRef& eps, bool half, const FieldElement& delta) {
    auto rem = removable_boxes(mu);
    if (std::find(rem.begin(), rem.end(), eps) == rem.end()) throw std::invalid_argument("box is not removable");
    const int p = delta.characteristic(), r = size(mu);
    FieldElement target = half ? delta - r : delta - r + 1;
    return fe(eps.content(), p) == target ? 1 : 0;
}

int DecompositionMatrix::at(const Partition& l, const Partition& m) const {
    auto i = std::find(rows.begin(), rows.end(), l), j = std::find(cols.begin(), cols.end(), m);
    if (i == rows.end() || j == cols.end()) throw std::invalid_argument("label not in the decomposition matrix");
    return entry[i - rows.begin()][j - cols.begin()];
}

std::string DecompositionMatrix::table() const {
    std::vector<std::string> rn, cn;
    size_t w = 0;
    for (auto& l : rows) { rn.push_back(to_string(l)); w = std::max(w, rn.back().size()); }
    for (auto& m : cols) cn.push_back(to_string(m));
    std::ostringstream os;
    os << std::string(w, ' ');
    for (auto& c : cn) os << "  " << c;
    os << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        os << rn[i] << std::string(w - rn[i].size(), ' ');
        for (size_t j = 0; j < cols.size(); ++j) {
            std::string cell = entry[i][j] ? "1" : ".";
            size_t pad = cn[j].size();
            os << "  " << std::string(pad - 1 - (pad - 1) / 2, ' ') << cell << std::string((pad - 1) / 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

DecompositionMatrix decomposition_matrix(Degree d, const FieldElement& delta) {
    const int p = delta.characteristic();
    require_regime(d, p, "decomposition_matrix");
    DecompositionMatrix D;
    D.d = d;
    D.delta = delta;
    D.rows = label_set(d, delta);
    for (auto& m : D.rows)
        if (is_p_regular(m, p)) D.cols.push_back(m);
    D.entry.assign(D.rows.size(), std::vector<int>(D.cols.size(), 0));
    for (size_t i = 0; i < D.rows.size(); ++i)
        for (size_t j = 0; j < D.cols.size(); ++j) {
            const Partition &l = D.rows[i], &m = D.cols[j];
            if (l == m) D.entry[i][j] = 1;
            else if (size(l) < size(m)) {
                Degree dm(2 * size(m) + (d.is_half() ? 1 : 0));
                D.entry[i][j] = matches_pattern(l, m, dm, delta) ? 1 : 0;
            }
        }
    return D;
}

std::optional<int> transposition_equiv(const Partition& l, const Partition& mu, Degree d, long delta) {
    const int r = d.floor();
    if (size(l) > r || size(mu) > r) throw std::invalid_argument("label too large for degree");
    if (l == mu) return std::nullopt;
    std::vector<long> rho(r + 1), w(r + 1);
    rho[0] = d.is_half() ? 0 : 1;
    for (int i = 1; i <= r; ++i) rho[i] = (1 - delta) - i;
    w[0] = -size(mu);
    for (int i = 1; i <= r; ++i) w[i] = i <= static_cast<int>(mu.size()) ? mu[i - 1] : 0;
    for (int i = 1; i <= r; ++i) {
        std::vector<long> v(r + 1);
        for (int k = 0; k <= r; ++k) v[k] = w[k] + rho[k];
        std::swap(v[0], v[i]);
        for (int k = 0; k <= r; ++k) v[k] -= rho[k];
        bool dominant = v[r] >= 0;
        long tot = 0;
        for (int k = 1; k <= r; ++k) {
            if (k < r && v[k] < v[k + 1]) dominant = false;
            tot += v[k];
        }
        if (!dominant || v[0] != -tot) continue;
        Partition cand;
        for (int k = 1; k <= r; ++k)
            if (v[k] > 0) cand.push_back(static_cast<int>(v[k]));
        if (cand == l) return i;
    }
    return std::nullopt;
}

BlockPartition blocks(Degree d, const FieldElement& delta) {
    auto labels = label_set(d, delta);
    DSU u(static_cast<int>(labels.size()));
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (same_arrow_counts(labels[i], labels[j], d, delta)) u.unite(static_cast<int>(i), static_cast<int>(j));
    return classes(labels, u);
}

BlockPartition blocks_via_moves(Degree d, const FieldElement& delta) {
    const int p = delta.characteristic(), r = d.floor();
    const long shift = d.is_half() ? 1 : 0;   // conjugation by τ
    auto labels = label_set(d, delta);
    std::map<Partition, int> idx;
    for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
    DSU u(static_cast<int>(labels.size()));
    const int N = r + 3;
    auto col = [&](long x) { return p ? ((x % p) + p) % p : x; };
    for (size_t li = 0; li < labels.size(); ++li) {
        const Partition& l = labels[li];
        std::vector<long> pos = arrow_diagram(l, delta).vee_positions(N);
        std::set<long> occ(pos.begin(), pos.end());
        auto free_at = [&](long y) { return y >= -N && !occ.count(y); };
        std::vector<Partition> out;
        auto emit = [&](std::vector<long> np) { out.push_back(from_positions(std::move(np))); };
        // (b) a ∨ moves into the column of the ∧, which moves to the ∨'s old column
        FieldElement wedge = delta - size(l) - shift;
        if (p || wedge.is_integer()) {
            long wc = p ? wedge.residue() : wedge.to_long();
            for (size_t a = 0; a < pos.size(); ++a)
                for (long y = -N; y <= r + p + 1; ++y)
                    if (col(y) == wc && free_at(y)) {
                        auto np = pos;
                        np[a] = y;
                        emit(np);
                    }
        }
        // (a) a ∨ moves within its column (the ∧ follows implicitly), alone or paired
        if (p) {
            for (size_t a = 0; a < pos.size(); ++a)
                for (int s : {p, -p}) {
                    if (!free_at(pos[a] + s)) continue;
                    auto np = pos;
                    np[a] += s;
                    emit(np);
                    std::set<long> occ2(np.begin(), np.end());
                    for (size_t b = 0; b < pos.size(); ++b) {
                        if (b == a) continue;
                        long y = np[b] - s;
                        if (y < -N || occ2.count(y)) continue;
                        auto nq = np;
                        nq[b] = y;
                        emit(nq);
                    }
                }
        }
        for (auto& m : out) {
            if (!m.empty() && m[0] < 0) continue;
            auto it = idx.find(m);
            if (it != idx.end()) u.unite(static_cast<int>(li), it->second);
        }
    }
    return classes(labels, u);
}

BlockPartition blocks_via_weights(Degree d, const FieldElement& delta) {
    auto labels = label_set(d, delta);
    DSU u(static_cast<int>(labels.size()));
    std::map<std::string, int> owner;
    for (size_t i = 0; i < labels.size(); ++i)
        for (auto& t : enumerate_tableaux(d, labels[i])) {
            std::string key;
            for (auto& x : jm_weight(t, delta)) key += x.str() + ",";
            auto [it, fresh] = owner.try_emplace(key, static_cast<int>(i));
            if (!fresh) u.unite(static_cast<int>(i), it->second);
        }
    return classes(labels, u);
}

std::string format_blocks(const BlockPartition& b) {
    std::ostringstream os;
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) os << " ";
        os << "{";
        for (size_t j = 0; j < b[i].size(); ++j) os << (j ? "," : "") << to_string(b[i][j]);
        os << "}";
    }
    return os.str();
}

bool is_semisimple(Degree d, const FieldElement& delta) {
    const int p = delta.characteristic(), r = d.floor();
    if (p != 0 && p <= r) return false;
    // δ ∉ {2(d−r), …, 2(d−1)} = {twice − 2r, …, twice − 2}
    for (long v = d.twice - 2 * r; v <= d.twice - 2; ++v)
        if (delta == fe(v, p)) return false;
    return true;
}

std::vector<Partition> restrict_cell_labels(const Partition& l, Degree d, int p) {
    require_regime(d, p, "restrict_cell_labels");
    const int r = d.floor();
    if (size(l) > r) throw std::invalid_argument("label too large for degree");
    std::vector<Partition> out;
    if (!d.is_half()) {
        for (auto& b : removable_boxes(l)) out.push_back(remove_box(l, b));
        if (size(l) <= r - 1) out.push_back(l);
    } else {
        out.push_back(l);
        if (size(l) + 1 <= r)
            for (auto& b : addable_boxes(l)) out.push_back(add_box(l, b));
    }
    return out;
}

std::vector<Partition> induce_cell_labels(const Partition& l, Degree d, int p) {
    require_regime(Degree(d.twice + 1), p, "induce_cell_labels");
    if (size(l) > d.floor()) throw std::invalid_argument("label too large for degree");
    std::vector<Partition> out;
    if (!d.is_half()) {
        for (auto& b : removable_boxes(l)) out.push_back(remove_box(l, b));
        out.push_back(l);
    } else {
        out.push_back(l);
        for (auto& b : addable_boxes(l)) out.push_back(add_box(l, b));
    }
    return out;
}

std::vector<Partition> LabelPair::labels() const {
    std::vector<Partition> v;
    if (sub) v.push_back(*sub);
    if (quotient) v.push_back(*quotient);
    return v;
}

LabelPair i_res_cell(const Partition& l, const FieldElement& i, Degree d, const FieldElement& delta) {
    const int p = delta.characteristic(), r = d.floor();
    require_regime(d, p, "i_res_cell");
    if (size(l) > r) throw std::invalid_argument("label too large for degree");
    LabelPair out;
    if (!d.is_half()) {
        for (auto& b : removable_boxes(l))
            if (fe(b.content(), p) == i) out.sub = remove_box(l, b);
        if (fe(size(l), p) == delta - i && size(l) <= r - 1) out.quotient = l;
    } else {
        if (fe(size(l), p) == i) out.sub = l;
        if (size(l) + 1 <= r)
            for (auto& b : addable_boxes(l))
                if (fe(b.content(), p) == delta - i) out.quotient = add_box(l, b);
    }
    return out;
}

LabelPair i_ind_cell(const Partition& l, const FieldElement& i, Degree d, const FieldElement& delta) {
    const int p = delta.characteristic();
    require_regime(Degree(d.twice + 1), p, "i_ind_cell");
    if (size(l) > d.floor()) throw std::invalid_argument("label too large for degree");
    LabelPair out;
    if (!d.is_half()) {
        for (auto& b : removable_boxes(l))
            if (fe(b.content(), p) == delta - i) out.sub = remove_box(l, b);
        if (fe(size(l), p) == i) out.quotient = l;
    } else {
        if (fe(size(l), p) == delta - i) out.sub = l;
        for (auto& b : addable_boxes(l))
            if (fe(b.content(), p) == i) out.quotient = add_box(l, b);
    }
    return out;
}

std::vector<FieldElement> test_residues(Degree d, const FieldElement& delta) {
    const int p = delta.characteristic(), r = d.floor();
    std::set<FieldElement> s;
    if (p) {
        for (int v = 0; v < p; ++v) s.insert(fe(v, p));
    } else {
        for (int v = -r - 2; v <= r + 2; ++v) {
            s.insert(fe(v, 0));
            s.insert(delta - v);
        }
    }
    return {s.begin(), s.end()};
}

IResSimple i_res_simple(const Partition& l, const FieldElement& i, Degree d, const FieldElement& delta) {
    const bool half = d.is_half();
    auto res = i_res_cell(l, i, d, delta).labels();
    IResSimple out;
    if (res.empty()) { out.tag = 'a'; return out; }
    if (res.size() == 2) { out.tag = half ? 'f' : 'e'; out.socle = res; return out; }
    auto back = i_ind_cell(res[0], i, Degree(d.twice - 1), delta).labels();
    if (back.size() == 1) {
        if (back[0] != l) throw std::logic_error("i-ind of the i-res label does not return the label");
        out.tag = 'b';
        out.socle = res;
        return out;
    }
    out.tag = half ? 'd' : 'c';
    const Partition& other = back[0] == l ? back[1] : back[0];
    out.partner = other;
    out.plus = size(l) > size(other);
    if (out.plus) out.socle = res;
    return out;
}

std::vector<std::string> i_res_shape_cases(const Partition& l, const FieldElement& i, Degree d, const FieldElement& delta) {
    const int p = delta.characteristic(), r = d.floor(), n = size(l);
    auto has_rem = [&](const FieldElement& c) {
        for (auto& b : removable_boxes(l))
            if (fe(b.content(), p) == c) return true;
        return false;
    };
    auto has_add = [&](const FieldElement& c) {
        for (auto& b : addable_boxes(l))
            if (fe(b.content(), p) == c) return true;
        return false;
    };
    std::vector<std::string> cases;
    bool A, B;
    if (!d.is_half()) {
        // A: a ∨ leaves column i; B: the ∧ can move
        A = has_rem(i);
        B = fe(n, p) == delta - i && n <= r - 1;
        if (!A && !B) cases.push_back("a");
        if (A && B) cases.push_back("e");
        bool cplus = A && !B && fe(n, p) == delta - i + 1;
        bool cminus = B && !A && has_add(i);
        if (cplus) cases.push_back("c+");
        if (cminus) cases.push_back("c-");
        if ((A != B) && !cplus && !cminus) cases.push_back("b");
    } else {
        A = fe(n, p) == i;
        B = has_add(delta - i) && n + 1 <= r;
        if (!A && !B) cases.push_back("a");
        if (A && B) cases.push_back("f");
        bool dplus = A && !B && has_rem(delta - i);
        bool dminus = B && !A && fe(n, p) == i - 1;
        if (dplus) cases.push_back("d+");
        if (dminus) cases.push_back("d-");
        if ((A != B) && !dplus && !dminus) cases.push_back("b");
    }
    return cases;
}

} // namespace pa
