#include "pa/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pa {

Degree Degree::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    try {
        size_t pos;
        if (auto plus = t.find("+1/2"); plus != std::string::npos && plus + 4 == t.size()) {
            int r = std::stoi(t.substr(0, plus), &pos);
            if (pos != plus || r < 0) throw std::invalid_argument("");
            return Degree(2 * r + 1);
        }
        if (auto sl = t.find("/2"); sl != std::string::npos && sl + 2 == t.size()) {
            int tw = std::stoi(t.substr(0, sl), &pos);
            if (pos != sl || tw < 0) throw std::invalid_argument("");
            return Degree(tw);
        }
        int r = std::stoi(t, &pos);
        if (pos != t.size() || r < 0) throw std::invalid_argument("");
        return Degree(2 * r);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed degree '" + s + "' (use \"3\" or \"3+1/2\")");
    }
}

std::string Degree::str() const {
    return is_half() ? std::to_string(floor()) + "+1/2" : std::to_string(floor());
}

// ---------------------------------------------------------------- tableaux

static void extend(int j, int twice, UpDownTableau& cur, const Partition& target, std::vector<UpDownTableau>& out) {
    if (j == twice) {
        if (cur.back() == target) out.push_back(cur);
        return;
    }
    const Partition prev = cur.back();
    bool integer_step = (j % 2 == 1);
    cur.push_back(prev);
    extend(j + 1, twice, cur, target, out);
    cur.pop_back();
    auto boxes = integer_step ? addable_boxes(prev) : removable_boxes(prev);
    for (auto& b : boxes) {
        Partition nx = integer_step ? add_box(prev, b) : remove_box(prev, b);
        cur.push_back(nx);
        extend(j + 1, twice, cur, target, out);
        cur.pop_back();
    }
}

std::vector<UpDownTableau> enumerate_tableaux(Degree d, const Partition& l) {
    if (size(l) > d.floor()) throw std::invalid_argument("partition too large for degree");
    std::vector<UpDownTableau> out;
    if (d.twice == 0) {
        if (l.empty()) out.push_back({});
        return out;
    }
    UpDownTableau cur{Partition{}};
    extend(1, d.twice, cur, l, out);
    return out;
}

static std::pair<bool, BoxRef> box_diff(const Partition& small, const Partition& big) {
    for (auto& b : addable_boxes(small))
        if (add_box(small, b) == big) return {true, b};
    return {false, {0, 0}};
}

JMWeight jm_weight(const UpDownTableau& t, const FieldElement& delta) {
    const int p = delta.characteristic();
    JMWeight w;
    for (size_t j = 0; j < t.size(); ++j) {
        const Partition empty;
        const Partition& prev = j ? t[j - 1] : empty;
        const Partition& cur = t[j];
        bool integer_step = (j % 2 == 1);   // k = (j+1)/2
        if (cur == prev) {
            w.push_back(integer_step ? delta - size(cur) : FieldElement::from_int(size(cur), p));
        } else if (integer_step) {
            auto [ok, b] = box_diff(prev, cur);
            if (!ok) throw std::invalid_argument("invalid tableau: integer step must add a box");
            w.push_back(FieldElement::from_int(b.content(), p));
        } else {
            auto [ok, b] = box_diff(cur, prev);
            if (!ok) throw std::invalid_argument("invalid tableau: half step must remove a box");
            w.push_back(delta - b.content());
        }
    }
    return w;
}

static std::string weight_key(const JMWeight& w) {
    std::string s;
    for (auto& x : w) s += x.str() + ",";
    return s;
}

bool common_jm_weight_bruteforce(const Partition& l, const Partition& m, Degree d, const FieldElement& delta) {
    std::set<std::string> wl;
    for (auto& t : enumerate_tableaux(d, l)) wl.insert(weight_key(jm_weight(t, delta)));
    for (auto& u : enumerate_tableaux(d, m))
        if (wl.count(weight_key(jm_weight(u, delta)))) return true;
    return false;
}

// ---------------------------------------------------------------- arrow diagrams

std::vector<long> ArrowDiagram::vee_positions(int count) const {
    std::vector<long> v;
    for (int i = 1; i <= count; ++i) v.push_back((i <= static_cast<int>(lambda.size()) ? lambda[i - 1] : 0) - i);
    return v;
}

ArrowDiagram arrow_diagram(const Partition& l, const FieldElement& delta) {
    ArrowDiagram a;
    a.p = delta.characteristic();
    a.lambda = l;
    a.delta = delta;
    a.wedge = delta - size(l);
    return a;
}

ArrowDiagram tau(const ArrowDiagram& a, int sign) {
    ArrowDiagram b = a;
    b.wedge = a.wedge - sign;
    if (b.projected) {
        long lo = -b.proj_k - 1, hi = a.p - b.proj_k - 2;
        b.proj_wedge -= sign;
        if (b.proj_wedge < lo) b.proj_wedge += a.p;
        if (b.proj_wedge > hi) b.proj_wedge -= a.p;
    }
    return b;
}

static long mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

ArrowDiagram mu_projection(const Partition& l, const Partition& mu, const FieldElement& delta) {
    const int p = delta.characteristic();
    if (p <= size(mu)) throw std::invalid_argument("mu-projection requires p > |mu|");
    if (!contained_in(l, mu)) throw std::invalid_argument("mu-projection requires lambda contained in mu");
    ArrowDiagram a = arrow_diagram(l, delta);
    a.projected = true;
    a.proj_k = static_cast<int>(mu.size());
    long lo = -a.proj_k - 1;
    a.proj_wedge = lo + mod(a.wedge.residue() - lo, p);
    return a;
}

ColumnProfile column_profile(const ArrowDiagram& a, int r) {
    ColumnProfile prof;
    for (long v : a.vee_positions(r + 1)) ++prof[FieldElement::from_int(v, a.p)];
    ++prof[a.wedge];
    return prof;
}

bool same_arrow_counts(const Partition& l, const Partition& t, Degree d, const FieldElement& delta) {
    ArrowDiagram a = arrow_diagram(l, delta), b = arrow_diagram(t, delta);
    if (d.is_half()) { a = tau(a); b = tau(b); }
    return column_profile(a, d.floor()) == column_profile(b, d.floor());
}

namespace {

// Integer window test on a line: μ has ∨ at c and ∧ at c' < c with empty
// columns strictly between; λ has ∧ at c and ∨ at c'; everything else equal.
bool window_char0(const Partition& l, const Partition& mu, long wl, long wm, int R) {
    long lo = std::min({-(long)R - 2, wl, wm}) - 1, hi = std::max({(long)R, wl, wm}) + 1;
    auto occ = [&](const Partition& x) {
        std::set<long> s;
        for (long i = 1; i <= hi - lo + 2 + R; ++i) s.insert((i <= (long)x.size() ? x[i - 1] : 0) - i);
        return s;
    };
    auto ol = occ(l), om = occ(mu);
    std::vector<long> diff;
    for (long n = lo; n <= hi; ++n)
        if (ol.count(n) != om.count(n)) diff.push_back(n);
    if (diff.size() != 2) return false;
    long cp = diff[0], c = diff[1];
    if (!om.count(c) || !ol.count(cp)) return false;
    if (wm != cp || wl != c) return false;
    for (long n = cp + 1; n < c; ++n)
        if (om.count(n)) return false;
    return true;
}

// Same test on the μ-projection, read cyclically on the runner of p columns.
bool window_proj(const Partition& l, const Partition& mu, long wl, long wm, int p) {
    int k = static_cast<int>(mu.size());
    std::vector<int> ol(p, 0), om(p, 0);
    for (int i = 1; i <= k; ++i) {
        ol[mod((i <= (int)l.size() ? l[i - 1] : 0) - i, p)]++;
        om[mod(mu[i - 1] - i, p)]++;
    }
    std::vector<long> diff;
    for (int c = 0; c < p; ++c)
        if (ol[c] != om[c]) diff.push_back(c);
    if (diff.size() != 2) return false;
    for (int flip = 0; flip < 2; ++flip) {
        long c = diff[flip], cp = diff[1 - flip];
        if (!(om[c] && !ol[c] && ol[cp] && !om[cp])) continue;
        if (mod(wm, p) != cp || mod(wl, p) != c) continue;
        long m = mod(c - cp, p);
        bool empty = true;
        for (long j = 1; j < m; ++j)
            if (om[mod(cp + j, p)]) empty = false;
        if (empty) return true;
    }
    return false;
}

} // namespace

bool matches_pattern(const Partition& l, const Partition& mu, Degree d, const FieldElement& delta) {
    const int p = delta.characteristic();
    const int R = d.floor();
    if (p != 0 && p <= R) throw std::invalid_argument("pattern test requires p = 0 or p > floor(d)");
    if (size(mu) != R) throw std::invalid_argument("pattern test requires |mu| = floor(d)");
    if (l == mu || size(l) > R) return false;
    const int shift = d.is_half() ? 1 : 0;   // τ on both diagrams
    if (p == 0) {
        if (!delta.is_integer()) return false;
        long dl = delta.to_long();
        return window_char0(l, mu, dl - size(l) - shift, dl - size(mu) - shift, R);
    }
    if (!contained_in(l, mu)) return false;
    long dr = delta.residue();
    return window_proj(l, mu, dr - size(l) - shift, dr - size(mu) - shift, p);
}

std::string ArrowDiagram::render(int lo, int hi) const {
    // rows: above-labels, arrows (V = ∨, ^ = ∧, X = both, o = empty), below-labels
    std::vector<std::string> above, mark, below;
    auto glyph = [](bool v, bool w) { return std::string(v && w ? "X" : v ? "V" : w ? "^" : "o"); };
    if (p == 0 || !projected) {
        if (p != 0) {
            // char p: per residue column, ∨ count over parts i <= max(1, lo), ∧ mark
            int cnt = std::max(1, lo);
            std::vector<int> vc(p, 0);
            for (long v : vee_positions(cnt)) vc[mod(v, p)]++;
            for (int c = p - 1; c >= 0; --c) {
                above.push_back(std::to_string(c));
                mark.push_back(std::to_string(vc[c]) + (wedge.residue() == c ? "^" : ""));
            }
        } else {
            std::set<long> vs;
            for (long v : vee_positions(hi - lo + 2 + size(lambda))) vs.insert(v);
            bool wint = wedge.is_integer();
            for (int c = hi; c >= lo; --c) {
                above.push_back(std::to_string(c));
                mark.push_back(glyph(vs.count(c), wint && wedge.to_long() == c));
                below.push_back((delta - c).str());
            }
        }
    } else {
        // μ-projection: labels p-k-2 .. -k-1
        long plo = -proj_k - 1, phi = p - proj_k - 2;
        std::set<long> vs;
        for (long v : vee_positions(proj_k)) vs.insert(plo + mod(v - plo, p));
        for (long c = phi; c >= plo; --c) {
            above.push_back(std::to_string(c));
            mark.push_back(glyph(vs.count(c), proj_wedge == c));
            below.push_back(std::to_string(mod(delta.residue() - c, p)));
        }
    }
    size_t w = 1;
    for (auto* row : {&above, &mark, &below})
        for (auto& x : *row) w = std::max(w, x.size());
    std::ostringstream os;
    for (auto* row : {&above, &mark, &below}) {
        if (row->empty()) continue;
        for (auto& x : *row) os << std::string(w + 1 - x.size(), ' ') << x;
        os << "\n";
    }
    if (p == 0 && !wedge.is_integer()) os << "wedge off-lattice at column " << wedge.str() << "\n";
    return os.str();
}

} // namespace pa
