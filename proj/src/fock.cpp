#include "pa/fock.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pa {

namespace {

long mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long floordiv(long a, long p) { return (a - mod(a, p)) / p; }

long col(const FockContext& c, long x) { return c.p() ? mod(x, c.p()) : x; }

bool has_wedge(const FockContext& c) { return c.p() > 0 || c.delta.is_integer(); }

// integer position of the ∧ for level k (δ lifted to [0, p) when p > 0)
long wedge_position(const FockContext& c, const FockKey& v) {
    long base = c.p() ? c.delta.residue() : c.delta.to_long();
    return base + v.k - c.r - size(v.lambda);
}

long site_key(const FockContext& c, const Site& s) {
    if (!s.wedge) return 2 * s.position;
    switch (c.order) {
    case WedgeOrder::Last: return LONG_MAX;
    case WedgeOrder::First: return LONG_MIN;
    case WedgeOrder::Interleaved: return 2 * s.position + 1;
    }
    return LONG_MAX;
}

FockKey moved(const FockKey& v, const Site& s, int bead) {
    FockKey w = v;
    w.k += s.addable ? 1 : -1;
    if (!s.wedge) {
        if (bead >= static_cast<int>(w.lambda.size())) w.lambda.resize(bead + 1, 0);
        w.lambda[bead] += s.addable ? 1 : -1;
        while (!w.lambda.empty() && w.lambda.back() == 0) w.lambda.pop_back();
    }
    return w;
}

struct SiteList {
    std::vector<Site> sites;
    std::vector<int> bead;   // ∨ bead index (0-based row), -1 for the ∧
};

SiteList sites_for(const FockContext& c, const FockKey& v, long i) {
    SiteList out;
    const Partition& l = v.lambda;
    const int len = static_cast<int>(l.size());
    auto part = [&](int j) { return j < len ? l[j] : 0; };   // 0-based row
    const long ci = col(c, i), cim = col(c, i - 1);
    for (int j = 0; j <= len; ++j) {
        long n = part(j) - (j + 1);
        bool up_free = j == 0 || part(j - 1) > part(j);
        bool down_free = j < len && part(j + 1) < part(j);
        if (col(c, n) == cim && up_free) { out.sites.push_back({false, true, n}); out.bead.push_back(j); }
        if (j < len && col(c, n) == ci && down_free) { out.sites.push_back({false, false, n}); out.bead.push_back(j); }
    }
    if (has_wedge(c)) {
        long w = wedge_position(c, v);
        if (col(c, w) == cim) { out.sites.push_back({true, true, w}); out.bead.push_back(-1); }
        else if (col(c, w) == ci) { out.sites.push_back({true, false, w}); out.bead.push_back(-1); }
    }
    // reading order
    std::vector<size_t> idx(out.sites.size());
    for (size_t a = 0; a < idx.size(); ++a) idx[a] = a;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return site_key(c, out.sites[a]) < site_key(c, out.sites[b]); });
    SiteList sorted;
    for (size_t a : idx) { sorted.sites.push_back(out.sites[a]); sorted.bead.push_back(out.bead[a]); }
    return sorted;
}

long norm_res(const FockContext& c, long i) { return c.p() ? mod(i, c.p()) : i; }

} // namespace

ArrowCounts addable_removable(const FockContext& c, const FockKey& v, long i) {
    auto sl = sites_for(c, v, i);
    ArrowCounts a;
    a.sites = sl.sites;
    for (auto& s : sl.sites) (s.addable ? a.A : a.R)++;
    return a;
}

std::string to_string(const FockVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [key, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")[" << key.k << "," << to_string(key.lambda) << "]";
    }
    return os.str();
}

FockVector basis_vector(const FockKey& v) { return {{v, LaurentPoly(1)}}; }

void add_to(FockVector& acc, const FockVector& x, const LaurentPoly& c) {
    for (auto& [key, coef] : x) {
        LaurentPoly t = coef * c;
        auto [it, fresh] = acc.try_emplace(key, t);
        if (!fresh) it->second += t;
        if (it->second.is_zero()) acc.erase(it);
    }
}

FockVector apply_E(const FockContext& c, long i, const FockVector& v, bool* truncated) {
    FockVector out;
    for (auto& [key, coef] : v) {
        auto sl = sites_for(c, key, i);
        for (size_t s = 0; s < sl.sites.size(); ++s) {
            if (sl.sites[s].addable) continue;
            if (key.k == 0) {
                if (truncated) *truncated = true;
                continue;
            }
            int e = 0;
            for (size_t t = s + 1; t < sl.sites.size(); ++t) e += sl.sites[t].addable ? 1 : -1;
            add_to(out, basis_vector(moved(key, sl.sites[s], sl.bead[s])), coef.shifted(e));
        }
    }
    return out;
}

FockVector apply_F(const FockContext& c, long i, const FockVector& v) {
    FockVector out;
    for (auto& [key, coef] : v) {
        auto sl = sites_for(c, key, i);
        for (size_t s = 0; s < sl.sites.size(); ++s) {
            if (!sl.sites[s].addable) continue;
            int e = 0;
            for (size_t t = 0; t < s; ++t) e += sl.sites[t].addable ? 1 : -1;
            add_to(out, basis_vector(moved(key, sl.sites[s], sl.bead[s])), coef.shifted(-e));
        }
    }
    return out;
}

int K_exponent(const FockContext& c, const FockKey& v, long i) {
    auto a = addable_removable(c, v, i);
    return a.A - a.R;
}

int Kd_exponent(const FockContext& c, const FockKey& v) {
    const int p = c.p();
    if (p == 0) throw std::invalid_argument("K_d is only defined for p > 0");
    long z = content_count(v.lambda, 0, p) + floordiv(wedge_position(c, v), p);
    return static_cast<int>(-z);
}

FockVector apply_K(const FockContext& c, long i, const FockVector& v, int power) {
    FockVector out;
    for (auto& [key, coef] : v) add_to(out, basis_vector(key), coef.shifted(power * K_exponent(c, key, i)));
    return out;
}

FockVector apply_Kd(const FockContext& c, const FockVector& v, int power) {
    FockVector out;
    for (auto& [key, coef] : v) add_to(out, basis_vector(key), coef.shifted(power * Kd_exponent(c, key)));
    return out;
}

FockWeight fock_weight(const FockContext& c, const FockKey& v) {
    FockWeight w;
    if (c.p()) {
        for (long i = 0; i < c.p(); ++i) w.k[i] = K_exponent(c, v, i);
        w.kd = Kd_exponent(c, v);
        return w;
    }
    long lo = -static_cast<long>(v.lambda.size()) - 3, hi = (v.lambda.empty() ? 0 : v.lambda[0]) + 2;
    if (has_wedge(c)) {
        long ww = wedge_position(c, v);
        lo = std::min(lo, ww - 1);
        hi = std::max(hi, ww + 2);
    }
    for (long i = lo; i <= hi; ++i) {
        int e = K_exponent(c, v, i);
        if (e) w.k[i] = e;
    }
    return w;
}

int cartan(int p, long i, long j) {
    if (p == 0) {
        if (i == j) return 2;
        return std::abs(i - j) == 1 ? -1 : 0;
    }
    long d = mod(j - i, p);
    if (d == 0) return 2;
    if (p == 2) return -2;
    return (d == 1 || d == p - 1) ? -1 : 0;
}

std::vector<long> relation_residues(const FockContext& c, int max_level) {
    std::vector<long> out;
    if (c.p()) {
        for (long i = 0; i < c.p(); ++i) out.push_back(i);
        return out;
    }
    long lo = -max_level - 3, hi = max_level + 3;
    if (has_wedge(c)) {
        long base = c.delta.to_long() - c.r;
        lo = std::min(lo, base - max_level - 4);
        hi = std::max(hi, base + max_level + 4);
    }
    for (long i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

namespace {

bool same(const FockVector& a, const FockVector& b) { return a == b; }

FockVector scaled(const FockVector& v, int e) {
    FockVector out;
    add_to(out, v, LaurentPoly::monomial(e));
    return out;
}

FockVector minus(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    add_to(out, b, LaurentPoly(-1));
    return out;
}

} // namespace

RelationReport check_relations(const FockContext& c, int max_level, const std::vector<long>& residues_in) {
    RelationReport rep;
    const int p = c.p();
    std::vector<long> residues;
    for (long i : residues_in) residues.push_back(norm_res(c, i));
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    auto record = [&](const char* rel, long i, long j, const FockKey& v, bool ok, bool trunc) {
        if (trunc) { ++rep.skipped; return; }
        ++rep.checked;
        if (!ok) {
            ++rep.failed;
            if (rep.failures.size() < 20) rep.failures.push_back({rel, i, j, v, false});
        }
    };
    for (int k = 0; k <= max_level; ++k)
        for (auto& l : partitions_up_to(k)) {
            FockKey key{k, l};
            FockVector v = basis_vector(key);
            for (long i : residues) {
                bool t = false;
                // (1) K_h K_{-h} = K_0 = 1 and the K's commute
                record("1", i, i, key, same(apply_K(c, i, apply_K(c, i, v, -1)), v), false);
                for (long j : residues) {
                    if (p == 0 && std::abs(i - j) > 3) continue;
                    const int a = cartan(p, i, j);
                    record("1", i, j, key, same(apply_K(c, i, apply_K(c, j, v)), apply_K(c, j, apply_K(c, i, v))), false);
                    // (2)
                    t = false;
                    auto Ejv = apply_E(c, j, v, &t);
                    record("2E", i, j, key, same(apply_K(c, i, Ejv), scaled(apply_E(c, j, apply_K(c, i, v), &t), a)), t);
                    record("2F", i, j, key,
                           same(apply_K(c, i, apply_F(c, j, v)), scaled(apply_F(c, j, apply_K(c, i, v)), -a)), false);
                    // (3), multiplied through by (q − q^{-1})
                    t = false;
                    FockVector comm = minus(apply_E(c, i, apply_F(c, j, v), &t), apply_F(c, j, apply_E(c, i, v, &t)));
                    FockVector lhs = minus(scaled(comm, 1), scaled(comm, -1));
                    FockVector rhs;
                    if (i == j) rhs = minus(apply_K(c, i, v), apply_K(c, i, v, -1));
                    record("3", i, j, key, same(lhs, rhs), t);
                    if (i == j) continue;
                    // (4)/(5) quantum Serre; degree 1 − a_ij (commutation when a_ij = 0)
                    const int n = 1 - a;
                    FockVector sE, sF;
                    t = false;
                    for (int s = 0; s <= n; ++s) {
                        LaurentPoly coef = q_binomial(n, s);
                        if (s % 2) coef = -coef;
                        FockVector xe = v, xf = v;
                        for (int u = 0; u < s; ++u) { xe = apply_E(c, i, xe, &t); xf = apply_F(c, i, xf); }
                        xe = apply_E(c, j, xe, &t);
                        xf = apply_F(c, j, xf);
                        for (int u = 0; u < n - s; ++u) { xe = apply_E(c, i, xe, &t); xf = apply_F(c, i, xf); }
                        add_to(sE, xe, coef);
                        add_to(sF, xf, coef);
                    }
                    const char* tagE = a == 0 ? "4c" : "4";
                    const char* tagF = a == 0 ? "5c" : "5";
                    record(tagE, i, j, key, sE.empty(), t);
                    record(tagF, i, j, key, sF.empty(), false);
                }
                // (7) K_d E_i = q^{δ_{i0}} E_i K_d, K_d F_i = q^{-δ_{i0}} F_i K_d
                if (p) {
                    const int d0 = i == 0 ? 1 : 0;
                    t = false;
                    auto lhs = apply_Kd(c, apply_E(c, i, v, &t));
                    auto rhs = scaled(apply_E(c, i, apply_Kd(c, v), &t), d0);
                    record("7E", i, i, key, same(lhs, rhs), t);
                    record("7F", i, i, key, same(apply_Kd(c, apply_F(c, i, v)), scaled(apply_F(c, i, apply_Kd(c, v)), -d0)), false);
                }
            }
        }
    return rep;
}

bool weight_block_correspondence(const FockContext& c, int k) {
    Degree d = Degree::integer(k);
    FieldElement dk = c.delta_at(k);
    auto bl = blocks(d, dk);
    std::map<Partition, int> cls;
    for (size_t b = 0; b < bl.size(); ++b)
        for (auto& l : bl[b]) cls[l] = static_cast<int>(b);
    std::vector<std::pair<Partition, FockWeight>> w;
    for (auto& [l, b] : cls) w.emplace_back(l, fock_weight(c, FockKey{k, l}));
    for (auto& [l1, w1] : w)
        for (auto& [l2, w2] : w)
            if ((w1 == w2) != (cls[l1] == cls[l2])) return false;
    return true;
}

bool e_nilpotent(const FockContext& c, int k, const std::vector<long>& residues) {
    for (auto& l : partitions_up_to(k))
        for (long i : residues) {
            FockVector v = basis_vector(FockKey{k, l});
            for (int s = 0; s <= k; ++s) v = apply_E(c, i, v);
            if (!v.empty()) return false;
        }
    return true;
}

bool f_matches_i_ind(const FockContext& c, int k, const std::vector<long>& residues) {
    const int p = c.p();
    if (p != 0 && p <= k + 1) throw std::invalid_argument("i-ind comparison requires p = 0 or p > k+1");
    for (auto& l : partitions_up_to(k))
        for (long i : residues) {
            std::vector<Partition> got, want;
            for (auto& [key, coef] : apply_F(c, i, basis_vector(FockKey{k, l}))) {
                mpz_class m = coef.at_one();
                if (key.k != k + 1 || m < 0) return false;
                for (long t = 0; t < m.get_si(); ++t) got.push_back(key.lambda);
            }
            want = i_ind_cell(l, FieldElement::from_int(i, p), Degree::half(k), c.delta_at(k) + 1).labels();
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) return false;
        }
    return true;
}

} // namespace pa
