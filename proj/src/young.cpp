#include "pa/young.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pa {

int size(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }

bool is_partition(const Partition& l) {
    for (size_t i = 0; i < l.size(); ++i) {
        if (l[i] <= 0) return false;
        if (i && l[i] > l[i - 1]) return false;
    }
    return true;
}

std::string to_string(const Partition& l) {
    std::string s = "(";
    for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + ")";
}

Partition parse_partition(const std::string& s) {
    Partition l;
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') t += c;
    if (t.empty() || t == "0" || t == "-" || t == "∅") return l;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed partition '" + s + "'");
        l.push_back(std::stoi(part));
    }
    if (!is_partition(l)) throw std::invalid_argument("not a partition: '" + s + "'");
    return l;
}

std::vector<BoxRef> addable_boxes(const Partition& l) {
    std::vector<BoxRef> out;
    for (size_t i = 0; i <= l.size(); ++i) {
        int len = i < l.size() ? l[i] : 0;
        if (i == 0 || l[i - 1] > len) out.push_back({static_cast<int>(i) + 1, len + 1});
    }
    return out;
}

std::vector<BoxRef> removable_boxes(const Partition& l) {
    std::vector<BoxRef> out;
    for (size_t i = 0; i < l.size(); ++i)
        if (i + 1 == l.size() || l[i + 1] < l[i]) out.push_back({static_cast<int>(i) + 1, l[i]});
    return out;
}

Partition add_box(const Partition& l, const BoxRef& b) {
    Partition m = l;
    if (b.row == static_cast<int>(m.size()) + 1) m.push_back(1);
    else ++m.at(b.row - 1);
    if (!is_partition(m) || m[b.row - 1] != b.col) throw std::invalid_argument("box not addable");
    return m;
}

Partition remove_box(const Partition& l, const BoxRef& b) {
    Partition m = l;
    if (b.row < 1 || b.row > static_cast<int>(m.size()) || m[b.row - 1] != b.col) throw std::invalid_argument("box not removable");
    --m[b.row - 1];
    if (!m.back()) m.pop_back();
    if (!is_partition(m)) throw std::invalid_argument("box not removable");
    return m;
}

bool contained_in(const Partition& l, const Partition& m) {
    if (l.size() > m.size()) return false;
    for (size_t i = 0; i < l.size(); ++i)
        if (l[i] > m[i]) return false;
    return true;
}

int content_count(const Partition& l, int residue, int p) {
    int c = 0;
    for (size_t i = 0; i < l.size(); ++i)
        for (int j = 1; j <= l[i]; ++j) {
            int ct = j - static_cast<int>(i) - 1;
            if (p ? ((ct - residue) % p == 0) : ct == residue) ++c;
        }
    return c;
}

static void gen_partitions(int n, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) { out.push_back(cur); return; }
    for (int k = std::min(n, maxp); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = n; k >= 0; --k)
        for (auto& l : partitions_of(k)) out.push_back(l);
    return out;
}

long syt_count(const Partition& l) {
    int n = size(l);
    mpz_class num = 1, den = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    for (size_t i = 0; i < l.size(); ++i)
        for (int j = 1; j <= l[i]; ++j) {
            int arm = l[i] - j, leg = 0;
            for (size_t k = i + 1; k < l.size() && l[k] >= j; ++k) ++leg;
            den *= arm + leg + 1;
        }
    return mpz_class(num / den).get_si();
}

bool is_p_regular(const Partition& l, int p) {
    if (p == 0) return true;
    for (size_t j = 0; j + p <= l.size(); ++j)
        if (l[j] == l[j + p - 1]) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix m(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
            if (long long x = (*this)(i, k))
                for (int j = 0; j < o.cols; ++j) m(i, j) += x * o(k, j);
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int permutation_index(const std::vector<int>& w) {
    int n = static_cast<int>(w.size()), idx = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += w[j] < w[i];
        int f = 1;
        for (int k = 2; k <= n - 1 - i; ++k) f *= k;
        idx += smaller * f;
    }
    return idx;
}

static void fill_syt(const Partition& l, int next, int n, Tableau& t, std::vector<Tableau>& out) {
    if (next > n) { out.push_back(t); return; }
    for (size_t i = 0; i < l.size(); ++i) {
        int len = static_cast<int>(t[i].size());
        if (len == l[i]) continue;
        if (i && static_cast<int>(t[i - 1].size()) <= len) continue;
        t[i].push_back(next);
        fill_syt(l, next + 1, n, t, out);
        t[i].pop_back();
    }
}

std::vector<Tableau> standard_tableaux(const Partition& l) {
    std::vector<Tableau> out;
    Tableau t(l.size());
    fill_syt(l, 1, size(l), t, out);
    auto word = [](const Tableau& t) {
        std::vector<int> w;
        for (auto& r : t) w.insert(w.end(), r.begin(), r.end());
        return w;
    };
    std::sort(out.begin(), out.end(), [&](const Tableau& a, const Tableau& b) { return word(a) < word(b); });
    return out;
}

namespace {

using Tabloid = std::vector<int8_t>;   // row of each entry 1..n
using TabloidVec = std::map<Tabloid, long long>;

TabloidVec polytabloid(const Tableau& t, int n) {
    // columns of t
    std::vector<std::vector<int>> cols;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < t[i].size(); ++j) {
            if (cols.size() <= j) cols.resize(j + 1);
            cols[j].push_back(t[i][j]);
        }
    TabloidVec v;
    Tabloid base(n);
    for (size_t i = 0; i < t.size(); ++i)
        for (int e : t[i]) base[e - 1] = static_cast<int8_t>(i);
    // iterate over the column group as a product of column permutations
    std::vector<std::vector<int>> perms(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        perms[c].resize(cols[c].size());
        std::iota(perms[c].begin(), perms[c].end(), 0);
    }
    auto sign = [](const std::vector<int>& p) {
        int s = 1;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) s = -s;
        return s;
    };
    for (;;) {
        Tabloid tb = base;
        int s = 1;
        for (size_t c = 0; c < cols.size(); ++c) {
            for (size_t k = 0; k < cols[c].size(); ++k) tb[cols[c][k] - 1] = static_cast<int8_t>(perms[c][k]);
            s *= sign(perms[c]);
        }
        v[tb] += s;
        size_t c = 0;
        while (c < cols.size() && !std::next_permutation(perms[c].begin(), perms[c].end())) ++c;
        if (c == cols.size()) break;
    }
    return v;
}

std::unique_ptr<SpechtData> build_specht(const Partition& l) {
    auto sd = std::make_unique<SpechtData>();
    sd->lambda = l;
    sd->basis = standard_tableaux(l);
    const int n = size(l), m = sd->dim();
    std::vector<TabloidVec> e(m);
    std::vector<Tabloid> keys(m);
    for (int i = 0; i < m; ++i) {
        e[i] = polytabloid(sd->basis[i], n);
        Tabloid k(n);
        for (size_t r = 0; r < sd->basis[i].size(); ++r)
            for (int x : sd->basis[i][r]) k[x - 1] = static_cast<int8_t>(r);
        keys[i] = k;
    }
    // M[s][t] = coefficient of {s} in e_t ; invert over Q (result is integral)
    std::vector<std::vector<mpq_class>> aug(m, std::vector<mpq_class>(2 * m));
    for (int s = 0; s < m; ++s) {
        for (int t = 0; t < m; ++t) {
            auto it = e[t].find(keys[s]);
            aug[s][t] = it == e[t].end() ? 0L : static_cast<long>(it->second);
        }
        aug[s][m + s] = 1;
    }
    for (int c = 0; c < m; ++c) {
        int piv = c;
        while (aug[piv][c] == 0) ++piv;
        std::swap(aug[piv], aug[c]);
        mpq_class inv = 1 / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (int r = 0; r < m; ++r)
            if (r != c && aug[r][c] != 0) {
                mpq_class f = aug[r][c];
                for (int j = 0; j < 2 * m; ++j) aug[r][j] -= f * aug[c][j];
            }
    }
    auto express = [&](const TabloidVec& v) {
        std::vector<long long> coef(m, 0);
        for (int t = 0; t < m; ++t) {
            mpq_class acc = 0;
            for (int s = 0; s < m; ++s) {
                auto it = v.find(keys[s]);
                if (it != v.end()) acc += aug[t][m + s] * static_cast<long>(it->second);
            }
            if (acc.get_den() != 1) throw std::logic_error("non-integral straightening");
            coef[t] = acc.get_num().get_si();
        }
        return coef;
    };
    for (auto& w : all_permutations(n)) {
        IntMatrix M(m, m);
        for (int t = 0; t < m; ++t) {
            Tableau wt = sd->basis[t];
            for (auto& row : wt)
                for (auto& x : row) x = w[x - 1] + 1;
            auto c = express(polytabloid(wt, n));
            for (int s = 0; s < m; ++s) M(s, t) = c[s];
        }
        sd->perm_action.push_back(std::move(M));
    }
    for (int i = 1; i < n; ++i) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 0);
        std::swap(w[i - 1], w[i]);
        sd->generators.push_back(sd->perm_action[permutation_index(w)]);
    }
    sd->form = IntMatrix(m, m);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            long long acc = 0;
            for (auto& [k, c] : e[s]) {
                auto it = e[t].find(k);
                if (it != e[t].end()) acc += c * it->second;
            }
            sd->form(s, t) = acc;
        }
    return sd;
}

std::mutex specht_mutex;
std::map<Partition, std::unique_ptr<SpechtData>> specht_cache;
int specht_max = 6;

} // namespace

void set_specht_bound(int n) { specht_max = n; }
int specht_bound() { return specht_max; }

const SpechtData& specht_data(const Partition& l) {
    if (!is_partition(l)) throw std::invalid_argument("not a partition");
    if (size(l) > specht_max) throw std::invalid_argument("Specht data size bound exceeded");
    std::lock_guard<std::mutex> g(specht_mutex);
    auto& slot = specht_cache[l];
    if (!slot) slot = build_specht(l);
    return *slot;
}

} // namespace pa
