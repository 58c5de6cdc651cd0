#include "pa/cellmod.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace pa {

namespace {

std::vector<std::vector<int>> set_partitions(int n) {
    // restricted growth strings
    std::vector<std::vector<int>> out;
    if (n == 0) return {{}};
    std::vector<int> a(n, 0), mx(n, 0);
    for (;;) {
        out.push_back(a);
        int k = n - 1;
        while (k > 0 && a[k] == mx[k - 1] + 1) --k;
        if (k == 0) break;
        ++a[k];
        mx[k] = std::max(mx[k - 1], a[k]);
        for (int j = k + 1; j < n; ++j) { a[j] = 0; mx[j] = mx[k]; }
    }
    return out;
}

void subsets(int from, int k, const std::vector<int>& pool, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) { out.push_back(cur); return; }
    for (int i = from; i < static_cast<int>(pool.size()); ++i) {
        cur.push_back(pool[i]);
        subsets(i + 1, k, pool, cur, out);
        cur.pop_back();
    }
}

using Key = std::vector<int>;   // top RGS followed by slot block ids

struct VCache {
    VBasis V;
    std::map<Key, int> index;
};

Diagram build(int n, int r, int l, bool half, const std::vector<int>& top, const std::vector<int>& slots) {
    std::vector<int> lab(2 * n);
    for (int i = 1; i <= n; ++i) lab[Diagram::top(i)] = top[i - 1];
    int fresh = 1000;
    for (int j = 1; j <= n; ++j) lab[Diagram::bot(j)] = fresh++;
    for (int m = 0; m < l; ++m) lab[Diagram::bot(r - l + 1 + m)] = slots[m];
    if (half) lab[Diagram::bot(n)] = top[n - 1];
    return Diagram::from_labels(n, lab);
}

// Read a diagram whose bottom row has the V shape into (key, u); nullopt if a slot is lost.
struct Reading {
    Key key;
    std::vector<int> u;
};

std::optional<Reading> read_V(const Diagram& Y, int r, int l, bool half) {
    const int n = Y.degree();
    std::map<int, int> canon;   // Y label -> top block id
    std::vector<int> top(n);
    for (int i = 1; i <= n; ++i) {
        auto [it, f] = canon.try_emplace(Y.block_of(Diagram::top(i)), static_cast<int>(canon.size()));
        top[i - 1] = it->second;
    }
    std::vector<int> C(l);
    for (int m = 0; m < l; ++m) {
        auto it = canon.find(Y.block_of(Diagram::bot(r - l + 1 + m)));
        if (it == canon.end()) return std::nullopt;
        C[m] = it->second;
    }
    std::vector<int> sorted = C;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    if (half) {
        int hb = top[n - 1];
        if (std::find(C.begin(), C.end(), hb) != C.end()) return std::nullopt;
    }
    Reading rd;
    rd.key = top;
    rd.key.insert(rd.key.end(), sorted.begin(), sorted.end());
    rd.u.resize(l);
    for (int m = 0; m < l; ++m) rd.u[m] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), C[m]) - sorted.begin());
    return rd;
}

std::mutex v_mutex;
std::map<std::tuple<int, int, bool>, std::unique_ptr<VCache>> v_cache;

VCache& v_cache_entry(int r, int l, bool half) {
    if (l < 0 || l > r) throw std::invalid_argument("layer out of range");
    std::lock_guard<std::mutex> g(v_mutex);
    auto& slot = v_cache[{r, l, half}];
    if (slot) return *slot;
    auto c = std::make_unique<VCache>();
    VBasis& V = c->V;
    V.r = r;
    V.l = l;
    V.half = half;
    V.n = half ? r + 1 : r;
    std::vector<std::pair<Diagram, Key>> items;
    for (auto& top : set_partitions(V.n)) {
        int k = top.empty() ? 0 : *std::max_element(top.begin(), top.end()) + 1;
        std::vector<int> pool;
        for (int b = 0; b < k; ++b)
            if (!half || b != top[V.n - 1]) pool.push_back(b);
        std::vector<std::vector<int>> choices;
        std::vector<int> cur;
        subsets(0, l, pool, cur, choices);
        for (auto& s : choices) {
            Key key = top;
            key.insert(key.end(), s.begin(), s.end());
            items.emplace_back(build(V.n, r, l, half, top, s), key);
        }
    }
    std::sort(items.begin(), items.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < items.size(); ++i) {
        V.diagrams.push_back(items[i].first);
        c->index[items[i].second] = static_cast<int>(i);
    }
    slot = std::move(c);
    return *slot;
}

std::map<std::tuple<int, int, bool>, std::unique_ptr<std::vector<std::optional<InflationValue>>>> form_cache;
std::mutex form_mutex;

const std::vector<std::optional<InflationValue>>& form_table(const VBasis& V) {
    {
        std::lock_guard<std::mutex> g(form_mutex);
        auto it = form_cache.find({V.r, V.l, V.half});
        if (it != form_cache.end()) return *it->second;
    }
    auto t = std::make_unique<std::vector<std::optional<InflationValue>>>();
    const int m = V.size();
    t->reserve(static_cast<size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) t->push_back(inflation_form(V, x, y));
    std::lock_guard<std::mutex> g(form_mutex);
    auto& slot = form_cache[{V.r, V.l, V.half}];
    if (!slot) slot = std::move(t);
    return *slot;
}

int syt(const Partition& l) { return static_cast<int>(syt_count(l)); }

void check_label(const Partition& l, Degree d) {
    if (!is_partition(l)) throw std::invalid_argument("not a partition");
    if (size(l) > d.floor()) throw std::invalid_argument("label " + to_string(l) + " too large for degree " + d.str());
}

} // namespace

const VBasis& enumerate_V(int r, int l, bool half) { return v_cache_entry(r, l, half).V; }

std::optional<InflationValue> inflation_form(const VBasis& V, int x, int y) {
    auto [W, a] = concatenate(flip(V.diagrams.at(x)), V.diagrams.at(y));
    const int l = V.l;
    std::vector<int> pi(l, -1);
    std::map<int, int> top_slot;   // W label -> top slot
    for (int i = 0; i < l; ++i) top_slot[W.block_of(Diagram::top(V.slot(i)))] = i;
    if (static_cast<int>(top_slot.size()) != l) return std::nullopt;
    std::vector<char> used(l, 0);
    for (int i = 0; i < l; ++i) {
        auto it = top_slot.find(W.block_of(Diagram::bot(V.slot(i))));
        if (it == top_slot.end() || used[it->second]) return std::nullopt;
        used[it->second] = 1;
        pi[i] = it->second;
    }
    if (V.half) {
        int hb = W.block_of(Diagram::top(V.n));
        if (top_slot.count(hb)) return std::nullopt;
    }
    return InflationValue{a, pi};
}

std::optional<VAction> act_on_V(const VBasis& V, const Diagram& g, int x) {
    if (g.degree() != V.n) throw std::invalid_argument("diagram degree does not match the module");
    if (V.half && !is_half(g)) throw std::invalid_argument("diagram is not in the half-integer subalgebra");
    auto [Y, a] = concatenate(g, V.diagrams.at(x));
    auto rd = read_V(Y, V.r, V.l, V.half);
    if (!rd) return std::nullopt;
    const auto& idx = v_cache_entry(V.r, V.l, V.half).index;
    auto it = idx.find(rd->key);
    if (it == idx.end()) throw std::logic_error("V reading produced an unknown representative");
    return VAction{a, it->second, rd->u};
}

long cell_dim(const Partition& l, Degree d) {
    check_label(l, d);
    return static_cast<long>(enumerate_V(d.floor(), size(l), d.is_half()).size()) * syt_count(l);
}

bool is_admissible_label(const Partition& l, Degree d, const FieldElement& delta) {
    return is_partition(l) && size(l) <= d.floor() && !(l.empty() && !d.is_half() && delta.is_zero() && d.floor() > 0);
}

ExactMatrix cell_action(const Partition& l, Degree d, const FieldElement& delta, const Diagram& g) {
    check_label(l, d);
    const int p = delta.characteristic();
    const VBasis& V = enumerate_V(d.floor(), size(l), d.is_half());
    const SpechtData& S = specht_data(l);
    const int k = S.dim();
    ExactMatrix M(V.size() * k, V.size() * k, p);
    for (int x = 0; x < V.size(); ++x) {
        auto act = act_on_V(V, g, x);
        if (!act) continue;
        FieldElement c = delta.pow(act->exponent);
        const IntMatrix& rho = S.perm_action[permutation_index(act->u)];
        for (int s = 0; s < k; ++s)
            for (int t = 0; t < k; ++t)
                if (rho(t, s)) M.at(act->rep * k + t, x * k + s) = c * FieldElement::from_int(rho(t, s), p);
    }
    return M;
}

ExactMatrix cell_action(const Partition& l, Degree d, const AlgebraElement& g) {
    const int p = g.delta().characteristic();
    long n = cell_dim(l, d);
    ExactMatrix M(static_cast<int>(n), static_cast<int>(n), p);
    for (auto& [D, c] : g.terms()) {
        ExactMatrix A = cell_action(l, d, g.delta(), D);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!A.at(i, j).is_zero()) M.at(i, j) = M.at(i, j) + c * A.at(i, j);
    }
    return M;
}

ExactMatrix gram_matrix(const Partition& l, Degree d, const FieldElement& delta) {
    check_label(l, d);
    if (!is_admissible_label(l, d, delta)) throw std::invalid_argument("label () is excluded at delta = 0");
    const int p = delta.characteristic();
    const VBasis& V = enumerate_V(d.floor(), size(l), d.is_half());
    const SpechtData& S = specht_data(l);
    const int k = S.dim(), m = V.size();
    const auto& F = form_table(V);
    ExactMatrix G(m * k, m * k, p);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            const auto& f = F[static_cast<size_t>(x) * m + y];
            if (!f) continue;
            FieldElement c = delta.pow(f->exponent);
            IntMatrix Gp = S.form * S.perm_action[permutation_index(f->pi)];
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t)
                    if (Gp(s, t)) G.at(x * k + s, y * k + t) = c * FieldElement::from_int(Gp(s, t), p);
        }
    return G;
}

std::vector<Diagram> algebra_generators(Degree d) {
    const int r = d.floor(), n = d.columns();
    std::vector<Diagram> g;
    for (int i = 1; i + 1 <= r; ++i) g.push_back(generator(GenKind::S, i, n));
    for (int i = 1; i <= r; ++i) g.push_back(generator(GenKind::A, i, n));
    for (int i = 1; i + 1 <= n; ++i) g.push_back(generator(GenKind::AA, i, n));
    return g;
}

long gram_rank(const Partition& l, Degree d, const FieldElement& delta) {
    check_label(l, d);
    const int p = delta.characteristic();
    const VBasis& V = enumerate_V(d.floor(), size(l), d.is_half());
    const SpechtData& S = specht_data(l);
    const int k = S.dim(), m = V.size(), N = m * k;
    const auto& F = form_table(V);
    std::map<int, IntMatrix> twisted;
    auto tw = [&](const std::vector<int>& pi) -> const IntMatrix& {
        int id = permutation_index(pi);
        auto it = twisted.find(id);
        if (it == twisted.end()) it = twisted.emplace(id, S.form * S.perm_action[id]).first;
        return it->second;
    };
    if (p) {
        std::vector<int64_t> a(static_cast<size_t>(N) * N, 0);
        const int64_t dr = delta.residue();
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                const auto& f = F[static_cast<size_t>(x) * m + y];
                if (!f) continue;
                int64_t c = 1;
                for (int e = 0; e < f->exponent; ++e) c = c * dr % p;
                const IntMatrix& Gp = tw(f->pi);
                for (int s = 0; s < k; ++s)
                    for (int t = 0; t < k; ++t) {
                        int64_t v = (Gp(s, t) % p + p) % p;
                        a[static_cast<size_t>(x * k + s) * N + y * k + t] = v * c % p;
                    }
            }
        return rank_mod_p(std::move(a), N, N, p);
    }
    // scale δ = num/den by den^emax so every entry is integral
    int emax = 0;
    for (auto& f : F)
        if (f) emax = std::max(emax, f->exponent);
    mpz_class num = delta.rational().get_num(), den = delta.rational().get_den();
    std::vector<mpz_class> npow(emax + 1), dpow(emax + 1);
    npow[0] = dpow[0] = 1;
    for (int e = 1; e <= emax; ++e) { npow[e] = npow[e - 1] * num; dpow[e] = dpow[e - 1] * den; }
    std::vector<mpz_class> a(static_cast<size_t>(N) * N);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            const auto& f = F[static_cast<size_t>(x) * m + y];
            if (!f) continue;
            mpz_class c = npow[f->exponent] * dpow[emax - f->exponent];
            const IntMatrix& Gp = tw(f->pi);
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t)
                    if (Gp(s, t)) a[static_cast<size_t>(x * k + s) * N + y * k + t] = c * static_cast<long>(Gp(s, t));
        }
    return rank_integer(std::move(a), N, N);
}

long simple_dim(const Partition& l, Degree d, const FieldElement& delta) {
    check_label(l, d);
    if (!is_admissible_label(l, d, delta)) throw std::invalid_argument("label () is excluded at delta = 0");
    if (!is_p_regular(l, delta.characteristic())) throw std::invalid_argument("label is not p-regular");
    return gram_rank(l, d, delta);
}

static int semisimple_max = 4;
void set_semisimple_bound(int r) { semisimple_max = r; }

bool semisimple_oracle(Degree d, const FieldElement& delta) {
    if (d.floor() > semisimple_max) throw std::invalid_argument("degree exceeds the semisimplicity oracle bound");
    for (auto& l : partitions_up_to(d.floor()))
        if (gram_rank(l, d, delta) != cell_dim(l, d)) return false;
    return true;
}

} // namespace pa
