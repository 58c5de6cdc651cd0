#include "pa/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace pa {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static long mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

static long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr) {
        long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("division by zero");
    return mod(t, p);
}

FieldElement FieldElement::from_int(long v, int p) {
    if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic must be 0 or prime");
    FieldElement x;
    x.p_ = p;
    if (p == 0) x.q_ = v;
    else x.r_ = mod(v, p);
    return x;
}

FieldElement FieldElement::from_rational(const mpq_class& v, int p) {
    if (p == 0) {
        FieldElement x;
        x.q_ = v;
        x.q_.canonicalize();
        return x;
    }
    mpz_class n = v.get_num() % p, d = v.get_den() % p;
    return from_int(n.get_si(), p) / from_int(d.get_si(), p);
}

FieldElement FieldElement::parse(const std::string& s, int p) {
    if (s.empty()) throw std::invalid_argument("empty field element");
    mpq_class v;
    try {
        std::string t = s;
        if (t[0] == '+') t = t.substr(1);
        auto slash = t.find('/');
        mpz_class num(t.substr(0, slash), 10);
        mpz_class den = 1;
        if (slash != std::string::npos) den = mpz_class(t.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator");
        v = mpq_class(num, den);
        v.canonicalize();
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed field element '" + s + "'");
    }
    return from_rational(v, p);
}

void FieldElement::check(const FieldElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field tag mismatch");
}

bool FieldElement::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool FieldElement::is_integer() const { return p_ != 0 || q_.get_den() == 1; }

long FieldElement::to_long() const {
    if (p_) return r_;
    if (q_.get_den() != 1) throw std::domain_error("not an integer");
    return q_.get_num().get_si();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check(o);
    FieldElement x = *this;
    if (p_) x.r_ = (r_ + o.r_) % p_;
    else x.q_ += o.q_;
    return x;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check(o);
    FieldElement x = *this;
    if (p_) x.r_ = mod(r_ - o.r_, p_);
    else x.q_ -= o.q_;
    return x;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check(o);
    FieldElement x = *this;
    if (p_) x.r_ = (r_ * o.r_) % p_;
    else x.q_ *= o.q_;
    return x;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    FieldElement x = *this;
    if (p_) x.r_ = inv_mod(r_, p_);
    else x.q_ = 1 / q_;
    return x;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check(o);
    return *this * o.inv();
}

FieldElement FieldElement::operator-() const { return from_int(0, p_) - *this; }

FieldElement FieldElement::pow(int e) const {
    FieldElement x = from_int(1, p_);
    for (int i = 0; i < e; ++i) x = x * *this;
    return x;
}

bool FieldElement::operator==(const FieldElement& o) const {
    check(o);
    return p_ ? r_ == o.r_ : q_ == o.q_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check(o);
    return p_ ? r_ < o.r_ : q_ < o.q_;
}

std::string FieldElement::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(int e, const mpz_class& c) {
    LaurentPoly x;
    x.add_term(e, c);
    return x;
}

void LaurentPoly::add_term(int e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

mpz_class LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? mpz_class(0) : it->second;
}

mpz_class LaurentPoly::at_one() const {
    mpz_class s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const { LaurentPoly x = *this; return x += o; }
LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { LaurentPoly x = *this; return x -= o; }
LaurentPoly LaurentPoly::operator-() const { return LaurentPoly() - *this; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly x;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) x.add_term(e1 + e2, c1 * c2);
    return x;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly x;
    for (auto& [k, c] : c_) x.c_.emplace(k + e, c);
    return x;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, c] = *it;
        mpz_class a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (e == 0) { os << a; continue; }
        if (a != 1) os << a << "*";
        os << "q";
        if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return os.str();
}

LaurentPoly q_integer(int n) {
    if (n < 0) return -q_integer(-n);
    LaurentPoly x;
    for (int e = n - 1; e > -n; e -= 2) x += LaurentPoly::monomial(e);
    return x;
}

LaurentPoly q_factorial(int n) {
    LaurentPoly x(1);
    for (int i = 1; i <= n; ++i) x = x * q_integer(i);
    return x;
}

LaurentPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    // Pascal rule for the symmetric Gaussian binomial:
    // [n,k] = q^{-k}[n-1,k-1] + q^{n-k}[n-1,k]
    std::vector<std::vector<LaurentPoly>> t(n + 1, std::vector<LaurentPoly>(n + 1));
    for (int m = 0; m <= n; ++m) {
        t[m][0] = LaurentPoly(1);
        t[m][m] = LaurentPoly(1);
        for (int j = 1; j < m; ++j)
            t[m][j] = t[m - 1][j - 1].shifted(-(m - j)) + t[m - 1][j].shifted(j);
    }
    return t[n][k];
}

// ---------------------------------------------------------------- matrices

ExactMatrix::ExactMatrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p),
      e_(static_cast<size_t>(rows) * cols, FieldElement::from_int(0, p)) {}

ExactMatrix ExactMatrix::identity(int n, int p) {
    ExactMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::from_int(1, p);
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix shape/field mismatch");
    ExactMatrix m(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) m.at(i, j) = m.at(i, j) + a * o.at(k, j);
        }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

int rank_integer(std::vector<mpz_class> a, int rows, int cols) {
    // fraction-free Gaussian elimination (Bareiss)
    auto A = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * cols + j]; };
    mpz_class prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (A(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(A(piv, j), A(rank, j));
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                A(i, j) = A(i, j) * A(rank, c) - A(i, c) * A(rank, j);
                mpz_divexact(A(i, j).get_mpz_t(), A(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            A(i, c) = 0;
        }
        prev = A(rank, c);
        ++rank;
    }
    return rank;
}

int rank_mod_p(std::vector<int64_t> a, int rows, int cols, int p) {
    auto A = [&](int i, int j) -> int64_t& { return a[static_cast<size_t>(i) * cols + j]; };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (A(i, c) % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(A(piv, j), A(rank, j));
        int64_t inv = inv_mod(A(rank, c), p);
        for (int i = rank + 1; i < rows; ++i) {
            int64_t f = A(i, c) % p * inv % p;
            if (!f) continue;
            for (int j = c; j < cols; ++j) A(i, j) = mod(A(i, j) - f * A(rank, j), p);
        }
        ++rank;
    }
    return rank;
}

int matrix_rank(const ExactMatrix& m) {
    const int R = m.rows(), C = m.cols(), p = m.characteristic();
    if (!R || !C) return 0;
    if (p) {
        std::vector<int64_t> a(static_cast<size_t>(R) * C);
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j) a[static_cast<size_t>(i) * C + j] = m.at(i, j).residue();
        return rank_mod_p(std::move(a), R, C, p);
    }
    // clear denominators row by row; rank is unchanged
    std::vector<mpz_class> a(static_cast<size_t>(R) * C);
    for (int i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rational().get_den_mpz_t());
        for (int j = 0; j < C; ++j) {
            const mpq_class& v = m.at(i, j).rational();
            a[static_cast<size_t>(i) * C + j] = v.get_num() * (l / v.get_den());
        }
    }
    return rank_integer(std::move(a), R, C);
}

} // namespace pa
