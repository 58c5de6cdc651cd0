#pragma once

// Exact scalars: rationals / prime fields, Laurent polynomials in q, exact rank.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pa {

bool is_prime(long n);

// Element of Q (p == 0) or GF(p).
class FieldElement {
public:
    FieldElement() = default;
    static FieldElement from_int(long v, int p);
    static FieldElement from_rational(const mpq_class& v, int p);
    // "a/b", "-3", "7" ; over GF(p) the value is reduced mod p.
    static FieldElement parse(const std::string& s, int p);

    int characteristic() const { return p_; }
    bool is_zero() const;
    // Lies in the prime subfield image of Z (always true for p > 0).
    bool is_integer() const;
    long to_long() const;                 // requires is_integer()
    const mpq_class& rational() const { return q_; }
    long residue() const { return r_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(int e) const;        // e >= 0, 0^0 = 1

    FieldElement operator+(long v) const { return *this + from_int(v, p_); }
    FieldElement operator-(long v) const { return *this - from_int(v, p_); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator==(long v) const { return *this == from_int(v, p_); }
    // total order used only for keys (rational order / residue order)
    bool operator<(const FieldElement& o) const;

    std::string str() const;

private:
    void check(const FieldElement& o) const;
    int p_ = 0;
    mpq_class q_;
    long r_ = 0;
};

// Integer Laurent polynomial in q.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long c) { if (c) c_[0] = c; }
    static LaurentPoly monomial(int e, const mpz_class& c = 1);
    static LaurentPoly q() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    mpz_class coeff(int e) const;
    const std::map<int, mpz_class>& terms() const { return c_; }
    mpz_class at_one() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly shifted(int e) const;     // multiply by q^e
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    std::string str() const;

private:
    void add_term(int e, const mpz_class& c);
    std::map<int, mpz_class> c_;
};

LaurentPoly q_integer(int n);             // [n]_q, n >= 0
LaurentPoly q_factorial(int n);
LaurentPoly q_binomial(int n, int k);     // Gaussian binomial, symmetric normalization

// Dense matrix with entries in one field.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols, int p);
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int characteristic() const { return p_; }
    FieldElement& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    bool operator==(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix transpose() const;
    static ExactMatrix identity(int n, int p);

private:
    int rows_ = 0, cols_ = 0, p_ = 0;
    std::vector<FieldElement> e_;
};

int matrix_rank(const ExactMatrix& m);
// fast paths
int rank_integer(std::vector<mpz_class> a, int rows, int cols);      // Bareiss
int rank_mod_p(std::vector<int64_t> a, int rows, int cols, int p);   // entries in [0,p)

} // namespace pa
