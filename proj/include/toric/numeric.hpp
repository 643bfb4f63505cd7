#ifndef TORIC_NUMERIC_HPP
#define TORIC_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// All arithmetic in the workbench is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;   // row-major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Thrown when input data violates a structural invariant (malformed fan,
// wrong vector length, non-primitive ray, ...). CLI exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when data is well-formed but a theorem hypothesis fails
// (non-ample divisor, gcd(N,p) != 1, unsupported rank, ...). CLI exit code 2.
class HypothesisError : public std::runtime_error {
  public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// mpq_rational's two-argument constructor mishandles negative denominators;
// always build rationals through this.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw ValidationError("rational with zero denominator");
    return Rat(num) / den;
}

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

// floor(a/b) for b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;           // truncates toward zero
    if (a % b != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }
inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }
inline Rat frac_rat(const Rat& q) { return q - Rat(floor_rat(q)); }        // <q> = q - [q]
inline Rat upper_frac_rat(const Rat& q) { return Rat(ceil_rat(q)) - q; }   // {q} = ceil(q) - q

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw ValidationError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Rat dot_rat(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw ValidationError("dot_rat: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * Rat(b[i]);
    return s;
}

// Rank of a rational matrix by Gaussian elimination (exact).
inline int rank_rat(RatMat m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0)
            continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            Rat f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline int rank_int(const IntMat& m) {
    RatMat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        q[i] = RatVec(m[i].begin(), m[i].end());
    return rank_rat(std::move(q));
}

// Solve the square system A x = b exactly; returns false when A is singular.
inline bool solve_square(RatMat a, RatVec b, RatVec& out) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(a[i].size()) != n)
            throw ValidationError("solve_square: non-square matrix");
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) { pivot = r; break; }
        if (pivot < 0)
            return false;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rat f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    out.assign(n, Rat(0));
    for (int i = 0; i < n; ++i)
        out[i] = b[i] / a[i][i];
    return true;
}

// Determinant of a square integer matrix, exact (rational elimination).
inline Int det_int(const IntMat& m) {
    int n = static_cast<int>(m.size());
    RatMat a(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw ValidationError("det_int: non-square matrix");
        a[i] = RatVec(m[i].begin(), m[i].end());
    }
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) { pivot = r; break; }
        if (pivot < 0)
            return 0;
        if (pivot != c) {
            std::swap(a[c], a[pivot]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0)
                continue;
            Rat f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    if (rat_den(det) != 1)
        throw std::logic_error("det_int: non-integral determinant");
    return rat_num(det);
}

}  // namespace toric

#endif
