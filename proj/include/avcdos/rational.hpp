#pragma once

// Exact rational scalar/vector/matrix primitives. Everything downstream of
// this header computes over Rat; no floating point enters any decision path
// (capacity estimation is the single, isolated exception and lives in
// capacity.hpp).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace avcdos {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator (the backend canonicalizes on every operation, so structural
// equality is exact value equality).
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using RVector = std::vector<Rat>;

struct BadRationalLiteral : std::runtime_error {
    explicit BadRationalLiteral(const std::string& lit)
        : std::runtime_error("not an exact rational literal: '" + lit + "'") {}
};

// Strict "[-]digits" or "[-]digits/digits" parser. Anything that smells of
// floating point ('.', 'e', inf, nan) is rejected so exactness can never be
// silently lost at an input boundary.
inline Rat parse_rational(std::string_view text) {
    const std::string lit(text);
    std::size_t i = 0;
    bool neg = false;
    if (i < lit.size() && (lit[i] == '+' || lit[i] == '-')) {
        neg = lit[i] == '-';
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < lit.size() && lit[i] >= '0' && lit[i] <= '9') ++i;
    if (i == num_begin) throw BadRationalLiteral(lit);
    Int num(lit.substr(num_begin, i - num_begin));
    Int den(1);
    if (i < lit.size()) {
        if (lit[i] != '/') throw BadRationalLiteral(lit);
        ++i;
        const std::size_t den_begin = i;
        while (i < lit.size() && lit[i] >= '0' && lit[i] <= '9') ++i;
        if (i == den_begin || i != lit.size()) throw BadRationalLiteral(lit);
        den = Int(lit.substr(den_begin, i - den_begin));
        if (den == 0) throw BadRationalLiteral(lit);
    }
    if (neg) num = -num;
    return Rat(num, den);
}

inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Dense row-major rational matrix; just enough linear algebra for the exact
// decision procedures (Gaussian elimination lives with its users).
class RMatrix {
  public:
    RMatrix() : rows_(0), cols_(0) {}
    RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RVector row(std::size_t r) const {
        return RVector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

  private:
    std::size_t rows_, cols_;
    RVector a_;
};

inline Rat dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline bool is_zero_vector(const RVector& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace avcdos
