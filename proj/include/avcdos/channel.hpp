#pragma once

// Finite arbitrarily varying channels W(y|x,s) with exact rational entries,
// plus the distributions, stochastic matrices, cost functions and sequence
// types the analyses share. All values are immutable after construction and
// every operation is a pure function.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avcdos/rational.hpp"

namespace avcdos {

struct RaggedTable : std::runtime_error {
    RaggedTable() : std::runtime_error("channel table is ragged (inconsistent dimensions)") {}
};

struct NegativeEntry : std::runtime_error {
    int x, s, y;
    NegativeEntry(int x_, int s_, int y_)
        : std::runtime_error("negative channel entry at (x=" + std::to_string(x_) +
                             ", s=" + std::to_string(s_) + ", y=" + std::to_string(y_) + ")"),
          x(x_), s(s_), y(y_) {}
};

struct RowSumMismatch : std::runtime_error {
    int x, s;
    Rat actual_sum;
    RowSumMismatch(int x_, int s_, Rat sum)
        : std::runtime_error("row (x=" + std::to_string(x_) + ", s=" + std::to_string(s_) +
                             ") sums to " + to_string(sum) + ", expected 1"),
          x(x_), s(s_), actual_sum(std::move(sum)) {}
};

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
    explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Alphabet sizes |X|, |S|, |Y|.
struct Dims {
    int nx = 0;
    int ns = 0;
    int ny = 0;

    Dims() = default;
    Dims(int nx_, int ns_, int ny_) : nx(nx_), ns(ns_), ny(ny_) {
        if (nx < 1 || ns < 1 || ny < 1)
            throw DimensionMismatch("alphabet sizes must all be >= 1");
    }

    int tensor_size() const { return nx * ns * ny; }
    bool operator==(const Dims&) const = default;
};

// Probability distribution with exact entries: nonnegative, summing to 1.
class Distribution {
  public:
    explicit Distribution(RVector p) : p_(std::move(p)) {
        if (p_.empty()) throw DimensionMismatch("distribution must have support_size >= 1");
        Rat sum(0);
        for (const Rat& v : p_) {
            if (v < 0) throw NegativeEntry(-1, -1, -1);
            sum += v;
        }
        if (sum != 1) throw RowSumMismatch(-1, -1, sum);
    }

    static Distribution point_mass(int support, int at) {
        RVector p(static_cast<std::size_t>(support), Rat(0));
        p.at(static_cast<std::size_t>(at)) = 1;
        return Distribution(std::move(p));
    }

    static Distribution uniform(int support) {
        RVector p(static_cast<std::size_t>(support), Rat(1, support));
        return Distribution(std::move(p));
    }

    int support_size() const { return static_cast<int>(p_.size()); }
    const Rat& at(int i) const { return p_[static_cast<std::size_t>(i)]; }
    const RVector& vec() const { return p_; }
    bool operator==(const Distribution&) const = default;

  private:
    RVector p_;
};

// Row-stochastic matrix U : [rows] -> P([cols]); houses symmetrizers.
class StochMatrix {
  public:
    StochMatrix(int rows, int cols, RVector entries)
        : rows_(rows), cols_(cols), u_(std::move(entries)) {
        if (rows_ < 1 || cols_ < 1 || u_.size() != static_cast<std::size_t>(rows_ * cols_))
            throw ShapeMismatch("stochastic matrix entries do not match rows*cols");
        for (int r = 0; r < rows_; ++r) {
            Rat sum(0);
            for (int c = 0; c < cols_; ++c) {
                const Rat& v = at(r, c);
                if (v < 0) throw NegativeEntry(r, c, -1);
                sum += v;
            }
            if (sum != 1) throw RowSumMismatch(r, -1, sum);
        }
    }

    static StochMatrix identity(int n) {
        RVector e(static_cast<std::size_t>(n * n), Rat(0));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = 1;
        return StochMatrix(n, n, std::move(e));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rat& at(int r, int c) const { return u_[static_cast<std::size_t>(r * cols_ + c)]; }
    Distribution row(int r) const {
        RVector p(u_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  u_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
        return Distribution(std::move(p));
    }
    const RVector& entries() const { return u_; }
    bool operator==(const StochMatrix&) const = default;

  private:
    int rows_, cols_;
    RVector u_;
};

// Per-symbol cost function. Analyses assume the normalization min cost = 0;
// construction validates it unless the caller explicitly opts out for
// exploratory inputs (analysis entry points re-check via is_normalized()).
class CostFn {
  public:
    explicit CostFn(RVector costs, bool require_normalized = true) : costs_(std::move(costs)) {
        if (costs_.empty()) throw DimensionMismatch("cost function needs an alphabet");
        Rat least = costs_[0];
        for (const Rat& c : costs_) {
            if (c < 0) throw DimensionMismatch("costs must be nonnegative");
            if (c < least) least = c;
        }
        if (require_normalized && least != 0)
            throw DimensionMismatch("cost function must attain 0 (normalization)");
    }

    int alphabet_size() const { return static_cast<int>(costs_.size()); }
    const Rat& at(int i) const { return costs_[static_cast<std::size_t>(i)]; }
    const RVector& vec() const { return costs_; }

    bool is_normalized() const {
        Rat least = costs_[0];
        for (const Rat& c : costs_)
            if (c < least) least = c;
        return least == 0;
    }

    Rat max_cost() const {
        Rat m = costs_[0];
        for (const Rat& c : costs_)
            if (c > m) m = c;
        return m;
    }

  private:
    RVector costs_;
};

// Finite sequence over an alphabet given as symbol indices.
struct Sequence {
    std::vector<int> symbols;

    int n() const { return static_cast<int>(symbols.size()); }
};

// The channel tensor W(y|x,s): for every (x,s) the slice over y is a
// distribution, checked exactly at construction.
class Avc {
  public:
    Avc(Dims dims, RVector w) : dims_(dims), w_(std::move(w)) {
        if (w_.size() != static_cast<std::size_t>(dims_.tensor_size()))
            throw RaggedTable();
        for (int x = 0; x < dims_.nx; ++x)
            for (int s = 0; s < dims_.ns; ++s) {
                Rat sum(0);
                for (int y = 0; y < dims_.ny; ++y) {
                    const Rat& v = at(x, s, y);
                    if (v < 0) throw NegativeEntry(x, s, y);
                    sum += v;
                }
                if (sum != 1) throw RowSumMismatch(x, s, sum);
            }
    }

    const Dims& dims() const { return dims_; }
    const Rat& at(int x, int s, int y) const {
        return w_[static_cast<std::size_t>((x * dims_.ns + s) * dims_.ny + y)];
    }
    // Output distribution W(.|x,s).
    Distribution out_row(int x, int s) const {
        RVector p(static_cast<std::size_t>(dims_.ny));
        for (int y = 0; y < dims_.ny; ++y) p[static_cast<std::size_t>(y)] = at(x, s, y);
        return Distribution(std::move(p));
    }
    const RVector& flat() const { return w_; }
    bool operator==(const Avc&) const = default;

  private:
    Dims dims_;
    RVector w_;
};

// Builds an Avc from a raw nested table, reporting the first violated
// constraint. Entry order is table[x][s][y].
inline Avc validate_avc(const std::vector<std::vector<RVector>>& table) {
    if (table.empty() || table[0].empty() || table[0][0].empty()) throw RaggedTable();
    const int nx = static_cast<int>(table.size());
    const int ns = static_cast<int>(table[0].size());
    const int ny = static_cast<int>(table[0][0].size());
    RVector flat;
    flat.reserve(static_cast<std::size_t>(nx * ns * ny));
    for (const auto& rows : table) {
        if (static_cast<int>(rows.size()) != ns) throw RaggedTable();
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != ny) throw RaggedTable();
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return Avc(Dims(nx, ns, ny), std::move(flat));
}

// Channel -> vector embedding: x-major, then s, then y, so component
// (x*ns + s)*ny + y equals W(y|x,s). Bijective with devectorize.
inline RVector vectorize(const Avc& w) { return w.flat(); }

inline Avc devectorize(const RVector& t, const Dims& dims) {
    if (t.size() != static_cast<std::size_t>(dims.tensor_size()))
        throw LengthMismatch("vector length " + std::to_string(t.size()) +
                             " does not match dims product " + std::to_string(dims.tensor_size()));
    return Avc(dims, t);
}

// W_q(y|x) = sum_s W(y|x,s) q(s), exactly.
inline StochMatrix averaged_channel(const Avc& w, const Distribution& q) {
    if (q.support_size() != w.dims().ns)
        throw DimensionMismatch("averaging distribution must live on the state alphabet");
    RVector e(static_cast<std::size_t>(w.dims().nx * w.dims().ny), Rat(0));
    for (int x = 0; x < w.dims().nx; ++x)
        for (int y = 0; y < w.dims().ny; ++y) {
            Rat acc(0);
            for (int s = 0; s < w.dims().ns; ++s) acc += w.at(x, s, y) * q.at(s);
            e[static_cast<std::size_t>(x * w.dims().ny + y)] = acc;
        }
    return StochMatrix(w.dims().nx, w.dims().ny, std::move(e));
}

// Generators of the output hull for input x: the ns distributions W(.|x,s).
inline std::vector<Distribution> hull_generators(const Avc& w, int x) {
    if (x < 0 || x >= w.dims().nx) throw IndexOutOfRange("input symbol out of range");
    std::vector<Distribution> gens;
    gens.reserve(static_cast<std::size_t>(w.dims().ns));
    for (int s = 0; s < w.dims().ns; ++s) gens.push_back(w.out_row(x, s));
    return gens;
}

// Empirical distribution of a sequence: p(a) = N(a|seq)/n.
inline Distribution empirical_type(const Sequence& seq, int alphabet_size) {
    if (seq.n() < 1) throw DimensionMismatch("sequence must be nonempty");
    std::vector<long long> counts(static_cast<std::size_t>(alphabet_size), 0);
    for (int sym : seq.symbols) {
        if (sym < 0 || sym >= alphabet_size) throw IndexOutOfRange("sequence symbol out of range");
        ++counts[static_cast<std::size_t>(sym)];
    }
    RVector p(static_cast<std::size_t>(alphabet_size));
    for (int a = 0; a < alphabet_size; ++a)
        p[static_cast<std::size_t>(a)] = Rat(counts[static_cast<std::size_t>(a)], seq.n());
    return Distribution(std::move(p));
}

// Average per-symbol cost (1/n) sum_i c(seq_i), exactly.
inline Rat sequence_cost(const Sequence& seq, const CostFn& c) {
    if (seq.n() < 1) throw DimensionMismatch("sequence must be nonempty");
    Rat total(0);
    for (int sym : seq.symbols) {
        if (sym < 0 || sym >= c.alphabet_size())
            throw DimensionMismatch("sequence symbol outside cost alphabet");
        total += c.at(sym);
    }
    return total / seq.n();
}

// Expected cost under a distribution: sum_a p(a) c(a).
inline Rat expected_cost(const Distribution& p, const CostFn& c) {
    if (p.support_size() != c.alphabet_size())
        throw DimensionMismatch("distribution and cost alphabets differ");
    Rat total(0);
    for (int a = 0; a < p.support_size(); ++a) total += p.at(a) * c.at(a);
    return total;
}

}  // namespace avcdos
