#pragma once

#include <vector>

#include "liedual/scalar.hpp"

namespace liedual {

class ScalarMatrix {
public:
    ScalarMatrix(size_t rows, size_t cols, ContextPtr ctx)
        : rows_(rows), cols_(cols), ctx_(std::move(ctx)), d_(rows * cols, Scalar::zero(ctx_))
    {
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const ContextPtr& context() const { return ctx_; }

    Scalar& at(size_t r, size_t c) { return d_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return d_[r * cols_ + c]; }

    bool operator==(const ScalarMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }

    ScalarMatrix substitute(const std::map<std::string, Rational>& bindings) const
    {
        ScalarMatrix m(rows_, cols_, Scalar::zero(ctx_).substitute(bindings).context());
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i].substitute(bindings);
        return m;
    }

private:
    size_t rows_, cols_;
    ContextPtr ctx_;
    std::vector<Scalar> d_;
};

/// Result of fraction-field Gauss-Jordan reduction. `genericity` collects
/// every non-constant polynomial the reduction divided by; the reduced
/// system is valid wherever none of them vanish.
struct ReducedSystem {
    ScalarMatrix rref;
    std::vector<size_t> pivot_cols;
    std::vector<Polynomial> genericity;

    size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

inline void record_genericity(std::vector<Polynomial>& out, const Scalar& pivot)
{
    if (pivot.numerator().is_constant()) return;
    Polynomial p = pivot.numerator().content_and_primitive().second;
    for (const auto& q : out)
        if (q == p) return;
    out.push_back(std::move(p));
}

} // namespace detail

/// Gauss-Jordan over the fraction field. Columns are processed left to
/// right; within a column the pivot is the topmost unused row holding a
/// constant entry, then the topmost denominator-free entry, then the
/// topmost nonzero entry.
inline ReducedSystem row_reduce(ScalarMatrix m)
{
    ReducedSystem out{m, {}, {}};
    ScalarMatrix& a = out.rref;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t best = a.rows();
        int best_class = 3;
        for (size_t r = row; r < a.rows(); ++r) {
            const Scalar& s = a.at(r, col);
            if (s.is_zero()) continue;
            int cls = s.is_constant() ? 0 : (s.is_polynomial() ? 1 : 2);
            if (cls < best_class) {
                best_class = cls;
                best = r;
                if (cls == 0) break;
            }
        }
        if (best == a.rows()) continue;
        if (best != row)
            for (size_t c = 0; c < a.cols(); ++c) std::swap(a.at(row, c), a.at(best, c));

        const Scalar pivot = a.at(row, col);
        detail::record_genericity(out.genericity, pivot);
        for (size_t c = col; c < a.cols(); ++c) a.at(row, c) = a.at(row, c) / pivot;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            const Scalar f = a.at(r, col);
            for (size_t c = col; c < a.cols(); ++c) a.at(r, c) = a.at(r, c) - f * a.at(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

/// Basis of the kernel of the reduced homogeneous system, one vector per
/// free column (that column set to 1).
inline std::vector<std::vector<Scalar>> nullspace_basis(const ReducedSystem& sys)
{
    const ScalarMatrix& a = sys.rref;
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : sys.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(a.cols(), Scalar::zero(a.context()));
        v[free_col] = Scalar::one(a.context());
        for (size_t k = 0; k < sys.pivot_cols.size(); ++k)
            v[sys.pivot_cols[k]] = -a.at(k, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact determinant by cofactor expansion with column-subset memoization;
/// division-free, fine for the small matrices used here.
inline Scalar determinant(const ScalarMatrix& m)
{
    if (m.rows() != m.cols()) throw InternalError("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return Scalar::one(m.context());
    if (n > 63) throw DomainError("determinant: matrix too large for the subset expansion");
    std::map<std::uint64_t, Scalar> memo;
    auto solve = [&](auto&& self, std::uint64_t colmask, size_t rowstart) -> Scalar {
        if (rowstart == n) return Scalar::one(m.context());
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        Scalar acc = Scalar::zero(m.context());
        int sign = 1;
        for (size_t c = 0; c < n; ++c) {
            if (colmask & (1ull << c)) continue;
            const Scalar& e = m.at(rowstart, c);
            if (!e.is_zero()) {
                Scalar sub = self(self, colmask | (1ull << c), rowstart + 1);
                Scalar term = e * sub;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(colmask, acc);
        return acc;
    };
    return solve(solve, 0, 0);
}

} // namespace liedual
