#pragma once

#include <Eigen/Dense>

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "schatten/errors.hpp"

namespace schatten {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Matrix-free symmetric positive semi-definite operator. The estimators see
/// a matrix only through this interface: a dimension and an apply action.
///
/// apply() must be linear and symmetric; positive semi-definiteness is
/// advertised through spd_hint()/spsd_hint() and is NOT validated here (that
/// would require spectral work) -- violations surface through quadratic-form
/// checks downstream.
///
/// Thread safety: apply is a pure function of (operator state, input), so an
/// operator may be shared across concurrent workers. The matvec tally is the
/// only mutation and uses a relaxed atomic, keeping concurrent counts exact.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;

    LinearOperator(const LinearOperator&) = delete;
    LinearOperator& operator=(const LinearOperator&) = delete;

    Eigen::Index dim() const { return dim_; }

    /// True if the operator is advertised symmetric positive definite.
    bool spd_hint() const { return spd_; }

    /// y = A x. Increments the matvec tally by one.
    Vector apply(const Vector& x) const {
        check_dim(x.size());
        Vector y(dim_);
        apply_impl(x, y);
        matvecs_.fetch_add(1, std::memory_order_relaxed);
        return y;
    }

    /// Column-wise A X. Semantically identical to applying each column in
    /// order; increments the tally by the number of columns. Backends with a
    /// fast blocked kernel override apply_block_impl.
    Matrix apply_block(const Matrix& xs) const {
        check_dim(xs.rows());
        Matrix ys(dim_, xs.cols());
        apply_block_impl(xs, ys);
        matvecs_.fetch_add(static_cast<std::uint64_t>(xs.cols()),
                           std::memory_order_relaxed);
        return ys;
    }

    /// Monotone tally of apply invocations (block applies count per column).
    std::uint64_t matvec_count() const {
        return matvecs_.load(std::memory_order_relaxed);
    }

    void reset_matvec_count() const {
        matvecs_.store(0, std::memory_order_relaxed);
    }

protected:
    LinearOperator(Eigen::Index dim, bool spd) : dim_(dim), spd_(spd) {
        if (dim <= 0) throw InvalidArgument("operator dimension must be positive");
    }

    virtual void apply_impl(const Vector& x, Vector& y) const = 0;

    virtual void apply_block_impl(const Matrix& xs, Matrix& ys) const {
        Vector y(dim_);
        for (Eigen::Index c = 0; c < xs.cols(); ++c) {
            apply_impl(xs.col(c), y);
            ys.col(c) = y;
        }
    }

private:
    void check_dim(Eigen::Index n) const {
        if (n != dim_)
            throw DimensionError("vector length " + std::to_string(n) +
                                 " does not match operator dimension " +
                                 std::to_string(dim_));
    }

    Eigen::Index dim_;
    bool spd_;
    mutable std::atomic<std::uint64_t> matvecs_{0};
};

/// A^K x by K successive applies; the tally increases by exactly K.
Vector apply_power(const LinearOperator& op, Vector x, int power);

/// Column-wise A^K X.
Matrix apply_power_block(const LinearOperator& op, Matrix xs, int power);

/// x^T (A x). Costs one apply.
double quadratic_form(const LinearOperator& op, const Vector& x);

/// Dense symmetric operator, row-major storage. Construction validates
/// symmetry (max |a_ij - a_ji| <= 1e-12 * max |a_ij|) and rejects asymmetric
/// input; within tolerance the stored matrix is exactly symmetrized.
class DenseSymOp : public LinearOperator {
public:
    explicit DenseSymOp(const Matrix& a, bool spd = false);

    const RowMajorMatrix& matrix() const { return a_; }

protected:
    void apply_impl(const Vector& x, Vector& y) const override;
    void apply_block_impl(const Matrix& xs, Matrix& ys) const override;

private:
    RowMajorMatrix a_;
};

/// Symmetric operator in compressed sparse row storage. Column indices are
/// strictly increasing within each row; symmetry of the represented matrix is
/// verified at construction by transposing the pattern.
class SparseSymOp : public LinearOperator {
public:
    struct Triplet {
        Eigen::Index row, col;
        double value;
    };

    /// Builds CSR from triplets. Duplicate (row, col) entries are summed.
    /// The triplet set must describe the full (symmetric) matrix.
    SparseSymOp(Eigen::Index n, const std::vector<Triplet>& entries,
                bool spd = false);

    const std::vector<Eigen::Index>& row_offsets() const { return row_offsets_; }
    const std::vector<Eigen::Index>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t nnz() const { return values_.size(); }

    Matrix to_dense() const;

protected:
    void apply_impl(const Vector& x, Vector& y) const override;

private:
    std::vector<Eigen::Index> row_offsets_;
    std::vector<Eigen::Index> col_indices_;
    std::vector<double> values_;
};

/// diag(d).
class DiagonalOp : public LinearOperator {
public:
    explicit DiagonalOp(const Vector& d, bool spd = false)
        : LinearOperator(d.size(), spd), d_(d) {}

    static DiagonalOp identity(Eigen::Index n) {
        return DiagonalOp(Vector::Ones(n), /*spd=*/true);
    }

    const Vector& diagonal() const { return d_; }

protected:
    void apply_impl(const Vector& x, Vector& y) const override {
        y = d_.cwiseProduct(x);
    }
    void apply_block_impl(const Matrix& xs, Matrix& ys) const override {
        ys = d_.asDiagonal() * xs;
    }

private:
    Vector d_;
};

/// Q diag(d) Q^T applied as three stages, never forming the product.
class DiagonalSimilarityOp : public LinearOperator {
public:
    DiagonalSimilarityOp(const Matrix& q, const Vector& d, bool spd = false);

    const Matrix& basis() const { return q_; }
    const Vector& eigenvalues() const { return d_; }

protected:
    void apply_impl(const Vector& x, Vector& y) const override;
    void apply_block_impl(const Matrix& xs, Matrix& ys) const override;

private:
    Matrix q_;
    Vector d_;
};

/// Arbitrary composed/matrix-free symmetric operator given by a callback.
class CallbackOp : public LinearOperator {
public:
    using Apply = std::function<void(const Vector&, Vector&)>;

    CallbackOp(Eigen::Index dim, Apply apply, bool spd = false)
        : LinearOperator(dim, spd), fn_(std::move(apply)) {}

protected:
    void apply_impl(const Vector& x, Vector& y) const override { fn_(x, y); }

private:
    Apply fn_;
};

}  // namespace schatten
