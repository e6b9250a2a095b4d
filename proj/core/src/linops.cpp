#include "schatten/linops.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace schatten {

Vector apply_power(const LinearOperator& op, Vector x, int power) {
    if (power < 1) throw InvalidArgument("apply_power requires power >= 1");
    for (int k = 0; k < power; ++k) x = op.apply(x);
    return x;
}

Matrix apply_power_block(const LinearOperator& op, Matrix xs, int power) {
    if (power < 1) throw InvalidArgument("apply_power requires power >= 1");
    for (int k = 0; k < power; ++k) xs = op.apply_block(xs);
    return xs;
}

double quadratic_form(const LinearOperator& op, const Vector& x) {
    return x.dot(op.apply(x));
}

DenseSymOp::DenseSymOp(const Matrix& a, bool spd)
    : LinearOperator(a.rows(), spd) {
    if (a.rows() != a.cols())
        throw DimensionError("dense operator requires a square matrix");
    const double scale = a.cwiseAbs().maxCoeff();
    const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
        throw InvalidArgument(
            "matrix is not symmetric: max |a_ij - a_ji| = " + std::to_string(asym));
    a_ = 0.5 * (a + a.transpose());
}

void DenseSymOp::apply_impl(const Vector& x, Vector& y) const {
    y.noalias() = a_ * x;
}

void DenseSymOp::apply_block_impl(const Matrix& xs, Matrix& ys) const {
    ys.noalias() = a_ * xs;
}

SparseSymOp::SparseSymOp(Eigen::Index n, const std::vector<Triplet>& entries,
                         bool spd)
    : LinearOperator(n, spd) {
    // Coalesce duplicates in (row, col) order; map iteration yields the
    // strictly-increasing column order the CSR invariant requires.
    std::map<std::pair<Eigen::Index, Eigen::Index>, double> coalesced;
    for (const auto& t : entries) {
        if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
            throw DimensionError("triplet index out of range");
        coalesced[{t.row, t.col}] += t.value;
    }

    row_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    col_indices_.reserve(coalesced.size());
    values_.reserve(coalesced.size());
    for (const auto& [rc, v] : coalesced) {
        ++row_offsets_[static_cast<std::size_t>(rc.first) + 1];
        col_indices_.push_back(rc.second);
        values_.push_back(v);
    }
    for (std::size_t i = 1; i < row_offsets_.size(); ++i)
        row_offsets_[i] += row_offsets_[i - 1];

    // Symmetry of the represented matrix: transpose the pattern and compare.
    double scale = 0.0;
    for (double v : values_) scale = std::max(scale, std::abs(v));
    for (const auto& [rc, v] : coalesced) {
        auto mirror = coalesced.find({rc.second, rc.first});
        const double vt = mirror == coalesced.end() ? 0.0 : mirror->second;
        if (std::abs(v - vt) > 1e-12 * scale)
            throw InvalidArgument("sparse matrix is not symmetric at (" +
                                  std::to_string(rc.first) + ", " +
                                  std::to_string(rc.second) + ")");
    }
}

void SparseSymOp::apply_impl(const Vector& x, Vector& y) const {
    const Eigen::Index n = dim();
    for (Eigen::Index i = 0; i < n; ++i) {
        double acc = 0.0;
        for (Eigen::Index k = row_offsets_[static_cast<std::size_t>(i)];
             k < row_offsets_[static_cast<std::size_t>(i) + 1]; ++k) {
            acc += values_[static_cast<std::size_t>(k)] *
                   x[col_indices_[static_cast<std::size_t>(k)]];
        }
        y[i] = acc;
    }
}

Matrix SparseSymOp::to_dense() const {
    Matrix a = Matrix::Zero(dim(), dim());
    for (Eigen::Index i = 0; i < dim(); ++i)
        for (Eigen::Index k = row_offsets_[static_cast<std::size_t>(i)];
             k < row_offsets_[static_cast<std::size_t>(i) + 1]; ++k)
            a(i, col_indices_[static_cast<std::size_t>(k)]) =
                values_[static_cast<std::size_t>(k)];
    return a;
}

DiagonalSimilarityOp::DiagonalSimilarityOp(const Matrix& q, const Vector& d,
                                           bool spd)
    : LinearOperator(q.rows(), spd), q_(q), d_(d) {
    if (q.rows() != q.cols() || q.rows() != d.size())
        throw DimensionError("similarity operator requires square Q matching d");
}

void DiagonalSimilarityOp::apply_impl(const Vector& x, Vector& y) const {
    Vector t = q_.transpose() * x;
    t.array() *= d_.array();
    y.noalias() = q_ * t;
}

void DiagonalSimilarityOp::apply_block_impl(const Matrix& xs, Matrix& ys) const {
    Matrix t = q_.transpose() * xs;
    t.array().colwise() *= d_.array();
    ys.noalias() = q_ * t;
}

}  // namespace schatten
