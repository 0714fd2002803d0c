#ifndef RINGLAT_MATRIX_HPP
#define RINGLAT_MATRIX_HPP

#include <optional>
#include <vector>

#include "ringlat/field.hpp"

namespace ringlat {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Vec zero_vec(const FieldPtr& field, size_t n);
Vec unit_vec(const FieldPtr& field, size_t n, size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& a);

struct Rref {
    Mat rows;                  // nonzero rows in reduced echelon form
    std::vector<size_t> pivots;  // pivot column of each row, strictly increasing
};

/// Reduced row echelon form: pivot entries 1, pivot columns cleared, zero
/// rows dropped. The result is the canonical basis of the row space.
Rref rref(Mat m);

/// Residual of v after eliminating the pivot columns of a reduced basis.
/// Zero iff v lies in the row space.
Vec reduce_by(const Rref& basis, Vec v);

bool in_span(const Rref& basis, const Vec& v);

/// Coordinates of v in the reduced basis (v[pivot_i]); nullopt if v is not in
/// the span.
std::optional<Vec> coords_in(const Rref& basis, const Vec& v);

Mat transpose(const Mat& m, const FieldPtr& field, size_t cols);

/// Basis (as RREF rows) of { x : x * m = 0 }, x of length rows(m).
Rref left_kernel(const Mat& m, const FieldPtr& field, size_t cols);

/// Basis of { x : m * x = 0 }, x of length cols.
Rref null_space(const Mat& m, const FieldPtr& field, size_t cols);

/// One solution x of m * x = b, if consistent.
std::optional<Vec> solve(const Mat& m, const Vec& b, const FieldPtr& field, size_t cols);

size_t rank_of(Mat m);

} // namespace ringlat

#endif
