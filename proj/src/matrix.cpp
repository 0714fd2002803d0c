#include "ringlat/matrix.hpp"

#include <algorithm>

namespace ringlat {

Vec zero_vec(const FieldPtr& field, size_t n) { return Vec(n, field->zero()); }

Vec unit_vec(const FieldPtr& field, size_t n, size_t i) {
    Vec v = zero_vec(field, n);
    v[i] = field->one();
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
    Vec r = a;
    for (auto& x : r) x = x * c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.isZero(); });
}

Rref rref(Mat m) {
    Rref out;
    if (m.empty()) return out;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col].isZero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Scalar inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].isZero()) continue;
            Scalar c = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = m[i][j] - c * m[row][j];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

Vec reduce_by(const Rref& basis, Vec v) {
    for (size_t i = 0; i < basis.rows.size(); ++i) {
        const Scalar& c = v[basis.pivots[i]];
        if (c.isZero()) continue;
        Scalar cc = c;
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = v[j] - cc * basis.rows[i][j];
    }
    return v;
}

bool in_span(const Rref& basis, const Vec& v) {
    return vec_is_zero(reduce_by(basis, v));
}

std::optional<Vec> coords_in(const Rref& basis, const Vec& v) {
    if (!in_span(basis, v)) return std::nullopt;
    Vec c;
    c.reserve(basis.rows.size());
    for (size_t i = 0; i < basis.rows.size(); ++i) c.push_back(v[basis.pivots[i]]);
    return c;
}

Mat transpose(const Mat& m, const FieldPtr& field, size_t cols) {
    Mat t(cols, Vec(m.size(), field->zero()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

Rref null_space(const Mat& m, const FieldPtr& field, size_t cols) {
    Rref r = rref(m);
    // free columns parameterize the kernel
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : r.pivots) is_pivot[p] = true;
    Mat basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec x = zero_vec(field, cols);
        x[free] = field->one();
        for (size_t i = 0; i < r.rows.size(); ++i)
            x[r.pivots[i]] = -r.rows[i][free];
        basis.push_back(std::move(x));
    }
    return rref(std::move(basis));
}

Rref left_kernel(const Mat& m, const FieldPtr& field, size_t cols) {
    return null_space(transpose(m, field, cols), field, m.size());
}

std::optional<Vec> solve(const Mat& m, const Vec& b, const FieldPtr& field, size_t cols) {
    Mat aug = m;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Rref r = rref(std::move(aug));
    Vec x = zero_vec(field, cols);
    for (size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivots[i] == cols) return std::nullopt;  // inconsistent
        x[r.pivots[i]] = r.rows[i][cols];
    }
    return x;
}

size_t rank_of(Mat m) { return rref(std::move(m)).rows.size(); }

} // namespace ringlat
