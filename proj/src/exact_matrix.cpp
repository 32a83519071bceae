#include "thetadet/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace thetadet {

ExactMatrix delete_row_col(const ExactMatrix& m, int deleted) {
    if (m.rows() != m.cols()) throw std::invalid_argument("delete_row_col: matrix not square");
    int n = static_cast<int>(m.rows());
    if (deleted < 0 || deleted >= n) throw std::out_of_range("delete_row_col: index out of range");
    ExactMatrix r(n - 1, n - 1);
    for (int i = 0, ri = 0; i < n; ++i) {
        if (i == deleted) continue;
        for (int j = 0, rj = 0; j < n; ++j) {
            if (j == deleted) continue;
            r(ri, rj) = m(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

bool matrices_equal(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

Dyadic det_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return Dyadic(1);

    // Clear denominators: multiply every entry by 2^scale.
    unsigned scale = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, m(i, j).exponent());

    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = m(i, j).numerator() << (scale - m(i, j).exponent());

    // Bareiss fraction-free elimination; every division below is exact.
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Dyadic(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    BigInt det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    // Undo the scaling: det(2^scale * M) = 2^(n*scale) det(M).
    return Dyadic::ratio(std::move(det), static_cast<unsigned>(n) * scale);
}

} // namespace thetadet
