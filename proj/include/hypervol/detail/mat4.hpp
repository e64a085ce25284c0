#pragma once

#include <array>

namespace hypervol::detail {

// Small fixed-size determinant/cofactor helpers shared by the real Gram
// matrix and its complex-parameter analogue. Cofactors are computed from
// explicit 3x3 minors, which stays exact-ish near singular determinants.

template <typename T>
using Mat4 = std::array<std::array<T, 4>, 4>;

template <typename T>
T det3(const Mat4<T>& m, int i, int j) {
    int r[3], c[3];
    for (int k = 0, t = 0; k < 4; ++k)
        if (k != i) r[t++] = k;
    for (int k = 0, t = 0; k < 4; ++k)
        if (k != j) c[t++] = k;
    const auto& a = m;
    return a[r[0]][c[0]] * (a[r[1]][c[1]] * a[r[2]][c[2]] - a[r[1]][c[2]] * a[r[2]][c[1]])
         - a[r[0]][c[1]] * (a[r[1]][c[0]] * a[r[2]][c[2]] - a[r[1]][c[2]] * a[r[2]][c[0]])
         + a[r[0]][c[2]] * (a[r[1]][c[0]] * a[r[2]][c[1]] - a[r[1]][c[1]] * a[r[2]][c[0]]);
}

// Signed (i,j) cofactor.
template <typename T>
T cofactor(const Mat4<T>& m, int i, int j) {
    T d = det3(m, i, j);
    return ((i + j) % 2 == 0) ? d : -d;
}

// Laplace expansion along row 0.
template <typename T>
T det4(const Mat4<T>& m) {
    T s{};
    for (int j = 0; j < 4; ++j) s += m[0][j] * cofactor(m, 0, j);
    return s;
}

} // namespace hypervol::detail
