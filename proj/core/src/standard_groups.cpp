#include "repext/standard_groups.hpp"

namespace repext {

FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return group_from_table(std::move(mul));
}

FiniteGroup product_of_cyclic(int a, int b) {
    const int n = a * b;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int i = (x / b + y / b) % a;
            int j = (x % b + y % b) % b;
            mul[x][y] = i * b + j;
        }
    return group_from_table(std::move(mul));
}

FiniteGroup dihedral_group(int n) {
    const int m = 2 * n;
    auto rot = [n](int k) { return ((k % n) + n) % n; };
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int k = 0; k < n; ++k) {
        labels[k] = "r^" + std::to_string(k);
        labels[n + k] = "s r^" + std::to_string(k);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            mul[a][b] = rot(a + b);               // r^a r^b
            mul[a][n + b] = n + rot(b - a);       // r^a (s r^b)
            mul[n + a][b] = n + rot(a + b);       // (s r^a) r^b
            mul[n + a][n + b] = rot(b - a);       // (s r^a)(s r^b)
        }
    return group_from_table(std::move(mul), std::move(labels));
}

namespace {

// quaternion units encoded as (sign, axis), axis 0 = scalar, 1,2,3 = i,j,k
struct Quat {
    int sign;
    int axis;
};

Quat quat_mul(Quat p, Quat q) {
    static const int axis_table[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    static const int sign_table[4][4] = {
        {1, 1, 1, 1},
        {1, -1, 1, -1},
        {1, -1, -1, 1},
        {1, 1, -1, -1},
    };
    return {p.sign * q.sign * sign_table[p.axis][q.axis], axis_table[p.axis][q.axis]};
}

} // namespace

FiniteGroup quaternion_group() {
    auto index_of = [](Quat q) { return 2 * q.axis + (q.sign > 0 ? 0 : 1); };
    auto unit_at = [](int idx) { return Quat{idx % 2 == 0 ? 1 : -1, idx / 2}; };
    std::vector<std::vector<int>> mul(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            mul[a][b] = index_of(quat_mul(unit_at(a), unit_at(b)));
    std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return group_from_table(std::move(mul), std::move(labels));
}

FiniteGroup generalized_quaternion_group(int n) {
    const int m = 4 * n;
    const int c = 2 * n; // order of a
    auto rot = [c](int k) { return ((k % c) + c) % c; };
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            mul[i][j] = rot(i + j);                   // a^i a^j
            mul[i][c + j] = c + rot(j - i);           // a^i (b a^j)
            mul[c + i][j] = c + rot(i + j);           // (b a^i) a^j
            mul[c + i][c + j] = rot(n + j - i);       // (b a^i)(b a^j) = a^{n+j-i}
        }
    return group_from_table(std::move(mul));
}

FiniteGroup heisenberg_group_27() {
    const int m = 27;
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            int x1 = p / 9, y1 = (p / 3) % 3, z1 = p % 3;
            int x2 = q / 9, y2 = (q / 3) % 3, z2 = q % 3;
            int x = (x1 + x2) % 3;
            int y = (y1 + y2) % 3;
            int z = (z1 + z2 + x1 * y2) % 3;
            mul[p][q] = 9 * x + 3 * y + z;
        }
    return group_from_table(std::move(mul));
}

} // namespace repext
