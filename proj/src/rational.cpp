#include "nsk/rational.hpp"

#include <stdexcept>

namespace nsk {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RatMatrix::is_integral() const {
    for (const auto& x : a)
        if (denominator(x) != 1) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix size mismatch");
    RatMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

RatMatrix transpose(const RatMatrix& x) {
    RatMatrix t(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) t(j, i) = x(i, j);
    return t;
}

bool invert(const RatMatrix& m, RatMatrix& inv) {
    if (m.rows != m.cols) throw std::invalid_argument("invert: not square");
    int n = m.rows;
    RatMatrix a = m;
    inv = RatMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) { p = r; break; }
        if (p < 0) return false;
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rat piv = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rat f = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return true;
}

Rat determinant(RatMatrix a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant: not square");
    int n = a.rows;
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) { p = r; break; }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rat f = a(r, c) / a(c, c);
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

std::vector<std::vector<int64_t>> integer_kernel(const RatMatrix& m) {
    RatMatrix a = m;
    int rows = a.rows, cols = a.cols;
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Rat piv = a(r, c);
        for (int j = 0; j < cols; ++j) a(r, j) /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (int c : pivcol) is_piv[c] = true;

    std::vector<std::vector<int64_t>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -a(int(i), f);
        BigInt l = 1;
        for (const auto& x : v) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
        std::vector<BigInt> w(cols);
        BigInt g = 0;
        for (int j = 0; j < cols; ++j) {
            w[j] = BigInt(numerator(v[j])) * (l / BigInt(denominator(v[j])));
            g = boost::multiprecision::gcd(g, w[j]);
        }
        std::vector<int64_t> iv(cols);
        for (int j = 0; j < cols; ++j) iv[j] = static_cast<int64_t>(w[j] / g);
        out.push_back(std::move(iv));
    }
    return out;
}

std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace nsk
