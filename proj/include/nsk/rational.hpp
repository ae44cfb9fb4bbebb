// Exact rational matrices used for Q-matrices, inverses and involutions.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nsk {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}

    Rat& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rat& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    static RatMatrix identity(int n);
    bool is_integral() const;
    bool operator==(const RatMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
RatMatrix transpose(const RatMatrix& x);

// Gauss-Jordan; returns false when singular.
bool invert(const RatMatrix& m, RatMatrix& inv);
Rat determinant(RatMatrix m);

// Basis of the right kernel from the reduced row echelon form, one vector
// per free column with that entry set to 1, then scaled to a primitive
// integer vector.
std::vector<std::vector<int64_t>> integer_kernel(const RatMatrix& m);

std::string to_string(const Rat& q);

}  // namespace nsk
