// intmat.hpp — exact integer matrices: Smith normal form with transforms,
// integer kernels and linear solving. Everything uses big integers; entry
// blowup in intermediate SNF steps is real even for small inputs.
#pragma once

#include "liegrade/rational.hpp"

#include <vector>

namespace liegrade {

class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return d_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const Int& at(int i, int j) const { return d_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }

    std::vector<Int> col(int j) const;
    std::vector<Int> row(int i) const;

    IntMat operator*(const IntMat& o) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column
    IntMat transposed() const;
    IntMat hstack(const IntMat& o) const;

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

    // Cofactor-expansion determinant; intended for small matrices (tests and
    // unimodularity checks).
    Int det_small() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> d_;
};

// U * A * V = S with U, V unimodular and S diagonal, S[0] | S[1] | ...,
// diagonal entries nonnegative. Uinv and Vinv are the exact inverses.
struct SmithDecomposition {
    IntMat s, u, v, uinv, vinv;
    int rank = 0;  // number of nonzero diagonal entries
    std::vector<Int> diag() const;
};

SmithDecomposition smith_normal_form(const IntMat& a);

// Basis of { x : A x = 0 } over the integers, as columns.
std::vector<std::vector<Int>> integer_kernel(const IntMat& a);

// One integer solution of A x = b, if any.
bool solve_integer(const IntMat& a, const std::vector<Int>& b, std::vector<Int>& out);

// Generators of { x : A x = 0 (mod m) } as a subgroup of Z^cols (together
// with m*e_i which are always solutions). m > 0.
std::vector<std::vector<Int>> solve_mod(const IntMat& a, const Int& m);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
// Nonnegative remainder of a mod m (m > 0).
Int mod_floor(const Int& a, const Int& m);

}  // namespace liegrade
