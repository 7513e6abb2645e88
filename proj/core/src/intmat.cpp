#include "liegrade/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace liegrade {

Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int mod_floor(const Int& a, const Int& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows)
{
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw Error("ragged row list in integer matrix");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

std::vector<Int> IntMat::col(int j) const
{
    std::vector<Int> v(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        v[static_cast<size_t>(i)] = at(i, j);
    return v;
}

std::vector<Int> IntMat::row(int i) const
{
    std::vector<Int> v(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j)
        v[static_cast<size_t>(j)] = at(i, j);
    return v;
}

IntMat IntMat::operator*(const IntMat& o) const
{
    if (cols_ != o.rows_)
        throw Error("integer matrix product: dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& b = o.at(k, j);
                if (b != 0)
                    r.at(i, j) += a * b;
            }
        }
    return r;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw Error("integer matrix apply: dimension mismatch");
    std::vector<Int> r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[static_cast<size_t>(j)] != 0)
                acc += at(i, j) * v[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = acc;
    }
    return r;
}

IntMat IntMat::transposed() const
{
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

IntMat IntMat::hstack(const IntMat& o) const
{
    if (rows_ != o.rows_)
        throw Error("hstack: row count mismatch");
    IntMat r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j)
            r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Int IntMat::det_small() const
{
    if (rows_ != cols_)
        throw Error("determinant of non-square matrix");
    int n = rows_;
    if (n == 0)
        return 1;
    if (n == 1)
        return at(0, 0);
    Int acc = 0;
    // expand along the first column
    for (int i = 0; i < n; ++i) {
        if (at(i, 0) == 0)
            continue;
        IntMat minor(n - 1, n - 1);
        int r = 0;
        for (int k = 0; k < n; ++k) {
            if (k == i)
                continue;
            for (int j = 1; j < n; ++j)
                minor.at(r, j - 1) = at(k, j);
            ++r;
        }
        Int term = at(i, 0) * minor.det_small();
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

std::vector<Int> SmithDecomposition::diag() const
{
    std::vector<Int> d;
    int n = std::min(s.rows(), s.cols());
    for (int i = 0; i < n; ++i)
        d.push_back(s.at(i, i));
    return d;
}

namespace {

struct SnfWork {
    IntMat b, u, v, uinv, vinv;

    // row i <- row i + c * row j (updates U on the left, Uinv with the
    // inverse column operation so that u * a * v == b stays exact)
    void row_add(int i, int j, const Int& c)
    {
        for (int k = 0; k < b.cols(); ++k)
            b.at(i, k) += c * b.at(j, k);
        for (int k = 0; k < u.cols(); ++k)
            u.at(i, k) += c * u.at(j, k);
        for (int k = 0; k < uinv.rows(); ++k)
            uinv.at(k, j) -= c * uinv.at(k, i);
    }

    void col_add(int j, int i, const Int& c)
    {
        for (int k = 0; k < b.rows(); ++k)
            b.at(k, j) += c * b.at(k, i);
        for (int k = 0; k < v.rows(); ++k)
            v.at(k, j) += c * v.at(k, i);
        for (int k = 0; k < vinv.cols(); ++k)
            vinv.at(i, k) -= c * vinv.at(j, k);
    }

    void row_swap(int i, int j)
    {
        if (i == j)
            return;
        for (int k = 0; k < b.cols(); ++k)
            std::swap(b.at(i, k), b.at(j, k));
        for (int k = 0; k < u.cols(); ++k)
            std::swap(u.at(i, k), u.at(j, k));
        for (int k = 0; k < uinv.rows(); ++k)
            std::swap(uinv.at(k, i), uinv.at(k, j));
    }

    void col_swap(int i, int j)
    {
        if (i == j)
            return;
        for (int k = 0; k < b.rows(); ++k)
            std::swap(b.at(k, i), b.at(k, j));
        for (int k = 0; k < v.rows(); ++k)
            std::swap(v.at(k, i), v.at(k, j));
        for (int k = 0; k < vinv.cols(); ++k)
            std::swap(vinv.at(i, k), vinv.at(j, k));
    }

    void row_negate(int i)
    {
        for (int k = 0; k < b.cols(); ++k)
            b.at(i, k) = -b.at(i, k);
        for (int k = 0; k < u.cols(); ++k)
            u.at(i, k) = -u.at(i, k);
        for (int k = 0; k < uinv.rows(); ++k)
            uinv.at(k, i) = -uinv.at(k, i);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& a)
{
    int m = a.rows(), n = a.cols();
    SnfWork w{a, IntMat::identity(m), IntMat::identity(n), IntMat::identity(m), IntMat::identity(n)};

    int t = 0;
    int limit = std::min(m, n);
    while (t < limit) {
        // find a pivot: nonzero entry of minimal absolute value in B[t.., t..]
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const Int& e = w.b.at(i, j);
                if (e == 0)
                    continue;
                Int ae = abs(e);
                if (pi < 0 || ae < best) {
                    best = ae;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;  // all zero, done
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool clean = true;
        // clear column t below the pivot
        for (int i = t + 1; i < m; ++i) {
            if (w.b.at(i, t) == 0)
                continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.b.at(i, t).get_mpz_t(), w.b.at(t, t).get_mpz_t());
            w.row_add(i, t, -q);
            if (w.b.at(i, t) != 0)
                clean = false;
        }
        // clear row t right of the pivot
        for (int j = t + 1; j < n; ++j) {
            if (w.b.at(t, j) == 0)
                continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.b.at(t, j).get_mpz_t(), w.b.at(t, t).get_mpz_t());
            w.col_add(j, t, -q);
            if (w.b.at(t, j) != 0)
                clean = false;
        }
        if (!clean)
            continue;  // smaller remainders exist; repick pivot

        // pivot must divide every remaining entry; if not, fold the offending
        // row into row t and restart this step
        bool divides = true;
        for (int i = t + 1; i < m && divides; ++i)
            for (int j = t + 1; j < n; ++j) {
                if (w.b.at(i, j) % w.b.at(t, t) != 0) {
                    w.row_add(t, i, Int(1));
                    divides = false;
                    break;
                }
            }
        if (!divides)
            continue;

        if (w.b.at(t, t) < 0)
            w.row_negate(t);
        ++t;
    }

    SmithDecomposition r;
    r.rank = t;
    r.s = std::move(w.b);
    r.u = std::move(w.u);
    r.v = std::move(w.v);
    r.uinv = std::move(w.uinv);
    r.vinv = std::move(w.vinv);
    return r;
}

std::vector<std::vector<Int>> integer_kernel(const IntMat& a)
{
    SmithDecomposition d = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (int j = d.rank; j < a.cols(); ++j)
        basis.push_back(d.v.col(j));
    return basis;
}

bool solve_integer(const IntMat& a, const std::vector<Int>& b, std::vector<Int>& out)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw Error("solve_integer: dimension mismatch");
    SmithDecomposition d = smith_normal_form(a);
    std::vector<Int> c = d.u.apply(b);
    std::vector<Int> y(static_cast<size_t>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        if (i < d.rank) {
            const Int& s = d.s.at(i, i);
            if (c[static_cast<size_t>(i)] % s != 0)
                return false;
            y[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] / s;
        } else if (c[static_cast<size_t>(i)] != 0) {
            return false;
        }
    }
    out = d.v.apply(y);
    return true;
}

std::vector<std::vector<Int>> solve_mod(const IntMat& a, const Int& m)
{
    if (m <= 0)
        throw Error("solve_mod: modulus must be positive");
    SmithDecomposition d = smith_normal_form(a);
    // A x = 0 (mod m)  <=>  S y = 0 (mod m) with x = V y:
    // y_i multiple of m / gcd(s_i, m) for i < rank, free beyond the rank.
    std::vector<std::vector<Int>> gens;
    for (int i = 0; i < d.rank; ++i) {
        Int g = gcd(d.s.at(i, i), m);
        Int step = m / g;
        if (step == 1) {
            gens.push_back(d.v.col(i));
        } else {
            std::vector<Int> col = d.v.col(i);
            for (Int& e : col)
                e *= step;
            gens.push_back(std::move(col));
        }
    }
    for (int j = d.rank; j < a.cols(); ++j)
        gens.push_back(d.v.col(j));
    return gens;
}

}  // namespace liegrade
