#include "liegrade/cyclotomic.hpp"

#include <ostream>
#include <sstream>

namespace liegrade {

namespace {

// Reduce a degree-<15 polynomial in z using z^8 = z^4 - 1. Descending order
// handles the cascade (indices 10..8 pick up contributions from 14..12).
void reduce15(std::array<Rat, 15>& p)
{
    for (int k = 14; k >= 8; --k) {
        if (p[static_cast<size_t>(k)] == 0)
            continue;
        Rat t = p[static_cast<size_t>(k)];
        p[static_cast<size_t>(k)] = 0;
        p[static_cast<size_t>(k - 4)] += t;
        p[static_cast<size_t>(k - 8)] -= t;
    }
}

std::array<Cyc, 24> make_zeta_table()
{
    std::array<Cyc, 24> tab;
    std::array<Rat, 15> p{};
    p[0] = 1;
    for (int k = 0; k < 24; ++k) {
        std::array<Rat, Cyc::kDegree> coords;
        for (int i = 0; i < Cyc::kDegree; ++i)
            coords[static_cast<size_t>(i)] = p[static_cast<size_t>(i)];
        tab[static_cast<size_t>(k)] = Cyc::from_coords(coords);
        // multiply by z
        for (int i = 13; i >= 0; --i)
            p[static_cast<size_t>(i + 1)] = p[static_cast<size_t>(i)];
        p[0] = 0;
        reduce15(p);
    }
    return tab;
}

const std::array<Cyc, 24>& zeta_table()
{
    static const std::array<Cyc, 24> tab = make_zeta_table();
    return tab;
}

}  // namespace

const Cyc& Cyc::zeta_pow(long k)
{
    long r = k % kConductor;
    if (r < 0)
        r += kConductor;
    return zeta_table()[static_cast<size_t>(r)];
}

Cyc Cyc::root_of_unity(int n, long k)
{
    if (n <= 0 || kConductor % n != 0)
        throw Error("unsupported root-of-unity order " + std::to_string(n) +
                    " (must divide 24)");
    return zeta_pow(static_cast<long>(kConductor / n) * k);
}

bool Cyc::is_zero() const
{
    for (const Rat& r : c_)
        if (r != 0)
            return false;
    return true;
}

bool Cyc::is_one() const
{
    if (c_[0] != 1)
        return false;
    for (int i = 1; i < kDegree; ++i)
        if (c_[static_cast<size_t>(i)] != 0)
            return false;
    return true;
}

bool Cyc::is_rational() const
{
    for (int i = 1; i < kDegree; ++i)
        if (c_[static_cast<size_t>(i)] != 0)
            return false;
    return true;
}

Rat Cyc::as_rational() const
{
    if (!is_rational())
        throw Error("cyclotomic value is not rational: " + to_string());
    return c_[0];
}

Cyc Cyc::operator-() const
{
    Cyc r;
    for (int i = 0; i < kDegree; ++i)
        r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o)
{
    for (int i = 0; i < kDegree; ++i)
        c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o)
{
    for (int i = 0; i < kDegree; ++i)
        c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
    return *this;
}

Cyc& Cyc::scale(const Rat& r)
{
    if (r == 0) {
        for (auto& x : c_)
            x = 0;
        return *this;
    }
    for (auto& x : c_)
        if (x != 0)
            x *= r;
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o)
{
    if (is_zero())
        return *this;
    if (o.is_zero()) {
        for (auto& x : c_)
            x = 0;
        return *this;
    }
    if (o.is_rational())
        return scale(o.c_[0]);
    if (is_rational()) {
        Rat s = c_[0];
        *this = o;
        return scale(s);
    }
    std::array<Rat, 15> p{};
    for (int i = 0; i < kDegree; ++i) {
        if (c_[static_cast<size_t>(i)] == 0)
            continue;
        for (int j = 0; j < kDegree; ++j) {
            if (o.c_[static_cast<size_t>(j)] == 0)
                continue;
            p[static_cast<size_t>(i + j)] +=
                c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    reduce15(p);
    for (int i = 0; i < kDegree; ++i)
        c_[static_cast<size_t>(i)] = p[static_cast<size_t>(i)];
    return *this;
}

Cyc Cyc::inverse() const
{
    if (is_zero())
        throw Error("division by zero in cyclotomic field");
    if (is_rational()) {
        Cyc r;
        r.c_[0] = Rat(1) / c_[0];
        return r;
    }
    // Solve M v = e0 where M is the matrix of multiplication by *this in the
    // power basis. Column j of M holds the coordinates of (*this) * z^j.
    std::array<std::array<Rat, 9>, 8> m;  // augmented 8x9
    Cyc col = *this;
    for (int j = 0; j < kDegree; ++j) {
        for (int i = 0; i < kDegree; ++i)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                col.c_[static_cast<size_t>(i)];
        if (j + 1 < kDegree)
            col *= zeta_pow(1);
    }
    for (int i = 0; i < kDegree; ++i)
        m[static_cast<size_t>(i)][8] = (i == 0) ? 1 : 0;

    // Gauss-Jordan with partial pivoting on the first nonzero entry.
    for (int piv = 0; piv < kDegree; ++piv) {
        int r = piv;
        while (r < kDegree && m[static_cast<size_t>(r)][static_cast<size_t>(piv)] == 0)
            ++r;
        if (r == kDegree)
            throw Error("cyclotomic inverse: singular multiplication matrix");
        if (r != piv)
            std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(piv)]);
        Rat inv = Rat(1) / m[static_cast<size_t>(piv)][static_cast<size_t>(piv)];
        for (int j = piv; j <= 8; ++j)
            m[static_cast<size_t>(piv)][static_cast<size_t>(j)] *= inv;
        for (int i = 0; i < kDegree; ++i) {
            if (i == piv)
                continue;
            Rat f = m[static_cast<size_t>(i)][static_cast<size_t>(piv)];
            if (f == 0)
                continue;
            for (int j = piv; j <= 8; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * m[static_cast<size_t>(piv)][static_cast<size_t>(j)];
        }
    }
    Cyc r;
    for (int i = 0; i < kDegree; ++i)
        r.c_[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][8];
    return r;
}

Cyc& Cyc::operator/=(const Cyc& o)
{
    return *this *= o.inverse();
}

Cyc Cyc::pow(long e) const
{
    if (e == 0)
        return cyc_one();
    Cyc base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Cyc acc(1);
    while (n) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::vector<std::string> Cyc::coord_strings() const
{
    std::vector<std::string> v;
    v.reserve(kDegree);
    for (const Rat& r : c_)
        v.push_back(r.get_str());
    return v;
}

Cyc Cyc::from_coord_strings(const std::vector<std::string>& v)
{
    if (v.size() != kDegree)
        throw Error("cyclotomic literal needs exactly 8 coordinates");
    std::array<Rat, kDegree> coords;
    for (int i = 0; i < kDegree; ++i)
        coords[static_cast<size_t>(i)] = parse_rat(v[static_cast<size_t>(i)]);
    return from_coords(coords);
}

std::string Cyc::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kDegree; ++i) {
        const Rat& r = c_[static_cast<size_t>(i)];
        if (r == 0)
            continue;
        Rat a = r > 0 ? r : Rat(-r);
        if (first) {
            if (r < 0)
                os << "-";
            first = false;
        } else {
            os << (r > 0 ? " + " : " - ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit)
            os << a.get_str();
        if (i > 0) {
            if (!unit)
                os << "*";
            os << "z";
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        return "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& x)
{
    return os << x.to_string();
}

}  // namespace liegrade
