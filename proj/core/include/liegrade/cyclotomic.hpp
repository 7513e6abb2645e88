// cyclotomic.hpp — exact arithmetic in the field of 24th roots of unity.
//
// Elements are stored in the power basis 1, z, ..., z^7 of a fixed primitive
// 24th root z, reduced modulo z^8 = z^4 - 1. The conductor 24 = lcm(8,3,4)
// covers every root of unity used elsewhere in the library: -1 = z^12,
// i = z^6, omega = z^8 (primitive cube root), and the primitive 8th root z^3.
#pragma once

#include "liegrade/rational.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace liegrade {

class Cyc {
public:
    static constexpr int kDegree = 8;
    static constexpr int kConductor = 24;

    Cyc() = default;
    Cyc(int v) { c_[0] = v; }
    Cyc(long v) { c_[0] = v; }
    explicit Cyc(const Rat& v) { c_[0] = v; }
    explicit Cyc(const Int& v) { c_[0] = v; }

    static Cyc from_coords(const std::array<Rat, kDegree>& coords)
    {
        Cyc x;
        x.c_ = coords;
        for (Rat& r : x.c_)
            r.canonicalize();
        return x;
    }

    // z^k for any integer k (reduced mod 24).
    static const Cyc& zeta_pow(long k);

    // Primitive n-th root z^(24/n * k); n must divide 24.
    static Cyc root_of_unity(int n, long k = 1);

    const std::array<Rat, kDegree>& coords() const { return c_; }
    const Rat& coord(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    // The value as a rational; throws if the element is not rational.
    Rat as_rational() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    Cyc inverse() const;
    Cyc pow(long e) const;

    // Scale by a rational (cheaper than promoting the scalar).
    Cyc& scale(const Rat& r);

    // Textual form: the 8 coordinates as "p/q" strings.
    std::vector<std::string> coord_strings() const;
    static Cyc from_coord_strings(const std::vector<std::string>& v);

    // Human-readable polynomial in z, e.g. "1/2 - z^4".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Cyc& x);

private:
    std::array<Rat, kDegree> c_{};  // mpq_class default-constructs to 0
};

inline const Cyc& cyc_zero()
{
    static const Cyc z;
    return z;
}

inline const Cyc& cyc_one()
{
    static const Cyc o(1);
    return o;
}

}  // namespace liegrade
