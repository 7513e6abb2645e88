#include "liegrade/bichar.hpp"

namespace liegrade {

Bichar::Bichar(AbelianGroup group, IntMat exponents)
    : grp_(std::move(group)), m_(std::move(exponents))
{
    if (!grp_.is_finite())
        throw Error("bicharacter requires a finite group");
    n_ = grp_.torsion_exponent();
    const int k = grp_.n();
    if (m_.rows() != k || m_.cols() != k)
        throw Error("bicharacter exponent matrix must be " + std::to_string(k) + "x" + std::to_string(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m_.at(i, j) = mod_floor(m_.at(i, j), n_);
    for (int i = 0; i < k; ++i) {
        if (m_.at(i, i) != 0)
            throw Error("bicharacter not alternating: nonzero diagonal exponent");
        for (int j = 0; j < k; ++j) {
            if (mod_floor(m_.at(i, j) + m_.at(j, i), n_) != 0)
                throw Error("bicharacter not alternating: exponent matrix not skew");
            if (m_.at(i, j) % (n_ / grp_.coord_order(i)) != 0 ||
                m_.at(i, j) % (n_ / grp_.coord_order(j)) != 0)
                throw Error("bicharacter ill-defined: value order exceeds generator order");
        }
    }
}

Bichar Bichar::trivial(const AbelianGroup& g)
{
    return Bichar(g, IntMat(g.n(), g.n()));
}

Bichar Bichar::hyperbolic(const Int& ell)
{
    AbelianGroup g = AbelianGroup::elementary(ell, 2);
    IntMat m(2, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = ell - 1;
    return Bichar(g, std::move(m));
}

Bichar Bichar::oplus(const Bichar& o) const
{
    AbelianGroup g = grp_.times(o.grp_);
    int k1 = grp_.n(), k2 = o.grp_.n();
    Int nn = g.torsion_exponent();
    IntMat m(k1 + k2, k1 + k2);
    for (int i = 0; i < k1; ++i)
        for (int j = 0; j < k1; ++j)
            m.at(i, j) = m_.at(i, j) * (nn / n_);
    for (int i = 0; i < k2; ++i)
        for (int j = 0; j < k2; ++j)
            m.at(k1 + i, k1 + j) = o.m_.at(i, j) * (nn / o.n_);
    return Bichar(g, std::move(m));
}

Int Bichar::pairing_exponent(const Elt& a, const Elt& b) const
{
    Elt ra = grp_.reduce(a), rb = grp_.reduce(b);
    Int e = 0;
    const int k = grp_.n();
    for (int i = 0; i < k; ++i) {
        if (ra[static_cast<size_t>(i)] == 0)
            continue;
        for (int j = 0; j < k; ++j) {
            if (rb[static_cast<size_t>(j)] == 0 || m_.at(i, j) == 0)
                continue;
            e += ra[static_cast<size_t>(i)] * m_.at(i, j) * rb[static_cast<size_t>(j)];
        }
    }
    return mod_floor(e, n_);
}

Cyc Bichar::pairing(const Elt& a, const Elt& b) const
{
    if (Cyc::kConductor % n_ != 0)
        throw Error("bicharacter values of order " + n_.get_str() +
                    " do not lie in the fixed cyclotomic field");
    Int e = pairing_exponent(a, b);
    return Cyc::root_of_unity(static_cast<int>(n_.get_si()), e.get_si());
}

bool Bichar::is_trivial() const
{
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = 0; j < m_.cols(); ++j)
            if (m_.at(i, j) != 0)
                return false;
    return true;
}

Bichar Bichar::power(const Int& m) const
{
    IntMat e = m_;
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j)
            e.at(i, j) = mod_floor(e.at(i, j) * m, n_);
    return Bichar(grp_, std::move(e));
}

Bichar Bichar::restrict_to(const Subgroup& s) const
{
    if (s.ambient() != grp_)
        throw Error("restriction to a subgroup of a different group");
    const Subgroup::Canon& cn = s.canon();
    const AbelianGroup& t = cn.group;
    Int nt = t.is_trivial() ? Int(1) : t.torsion_exponent();
    IntMat m(t.n(), t.n());
    for (int i = 0; i < t.n(); ++i)
        for (int j = 0; j < t.n(); ++j) {
            Int e = pairing_exponent(cn.gens[static_cast<size_t>(i)], cn.gens[static_cast<size_t>(j)]);
            // values on T are nt-th roots of unity, so e * nt / N is integral
            if ((e * nt) % n_ != 0)
                throw Error("restriction produced a value outside the subgroup's root group");
            m.at(i, j) = mod_floor(e * nt / n_, nt);
        }
    return Bichar(t, std::move(m));
}

Subgroup radical(const Bichar& b)
{
    const AbelianGroup& g = b.group();
    if (g.is_trivial())
        return Subgroup::full(g);
    // beta(x, g_j) = 1 for all generators: (M^T x)_j = 0 mod N
    IntMat mt = b.exponents().transposed();
    std::vector<Elt> gens;
    for (auto& x : solve_mod(mt, b.value_order()))
        gens.push_back(g.reduce(std::move(x)));
    return Subgroup(g, std::move(gens));
}

bool is_isotropic(const Bichar& b, const Subgroup& s)
{
    if (s.ambient() != b.group())
        throw Error("isotropy test against a subgroup of a different group");
    const auto& gens = s.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            if (b.pairing_exponent(gens[i], gens[j]) != 0)
                return false;
    return true;
}

bool is_nondegenerate(const Bichar& b)
{
    return radical(b).order() == 1;
}

BrauerClass brauer_class(const Bichar& b)
{
    Subgroup rad = radical(b);
    Subgroup support = perp(rad);
    Bichar restricted = b.restrict_to(support);
    if (!is_nondegenerate(restricted))
        throw Error("brauer_class: form degenerates on perp(radical); malformed exponent matrix");
    Int size = support.order();
    Int deg = sqrt(size);
    if (deg * deg != size)
        throw Error("brauer_class: support order " + size.get_str() + " is not a perfect square");
    return {std::move(support), std::move(restricted), deg};
}

}  // namespace liegrade
