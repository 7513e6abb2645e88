#include "liegrade/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace liegrade {

AbelianGroup::AbelianGroup(int free_rank, std::vector<Int> torsion_orders)
    : free_rank_(free_rank), orders_(std::move(torsion_orders))
{
    if (free_rank < 0)
        throw Error("negative free rank");
    for (const Int& d : orders_)
        if (d < 2)
            throw Error("torsion order must be >= 2");
}

AbelianGroup AbelianGroup::elementary(const Int& d, int k)
{
    return AbelianGroup(0, std::vector<Int>(static_cast<size_t>(k), d));
}

AbelianGroup AbelianGroup::times(const AbelianGroup& o) const
{
    std::vector<Int> orders = orders_;
    orders.insert(orders.end(), o.orders_.begin(), o.orders_.end());
    return AbelianGroup(free_rank_ + o.free_rank_, std::move(orders));
}

Int AbelianGroup::order() const
{
    if (free_rank_ > 0)
        return 0;
    Int o = 1;
    for (const Int& d : orders_)
        o *= d;
    return o;
}

Int AbelianGroup::torsion_exponent() const
{
    Int e = 1;
    for (const Int& d : orders_)
        e = lcm(e, d);
    return e;
}

bool AbelianGroup::is_invariant_factor_form() const
{
    for (size_t i = 0; i + 1 < orders_.size(); ++i)
        if (orders_[i + 1] % orders_[i] != 0)
            return false;
    return true;
}

Int AbelianGroup::coord_order(int i) const
{
    if (i < 0 || i >= n())
        throw Error("coordinate out of range");
    if (i < free_rank_)
        return 0;
    return orders_[static_cast<size_t>(i - free_rank_)];
}

Elt AbelianGroup::gen(int i) const
{
    Elt x = zero();
    x[static_cast<size_t>(i)] = 1;
    return x;
}

Elt AbelianGroup::reduce(Elt x) const
{
    if (static_cast<int>(x.size()) != n())
        throw Error("element has wrong length for group " + to_string());
    for (int i = free_rank_; i < n(); ++i)
        x[static_cast<size_t>(i)] = mod_floor(x[static_cast<size_t>(i)],
                                              orders_[static_cast<size_t>(i - free_rank_)]);
    return x;
}

Elt AbelianGroup::add(const Elt& a, const Elt& b) const
{
    Elt x(static_cast<size_t>(n()));
    for (int i = 0; i < n(); ++i)
        x[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
    return reduce(std::move(x));
}

Elt AbelianGroup::neg(const Elt& a) const
{
    Elt x(static_cast<size_t>(n()));
    for (int i = 0; i < n(); ++i)
        x[static_cast<size_t>(i)] = -a[static_cast<size_t>(i)];
    return reduce(std::move(x));
}

Elt AbelianGroup::scale(const Int& k, const Elt& a) const
{
    Elt x(static_cast<size_t>(n()));
    for (int i = 0; i < n(); ++i)
        x[static_cast<size_t>(i)] = k * a[static_cast<size_t>(i)];
    return reduce(std::move(x));
}

bool AbelianGroup::eq(const Elt& a, const Elt& b) const
{
    return reduce(a) == reduce(b);
}

bool AbelianGroup::is_zero(const Elt& a) const
{
    Elt r = reduce(a);
    for (const Int& c : r)
        if (c != 0)
            return false;
    return true;
}

Int AbelianGroup::order_of(const Elt& a) const
{
    Elt r = reduce(a);
    for (int i = 0; i < free_rank_; ++i)
        if (r[static_cast<size_t>(i)] != 0)
            return 0;
    Int o = 1;
    for (int i = free_rank_; i < n(); ++i) {
        const Int& d = orders_[static_cast<size_t>(i - free_rank_)];
        const Int& c = r[static_cast<size_t>(i)];
        if (c != 0)
            o = lcm(o, d / gcd(c, d));
    }
    return o;
}

IntMat AbelianGroup::relation_columns() const
{
    IntMat m(n(), torsion_count());
    for (int j = 0; j < torsion_count(); ++j)
        m.at(free_rank_ + j, j) = orders_[static_cast<size_t>(j)];
    return m;
}

std::vector<Elt> AbelianGroup::elements(const Int& cap) const
{
    if (!is_finite())
        throw Error("cannot enumerate an infinite group");
    if (order() > cap)
        throw Error("group too large to enumerate: " + to_string());
    std::vector<Elt> out;
    Elt cur = zero();
    while (true) {
        out.push_back(cur);
        int i = n() - 1;
        for (; i >= 0; --i) {
            size_t ii = static_cast<size_t>(i);
            cur[ii] += 1;
            if (cur[ii] < orders_[static_cast<size_t>(i - free_rank_)])
                break;
            cur[ii] = 0;
        }
        if (i < 0)
            break;
    }
    return out;
}

std::pair<AbelianGroup, Hom> AbelianGroup::canonicalize() const
{
    QuotientResult q = quotient(*this, Subgroup::trivial(*this));
    return {q.group, q.projection};
}

std::string AbelianGroup::to_string() const
{
    if (is_trivial())
        return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& base, int count) {
        if (!first)
            os << " x ";
        first = false;
        os << base;
        if (count > 1)
            os << "^" << count;
    };
    if (free_rank_ > 0)
        emit("Z", free_rank_);
    for (size_t i = 0; i < orders_.size();) {
        size_t j = i;
        while (j < orders_.size() && orders_[j] == orders_[i])
            ++j;
        emit("Z" + orders_[i].get_str(), static_cast<int>(j - i));
        i = j;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Hom::Hom(AbelianGroup domain, AbelianGroup codomain, IntMat matrix)
    : dom_(std::move(domain)), cod_(std::move(codomain)), m_(std::move(matrix))
{
    if (m_.rows() != cod_.n() || m_.cols() != dom_.n())
        throw Error("hom matrix shape mismatch: expected " + std::to_string(cod_.n()) +
                    "x" + std::to_string(dom_.n()));
    // well-definedness: the image of a torsion generator of order d must be
    // killed by d in the codomain
    for (int i = dom_.free_rank(); i < dom_.n(); ++i) {
        const Int d = dom_.coord_order(i);
        for (int j = 0; j < cod_.n(); ++j) {
            const Int e = cod_.coord_order(j);
            const Int& entry = m_.at(j, i);
            if (e == 0) {
                if (entry != 0)
                    throw Error("ill-defined hom: torsion generator maps to infinite-order element");
            } else if ((d * entry) % e != 0) {
                throw Error("ill-defined hom: image of generator " + std::to_string(i) +
                            " has order not dividing " + d.get_str());
            }
        }
    }
}

Hom Hom::identity(const AbelianGroup& g)
{
    return Hom(g, g, IntMat::identity(g.n()));
}

Hom Hom::zero(const AbelianGroup& domain, const AbelianGroup& codomain)
{
    return Hom(domain, codomain, IntMat(codomain.n(), domain.n()));
}

Elt Hom::apply(const Elt& x) const
{
    if (static_cast<int>(x.size()) != dom_.n())
        throw Error("hom applied to element of wrong length");
    return cod_.reduce(m_.apply(x));
}

Subgroup Hom::image() const
{
    std::vector<Elt> gens;
    for (int i = 0; i < dom_.n(); ++i)
        gens.push_back(apply(dom_.gen(i)));
    return Subgroup(cod_, std::move(gens));
}

Subgroup Hom::kernel() const
{
    // x in ker  <=>  M x lies in the codomain relation lattice
    IntMat rel = cod_.relation_columns();
    IntMat stacked = m_.hstack(rel);
    for (int i = 0; i < rel.rows(); ++i)
        for (int j = 0; j < rel.cols(); ++j)
            stacked.at(i, m_.cols() + j) = -rel.at(i, j);
    std::vector<Elt> gens;
    for (const auto& k : integer_kernel(stacked)) {
        Elt x(k.begin(), k.begin() + m_.cols());
        if (!dom_.is_zero(x))
            gens.push_back(dom_.reduce(std::move(x)));
    }
    return Subgroup(dom_, std::move(gens));
}

bool Hom::is_injective_on(const Subgroup& s) const
{
    if (s.ambient() != dom_)
        throw Error("is_injective_on: subgroup lives in a different group");
    return kernel().intersect(s).is_trivial();
}

Hom Hom::compose(const Hom& g) const
{
    if (g.codomain() != dom_)
        throw Error("hom composition mismatch");
    return Hom(g.domain(), cod_, m_ * g.matrix());
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(AbelianGroup ambient, std::vector<Elt> generators)
    : amb_(std::move(ambient))
{
    gens_.reserve(generators.size());
    for (Elt& g : generators) {
        Elt r = amb_.reduce(std::move(g));
        if (!amb_.is_zero(r))
            gens_.push_back(std::move(r));
    }
}

Subgroup Subgroup::full(const AbelianGroup& ambient)
{
    std::vector<Elt> gens;
    for (int i = 0; i < ambient.n(); ++i)
        gens.push_back(ambient.gen(i));
    return Subgroup(ambient, std::move(gens));
}

const IntMat& Subgroup::lattice() const
{
    if (!lattice_) {
        IntMat rel = amb_.relation_columns();
        IntMat l(amb_.n(), static_cast<int>(gens_.size()) + rel.cols());
        for (int j = 0; j < static_cast<int>(gens_.size()); ++j)
            for (int i = 0; i < amb_.n(); ++i)
                l.at(i, j) = gens_[static_cast<size_t>(j)][static_cast<size_t>(i)];
        for (int j = 0; j < rel.cols(); ++j)
            for (int i = 0; i < amb_.n(); ++i)
                l.at(i, static_cast<int>(gens_.size()) + j) = rel.at(i, j);
        lattice_ = std::move(l);
    }
    return *lattice_;
}

const SmithDecomposition& Subgroup::lattice_snf() const
{
    if (!lattice_snf_)
        lattice_snf_ = smith_normal_form(lattice());
    return *lattice_snf_;
}

bool Subgroup::contains(const Elt& x) const
{
    Elt r = amb_.reduce(x);
    const SmithDecomposition& d = lattice_snf();
    std::vector<Int> c = d.u.apply(r);
    for (int i = 0; i < amb_.n(); ++i) {
        if (i < d.rank) {
            if (c[static_cast<size_t>(i)] % d.s.at(i, i) != 0)
                return false;
        } else if (c[static_cast<size_t>(i)] != 0) {
            return false;
        }
    }
    return true;
}

bool Subgroup::contains(const Subgroup& o) const
{
    for (const Elt& g : o.gens_)
        if (!contains(g))
            return false;
    return true;
}

bool Subgroup::same_subgroup(const Subgroup& o) const
{
    return amb_ == o.amb_ && contains(o) && o.contains(*this);
}

bool Subgroup::is_trivial() const
{
    for (const Elt& g : gens_)
        if (!amb_.is_zero(g))
            return false;
    return true;
}

const Subgroup::Canon& Subgroup::canon() const
{
    if (canon_)
        return *canon_;

    const SmithDecomposition& d = lattice_snf();
    const int n = amb_.n();
    const int rank_l = d.rank;

    // Basis of the subgroup's preimage lattice L: b_i = s_i * (Uinv e_i).
    std::vector<std::vector<Int>> basis;
    for (int i = 0; i < rank_l; ++i) {
        std::vector<Int> b = d.uinv.col(i);
        for (Int& e : b)
            e *= d.s.at(i, i);
        basis.push_back(std::move(b));
    }

    // Express the ambient relation lattice R (a sublattice of L) in that
    // basis: coords of r are (U r)_i / s_i.
    IntMat rel = amb_.relation_columns();
    IntMat c(rank_l, rel.cols());
    for (int j = 0; j < rel.cols(); ++j) {
        std::vector<Int> ur = d.u.apply(rel.col(j));
        for (int i = 0; i < rank_l; ++i)
            c.at(i, j) = ur[static_cast<size_t>(i)] / d.s.at(i, i);
    }

    SmithDecomposition dc = smith_normal_form(c);

    // L / R read off from the SNF of C: coordinate i corresponds to the
    // lattice vector sum_k basis_k * (Ucinv)_{k,i}.
    auto lattice_gen = [&](int i) {
        Elt g(static_cast<size_t>(n));
        for (int k = 0; k < rank_l; ++k) {
            const Int& w = dc.uinv.at(k, i);
            if (w == 0)
                continue;
            for (int t = 0; t < n; ++t)
                g[static_cast<size_t>(t)] += w * basis[static_cast<size_t>(k)][static_cast<size_t>(t)];
        }
        return amb_.reduce(std::move(g));
    };

    Canon cn;
    std::vector<Int> factors;
    std::vector<Elt> free_gens, tor_gens;
    for (int i = 0; i < rank_l; ++i) {
        if (i < dc.rank) {
            const Int& f = dc.s.at(i, i);
            if (f == 1)
                continue;
            factors.push_back(f);
            tor_gens.push_back(lattice_gen(i));
        } else {
            free_gens.push_back(lattice_gen(i));
        }
    }
    cn.group = AbelianGroup(static_cast<int>(free_gens.size()), factors);
    cn.gens = std::move(free_gens);
    cn.gens.insert(cn.gens.end(), tor_gens.begin(), tor_gens.end());
    canon_ = std::move(cn);
    return *canon_;
}

Int Subgroup::order() const
{
    return canon().group.order();
}

Subgroup Subgroup::intersect(const Subgroup& o) const
{
    if (amb_ != o.amb_)
        throw Error("intersection of subgroups of different groups");
    const IntMat& l1 = lattice();
    const IntMat& l2 = o.lattice();
    IntMat stacked = l1.hstack(l2);
    for (int i = 0; i < l2.rows(); ++i)
        for (int j = 0; j < l2.cols(); ++j)
            stacked.at(i, l1.cols() + j) = -l2.at(i, j);
    std::vector<Elt> gens;
    for (const auto& k : integer_kernel(stacked)) {
        Elt x(static_cast<size_t>(amb_.n()));
        for (int j = 0; j < l1.cols(); ++j) {
            const Int& a = k[static_cast<size_t>(j)];
            if (a == 0)
                continue;
            for (int i = 0; i < amb_.n(); ++i)
                x[static_cast<size_t>(i)] += a * l1.at(i, j);
        }
        x = amb_.reduce(std::move(x));
        if (!amb_.is_zero(x))
            gens.push_back(std::move(x));
    }
    return Subgroup(amb_, std::move(gens));
}

Subgroup Subgroup::join(const Subgroup& o) const
{
    if (amb_ != o.amb_)
        throw Error("join of subgroups of different groups");
    std::vector<Elt> gens = gens_;
    gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
    return Subgroup(amb_, std::move(gens));
}

// ---------------------------------------------------------------------------

Subgroup perp(const Subgroup& s)
{
    const AbelianGroup& g = s.ambient();
    if (!g.is_finite())
        throw Error("perp requires a finite ambient group");
    if (g.is_trivial())
        return Subgroup::full(g);
    const auto& gens = s.generators();
    if (gens.empty())
        return Subgroup::full(g);
    Int nn = g.torsion_exponent();
    // <g, h> = 1 for all generators h of S: sum_i (N/d_i) h_i g_i = 0 mod N
    IntMat a(static_cast<int>(gens.size()), g.n());
    for (int r = 0; r < static_cast<int>(gens.size()); ++r)
        for (int i = 0; i < g.n(); ++i)
            a.at(r, i) = (nn / g.coord_order(i)) * gens[static_cast<size_t>(r)][static_cast<size_t>(i)];
    std::vector<Elt> out;
    for (auto& x : solve_mod(a, nn))
        out.push_back(g.reduce(std::move(x)));
    return Subgroup(g, std::move(out));
}

TorsionSplit torsion_split(const AbelianGroup& g, const Int& p)
{
    if (p < 2 || !mpz_probab_prime_p(p.get_mpz_t(), 30))
        throw Error("torsion_split: p must be prime");
    std::vector<Elt> p_gens, c_gens;
    for (int i = g.free_rank(); i < g.n(); ++i) {
        Int d = g.coord_order(i);
        Int q = 1;  // p-power part of d
        Int rest = d;
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        if (q > 1)
            p_gens.push_back(g.scale(rest, g.gen(i)));  // order q
        if (rest > 1)
            c_gens.push_back(g.scale(q, g.gen(i)));  // order rest
    }
    return {Subgroup(g, std::move(p_gens)), Subgroup(g, std::move(c_gens))};
}

QuotientResult quotient(const AbelianGroup& g, const Subgroup& s)
{
    if (s.ambient() != g)
        throw Error("quotient by a subgroup of a different group");
    SmithDecomposition d = smith_normal_form(s.lattice());
    const int n = g.n();

    std::vector<int> free_rows, tor_rows;
    std::vector<Int> factors;
    for (int i = d.rank; i < n; ++i)
        free_rows.push_back(i);
    for (int i = 0; i < d.rank; ++i) {
        if (d.s.at(i, i) >= 2) {
            tor_rows.push_back(i);
            factors.push_back(d.s.at(i, i));
        }
    }
    AbelianGroup q(static_cast<int>(free_rows.size()), factors);

    IntMat proj(q.n(), n);
    int r = 0;
    for (int i : free_rows) {
        for (int j = 0; j < n; ++j)
            proj.at(r, j) = d.u.at(i, j);
        ++r;
    }
    for (int i : tor_rows) {
        for (int j = 0; j < n; ++j)
            proj.at(r, j) = d.u.at(i, j);
        ++r;
    }
    return {q, Hom(g, q, std::move(proj))};
}

}  // namespace liegrade
