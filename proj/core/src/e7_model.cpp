#include "liegrade/e7_model.hpp"

#include "liegrade/intmat.hpp"

#include <algorithm>

namespace liegrade {

namespace {

// insertion-sort a 4-tuple counting transpositions; returns 0 on repeats,
// otherwise +-1
int sort_sign(std::array<int, 4>& v)
{
    int sign = 1;
    for (int i = 1; i < 4; ++i)
        for (int j = i; j > 0 && v[static_cast<size_t>(j)] < v[static_cast<size_t>(j - 1)]; --j) {
            std::swap(v[static_cast<size_t>(j)], v[static_cast<size_t>(j - 1)]);
            sign = -sign;
        }
    for (int i = 0; i < 3; ++i)
        if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(i + 1)])
            return 0;
    return sign;
}

int mask_of(const std::array<int, 4>& s)
{
    return (1 << s[0]) | (1 << s[1]) | (1 << s[2]) | (1 << s[3]);
}

}  // namespace

int E7Model::e_index(int a, int b)
{
    if (a == b || a < 0 || b < 0 || a > 7 || b > 7)
        throw Error("e_index expects distinct indices in 0..7");
    return a * 7 + (b < a ? b : b - 1);
}

int E7Model::h_index(int i)
{
    if (i < 0 || i > 6)
        throw Error("h_index expects 0..6");
    return 56 + i;
}

int E7Model::wedge_index(std::array<int, 4> set) const
{
    int sign = sort_sign(set);
    if (sign == 0)
        throw Error("wedge_index: repeated entries");
    return kSlDim + mask_to_wedge_[static_cast<size_t>(mask_of(set))];
}

int E7Model::b_form(int i, int j)
{
    if (i < 4 && j == i + 4)
        return 1;
    if (i >= 4 && j == i - 4)
        return -1;
    return 0;
}

int E7Model::omega_sign(int s, int t) const
{
    const auto& a = wedge_sets_[static_cast<size_t>(s)];
    const auto& b = wedge_sets_[static_cast<size_t>(t)];
    if ((mask_of(a) | mask_of(b)) != 0xFF)
        return 0;
    // sign of the permutation (a0 a1 a2 a3 b0 b1 b2 b3) of (0..7); both
    // halves are sorted, so only cross inversions count
    int inv = 0;
    for (int u : a)
        for (int v : b)
            if (u > v)
                ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

Mat<Cyc> E7Model::basis_matrix(int k) const
{
    Mat<Cyc> m(8, 8);
    if (k < 56) {
        int a = k / 7, r = k % 7;
        int b = (r < a) ? r : r + 1;
        m.at(a, b) = Cyc(1);
    } else {
        int i = k - 56;
        m.at(i, i) = Cyc(1);
        m.at(i + 1, i + 1) = Cyc(-1);
    }
    return m;
}

std::vector<Cyc> E7Model::sl_coords(const Mat<Cyc>& m) const
{
    std::vector<Cyc> coords(static_cast<size_t>(kSlDim));
    Cyc trace;
    for (int i = 0; i < 8; ++i)
        trace += m.at(i, i);
    if (!trace.is_zero())
        throw Error("sl_coords: matrix has nonzero trace");
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (a != b)
                coords[static_cast<size_t>(e_index(a, b))] = m.at(a, b);
    // diagonal = sum c_i H_i with c_i the partial sums of the diagonal
    Cyc partial;
    for (int i = 0; i < 7; ++i) {
        partial += m.at(i, i);
        coords[static_cast<size_t>(h_index(i))] = partial;
    }
    return coords;
}

E7Model::E7Model()
{
    // enumerate the 4-subsets of {0..7} lexicographically
    mask_to_wedge_.fill(-1);
    std::array<int, 4> s{};
    for (s[0] = 0; s[0] < 8; ++s[0])
        for (s[1] = s[0] + 1; s[1] < 8; ++s[1])
            for (s[2] = s[1] + 1; s[2] < 8; ++s[2])
                for (s[3] = s[2] + 1; s[3] < 8; ++s[3]) {
                    mask_to_wedge_[static_cast<size_t>(mask_of(s))] = static_cast<int>(wedge_sets_.size());
                    wedge_sets_.push_back(s);
                }
    build_algebra();

    // sigma: identity on sl(V), minus identity on the wedge block
    Mat<Cyc> sm(kDim, kDim);
    for (int i = 0; i < kDim; ++i)
        sm.at(i, i) = Cyc(i < kSlDim ? 1 : -1);
    sigma_ = AutMap(std::move(sm), 2);

    build_tau();
    build_contractions();
}

void E7Model::build_algebra()
{
    std::vector<std::string> labels(static_cast<size_t>(kDim));
    auto vec_name = [](int v) {
        return v < 4 ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - 3);
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (a != b)
                labels[static_cast<size_t>(e_index(a, b))] =
                    "E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
    for (int i = 0; i < 7; ++i)
        labels[static_cast<size_t>(h_index(i))] = "H" + std::to_string(i + 1);
    for (int k = 0; k < kWedges; ++k) {
        std::string w;
        for (int v : wedge_sets_[static_cast<size_t>(k)])
            w += (w.empty() ? "" : "^") + vec_name(v);
        labels[static_cast<size_t>(kSlDim + k)] = w;
    }

    lie_ = std::make_unique<LieAlgebra>(kDim, std::move(labels));

    // --- sl x sl: commutators of 8x8 matrices, decomposed in the basis
    for (int i = 0; i < kSlDim; ++i) {
        Mat<Cyc> mi = basis_matrix(i);
        for (int j = i + 1; j < kSlDim; ++j) {
            Mat<Cyc> mj = basis_matrix(j);
            Mat<Cyc> comm = mi * mj;
            Mat<Cyc> ji = mj * mi;
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c)
                    comm.at(r, c) -= ji.at(r, c);
            lie_->set_bracket(i, j, to_sparse(sl_coords(comm)));
        }
    }

    // --- sl x wedge: derivation action on basic wedges
    for (int k = 0; k < kSlDim; ++k) {
        for (int w = 0; w < kWedges; ++w) {
            const auto& set = wedge_sets_[static_cast<size_t>(w)];
            SVec out;
            if (k < 56) {
                int a = k / 7, r = k % 7;
                int b = (r < a) ? r : r + 1;
                // E_ab sends e_b to e_a
                int mask = mask_of(set);
                if ((mask & (1 << b)) && !(mask & (1 << a))) {
                    std::array<int, 4> t = set;
                    for (int& v : t)
                        if (v == b)
                            v = a;
                    int sign = sort_sign(t);
                    out.emplace_back(kSlDim + mask_to_wedge_[static_cast<size_t>(mask_of(t))], Cyc(sign));
                }
            } else {
                int i = k - 56;
                int mask = mask_of(set);
                int weight = ((mask >> i) & 1) - ((mask >> (i + 1)) & 1);
                if (weight != 0)
                    out.emplace_back(kSlDim + w, Cyc(weight));
            }
            if (!out.empty())
                lie_->set_bracket(k, kSlDim + w, std::move(out));
        }
    }

    // --- wedge x wedge back into sl: recovered entrywise from the trace
    // pairing tr(f [X,Y]) = Omega(f.X, Y)
    for (int s = 0; s < kWedges; ++s) {
        const auto& sset = wedge_sets_[static_cast<size_t>(s)];
        int smask = mask_of(sset);
        for (int t = s + 1; t < kWedges; ++t) {
            const auto& tset = wedge_sets_[static_cast<size_t>(t)];
            int tmask = mask_of(tset);
            Mat<Cyc> m(8, 8);
            bool any = false;
            // off-diagonal: M_ji = Omega(E_ij . e_S, e_T), nonzero only when
            // replacing j by i in S lands on the complement of T
            for (int jv : sset) {
                for (int iv = 0; iv < 8; ++iv) {
                    if (iv == jv || (smask & (1 << iv)))
                        continue;
                    int newmask = (smask & ~(1 << jv)) | (1 << iv);
                    if ((newmask | tmask) != 0xFF)
                        continue;
                    std::array<int, 4> repl = sset;
                    for (int& v : repl)
                        if (v == jv)
                            v = iv;
                    int sg = sort_sign(repl);
                    int om = omega_sign(mask_to_wedge_[static_cast<size_t>(newmask)], t);
                    if (sg * om != 0) {
                        m.at(jv, iv) += Cyc(sg * om);
                        any = true;
                    }
                }
            }
            // diagonal: only for T = comp(S); M_ii = Omega(e_S,e_T)([i in S] - 1/2)
            if ((smask | tmask) == 0xFF && (smask & tmask) == 0) {
                int om = omega_sign(s, t);
                for (int i = 0; i < 8; ++i) {
                    Rat val(om, 2);
                    if (!(smask & (1 << i)))
                        val = -val;
                    m.at(i, i) = Cyc(val);
                }
                any = true;
            }
            if (any)
                lie_->set_bracket(kSlDim + s, kSlDim + t, to_sparse(sl_coords(m)));
        }
    }
}

Mat<Cyc> E7Model::symplectic_adjoint(const Mat<Cyc>& f)
{
    // with J the Gram matrix of b, f* = J^{-1} f^T J and J^{-1} = -J
    Mat<Cyc> j(8, 8), mj(8, 8);
    for (int i = 0; i < 4; ++i) {
        j.at(i, i + 4) = Cyc(1);
        j.at(i + 4, i) = Cyc(-1);
        mj.at(i, i + 4) = Cyc(-1);
        mj.at(i + 4, i) = Cyc(1);
    }
    return mj * f.transposed() * j;
}

Mat<Cyc> E7Model::wedge_power(const Mat<Cyc>& f) const
{
    Mat<Cyc> w(kWedges, kWedges);
    for (int s = 0; s < kWedges; ++s) {
        const auto& cols = wedge_sets_[static_cast<size_t>(s)];
        for (int t = 0; t < kWedges; ++t) {
            const auto& rows = wedge_sets_[static_cast<size_t>(t)];
            // det of the 4x4 submatrix f[rows, cols]
            Mat<Cyc> sub(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    sub.at(r, c) = f.at(rows[static_cast<size_t>(r)], cols[static_cast<size_t>(c)]);
            Cyc d = determinant(std::move(sub));
            if (!d.is_zero())
                w.at(t, s) = std::move(d);
        }
    }
    return w;
}

void E7Model::build_tau()
{
    Mat<Cyc> tm(kDim, kDim);
    // sl block: f -> -f*
    for (int k = 0; k < kSlDim; ++k) {
        Mat<Cyc> star = symplectic_adjoint(basis_matrix(k));
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                star.at(r, c) = -star.at(r, c);
        std::vector<Cyc> coords = sl_coords(star);
        for (int i = 0; i < kSlDim; ++i)
            if (!coords[static_cast<size_t>(i)].is_zero())
                tm.at(i, k) = coords[static_cast<size_t>(i)];
    }
    // wedge block: the Omega-symmetric operator with
    // Omega(tau X, Y) = Omega_b(X, Y), i.e. Gram(Omega)^{-1} Gram(Omega_b)
    Mat<Cyc> gom(kWedges, kWedges), gb(kWedges, kWedges);
    for (int s = 0; s < kWedges; ++s)
        for (int t = 0; t < kWedges; ++t) {
            int os = omega_sign(s, t);
            if (os != 0)
                gom.at(s, t) = Cyc(os);
            // Omega_b(e_S, e_T) = det(b(s_i, t_j))
            const auto& a = wedge_sets_[static_cast<size_t>(s)];
            const auto& b = wedge_sets_[static_cast<size_t>(t)];
            IntMat pm(4, 4);
            bool nonzero_row = true;
            for (int r = 0; r < 4 && nonzero_row; ++r) {
                nonzero_row = false;
                for (int c = 0; c < 4; ++c) {
                    int v = b_form(a[static_cast<size_t>(r)], b[static_cast<size_t>(c)]);
                    pm.at(r, c) = v;
                    if (v != 0)
                        nonzero_row = true;
                }
            }
            if (nonzero_row) {
                Int d = pm.det_small();
                if (d != 0)
                    gb.at(s, t) = Cyc(d);
            }
        }
    Mat<Cyc> tw = inverse(gom) * gb;
    for (int s = 0; s < kWedges; ++s)
        for (int t = 0; t < kWedges; ++t)
            if (!tw.at(s, t).is_zero())
                tm.at(kSlDim + s, kSlDim + t) = tw.at(s, t);
    tau_ = AutMap(std::move(tm), 2);
}

void E7Model::build_contractions()
{
    // wedge^2 basis: pairs (u < v) in lexicographic order
    auto pair_index = [](int u, int v) {
        // position of (u, v), u < v, among C(8,2) sorted pairs
        int idx = 0;
        for (int a = 0; a < u; ++a)
            idx += 7 - a;
        return idx + (v - u - 1);
    };

    contr_ = Mat<Cyc>(28, kWedges);
    bhat_.assign(static_cast<size_t>(kWedges), Cyc());
    static const int kSplit[6][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2},
                                     {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}};
    static const int kSplitSign[6] = {1, -1, 1, 1, -1, 1};
    for (int s = 0; s < kWedges; ++s) {
        const auto& set = wedge_sets_[static_cast<size_t>(s)];
        for (int p = 0; p < 6; ++p) {
            int bval = b_form(set[static_cast<size_t>(kSplit[p][0])], set[static_cast<size_t>(kSplit[p][1])]);
            if (bval == 0)
                continue;
            int u = set[static_cast<size_t>(kSplit[p][2])];
            int v = set[static_cast<size_t>(kSplit[p][3])];
            contr_.at(pair_index(u, v), s) += Cyc(kSplitSign[p] * bval);
        }
        // full contraction: b(v1,v2)b(v3,v4) - b(v1,v3)b(v2,v4) + b(v1,v4)b(v2,v3)
        int t1 = b_form(set[0], set[1]) * b_form(set[2], set[3]);
        int t2 = b_form(set[0], set[2]) * b_form(set[1], set[3]);
        int t3 = b_form(set[0], set[3]) * b_form(set[1], set[2]);
        int full = t1 - t2 + t3;
        if (full != 0)
            bhat_[static_cast<size_t>(s)] = Cyc(full);
    }

    // b~ is the Omega-dual of the full contraction: its coefficient on
    // e_{comp(T)} is bhat(e_T) / Omega(e_{comp(T)}, e_T)
    btilde_.clear();
    for (int t = 0; t < kWedges; ++t) {
        if (bhat_[static_cast<size_t>(t)].is_zero())
            continue;
        int comp_mask = 0xFF & ~mask_of(wedge_sets_[static_cast<size_t>(t)]);
        int cs = mask_to_wedge_[static_cast<size_t>(comp_mask)];
        Cyc coeff = bhat_[static_cast<size_t>(t)] / Cyc(omega_sign(cs, t));
        btilde_.emplace_back(kSlDim + cs, std::move(coeff));
    }
    std::sort(btilde_.begin(), btilde_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

AutMap E7Model::phi(const Mat<Cyc>& f, std::optional<long> declared_order) const
{
    if (f.rows() != 8 || f.cols() != 8)
        throw Error("phi expects an 8x8 matrix");
    if (!determinant(f).is_one())
        throw Error("phi requires determinant exactly 1");
    Mat<Cyc> finv = inverse(f);
    Mat<Cyc> m(kDim, kDim);
    for (int k = 0; k < kSlDim; ++k) {
        Mat<Cyc> conj = f * basis_matrix(k) * finv;
        std::vector<Cyc> coords = sl_coords(conj);
        for (int i = 0; i < kSlDim; ++i)
            if (!coords[static_cast<size_t>(i)].is_zero())
                m.at(i, k) = coords[static_cast<size_t>(i)];
    }
    Mat<Cyc> w = wedge_power(f);
    for (int s = 0; s < kWedges; ++s)
        for (int t = 0; t < kWedges; ++t)
            if (!w.at(t, s).is_zero())
                m.at(kSlDim + t, kSlDim + s) = w.at(t, s);
    return AutMap(std::move(m), declared_order);
}

std::array<Subalgebra, 4> E7Model::z22_components() const
{
    auto eigen = [&](int s1, int s2) {
        const Mat<Cyc>& sm = sigma_.matrix();
        const Mat<Cyc>& tm = tau_.matrix();
        Mat<Cyc> stacked(2 * kDim, kDim);
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                Cyc a = sm.at(i, j), b = tm.at(i, j);
                if (i == j) {
                    a -= Cyc(s1);
                    b -= Cyc(s2);
                }
                stacked.at(i, j) = std::move(a);
                stacked.at(kDim + i, j) = std::move(b);
            }
        std::vector<std::vector<Cyc>> kb = kernel_basis(std::move(stacked));
        Mat<Cyc> basis(static_cast<int>(kb.size()), kDim);
        for (int i = 0; i < static_cast<int>(kb.size()); ++i)
            for (int j = 0; j < kDim; ++j)
                basis.at(i, j) = kb[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return Subalgebra{std::move(basis)};
    };
    return {eigen(1, 1), eigen(1, -1), eigen(-1, 1), eigen(-1, -1)};
}

Mat<Cyc> E7Model::tensor_op(const Mat<Cyc>& a4, const Mat<Cyc>& b2)
{
    if (a4.rows() != 4 || a4.cols() != 4 || b2.rows() != 2 || b2.cols() != 2)
        throw Error("tensor_op expects 4x4 and 2x2 factors");
    Mat<Cyc> m(8, 8);
    for (int a = 0; a < 4; ++a)
        for (int ap = 0; ap < 4; ++ap) {
            if (a4.at(a, ap).is_zero())
                continue;
            for (int c = 0; c < 2; ++c)
                for (int cp = 0; cp < 2; ++cp)
                    if (!b2.at(c, cp).is_zero())
                        m.at(2 * a + c, 2 * ap + cp) = a4.at(a, ap) * b2.at(c, cp);
        }
    return m;
}

Mat<Cyc> E7Model::torus_op(const Cyc& t)
{
    if (t.is_zero())
        throw Error("torus_op needs a nonzero parameter");
    Mat<Cyc> m(8, 8);
    Cyc tinv = t.inverse();
    for (int a = 0; a < 4; ++a) {
        m.at(2 * a, 2 * a) = t;
        m.at(2 * a + 1, 2 * a + 1) = tinv;
    }
    return m;
}

E7Model::Z42Table E7Model::z42_strong_commutation(std::uint64_t seed) const
{
    Z42Gens g = z42_generators();
    Z42Table t;
    t.generators.push_back(phi(g.x1, 4));
    t.generators.push_back(phi(g.y1, 4));
    t.generators.push_back(phi(g.x2, 2));
    t.generators.push_back(phi(g.y2, 2));
    t.generators.push_back(phi(g.eps_id, 2));
    int rank_l = reductive_rank(*lie_, full_subalgebra(*lie_), seed).value;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            bool sc = strongly_commute(*lie_, t.generators[static_cast<size_t>(i)],
                                       t.generators[static_cast<size_t>(j)], rank_l, seed);
            t.strongly_commutes[static_cast<size_t>(i)][static_cast<size_t>(j)] = sc;
            t.strongly_commutes[static_cast<size_t>(j)][static_cast<size_t>(i)] = sc;
        }
    return t;
}

E7Model::Z42Gens E7Model::z42_generators() const
{
    // Pauli pairs on the tensor factors: order 4 on V1, order 2 on V2
    Cyc i4 = Cyc::root_of_unity(4, 1);
    Mat<Cyc> x1(4, 4), y1(4, 4), x2(2, 2), y2(2, 2), id4 = Mat<Cyc>::identity(4), id2 = Mat<Cyc>::identity(2);
    for (int k = 0; k < 4; ++k) {
        x1.at(k, k) = i4.pow(3 - k);
        y1.at(k, (k + 1) % 4) = Cyc(1);
    }
    x2.at(0, 0) = Cyc(-1);
    x2.at(1, 1) = Cyc(1);
    y2.at(0, 1) = Cyc(1);
    y2.at(1, 0) = Cyc(1);

    Z42Gens g{tensor_op(x1, id2), tensor_op(y1, id2), tensor_op(id4, x2), tensor_op(id4, y2),
              Mat<Cyc>(8, 8)};
    Cyc eps = Cyc::root_of_unity(8, 1);
    for (int k = 0; k < 8; ++k)
        g.eps_id.at(k, k) = eps;
    return g;
}

}  // namespace liegrade
