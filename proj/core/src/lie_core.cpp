#include "liegrade/lie_core.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <random>
#include <thread>

namespace liegrade {

SVec to_sparse(const std::vector<Cyc>& dense)
{
    SVec v;
    for (int i = 0; i < static_cast<int>(dense.size()); ++i)
        if (!dense[static_cast<size_t>(i)].is_zero())
            v.emplace_back(i, dense[static_cast<size_t>(i)]);
    return v;
}

std::vector<Cyc> to_dense(const SVec& v, int dim)
{
    std::vector<Cyc> d(static_cast<size_t>(dim));
    for (const auto& [i, c] : v)
        d[static_cast<size_t>(i)] = c;
    return d;
}

namespace {

// Accumulates sparse contributions into a dense scratch buffer.
struct Acc {
    std::vector<Cyc> val;
    std::vector<int> touched;
    std::vector<char> mark;

    explicit Acc(int dim) : val(static_cast<size_t>(dim)), mark(static_cast<size_t>(dim), 0) {}

    void add_scaled(const SVec& v, const Cyc& c)
    {
        for (const auto& [i, x] : v) {
            if (!mark[static_cast<size_t>(i)]) {
                mark[static_cast<size_t>(i)] = 1;
                touched.push_back(i);
            }
            val[static_cast<size_t>(i)] += c * x;
        }
    }

    void add_scaled_signed(const SVec& v, const Cyc& c, bool negate)
    {
        for (const auto& [i, x] : v) {
            if (!mark[static_cast<size_t>(i)]) {
                mark[static_cast<size_t>(i)] = 1;
                touched.push_back(i);
            }
            if (negate)
                val[static_cast<size_t>(i)] -= c * x;
            else
                val[static_cast<size_t>(i)] += c * x;
        }
    }

    SVec take()
    {
        std::sort(touched.begin(), touched.end());
        SVec out;
        for (int i : touched) {
            if (!val[static_cast<size_t>(i)].is_zero())
                out.emplace_back(i, std::move(val[static_cast<size_t>(i)]));
            val[static_cast<size_t>(i)] = Cyc();
            mark[static_cast<size_t>(i)] = 0;
        }
        touched.clear();
        return out;
    }

    bool all_zero() const
    {
        for (int i : touched)
            if (!val[static_cast<size_t>(i)].is_zero())
                return false;
        return true;
    }

    void reset()
    {
        for (int i : touched) {
            val[static_cast<size_t>(i)] = Cyc();
            mark[static_cast<size_t>(i)] = 0;
        }
        touched.clear();
    }
};

}  // namespace

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels)
    : dim_(dim), table_(static_cast<size_t>(dim) * static_cast<size_t>(dim - 1) / 2), labels_(std::move(labels))
{
    if (dim <= 0)
        throw Error("Lie algebra dimension must be positive");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != dim)
        throw Error("label count does not match dimension");
}

const std::string& LieAlgebra::label(int i) const
{
    static const std::string empty;
    if (labels_.empty())
        return empty;
    return labels_[static_cast<size_t>(i)];
}

void LieAlgebra::set_bracket(int i, int j, SVec v)
{
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || i >= j)
        throw Error("set_bracket expects 0 <= i < j < dim");
    table_[pair_index(i, j)] = std::move(v);
}

SVec LieAlgebra::bracket_basis(int i, int j) const
{
    if (i == j)
        return {};
    if (i < j)
        return table_[pair_index(i, j)];
    SVec v = table_[pair_index(j, i)];
    for (auto& [idx, c] : v)
        c = -c;
    return v;
}

SVec LieAlgebra::bracket(const SVec& u, const SVec& v) const
{
    Acc acc(dim_);
    for (const auto& [i, cu] : u)
        for (const auto& [j, cv] : v) {
            if (i == j)
                continue;
            const SVec& t = (i < j) ? table_[pair_index(i, j)] : table_[pair_index(j, i)];
            if (t.empty())
                continue;
            Cyc c = cu * cv;
            if (i > j)
                c = -c;
            acc.add_scaled(t, c);
        }
    return acc.take();
}

std::vector<Cyc> LieAlgebra::bracket_dense(const std::vector<Cyc>& u, const std::vector<Cyc>& v) const
{
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
        throw Error("bracket: vectors must have length dim");
    return to_dense(bracket(to_sparse(u), to_sparse(v)), dim_);
}

Mat<Cyc> LieAlgebra::ad(const SVec& x) const
{
    Mat<Cyc> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        for (const auto& [i, c] : x) {
            if (i == j)
                continue;
            const SVec& t = (i < j) ? table_[pair_index(i, j)] : table_[pair_index(j, i)];
            if (t.empty())
                continue;
            for (const auto& [k, w] : t) {
                Cyc term = c * w;
                if (i > j)
                    term = -term;
                m.at(k, j) += term;
            }
        }
    }
    return m;
}

size_t LieAlgebra::table_entries() const
{
    size_t n = 0;
    for (const SVec& v : table_)
        n += v.size();
    return n;
}

std::optional<LieAlgebra::JacobiFailure> LieAlgebra::check_jacobi(int workers) const
{
    if (workers <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 1 : static_cast<int>(hc);
    }
    workers = std::min(workers, dim_);

    // first failing triple in lexicographic order, encoded as i*dim^2+j*dim+k
    std::atomic<std::uint64_t> first_fail{UINT64_MAX};
    std::atomic<int> next_i{0};

    auto work = [&]() {
        Acc acc(dim_);
        while (true) {
            int i = next_i.fetch_add(1);
            if (i >= dim_ - 2)
                return;
            std::uint64_t enc_i = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(dim_) * static_cast<std::uint64_t>(dim_);
            if (enc_i >= first_fail.load(std::memory_order_relaxed))
                continue;  // a failure earlier than anything in this slice exists
            for (int j = i + 1; j < dim_ - 1; ++j) {
                for (int k = j + 1; k < dim_; ++k) {
                    // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
                    for (const auto& [m, c] : table_[pair_index(i, j)]) {
                        if (m == k)
                            continue;
                        if (m < k)
                            acc.add_scaled_signed(table_[pair_index(m, k)], c, false);
                        else
                            acc.add_scaled_signed(table_[pair_index(k, m)], c, true);
                    }
                    for (const auto& [m, c] : table_[pair_index(j, k)]) {
                        if (m == i)
                            continue;
                        if (m < i)
                            acc.add_scaled_signed(table_[pair_index(m, i)], c, false);
                        else
                            acc.add_scaled_signed(table_[pair_index(i, m)], c, true);
                    }
                    // [e_k, e_i] = -[e_i, e_k], so the outer sign flips
                    for (const auto& [m, c] : table_[pair_index(i, k)]) {
                        if (m == j)
                            continue;
                        if (m < j)
                            acc.add_scaled_signed(table_[pair_index(m, j)], c, true);
                        else
                            acc.add_scaled_signed(table_[pair_index(j, m)], c, false);
                    }
                    if (!acc.all_zero()) {
                        std::uint64_t enc = enc_i + static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(dim_) +
                                            static_cast<std::uint64_t>(k);
                        std::uint64_t cur = first_fail.load();
                        while (enc < cur && !first_fail.compare_exchange_weak(cur, enc)) {
                        }
                    }
                    acc.reset();
                }
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    std::uint64_t enc = first_fail.load();
    if (enc == UINT64_MAX)
        return std::nullopt;
    int d = dim_;
    int i = static_cast<int>(enc / (static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d)));
    int rem = static_cast<int>(enc % (static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d)));
    return JacobiFailure{i, rem / d, rem % d};
}

// ---------------------------------------------------------------------------

AutMap::AutMap(Mat<Cyc> m, std::optional<long> declared_order)
    : m_(std::move(m)), order_(declared_order)
{
    if (m_.rows() != m_.cols())
        throw Error("automorphism matrix must be square");
    cols_.resize(static_cast<size_t>(m_.cols()));
    for (int j = 0; j < m_.cols(); ++j) {
        SVec col;
        for (int i = 0; i < m_.rows(); ++i)
            if (!m_.at(i, j).is_zero())
                col.emplace_back(i, m_.at(i, j));
        cols_[static_cast<size_t>(j)] = std::move(col);
    }
}

SVec AutMap::apply(const SVec& v) const
{
    if (v.empty())
        return {};
    if (v.size() == 1 && v[0].second.is_one())
        return cols_[static_cast<size_t>(v[0].first)];
    Acc acc(dim());
    for (const auto& [j, c] : v)
        acc.add_scaled(cols_[static_cast<size_t>(j)], c);
    return acc.take();
}

std::vector<Cyc> AutMap::apply_dense(const std::vector<Cyc>& v) const
{
    return m_.apply(v);
}

AutMap AutMap::compose(const AutMap& o) const
{
    return AutMap(m_ * o.m_);
}

bool AutMap::commutes_with(const AutMap& o) const
{
    return m_ * o.m_ == o.m_ * m_;
}

bool AutMap::is_identity() const
{
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = 0; j < m_.cols(); ++j) {
            if (i == j ? !m_.at(i, j).is_one() : !m_.at(i, j).is_zero())
                return false;
        }
    return true;
}

bool AutMap::declared_order_holds() const
{
    if (!order_)
        return true;
    Mat<Cyc> p = Mat<Cyc>::identity(dim());
    for (long k = 0; k < *order_; ++k)
        p = p * m_;
    return AutMap(p).is_identity();
}

SVec Subalgebra::basis_vector(int i) const
{
    SVec v;
    for (int j = 0; j < basis.cols(); ++j)
        if (!basis.at(i, j).is_zero())
            v.emplace_back(j, basis.at(i, j));
    return v;
}

AutCheck is_automorphism(const LieAlgebra& l, const AutMap& a)
{
    if (a.dim() != l.dim())
        return {false, "matrix size does not match the algebra dimension"};
    if (rank(a.matrix()) != l.dim())
        return {false, "matrix is singular"};
    for (int i = 0; i < l.dim(); ++i) {
        for (int j = i + 1; j < l.dim(); ++j) {
            SVec lhs = a.apply(l.bracket_basis(i, j));
            SVec rhs = l.bracket(a.column(i), a.column(j));
            if (lhs != rhs)
                return {false, "bracket not preserved at basis pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")"};
        }
    }
    return {true, ""};
}

Subalgebra full_subalgebra(const LieAlgebra& l)
{
    return Subalgebra{Mat<Cyc>::identity(l.dim())};
}

Subalgebra fixed_subalgebra(const LieAlgebra& l, const std::vector<const AutMap*>& auts)
{
    for (const AutMap* a : auts) {
        AutCheck c = is_automorphism(l, *a);
        if (!c.ok)
            throw Error("fixed_subalgebra: input is not an automorphism: " + c.reason);
        if (!a->declared_order_holds())
            throw Error("fixed_subalgebra: declared order does not hold");
    }
    const int n = l.dim();
    Mat<Cyc> stacked(n * static_cast<int>(auts.size()), n);
    for (int k = 0; k < static_cast<int>(auts.size()); ++k) {
        const Mat<Cyc>& m = auts[static_cast<size_t>(k)]->matrix();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Cyc v = m.at(i, j);
                if (i == j)
                    v -= Cyc(1);
                stacked.at(k * n + i, j) = v;
            }
    }
    std::vector<std::vector<Cyc>> kb = kernel_basis(std::move(stacked));
    Mat<Cyc> basis(static_cast<int>(kb.size()), n);
    for (int i = 0; i < static_cast<int>(kb.size()); ++i)
        for (int j = 0; j < n; ++j)
            basis.at(i, j) = kb[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Subalgebra s{std::move(basis)};
    // closure check: the span of the kernel basis is exactly the joint fixed
    // space, so membership is the eigen-equation itself
    for (int i = 0; i < s.dimension(); ++i) {
        SVec bi = s.basis_vector(i);
        for (int j = i + 1; j < s.dimension(); ++j) {
            SVec w = l.bracket(bi, s.basis_vector(j));
            for (const AutMap* a : auts)
                if (a->apply(w) != w)
                    throw Error("fixed subalgebra failed the bracket-closure check");
        }
    }
    return s;
}

bool is_bracket_closed(const LieAlgebra& l, const Subalgebra& s)
{
    // reduce brackets of basis pairs against the echelonized basis
    Mat<Cyc> ech = s.basis;
    std::vector<int> pivots = echelonize(ech);
    auto in_span = [&](SVec v) {
        std::vector<Cyc> dense = to_dense(v, l.dim());
        for (size_t r = 0; r < pivots.size(); ++r) {
            const Cyc& c = dense[static_cast<size_t>(pivots[r])];
            if (c.is_zero())
                continue;
            Cyc f = c;
            for (int j = 0; j < ech.cols(); ++j)
                if (!ech.at(static_cast<int>(r), j).is_zero())
                    dense[static_cast<size_t>(j)] -= f * ech.at(static_cast<int>(r), j);
        }
        for (const Cyc& c : dense)
            if (!c.is_zero())
                return false;
        return true;
    };
    for (int i = 0; i < s.dimension(); ++i) {
        SVec bi = s.basis_vector(i);
        for (int j = i + 1; j < s.dimension(); ++j)
            if (!in_span(l.bracket(bi, s.basis_vector(j))))
                return false;
    }
    return true;
}

RankResult reductive_rank(const LieAlgebra& l, const Subalgebra& s, std::uint64_t seed, int samples)
{
    if (s.dimension() == 0)
        return {0, true};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<int> dims;
    for (int t = 0; t < samples; ++t) {
        SVec x;
        while (x.empty()) {
            Acc acc(l.dim());
            for (int i = 0; i < s.dimension(); ++i) {
                int c = coeff(rng);
                if (c != 0)
                    acc.add_scaled(s.basis_vector(i), Cyc(c));
            }
            x = acc.take();
        }
        // centralizer of x in s: kernel of b |-> [x, b] restricted to s
        Mat<Cyc> adx = l.ad(x);
        Mat<Cyc> m(l.dim(), s.dimension());
        for (int j = 0; j < s.dimension(); ++j) {
            std::vector<Cyc> col(static_cast<size_t>(l.dim()));
            for (const auto& [bi, bc] : s.basis_vector(j)) {
                for (int i = 0; i < l.dim(); ++i)
                    if (!adx.at(i, bi).is_zero())
                        col[static_cast<size_t>(i)] += adx.at(i, bi) * bc;
            }
            for (int i = 0; i < l.dim(); ++i)
                m.at(i, j) = std::move(col[static_cast<size_t>(i)]);
        }
        dims.push_back(s.dimension() - rank(std::move(m)));
    }
    RankResult r{dims[0], true};
    for (int d : dims) {
        if (d != r.value)
            r.unanimous = false;
        r.value = std::min(r.value, d);
    }
    return r;
}

bool strongly_commute(const LieAlgebra& l, const AutMap& a, const AutMap& b, std::uint64_t seed)
{
    RankResult full = reductive_rank(l, full_subalgebra(l), seed);
    return strongly_commute(l, a, b, full.value, seed);
}

bool strongly_commute(const LieAlgebra& l, const AutMap& a, const AutMap& b, int rank_of_l,
                      std::uint64_t seed)
{
    if (!a.commutes_with(b))
        throw Error("strongly_commute: the automorphisms do not commute");
    if (!a.declared_order_holds() || !b.declared_order_holds())
        throw Error("strongly_commute: declared order does not hold");
    Subalgebra fix = fixed_subalgebra(l, {&a, &b});
    RankResult r = reductive_rank(l, fix, seed);
    if (!r.unanimous)
        std::cerr << "warning: rank samples disagreed on a fixed subalgebra of dimension "
                  << fix.dimension() << "; using the minimum " << r.value << "\n";
    return r.value == rank_of_l;
}

}  // namespace liegrade
