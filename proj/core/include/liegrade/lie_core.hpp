// lie_core.hpp — exact-arithmetic Lie algebra engine: sparse structure
// constants, Jacobi verification, automorphism checks, fixed subalgebras and
// the rank-based strong-commutation test.
#pragma once

#include "liegrade/cyclotomic.hpp"
#include "liegrade/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liegrade {

// Sparse vector: (basis index, coefficient), sorted by index, no zeros.
using SVec = std::vector<std::pair<int, Cyc>>;

SVec to_sparse(const std::vector<Cyc>& dense);
std::vector<Cyc> to_dense(const SVec& v, int dim);

class LieAlgebra {
public:
    explicit LieAlgebra(int dim, std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    const std::string& label(int i) const;

    // define [e_i, e_j] for i < j; entries of v must be sorted
    void set_bracket(int i, int j, SVec v);

    // [e_i, e_j] for any i, j (antisymmetry applied as needed)
    SVec bracket_basis(int i, int j) const;

    SVec bracket(const SVec& u, const SVec& v) const;
    std::vector<Cyc> bracket_dense(const std::vector<Cyc>& u, const std::vector<Cyc>& v) const;

    // columns [x, e_j] as a dense matrix (the adjoint operator of x)
    Mat<Cyc> ad(const SVec& x) const;

    struct JacobiFailure {
        int i, j, k;
    };
    // exhaustive over all C(dim,3) triples; nullopt means pass.
    // workers <= 0 picks the hardware concurrency.
    std::optional<JacobiFailure> check_jacobi(int workers = 1) const;

    // total number of stored nonzero structure constants
    size_t table_entries() const;

private:
    int dim_;
    std::vector<SVec> table_;  // index (i, j), i < j
    std::vector<std::string> labels_;

    size_t pair_index(int i, int j) const
    {
        return static_cast<size_t>(i) * static_cast<size_t>(dim_) - static_cast<size_t>(i) * static_cast<size_t>(i + 1) / 2 +
               static_cast<size_t>(j - i - 1);
    }
};

class AutMap {
public:
    AutMap() = default;
    explicit AutMap(Mat<Cyc> m, std::optional<long> declared_order = std::nullopt);

    const Mat<Cyc>& matrix() const { return m_; }
    std::optional<long> declared_order() const { return order_; }

    int dim() const { return m_.rows(); }
    SVec apply(const SVec& v) const;
    std::vector<Cyc> apply_dense(const std::vector<Cyc>& v) const;
    const SVec& column(int j) const { return cols_[static_cast<size_t>(j)]; }

    AutMap compose(const AutMap& o) const;  // this after o
    bool commutes_with(const AutMap& o) const;
    bool is_identity() const;

    // A^n = I for the declared order (vacuous if none declared)
    bool declared_order_holds() const;

private:
    Mat<Cyc> m_;
    std::optional<long> order_;
    std::vector<SVec> cols_;
};

struct Subalgebra {
    Mat<Cyc> basis;  // rows are basis vectors, dim(L) columns

    int dimension() const { return basis.rows(); }
    SVec basis_vector(int i) const;
};

struct AutCheck {
    bool ok = false;
    std::string reason;
};

// A [x, y] = [A x, A y] on all basis pairs, checked exactly.
AutCheck is_automorphism(const LieAlgebra& l, const AutMap& a);

// Joint 1-eigenspace of the given automorphisms; verifies each input with
// is_automorphism and that the result is bracket-closed.
Subalgebra fixed_subalgebra(const LieAlgebra& l, const std::vector<const AutMap*>& auts);

// Closure check used by fixed_subalgebra, exposed for tests.
bool is_bracket_closed(const LieAlgebra& l, const Subalgebra& s);

// Default seed for rank sampling; CLI runs use it unless --seed overrides.
inline constexpr std::uint64_t kDefaultSeed = 0x11E7;

struct RankResult {
    int value = 0;
    bool unanimous = true;  // all samples agreed
};

// Rank of a reductive subalgebra: minimum centralizer dimension over
// `samples` pseudo-random elements (fixed seed; min is flagged when the
// samples disagree).
RankResult reductive_rank(const LieAlgebra& l, const Subalgebra& s,
                          std::uint64_t seed = kDefaultSeed, int samples = 5);

Subalgebra full_subalgebra(const LieAlgebra& l);

// Rank criterion: the joint fixed subalgebra of two commuting finite-order
// automorphisms contains a Cartan subalgebra iff its rank equals rank(L).
bool strongly_commute(const LieAlgebra& l, const AutMap& a, const AutMap& b,
                      std::uint64_t seed = kDefaultSeed);
bool strongly_commute(const LieAlgebra& l, const AutMap& a, const AutMap& b,
                      int rank_of_l, std::uint64_t seed);

}  // namespace liegrade
