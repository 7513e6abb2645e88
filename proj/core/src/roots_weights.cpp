#include "liegrade/roots_weights.hpp"

#include <algorithm>
#include <map>

namespace liegrade {

std::string type_name(LieType t)
{
    switch (t) {
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::C4: return "C4";
    }
    return "?";
}

int type_rank(LieType t)
{
    switch (t) {
    case LieType::E6: return 6;
    case LieType::E7: return 7;
    case LieType::C4: return 4;
    }
    return 0;
}

namespace {

// adjacency lists for the simply-laced diagrams (1-based node labels)
const std::vector<std::pair<int, int>> kE6Edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
const std::vector<std::pair<int, int>> kE7Edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};

}  // namespace

RootSystem::RootSystem(LieType t) : type_(t), rank_(type_rank(t)), cartan_(rank_, rank_)
{
    d_.assign(static_cast<size_t>(rank_), Int(1));
    for (int i = 0; i < rank_; ++i)
        cartan_.at(i, i) = 2;
    if (t == LieType::C4) {
        // chain a1-a2-a3-a4 with a4 the long root (half square length 2)
        d_[3] = 2;
        for (int i = 0; i + 1 < 4; ++i) {
            // a[i][j] = (alpha_i . alpha_j) / d_i with (alpha_i . alpha_j) = -1
            // for adjacent short-short, -2 for the short-long edge
            Int dot = (i == 2) ? Int(-2) : Int(-1);
            cartan_.at(i, i + 1) = dot / d_[static_cast<size_t>(i)];
            cartan_.at(i + 1, i) = dot / d_[static_cast<size_t>(i + 1)];
        }
    } else {
        const auto& edges = (t == LieType::E6) ? kE6Edges : kE7Edges;
        for (auto [a, b] : edges) {
            cartan_.at(a - 1, b - 1) = -1;
            cartan_.at(b - 1, a - 1) = -1;
        }
    }
    generate_roots();
}

const RootSystem& RootSystem::get(LieType t)
{
    static const RootSystem e6(LieType::E6);
    static const RootSystem e7(LieType::E7);
    static const RootSystem c4(LieType::C4);
    switch (t) {
    case LieType::E6: return e6;
    case LieType::E7: return e7;
    default: return c4;
    }
}

void RootSystem::generate_roots()
{
    // closure by height: alpha + alpha_i is a root iff p - <alpha, alpha_i^v> > 0
    // where p is the length of the alpha_i-string below alpha
    std::map<std::vector<Int>, int> seen;  // root -> height
    std::vector<std::vector<Int>> frontier;
    for (int i = 0; i < rank_; ++i) {
        std::vector<Int> e(static_cast<size_t>(rank_));
        e[static_cast<size_t>(i)] = 1;
        seen[e] = 1;
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& alpha : frontier) {
            for (int i = 0; i < rank_; ++i) {
                // m = <alpha, alpha_i^v> = sum_j c_j a[i][j]
                Int m = 0;
                for (int j = 0; j < rank_; ++j)
                    if (alpha[static_cast<size_t>(j)] != 0)
                        m += alpha[static_cast<size_t>(j)] * cartan_.at(i, j);
                // p = how far the string continues downward
                Int p = 0;
                std::vector<Int> down = alpha;
                while (true) {
                    down[static_cast<size_t>(i)] -= 1;
                    bool nonneg = true;
                    for (const Int& c : down)
                        if (c < 0) {
                            nonneg = false;
                            break;
                        }
                    if (!nonneg || !seen.count(down))
                        break;
                    p += 1;
                }
                if (p - m > 0) {
                    std::vector<Int> up = alpha;
                    up[static_cast<size_t>(i)] += 1;
                    if (!seen.count(up)) {
                        seen[up] = 0;
                        next.push_back(up);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    for (auto& [root, h] : seen)
        pos_roots_.push_back(root);

    // coroot coefficients: c_i * d_i / d_alpha
    for (const auto& alpha : pos_roots_) {
        // (alpha, alpha)/2 = sum_ij c_i c_j (alpha_i, alpha_j) / 2 with
        // (alpha_i, alpha_j) = d_i * a[i][j]
        Int twice = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (alpha[static_cast<size_t>(i)] != 0 && alpha[static_cast<size_t>(j)] != 0)
                    twice += alpha[static_cast<size_t>(i)] * alpha[static_cast<size_t>(j)] *
                             d_[static_cast<size_t>(i)] * cartan_.at(i, j);
        Int d_alpha = twice / 2;
        std::vector<Int> cov(static_cast<size_t>(rank_));
        for (int i = 0; i < rank_; ++i) {
            Int num = alpha[static_cast<size_t>(i)] * d_[static_cast<size_t>(i)];
            if (num % d_alpha != 0)
                throw Error("coroot coefficients not integral (bad root data)");
            cov[static_cast<size_t>(i)] = num / d_alpha;
        }
        pos_coroots_.push_back(std::move(cov));
    }
}

void RootSystem::check_weight_arity(const Weight& lambda) const
{
    if (static_cast<int>(lambda.size()) != rank_)
        throw ArityError("weight has " + std::to_string(lambda.size()) + " coefficients, " +
                         type_name(type_) + " needs " + std::to_string(rank_));
}

Int RootSystem::weyl_dim(const Weight& lambda) const
{
    check_weight_arity(lambda);
    for (const Int& m : lambda)
        if (m < 0)
            throw Error("weyl_dim requires a dominant weight");
    Int num = 1, den = 1;
    for (const auto& cov : pos_coroots_) {
        Int a = 0, b = 0;
        for (int i = 0; i < rank_; ++i) {
            if (cov[static_cast<size_t>(i)] == 0)
                continue;
            a += cov[static_cast<size_t>(i)] * (lambda[static_cast<size_t>(i)] + 1);
            b += cov[static_cast<size_t>(i)];
        }
        num *= a;
        den *= b;
    }
    if (num % den != 0)
        throw Error("Weyl dimension did not come out integral");
    return num / den;
}

Int RootSystem::class_modulus() const
{
    switch (type_) {
    case LieType::E6: return 3;
    case LieType::E7: return 2;
    default: throw Error("center classes are only defined here for E6 and E7");
    }
}

Int RootSystem::center_class(const Weight& lambda) const
{
    check_weight_arity(lambda);
    if (type_ == LieType::E6)
        return mod_floor(lambda[0] - lambda[1] + lambda[3] - lambda[4], Int(3));
    if (type_ == LieType::E7)
        return mod_floor(lambda[0] + lambda[2] + lambda[6], Int(2));
    throw Error("center classes are only defined here for E6 and E7");
}

Int RootSystem::center_class_by_lattice(const Weight& lambda) const
{
    check_weight_arity(lambda);
    Int mod = class_modulus();
    // lambda - c*pi_1 in the root lattice <=> the integer system
    // Cartan * x = lambda - c*e_1 is solvable (columns of the Cartan matrix
    // are the simple roots in fundamental-weight coordinates)
    for (Int c = 0; c < mod; ++c) {
        std::vector<Int> rhs = lambda;
        rhs[0] -= c;
        std::vector<Int> x;
        if (solve_integer(cartan_, rhs, x))
            return c;
    }
    throw Error("weight falls in no class modulo the root lattice (impossible)");
}

Weight e6_diagram_involution(const Weight& lambda)
{
    RootSystem::get(LieType::E6).check_weight_arity(lambda);
    return {lambda[4], lambda[3], lambda[2], lambda[1], lambda[0], lambda[5]};
}

Weight to_bourbaki(LieType t, const Weight& lambda)
{
    RootSystem::get(t).check_weight_arity(lambda);
    if (t == LieType::E6)
        return {lambda[0], lambda[5], lambda[1], lambda[2], lambda[3], lambda[4]};
    if (t == LieType::E7)
        return {lambda[5], lambda[6], lambda[4], lambda[3], lambda[2], lambda[1], lambda[0]};
    return lambda;
}

Weight from_bourbaki(LieType t, const Weight& lambda)
{
    RootSystem::get(t).check_weight_arity(lambda);
    if (t == LieType::E6)
        return {lambda[0], lambda[2], lambda[3], lambda[4], lambda[5], lambda[1]};
    if (t == LieType::E7)
        return {lambda[6], lambda[5], lambda[4], lambda[3], lambda[2], lambda[0], lambda[1]};
    return lambda;
}

}  // namespace liegrade
