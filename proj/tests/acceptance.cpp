// acceptance.cpp — runs the full verification suite and prints one pass/fail
// line per acceptance criterion. Exits nonzero if any criterion fails.
#include "liegrade/verify.hpp"

#include <cstdlib>
#include <iostream>

int main()
{
    using namespace liegrade;

    SuiteOptions opt;
    opt.workers = 0;  // use all cores for the triple sweep
    if (const char* env = std::getenv("LIEGRADE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0)
            opt.workers = w;
    }
    opt.progress = &std::cerr;

    std::vector<Claim> claims = verify_all(opt);

    static const char* kDescriptions[10] = {
        "E7 model: dimension 133, exact antisymmetry, exact Jacobi",
        "sigma and tau: commuting order-2 automorphisms, top-wedge bracket",
        "Z2xZ2 decomposition dims (36, 27, 43, 27) with Weyl cross-checks",
        "ranks 7 versus 4: the sigma-tau pair is nontoral",
        "quasitorus strong-commutation table with one obstructed pair",
        "contraction kernel, dual invariant element, tau eigenspaces",
        "Pauli gradings for sizes 2, 3, 4: tables, cocycle, degrees",
        "weight-class congruences and the 27/56 Weyl dimensions",
        "decision layer: worked reports and divisibility thresholds",
        "group layer: Smith form, perp duality, torsion splitting",
    };

    bool all_ok = true;
    for (int k = 1; k <= 10; ++k) {
        bool ok = true;
        int count = 0;
        std::string failing;
        for (const Claim& c : claims) {
            if (c.criterion != k)
                continue;
            ++count;
            if (!c.pass) {
                ok = false;
                if (failing.empty())
                    failing = c.name + (c.detail.empty() ? "" : ": " + c.detail);
            }
        }
        all_ok = all_ok && ok && count > 0;
        std::cout << (ok && count > 0 ? "[PASS]" : "[FAIL]") << " criterion " << k << ": "
                  << kDescriptions[k - 1] << " (" << count << " claims"
                  << (failing.empty() ? "" : "; first failure: " + failing) << ")\n";
    }

    int extra = 0, extra_fail = 0;
    std::string extra_failing;
    for (const Claim& c : claims) {
        if (c.criterion != 0)
            continue;
        ++extra;
        if (!c.pass) {
            ++extra_fail;
            if (extra_failing.empty())
                extra_failing = c.name;
        }
    }
    all_ok = all_ok && extra_fail == 0;
    std::cout << (extra_fail == 0 ? "[PASS]" : "[FAIL]") << " supplementary claims (" << extra
              << (extra_failing.empty() ? "" : "; first failure: " + extra_failing) << ")\n";

    return all_ok ? 0 : 1;
}
