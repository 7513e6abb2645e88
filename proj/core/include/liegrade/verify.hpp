// verify.hpp — named structural claims backing the acceptance suite and the
// CLI `verify` subcommand. Claims are grouped by the acceptance criterion
// they certify (1..10; 0 marks supplementary checks).
#pragma once

#include "liegrade/lie_core.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace liegrade {

struct Claim {
    std::string name;
    bool pass = false;
    std::string detail;
    int criterion = 0;
};

struct SuiteOptions {
    int workers = 1;  // <= 0 means hardware concurrency
    std::uint64_t seed = kDefaultSeed;
    std::ostream* progress = nullptr;
};

std::vector<Claim> verify_groups(const SuiteOptions& opt = {});     // criterion 10
std::vector<Claim> verify_pauli(const SuiteOptions& opt = {});      // criterion 7
std::vector<Claim> verify_weights(const SuiteOptions& opt = {});    // criterion 8
std::vector<Claim> verify_decisions(const SuiteOptions& opt = {});  // criterion 9
std::vector<Claim> verify_e7_model(const SuiteOptions& opt = {});   // criteria 1-6
std::vector<Claim> verify_all(const SuiteOptions& opt = {});

bool all_pass(const std::vector<Claim>& claims);
const Claim* first_failure(const std::vector<Claim>& claims);

}  // namespace liegrade
