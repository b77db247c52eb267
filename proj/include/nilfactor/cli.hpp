#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nilfactor/matrix.hpp"

namespace nilfactor::cli {

// One verified identity inside a check suite.
struct CheckResult {
    std::string name;
    std::string detail;
    bool pass = false;
};

std::vector<CheckResult> lemma1_suite(std::size_t max_k);
std::vector<CheckResult> lemma2_suite(std::size_t max_n);
std::vector<CheckResult> sourour_suite(const std::vector<Field>& fields, std::uint64_t seed);

// Command entry points; return the process exit code.
// factor: 0 success, 1 parse/IO error, 2 invertible input, 3 the 2x2
// nonzero nilpotent exception.
int run_factor(const std::string& path, bool json, bool verify, std::uint64_t seed,
               std::ostream& out, std::ostream& err);
int run_check(const std::string& suite, std::size_t max_k, const std::string& fields_csv,
              std::uint64_t seed, bool json, std::ostream& out, std::ostream& err);
int run_forensics(std::optional<std::size_t> extra_k, bool json, std::ostream& out,
                  std::ostream& err);

}  // namespace nilfactor::cli
