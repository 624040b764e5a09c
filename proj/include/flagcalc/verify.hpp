#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcalc/weyl.hpp"

namespace flagcalc {

enum class Suite { All, Involution, Braid, Chevalley, Oracle, Theorem41, Sln, Motivic };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct CheckResult {
    std::string name;
    bool passed = true;
    bool skipped = false;
    std::size_t cases = 0;
    /// First failing case, classes written in the parser's syntax.
    std::string counterexample;
    std::string note;
};

struct VerifyOptions {
    /// Reduced words tried per element in word-independence checks.
    std::size_t word_limit = 8;
    /// Longest word fed to the exponential reference enumeration.
    int enumeration_max_length = 10;
    std::size_t random_cases = 50;
    std::uint64_t seed = 20240611;
};

std::vector<CheckResult> run_suite(const WeylGroup& g, Suite s, const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);
/// "PASS name (n cases)", "FAIL name: ...", "SKIP name: ..." lines.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace flagcalc
