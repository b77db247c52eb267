#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilfactor/matrix.hpp"

namespace nilfactor {

enum class Verdict { Confirmed, Refuted };

// Machine-checked regression evidence. Verdicts are computed from the
// witnesses, never hand-entered.
struct ForensicReport {
    std::string check_name;
    std::string claim;
    Verdict verdict = Verdict::Refuted;
    std::vector<std::pair<std::string, Matrix>> witnesses;
    std::vector<std::pair<std::string, std::string>> data;
};

// Builds the swapped block arrangement [[0, J_2],[J_k, 0]] of order k + 2
// and reports whether it is nilpotent. The claim under test is that it is
// NOT nilpotent; the k = 7 instance is the one the regression suite pins,
// other odd k are recorded as computed.
ForensicReport check_wu_counterexample(std::size_t k, const Field& f = Field::rationals());

// Reproduces the defective bordering of J_3(0): admitting the seed vector
// into the projection's range collapses rank(PAP) below rank(AP) = rank(PA).
// Also runs the repaired construction on the same matrix, which keeps all
// three ranks at rank(A) - 1. Confirmed when both effects are observed.
ForensicReport check_sourour_projection_flaw();

}  // namespace nilfactor
