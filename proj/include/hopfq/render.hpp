#pragma once

#include <string>

#include "hopfq/exact_scalar.hpp"
#include "hopfq/fock.hpp"

namespace hopfq {

/// "\frac{7}{5760} \epsilon^{4} - \frac{1}{48} u_0^{2} \epsilon^{2}" style.
std::string latex(const ExactScalar& s);
/// q_1^{2} q_2 style; empty index renders as "1".
std::string latex(const MultiIndex& m, const char* var);
/// One term per line joined with " + ", using \hat{p}.
std::string latex(const NormalOrderedOperator& op);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace hopfq
