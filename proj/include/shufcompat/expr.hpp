#pragma once

#include <stdexcept>
#include <string>

#include "shufcompat/qsym.hpp"

namespace shufcompat {

class ExprError : public std::invalid_argument {
public:
    ExprError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Evaluates expressions such as "(F[1,2] - F[3]) < F[1]" or "2*M[2,1] bel F[1]".
///
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '<' | '>=' | 'bel' | 'tvi') unary)*
///   unary   := '-' unary | atom
///   atom    := NUMBER ['/' NUMBER] | ('F' | 'M') '[' [INT (',' INT)*] ']' | '(' sum ')'
///
/// Binary operators on one level associate to the left. Numbers denote multiples of 1.
/// The result is in the F basis.
QSymElement eval_qsym_expression(const std::string& text, int max_degree);

}  // namespace shufcompat
