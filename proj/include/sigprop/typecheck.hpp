#pragma once

#include <set>
#include <string>
#include <vector>

#include "sigprop/ast.hpp"

namespace sigprop {

/// Resolves every signal reference against the trace header (including the
/// derivative columns of precomputed extrema methods) and validates
/// thresholds. Throws UnknownSignal, MissingDerivativeColumn,
/// InvalidThreshold or NotProjectable.
void typecheck(const PropertyAst& prop, const std::set<std::string>& signals);

void typecheck(const std::vector<PropertyAst>& props, const std::set<std::string>& signals);

/// In-place renaming of signal references, backing the CLI `--bind old=new`
/// flag; `let` targets shadow bindings inside their wrapped property.
PropertyAst bind_signals(const PropertyAst& prop,
                         const std::vector<std::pair<std::string, std::string>>& renames);

}  // namespace sigprop
