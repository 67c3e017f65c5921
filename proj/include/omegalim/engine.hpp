#pragma once

#include <optional>
#include <string>

#include "omegalim/in_number.hpp"
#include "omegalim/seq_expr.hpp"

namespace omegalim {

struct EngineOptions {
  // Fold transcendental constants (ln 2, e, sin 1, ...) to the nearest
  // double. When false such constants raise UndefinedError instead.
  bool round_constants = true;
};

// Limit of the sequence as an element of the ratio field. The first `depth`
// expansion terms of the result are certified: series-based subexpressions
// are expanded with enough guard terms (retrying internally) that emitted
// terms are exact. Raises OscillatoryError when a bounded oscillating
// residue blocks the requested depth and UndefinedError for domain
// failures.
InNumber limit_of(const SeqExprPtr& e, int depth,
                  const EngineOptions& opts = {});

// First expansion term of the limit; nullopt for the identically-zero
// sequence. Succeeds on leading-limitable sequences whose deeper terms are
// oscillatory (e.g. exp(n) + sin(n)).
std::optional<Term> leading_term_limit(const SeqExprPtr& e,
                                       const EngineOptions& opts = {});

// True iff limit_of(e, depth) succeeds; failures set `reason` when given.
bool is_smooth(const SeqExprPtr& e, int depth, std::string* reason = nullptr,
               const EngineOptions& opts = {});

// Classical limit: the coefficient when the leading term lies in the class
// of 1, nullopt otherwise.
std::optional<Scalar> cauchy_check(const SeqExprPtr& e,
                                   const EngineOptions& opts = {});

}  // namespace omegalim
