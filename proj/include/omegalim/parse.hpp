#pragma once

#include <string>

#include "omegalim/engine.hpp"
#include "omegalim/in_number.hpp"
#include "omegalim/seq_expr.hpp"

namespace omegalim {

// Which index symbol the expression may use: 'n' for sequences, 'w' for
// class/limit expressions. Using the other symbol raises ContextError.
enum class ParseContext { Sequence, Class };

// Grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := ['-'] atom ('^' exponent)?
//   exponent := signed-number | '(' signed-number ['/' number] ')'
//   atom     := number | index | fn '(' expr ')' | '(' expr ')' | tower
//   fn       := 'exp' | 'ln' | 'sin' | 'cos'
//   tower    := ('exp'|'ln') '^' index '(' index ')'     (class context)
// Numbers are decimal ("2", "0.001"); '^' binds tighter than '*' and '/',
// which bind tighter than '+' and '-'; unary minus applies to the powered
// atom.
SeqExprPtr parse_expr(const std::string& src, ParseContext context);

// Parses a class expression and evaluates it (the index symbol reads as w).
InNumber parse_class_value(const std::string& src, int depth = 4,
                           const EngineOptions& opts = {});

// Class value that must denote a single prototype (one expansion term with
// coefficient 1); throws UndefinedError otherwise.
Prototype parse_prototype(const std::string& src, int depth = 4,
                          const EngineOptions& opts = {});

// The prototype denoted by a class value, when it is exactly one expansion
// term with coefficient 1.
std::optional<Prototype> as_prototype(const InNumber& x);

}  // namespace omegalim
