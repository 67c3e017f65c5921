#include "omegalim/chains.hpp"

#include "omegalim/errors.hpp"
#include "omegalim/parse.hpp"

namespace omegalim {

namespace {

const std::vector<std::string> kGeneration1 = {
    "ln(w)",
    "w",
    "exp(w)",
};

// Combined generations 0-2 with the parameter at 1. exp(1*w) and exp(w^1)
// are distinct spellings of one class and sit adjacently.
const std::vector<std::string> kGeneration2 = {
    "ln(ln(w))",
    "ln(w)",
    "w/ln(w)",
    "w",
    "w*ln(w)",
    "exp(w)/w",
    "exp(w)/ln(w)",
    "exp(1*w)",
    "exp(w^1)",
    "exp(w)*ln(w)",
    "exp(w)*w",
    "exp(exp(w))",
};

// Combined generations 0-3 with all parameters at 1. exp(ln(w)) is the w
// slot of the exp(a*ln(w)^b) family at these parameters. Entries such as
// w^w and w^exp(w) are spelled through exp, matching their canonical form.
const std::vector<std::string> kGeneration3 = {
    "ln(ln(ln(w)))",
    "ln(ln(w))",
    "ln(w)/ln(ln(w))",
    "ln(w)",
    "ln(w)*ln(ln(w))",
    "w/ln(w)/ln(ln(w))",
    "w/ln(w)",
    "w*ln(ln(w))/ln(w)",
    "w/ln(ln(w))",
    "exp(ln(w))",
    "w*ln(ln(w))",
    "w*ln(w)/ln(ln(w))",
    "w*ln(w)",
    "w*ln(w)*ln(ln(w))",
    "exp(w/ln(w))",
    "exp(w)/w/ln(w)",
    "exp(w)/w/ln(ln(w))",
    "exp(w)/w",
    "exp(w)*ln(ln(w))/w",
    "exp(w)*ln(w)/w",
    "exp(w)/ln(w)/ln(ln(w))",
    "exp(w)/ln(w)",
    "exp(w)*ln(ln(w))/ln(w)",
    "exp(w)/ln(ln(w))",
    "exp(w)",
    "exp(w)*ln(ln(w))",
    "exp(w)*ln(w)/ln(ln(w))",
    "exp(w)*ln(w)",
    "exp(w)*ln(w)*ln(ln(w))",
    "exp(w)*w/ln(w)",
    "exp(w)*w/ln(ln(w))",
    "exp(w)*w",
    "exp(w)*w*ln(ln(w))",
    "exp(w)*w*ln(w)",
    "exp(w*ln(w))",
    "exp(exp(w)/w)",
    "exp(exp(w)/ln(w))",
    "exp(exp(w)-w)/w",
    "exp(exp(w)-w)/ln(w)",
    "exp(exp(w)-w)",
    "exp(exp(w)-w)*ln(w)",
    "exp(exp(w)-w)*w",
    "exp(exp(w))/w/ln(w)",
    "exp(exp(w))/w",
    "exp(exp(w))*ln(w)/w",
    "exp(exp(w))/ln(w)",
    "exp(exp(w))/ln(ln(w))",
    "exp(exp(w))",
    "exp(exp(w))*ln(ln(w))",
    "exp(exp(w))*ln(w)",
    "exp(exp(w))*w/ln(w)",
    "exp(exp(w))*w",
    "exp(exp(w))*w*ln(w)",
    "exp(exp(w)+w)/w",
    "exp(exp(w)+w)/ln(w)",
    "exp(exp(w)+w)",
    "exp(exp(w)+w)*ln(w)",
    "exp(exp(w)+w)*w",
    "exp(exp(w)*ln(w))",
    "exp(exp(w)*w)",
    "exp(exp(exp(w)))",
};

}  // namespace

const std::vector<std::string>& generation_chain_exprs(int generation) {
  switch (generation) {
    case 1: return kGeneration1;
    case 2: return kGeneration2;
    case 3: return kGeneration3;
    default: throw UndefinedError("generation must be 1, 2, or 3");
  }
}

std::vector<Prototype> generation_chain(int generation) {
  std::vector<Prototype> chain;
  for (const auto& expr : generation_chain_exprs(generation)) {
    Prototype p = parse_prototype(expr);
    if (!chain.empty() && compare(chain.back(), p) == Ordering::Equal) continue;
    chain.push_back(std::move(p));
  }
  return chain;
}

}  // namespace omegalim
