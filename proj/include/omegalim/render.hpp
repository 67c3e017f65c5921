#pragma once

#include <string>

#include "omegalim/in_number.hpp"
#include "omegalim/tower.hpp"

namespace omegalim {

struct RenderOptions {
  bool unicode = false;  // spell the base element as a Greek omega
};

std::string render(const Scalar& s);
std::string render(const BaseAtom& b, const RenderOptions& opts = {});
std::string render(const Prototype& p, const RenderOptions& opts = {});
std::string render(const Term& t, const RenderOptions& opts = {});
std::string render(const Limit& l, const RenderOptions& opts = {});
std::string render(const InNumber& x, const RenderOptions& opts = {});
std::string render(const TowerValue& v);

}  // namespace omegalim
