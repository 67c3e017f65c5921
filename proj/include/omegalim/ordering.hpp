#pragma once

namespace omegalim {

// Result of a three-way comparison. For growth-class prototypes "Equal"
// means membership in the same Archimedean class.
enum class Ordering { Less, Equal, Greater };

inline Ordering reversed(Ordering o) {
  switch (o) {
    case Ordering::Less: return Ordering::Greater;
    case Ordering::Greater: return Ordering::Less;
    default: return Ordering::Equal;
  }
}

inline Ordering ordering_from_sign(int s) {
  if (s < 0) return Ordering::Less;
  if (s > 0) return Ordering::Greater;
  return Ordering::Equal;
}

inline const char* to_symbol(Ordering o) {
  switch (o) {
    case Ordering::Less: return "<";
    case Ordering::Greater: return ">";
    default: return "=";
  }
}

}  // namespace omegalim
