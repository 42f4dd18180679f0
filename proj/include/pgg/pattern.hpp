#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pgg {

// Finite best-response pattern. Entry k is the unique best response (0 or 1)
// of a node with k productive neighbors; entries beyond the stored prefix are
// 0. Stored form is canonical: empty (the all-zero pattern) or ending in a 1.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<std::uint8_t> bits);

  // Parses a string over {0,1}, entry 0 first ("101"). Canonicalizes, so
  // trailing zeros are accepted; throws std::invalid_argument otherwise.
  static Pattern parse(std::string_view text);

  // Total for every k >= 0.
  int query(int k) const {
    return k >= 0 && k < stored_length() ? bits_[static_cast<size_t>(k)] : 0;
  }
  int stored_length() const { return static_cast<int>(bits_.size()); }
  bool all_zero() const { return bits_.empty(); }
  // Largest k with entry k == 1, or -1 for the all-zero pattern.
  int max_one_index() const { return stored_length() - 1; }

  // Drops the first t entries.
  Pattern shifted_left(int t) const;
  // Entry k of the result is entry 2k of this pattern.
  Pattern half() const;

  std::string to_string() const;  // "0" for the all-zero pattern
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const Pattern&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct PatternShape {
  bool all_zero = false;
  bool monotone_increasing = false;
  bool monotone_decreasing = false;
  bool semi_sharp = false;  // begins 1,0,0
  bool spiked = false;      // begins 1,0,1
};

// Flags may overlap where the definitions do (the all-zero pattern is
// monotone both ways).
PatternShape classify_shape(const Pattern& t);

// True iff entry 2k of dbl equals entry k of half for every k. Odd entries of
// dbl are unconstrained, so a pattern has infinitely many doubles but exactly
// one half.
bool is_double_of(const Pattern& dbl, const Pattern& half);

// [1,0]*times prepended to t.
Pattern prepend_one_zero(const Pattern& t, int times);

Pattern zero_or_two_pattern();  // [1,0,1]
Pattern best_shot_pattern();    // [1]
// Minimal pattern with an isolated odd 1: entry 0 and entry 2m+1 are 1.
Pattern isolated_odd_pattern(int m);

}  // namespace pgg
