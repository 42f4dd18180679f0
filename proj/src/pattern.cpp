#include "pgg/pattern.hpp"

#include <stdexcept>

namespace pgg {

Pattern::Pattern(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("pattern entries must be 0 or 1");
  }
  while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
}

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty pattern string");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("pattern strings use only '0' and '1'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Pattern(std::move(bits));
}

Pattern Pattern::shifted_left(int t) const {
  if (t < 0) throw std::invalid_argument("shift amount must be nonnegative");
  if (t >= stored_length()) return Pattern();
  return Pattern(std::vector<std::uint8_t>(bits_.begin() + t, bits_.end()));
}

Pattern Pattern::half() const {
  std::vector<std::uint8_t> out;
  for (int k = 0; 2 * k < stored_length(); ++k)
    out.push_back(bits_[static_cast<size_t>(2 * k)]);
  return Pattern(std::move(out));
}

std::string Pattern::to_string() const {
  if (bits_.empty()) return "0";
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

PatternShape classify_shape(const Pattern& t) {
  PatternShape s;
  s.all_zero = t.all_zero();
  s.monotone_increasing = true;
  s.monotone_decreasing = true;
  for (int k = 0; k < t.stored_length(); ++k) {
    if (t.query(k) < t.query(k + 1)) s.monotone_decreasing = false;
    if (t.query(k) > t.query(k + 1)) s.monotone_increasing = false;
  }
  s.semi_sharp = t.query(0) == 1 && t.query(1) == 0 && t.query(2) == 0;
  s.spiked = t.query(0) == 1 && t.query(1) == 0 && t.query(2) == 1;
  return s;
}

bool is_double_of(const Pattern& dbl, const Pattern& half) {
  int limit = std::max(dbl.stored_length() / 2 + 1, half.stored_length() + 1);
  for (int k = 0; k <= limit; ++k)
    if (dbl.query(2 * k) != half.query(k)) return false;
  return true;
}

Pattern prepend_one_zero(const Pattern& t, int times) {
  if (times < 0) throw std::invalid_argument("prepend count must be nonnegative");
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<size_t>(2 * times) + t.bits().size());
  for (int i = 0; i < times; ++i) {
    bits.push_back(1);
    bits.push_back(0);
  }
  bits.insert(bits.end(), t.bits().begin(), t.bits().end());
  return Pattern(std::move(bits));
}

Pattern zero_or_two_pattern() { return Pattern({1, 0, 1}); }

Pattern best_shot_pattern() { return Pattern({1}); }

Pattern isolated_odd_pattern(int m) {
  if (m < 1) throw std::invalid_argument("isolated odd index needs m >= 1");
  std::vector<std::uint8_t> bits(static_cast<size_t>(2 * m + 2), 0);
  bits.front() = 1;
  bits.back() = 1;
  return Pattern(std::move(bits));
}

}  // namespace pgg
