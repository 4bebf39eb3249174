#include "nugatory/integer.hpp"
#include "nugatory/abelian_group.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace nugatory {

std::int64_t Integer::to_int64() const {
  if (v_ > std::numeric_limits<std::int64_t>::max() || v_ < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("integer does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v_);
}

std::string to_string(Integer v) {
  const auto rep = v.rep();
  if (rep == 0) return "0";
  // Work with the unsigned magnitude so the minimum value prints correctly.
  auto mag = rep < 0 ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(rep)
                     : static_cast<unsigned __int128>(rep);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (rep < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, Integer v) { return os << to_string(v); }

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  Integer value;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    // accumulate on the negative side so the minimum value parses
    value = value * 10 - Integer(c - '0');
  }
  return negative ? value : -value;
}

AbelianGroup::AbelianGroup(std::vector<Integer> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw std::invalid_argument("invariant factor " + nugatory::to_string(factors_[i]) + " is less than 2");
    }
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw std::invalid_argument("invariant factors " + nugatory::to_string(factors_[i - 1]) + " and " +
                                  nugatory::to_string(factors_[i]) + " break the divisibility chain");
    }
  }
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::vector<Integer> factors;
  if (text.empty()) return AbelianGroup();
  std::size_t start = 0;
  for (;;) {
    const auto bar = text.find('|', start);
    factors.push_back(parse_integer(text.substr(start, bar == std::string_view::npos ? text.npos : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return AbelianGroup(std::move(factors));
}

Integer AbelianGroup::order() const {
  Integer n = 1;
  for (auto d : factors_) n *= d;
  return n;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " + ";
    out += "Z/" + nugatory::to_string(factors_[i]);
  }
  return out;
}

std::string AbelianGroup::to_pipe_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "|";
    out += nugatory::to_string(factors_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << g.to_string(); }

}  // namespace nugatory
