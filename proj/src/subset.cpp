#include "polyspace/subset.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace polyspace {

std::string to_hex(SubsetMask s) {
  std::ostringstream os;
  os << "0x" << std::hex << s;
  return os.str();
}

SubsetMask parse_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  SubsetMask value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed hex subset: '" + std::string(text) + "'");
  return value;
}

SubsetMask parse_index_list(std::string_view text, int n) {
  SubsetMask s = 0;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      int idx = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed index: '" + std::string(tok) + "'");
      if (idx < 1 || idx > n) throw std::out_of_range("index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
      s |= SubsetMask{1} << (idx - 1);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return s;
}

std::vector<int> to_index_list(SubsetMask s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i + 1);
  return out;
}

std::vector<SubsetMask> lower_covers(SubsetMask s, int width) {
  std::vector<SubsetMask> out;
  for (int j = 0; j < width; ++j) {
    if (!contains(s, j)) continue;
    SubsetMask without = s & ~(SubsetMask{1} << j);
    out.push_back(without);
    if (j > 0 && !contains(s, j - 1)) out.push_back(without | (SubsetMask{1} << (j - 1)));
  }
  return out;
}

std::vector<SubsetMask> upper_covers(SubsetMask s, int width) {
  std::vector<SubsetMask> out;
  for (int j = 0; j < width; ++j) {
    if (contains(s, j)) {
      if (j + 1 < width && !contains(s, j + 1)) out.push_back((s & ~(SubsetMask{1} << j)) | (SubsetMask{1} << (j + 1)));
    } else {
      out.push_back(s | (SubsetMask{1} << j));
    }
  }
  return out;
}

bool dominated_by(SubsetMask a, SubsetMask b) {
  // For every threshold t, a has no more elements >= t than b does.
  int ca = 0, cb = 0;
  for (int t = 31; t >= 0; --t) {
    ca += contains(a, t) ? 1 : 0;
    cb += contains(b, t) ? 1 : 0;
    if (ca > cb) return false;
  }
  return true;
}

}  // namespace polyspace
