#include "nlnum/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nlnum {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in partition arithmetic");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in partition arithmetic");
  return r;
}

namespace {

Int validate_and_sum(std::vector<Int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  Int sum = 0;
  for (Int p : parts) sum = checked_add(sum, p);
  return sum;
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  size_ = validate_and_sum(parts_);
}

Partition::Partition(std::initializer_list<Int> parts)
    : Partition(std::vector<Int>(parts)) {}

Partition Partition::parse(const std::string& text) {
  if (text == "-") return Partition{};
  if (text.empty())
    throw std::invalid_argument("empty partition text (use '-' for the empty partition)");
  std::vector<Int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition part '" + tok + "' in '" + text + "'");
    try {
      parts.push_back(std::stoll(tok));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("partition part out of range in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("'" + text + "' is not weakly decreasing");
  }
}

std::string Partition::to_text() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

std::string Partition::to_bracket() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Int x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<Int> cols(static_cast<std::size_t>(p.part(0)), 0);
  for (std::size_t i = 0; i < p.length(); ++i)
    for (Int j = 0; j < p.part(i); ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

Partition meet(const Partition& a, const Partition& b) {
  std::vector<Int> parts;
  std::size_t n = std::min(a.length(), b.length());
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    parts.push_back(std::min(a.part(i), b.part(i)));
  return Partition(std::move(parts));
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<Int> parts;
  std::size_t n = std::max(a.length(), b.length());
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    parts.push_back(std::max(a.part(i), b.part(i)));
  return Partition(std::move(parts));
}

Int sym_diff_size(const Partition& a, const Partition& b) {
  return checked_add(a.size(), b.size()) - 2 * meet(a, b).size();
}

Partition union_sorted(const Partition& a, const Partition& b) {
  std::vector<Int> parts;
  parts.reserve(a.length() + b.length());
  parts.insert(parts.end(), a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition add(const Partition& a, const Partition& b) {
  std::vector<Int> parts;
  std::size_t n = std::max(a.length(), b.length());
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    parts.push_back(checked_add(a.part(i), b.part(i)));
  return Partition(std::move(parts));
}

Partition scale(Int k, const Partition& p) {
  if (k < 1) throw std::invalid_argument("scale factor must be positive");
  std::vector<Int> parts;
  parts.reserve(p.length());
  for (Int x : p.parts()) parts.push_back(checked_mul(k, x));
  return Partition(std::move(parts));
}

Partition half_floor(const Partition& a, const Partition& b) {
  std::vector<Int> parts;
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    parts.push_back(checked_add(a.part(i), b.part(i)) / 2);
  return Partition(std::move(parts));
}

Partition half_ceil(const Partition& a, const Partition& b) {
  std::vector<Int> parts;
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    parts.push_back((checked_add(a.part(i), b.part(i)) + 1) / 2);
  return Partition(std::move(parts));
}

Partition sort1(const Partition& a, const Partition& b) {
  Partition rho = union_sorted(a, b);
  std::vector<Int> parts;
  for (std::size_t i = 0; i < rho.length(); i += 2) parts.push_back(rho.part(i));
  return Partition(std::move(parts));
}

Partition sort2(const Partition& a, const Partition& b) {
  Partition rho = union_sorted(a, b);
  std::vector<Int> parts;
  for (std::size_t i = 1; i < rho.length(); i += 2) parts.push_back(rho.part(i));
  return Partition(std::move(parts));
}

std::vector<Partition> subpartitions_of_size(const Partition& bound, Int s) {
  std::vector<Partition> out;
  if (s < 0 || s > bound.size()) return out;
  std::vector<Int> current;
  // Largest part first at every level gives lex-decreasing emission order.
  std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t row, Int cap,
                                                       Int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (row >= bound.length()) return;
    // remaining boxes must fit under the bound in the rows left
    Int capacity = 0;
    for (std::size_t r = row; r < bound.length(); ++r)
      capacity += std::min(cap, bound.part(r));
    if (capacity < remaining) return;
    Int hi = std::min({cap, bound.part(row), remaining});
    for (Int v = hi; v >= 1; --v) {
      current.push_back(v);
      rec(row + 1, v, remaining - v);
      current.pop_back();
    }
  };
  rec(0, std::numeric_limits<Int>::max(), s);
  return out;
}

std::vector<Partition> subpartitions(const Partition& bound) {
  std::vector<Partition> out;
  for (Int s = 0; s <= bound.size(); ++s) {
    auto layer = subpartitions_of_size(bound, s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Partition> partitions_of(Int s) {
  std::vector<Partition> out;
  if (s < 0) return out;
  std::vector<Int> current;
  std::function<void(Int, Int)> rec = [&](Int cap, Int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (Int v = std::min(cap, remaining); v >= 1; --v) {
      current.push_back(v);
      rec(v, remaining - v);
      current.pop_back();
    }
  };
  rec(s, s);
  return out;
}

std::vector<Partition> partitions_up_to(Int max_size) {
  std::vector<Partition> out;
  for (Int s = 0; s <= max_size; ++s) {
    auto layer = partitions_of(s);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Partition> partitions_in_rectangle(Int rows, Int cols) {
  std::vector<Int> rect(static_cast<std::size_t>(rows), cols);
  auto out = subpartitions(Partition(std::move(rect)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nlnum
