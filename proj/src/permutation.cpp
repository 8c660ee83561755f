#include "weiltate/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "weiltate/errors.hpp"

namespace weiltate {

IndexSet IndexSet::of(const std::vector<int>& points) {
  IndexSet s;
  for (int p : points) {
    if (p < 0 || p >= kMaxPoints) throw HypothesisError("index out of range");
    s.insert(p);
  }
  return s;
}

IndexSet IndexSet::from_one_based(const std::vector<int>& indices) {
  IndexSet s;
  for (int p : indices) {
    if (p < 1 || p > kMaxPoints) throw HypothesisError("index " + std::to_string(p) + " out of range");
    s.insert(p - 1);
  }
  return s;
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::vector<int> IndexSet::to_one_based() const {
  auto v = to_vector();
  for (auto& x : v) ++x;
  return v;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : to_one_based()) {
    if (!first) os << ", ";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

bool lex_less(IndexSet a, IndexSet b) {
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > static_cast<std::size_t>(kMaxPoints)) {
    throw HypothesisError("permutation degree exceeds " + std::to_string(kMaxPoints));
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw HypothesisError("not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Point> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Point{0});
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, std::string_view text) {
  if (n < 1 || n > kMaxPoints) throw HypothesisError("permutation degree out of range");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw HypothesisError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("unexpected character");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > kMaxPoints) fail("point out of range");
        ++pos;
      }
      if (v < 1 || v > n) fail("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(v - 1)]) fail("point " + std::to_string(v) + " repeated");
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      img[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    skip_ws();
  }
  std::vector<Point> images(img.begin(), img.end());
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> out(b.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::order() const {
  int result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

IndexSet Permutation::apply(IndexSet s) const {
  std::uint32_t out = 0;
  for (std::uint32_t b = s.bits(); b; b &= b - 1) out |= 1u << images_[static_cast<std::size_t>(std::countr_zero(b))];
  return IndexSet(out);
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << (j + 1);
      first = false;
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace weiltate
