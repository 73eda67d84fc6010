#pragma once

// Exact permutations of {1..m} in one-line storage.
// Products read left to right everywhere in this library:
// compose(a, b) applies a first, then b.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

class Permutation {
 public:
  explicit Permutation(int degree) : img_(checked_degree(degree)) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }

  static Permutation from_one_line(const std::vector<int>& image_one_based) {
    const int n = static_cast<int>(image_one_based.size());
    Permutation p(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
      const int v = image_one_based[i];
      if (v < 1 || v > n) throw std::invalid_argument("one-line entry out of range");
      if (seen[v - 1]) throw std::invalid_argument("one-line entry repeated");
      seen[v - 1] = true;
      p.img_[i] = v - 1;
    }
    return p;
  }

  // Cycles use 1-based points.  Non-disjoint lists are composed left to right.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation acc(degree);
    for (const auto& cyc : cycles) {
      Permutation c(degree);
      std::vector<bool> seen(degree, false);
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        const int a = cyc[t];
        if (a < 1 || a > degree) throw std::invalid_argument("cycle entry out of range");
        if (seen[a - 1]) throw std::invalid_argument("cycle entry repeated");
        seen[a - 1] = true;
        c.img_[a - 1] = cyc[(t + 1) % cyc.size()] - 1;
      }
      acc = compose(acc, c);
    }
    return acc;
  }

  static Permutation transposition(int degree, int a, int b) {
    return from_cycles(degree, {{a, b}});
  }

  int degree() const { return static_cast<int>(img_.size()); }

  // 1-based application.
  int apply(int point) const {
    if (point < 1 || point > degree()) throw std::out_of_range("point out of range");
    return img_[point - 1] + 1;
  }

  const std::vector<int>& raw() const { return img_; }  // 0-based images

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in compose");
    Permutation r(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img_[i] = b.img_[a.img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  // Disjoint cycles, fixed points omitted, each cycle led by its minimum,
  // cycles ordered by minimum.  1-based points.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<int> cyc;
      int j = i;
      do {
        seen[j] = true;
        cyc.push_back(j + 1);
        j = img_[j];
      } while (j != i);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  long long inversions() const {
    long long n = 0;
    for (int i = 0; i < degree(); ++i)
      for (int j = i + 1; j < degree(); ++j)
        if (img_[i] > img_[j]) ++n;
    return n;
  }

  bool operator==(const Permutation& o) const = default;

  std::string one_line_text() const {
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
      if (i) s += ',';
      s += std::to_string(img_[i] + 1);
    }
    s += ']';
    return s;
  }

  std::string cycle_text() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& cyc : cs) {
      s += '(';
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        if (t) s += ',';
        s += std::to_string(cyc[t]);
      }
      s += ')';
    }
    return s;
  }

  // Accepts "[2,1,4,3]" or "(1,2)(3,4)" or "()".  Entries inside a cycle
  // require explicit separators, so "(12)" is the single point 12 and not 1,2.
  // With no degree given, cycles infer the degree from the largest point.
  static Permutation parse(std::string_view text, std::optional<int> degree = std::nullopt) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && is_space(text[pos])) ++pos; };
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("empty permutation text");
    if (text[pos] == '[') {
      ++pos;
      std::vector<int> entries = parse_int_list(text, pos, ']');
      skip_ws();
      if (pos < text.size() && !all_space(text.substr(pos)))
        throw std::invalid_argument("trailing characters after one-line form");
      if (degree && *degree != static_cast<int>(entries.size()))
        throw std::invalid_argument("one-line form has wrong degree");
      return from_one_line(entries);
    }
    if (text[pos] == '(') {
      std::vector<std::vector<int>> cycles;
      int max_point = 0;
      while (pos < text.size() && text[pos] == '(') {
        ++pos;
        std::vector<int> cyc = parse_int_list(text, pos, ')');
        for (int v : cyc) max_point = std::max(max_point, v);
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
      }
      if (pos < text.size() && !all_space(text.substr(pos)))
        throw std::invalid_argument("trailing characters after cycle form");
      const int deg = degree ? *degree : std::max(max_point, 1);
      if (max_point > deg) throw std::invalid_argument("cycle point exceeds degree");
      return from_cycles(deg, cycles);
    }
    throw std::invalid_argument("permutation text must start with '[' or '('");
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int v : img_) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  static int checked_degree(int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    return degree;
  }
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool all_space(std::string_view s) {
    for (char c : s)
      if (!is_space(c)) return false;
    return true;
  }
  // Parses "a,b,c<closer>" starting at pos (after the opener); pos ends past closer.
  static std::vector<int> parse_int_list(std::string_view text, std::size_t& pos, char closer) {
    std::vector<int> out;
    bool expect_value = false;
    while (true) {
      while (pos < text.size() && is_space(text[pos])) ++pos;
      if (pos >= text.size()) throw std::invalid_argument("unterminated list");
      if (text[pos] == closer) {
        if (expect_value) throw std::invalid_argument("dangling separator");
        ++pos;
        return out;
      }
      bool neg = false;
      if (text[pos] == '-') { neg = true; ++pos; }
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw std::invalid_argument("expected integer");
      long v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000000) throw std::invalid_argument("integer too large");
        ++pos;
      }
      out.push_back(static_cast<int>(neg ? -v : v));
      while (pos < text.size() && is_space(text[pos])) ++pos;
      if (pos < text.size() && text[pos] == ',') { ++pos; expect_value = true; continue; }
      expect_value = false;
    }
  }

  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace braidrep
