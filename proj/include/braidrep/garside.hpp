#pragma once

// Braid words and exact braid group elements in left-greedy normal form.
//
// An element is stored as delta^p * x1 * ... * xl where delta lifts the
// longest element w0 and each factor xi is a simple element, identified with
// the group element it projects to.  Invariants held by every BraidElement:
//   * no factor is the identity or w0 (those are absorbed),
//   * adjacent factors are left-weighted:
//       right_descents(xi) contains left_descents(xi+1).
// The form is unique, so word equality is component-wise comparison.
//
// Normalization is a bubble pass over adjacent pairs repeated to a fixed
// point.  A pair (a, b) that is not left-weighted moves t = meet(complement(a), b)
// across: (a, b) -> (a*t, t^-1*b).  Transfers only push length leftward, so
// the passes terminate; at the fixed point any w0 factors sit at the front
// and are absorbed into the delta power.

#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/realization.hpp"

namespace braidrep {

struct BraidWord {
  const Realization* realization;
  std::vector<int> letters;  // nonzero; |letter| indexes a generator, sign is inversion

  BraidWord(const Realization& r, std::vector<int> ls) : realization(&r), letters(std::move(ls)) {
    for (int a : letters)
      if (a == 0 || std::abs(a) > r.generator_count())
        throw std::invalid_argument("braid letter out of range: " + std::to_string(a));
  }

  // Tokens are whitespace (or comma) separated: "2", "-2", "s2", "S2";
  // a capital S marks the inverse generator.
  static BraidWord parse(const Realization& r, std::string_view text) {
    std::vector<int> letters;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
    while (pos < text.size()) {
      if (is_sep(text[pos])) { ++pos; continue; }
      int sign = 1;
      if (text[pos] == 's') { ++pos; }
      else if (text[pos] == 'S') { sign = -1; ++pos; }
      else if (text[pos] == '-') { sign = -1; ++pos; }
      else if (text[pos] == '+') { ++pos; }
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw std::invalid_argument("bad braid word token in \"" + std::string(text) + "\"");
      long v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000000) throw std::invalid_argument("braid letter too large");
        ++pos;
      }
      if (pos < text.size() && !is_sep(text[pos]))
        throw std::invalid_argument("bad braid word token in \"" + std::string(text) + "\"");
      letters.push_back(sign * static_cast<int>(v));
    }
    return BraidWord(r, std::move(letters));
  }

  std::string text() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(letters[i]);
    }
    return s;
  }
};

class BraidElement {
 public:
  static BraidElement identity(const Realization& r) { return BraidElement(r, 0, {}); }

  static BraidElement delta(const Realization& r, long long power = 1) {
    return BraidElement(r, power, {});
  }

  // The positive lift of a group element: one factor, unless w is trivial
  // or the longest element.
  static BraidElement simple_lift(const Realization& r, const Permutation& w) {
    if (w.degree() != r.degree()) throw std::invalid_argument("degree mismatch in simple_lift");
    if (r.tabulated() && !r.index_of(w))
      throw std::invalid_argument("permutation is not an element of this realization");
    if (w.is_identity()) return identity(r);
    if (w == r.longest()) return delta(r);
    return BraidElement(r, 0, {w});
  }

  static BraidElement from_word(const BraidWord& w) {
    return from_letters(*w.realization, w.letters);
  }

  // delta^p times the lifts of the given group elements, in order.
  static BraidElement from_parts(const Realization& r, long long p, std::vector<Permutation> parts) {
    for (const auto& x : parts)
      if (r.tabulated() && !r.index_of(x))
        throw std::invalid_argument("factor is not an element of this realization");
    return BraidElement(r, p, std::move(parts));
  }

  static BraidElement from_letters(const Realization& r, std::span<const int> letters) {
    // Letter s lifts the generator; letter -s is delta^-1 times the lift of
    // w0*s.  Delta powers are pulled to the front through tau, then the
    // positive factor sequence is normalized.
    std::vector<Permutation> xs;
    std::vector<long long> shift;  // delta power contributed at or after each factor
    xs.reserve(letters.size());
    long long p = 0;
    for (int a : letters) {
      if (a == 0 || std::abs(a) > r.generator_count())
        throw std::invalid_argument("braid letter out of range: " + std::to_string(a));
      if (a > 0) {
        xs.push_back(r.generator(a));
        shift.push_back(0);
      } else {
        xs.push_back(compose(r.longest(), r.generator(-a)));
        shift.push_back(-1);
        --p;
      }
    }
    long long suffix = 0;
    for (std::size_t i = xs.size(); i-- > 0;) {
      if (suffix & 1) xs[i] = r.tau(xs[i]);
      suffix += shift[i];
    }
    return BraidElement(r, p, std::move(xs));
  }

  const Realization& realization() const { return *real_; }
  long long delta_power() const { return delta_; }
  const std::vector<Permutation>& factors() const { return factors_; }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  bool is_identity() const { return delta_ == 0 && factors_.empty(); }

  friend BraidElement operator*(const BraidElement& a, const BraidElement& b) {
    a.check_same(b);
    const Realization& r = *a.real_;
    std::vector<Permutation> xs;
    xs.reserve(a.factors_.size() + b.factors_.size());
    const bool flip = b.delta_ & 1;
    for (const auto& x : a.factors_) xs.push_back(flip ? r.tau(x) : x);
    xs.insert(xs.end(), b.factors_.begin(), b.factors_.end());
    return BraidElement(r, a.delta_ + b.delta_, std::move(xs));
  }

  BraidElement inverse() const {
    const Realization& r = *real_;
    // (delta^p x1..xl)^-1 = xl^-1 ... x1^-1 delta^-p, and each xi^-1 is
    // delta^-1 times the lift of w0 * xi^-1.
    BraidElement acc = identity(r);
    for (std::size_t i = factors_.size(); i-- > 0;) {
      BraidElement piece(r, -1, {compose(r.longest(), r.inverse(factors_[i]))});
      acc = acc * piece;
    }
    return acc * delta(r, -delta_);
  }

  BraidElement power(long long e) const {
    BraidElement acc = identity(*real_);
    BraidElement base = e < 0 ? inverse() : *this;
    long long n = e < 0 ? -e : e;
    for (long long i = 0; i < n; ++i) acc = acc * base;
    return acc;
  }

  friend bool equal(const BraidElement& a, const BraidElement& b) {
    a.check_same(b);
    return a.delta_ == b.delta_ && a.factors_ == b.factors_;
  }

  Permutation underlying_permutation() const {
    const Realization& r = *real_;
    Permutation acc = (delta_ & 1) ? r.longest() : Permutation(r.degree());
    for (const auto& x : factors_) acc = compose(acc, x);
    return acc;
  }

  bool is_pure() const { return underlying_permutation().is_identity(); }

  BraidWord to_word() const {
    const Realization& r = *real_;
    std::vector<int> letters;
    const std::vector<int> w0_word = r.reduced_word(r.longest());
    if (delta_ >= 0) {
      for (long long i = 0; i < delta_; ++i)
        letters.insert(letters.end(), w0_word.begin(), w0_word.end());
    } else {
      for (long long i = 0; i < -delta_; ++i)
        for (std::size_t j = w0_word.size(); j-- > 0;) letters.push_back(-w0_word[j]);
    }
    for (const auto& x : factors_) {
      const std::vector<int> xw = r.reduced_word(x);
      letters.insert(letters.end(), xw.begin(), xw.end());
    }
    return BraidWord(r, std::move(letters));
  }

  // Canonical text: "D^p | f1 | f2 | ...", factors as one-line permutations
  // for the direct symmetric backend and as element ids for tabulated ones.
  // An empty factor list keeps a bare separator: "D^0 |".
  std::string text() const {
    std::string s = "D^" + std::to_string(delta_);
    if (factors_.empty()) return s + " |";
    for (const auto& x : factors_) {
      s += " | ";
      if (real_->tabulated())
        s += std::to_string(*real_->index_of(x));
      else
        s += x.one_line_text();
    }
    return s;
  }

 private:
  BraidElement(const Realization& r, long long p, std::vector<Permutation> raw)
      : real_(&r), delta_(p), factors_(std::move(raw)) {
    normalize();
  }

  void check_same(const BraidElement& o) const {
    if (real_ != o.real_)
      throw std::invalid_argument("braid elements belong to different realizations");
  }

  void normalize() {
    const Realization& r = *real_;
    std::vector<Permutation>& xs = factors_;
    std::erase_if(xs, [](const Permutation& x) { return x.is_identity(); });
    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t i = 0;
      while (i + 1 < xs.size()) {
        const Realization::Mask lb = r.left_descents(xs[i + 1]);
        const Realization::Mask ra = r.right_descents(xs[i]);
        if ((lb & ~ra) == 0) { ++i; continue; }
        const Permutation t = r.meet_weak_left(r.complement(xs[i]), xs[i + 1]);
        xs[i] = r.product(xs[i], t);
        Permutation rest = r.product(r.inverse(t), xs[i + 1]);
        changed = true;
        if (rest.is_identity())
          xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        else {
          xs[i + 1] = std::move(rest);
          ++i;
        }
      }
    }
    std::size_t lead = 0;
    while (lead < xs.size() && xs[lead] == r.longest()) ++lead;
    if (lead) {
      delta_ += static_cast<long long>(lead);
      xs.erase(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(lead));
    }
  }

  const Realization* real_;
  long long delta_;
  std::vector<Permutation> factors_;
};

}  // namespace braidrep
