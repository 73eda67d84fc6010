#pragma once

// Coxeter types, Coxeter matrices, and the defining relations of the
// associated Coxeter and Artin groups.
//
// Generator labelling for B_n and D_n follows the presentations used by the
// builtin maps: in B_n the 4-bond sits between s1 and s2 (so s1 is the short
// end); in D_n the branch node is s2, joined to s1, s3 and s4, with the tail
// s4-s5-...-sn.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

enum class Family { A, B, D, I2 };

struct CoxeterType {
  Family family;
  int param;  // rank for A/B/D, k for I2(k)

  CoxeterType(Family f, int p) : family(f), param(p) {
    switch (family) {
      case Family::A:
        if (param < 1) throw std::invalid_argument("type A needs rank >= 1");
        break;
      case Family::B:
        if (param < 2) throw std::invalid_argument("type B needs rank >= 2");
        break;
      case Family::D:
        if (param < 4) throw std::invalid_argument("type D needs rank >= 4");
        break;
      case Family::I2:
        if (param < 2) throw std::invalid_argument("type I2(k) needs k >= 2");
        break;
    }
  }

  int rank() const { return family == Family::I2 ? 2 : param; }

  std::uint64_t order() const {
    switch (family) {
      case Family::A:
        return checked_factorial(param + 1);
      case Family::B:
        return checked_shift(checked_factorial(param), param);
      case Family::D:
        return checked_shift(checked_factorial(param), param - 1);
      case Family::I2:
        return 2ull * static_cast<std::uint64_t>(param);
    }
    throw std::logic_error("unreachable");
  }

  std::string text() const {
    switch (family) {
      case Family::A: return "A" + std::to_string(param);
      case Family::B: return "B" + std::to_string(param);
      case Family::D: return "D" + std::to_string(param);
      case Family::I2: return "I2(" + std::to_string(param) + ")";
    }
    throw std::logic_error("unreachable");
  }

  // Accepts "A5", "B4", "D4", "I2(7)".
  static CoxeterType parse(std::string_view s) {
    auto fail = [&] {
      throw std::invalid_argument("unsupported Coxeter type '" + std::string(s) +
                                  "': expected An, Bn, D4, or I2(k)");
    };
    if (s.empty()) fail();
    const char fam = s[0];
    if (fam == 'I') {
      if (s.size() < 5 || s.substr(0, 3) != "I2(" || s.back() != ')') fail();
      return CoxeterType(Family::I2, parse_int(s.substr(3, s.size() - 4), fail));
    }
    Family f;
    if (fam == 'A') f = Family::A;
    else if (fam == 'B') f = Family::B;
    else if (fam == 'D') f = Family::D;
    else fail();
    return CoxeterType(f, parse_int(s.substr(1), fail));
  }

  bool operator==(const CoxeterType&) const = default;

 private:
  template <class Fail>
  static int parse_int(std::string_view digits, Fail fail) {
    if (digits.empty()) fail();
    long v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') fail();
      v = v * 10 + (c - '0');
      if (v > 1000000) fail();
    }
    return static_cast<int>(v);
  }
  static std::uint64_t checked_factorial(int n) {
    if (n > 20) throw std::overflow_error("group order exceeds 64 bits");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
  }
  static std::uint64_t checked_shift(std::uint64_t v, int bits) {
    if (bits >= 14 || v > (UINT64_MAX >> bits)) {
      if (v > (UINT64_MAX >> bits)) throw std::overflow_error("group order exceeds 64 bits");
    }
    return v << bits;
  }
};

class CoxeterMatrix {
 public:
  static CoxeterMatrix of(const CoxeterType& t) {
    const int n = t.rank();
    CoxeterMatrix m(n);
    switch (t.family) {
      case Family::A:
        for (int i = 1; i < n; ++i) m.set(i, i + 1, 3);
        break;
      case Family::B:
        m.set(1, 2, 4);
        for (int i = 2; i < n; ++i) m.set(i, i + 1, 3);
        break;
      case Family::D:
        m.set(1, 2, 3);
        m.set(2, 3, 3);
        m.set(2, 4, 3);
        for (int i = 4; i < n; ++i) m.set(i, i + 1, 3);
        break;
      case Family::I2:
        m.set(1, 2, t.param);
        break;
    }
    return m;
  }

  static CoxeterMatrix from_table(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n < 1) throw std::invalid_argument("empty Coxeter matrix");
    CoxeterMatrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(table[i].size()) != n)
        throw std::invalid_argument("Coxeter matrix must be square");
      for (int j = 0; j < n; ++j) {
        const int v = table[i][j];
        if (i == j && v != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
        if (i != j && v < 2) throw std::invalid_argument("off-diagonal entries must be >= 2");
        if (v != table[j][i]) throw std::invalid_argument("Coxeter matrix must be symmetric");
        m.m_[static_cast<std::size_t>(i) * n + j] = v;
      }
    }
    return m;
  }

  int size() const { return n_; }

  int entry(int s, int t) const {  // 1-based
    check(s);
    check(t);
    return m_[static_cast<std::size_t>(s - 1) * n_ + (t - 1)];
  }

 private:
  explicit CoxeterMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 2) {
    for (int i = 0; i < n; ++i) m_[static_cast<std::size_t>(i) * n + i] = 1;
  }
  void set(int s, int t, int v) {
    m_[static_cast<std::size_t>(s - 1) * n_ + (t - 1)] = v;
    m_[static_cast<std::size_t>(t - 1) * n_ + (s - 1)] = v;
  }
  void check(int s) const {
    if (s < 1 || s > n_) throw std::out_of_range("generator index out of range");
  }

  int n_;
  std::vector<int> m_;
};

struct Relation {
  enum class Kind { Braid, Order };
  Kind kind;
  std::vector<int> lhs, rhs;  // words over 1-based generator indices

  static std::string word_text(const std::vector<int>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ' ';
      s += (w[i] < 0 ? "S" + std::to_string(-w[i]) : "s" + std::to_string(w[i]));
    }
    return s;
  }
  std::string lhs_text() const { return word_text(lhs); }
  std::string rhs_text() const { return word_text(rhs); }
};

// One braid relation per generator pair: the two alternating words of length
// m(s,t).  m = 2 pairs give commutation relations and are included.
inline std::vector<Relation> artin_relations(const CoxeterMatrix& cm) {
  std::vector<Relation> out;
  for (int s = 1; s <= cm.size(); ++s) {
    for (int t = s + 1; t <= cm.size(); ++t) {
      const int m = cm.entry(s, t);
      Relation r;
      r.kind = Relation::Kind::Braid;
      for (int i = 0; i < m; ++i) {
        r.lhs.push_back(i % 2 == 0 ? s : t);
        r.rhs.push_back(i % 2 == 0 ? t : s);
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

// Braid relations plus one order relation s*s = 1 per generator.
inline std::vector<Relation> coxeter_relations(const CoxeterMatrix& cm) {
  std::vector<Relation> out;
  for (int s = 1; s <= cm.size(); ++s) {
    Relation r;
    r.kind = Relation::Kind::Order;
    r.lhs = {s, s};
    out.push_back(std::move(r));
  }
  auto braid = artin_relations(cm);
  out.insert(out.end(), braid.begin(), braid.end());
  return out;
}

}  // namespace braidrep
