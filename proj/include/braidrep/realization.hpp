#pragma once

// Concrete realizations of finite Coxeter groups on {1..m}.
//
// Two backends behind one interface:
//  * symmetric_group(m): S_m as the type A_{m-1} system, everything computed
//    from one-line forms (no tables), so m can be large.
//  * enumerate(type, generator images): Cayley closure by BFS with length,
//    descent, inverse and complement tables.  Element ids are BFS discovery
//    order with the identity at 0; discovery is deterministic given the
//    generator order.
//
// Convention (fixed library-wide): products read left to right, so
// left descent of w means l(s*w) < l(w) with s applied first, and in type A
// it tests one-line entries w(i) > w(i+1); the mirrored test on the inverse
// characterizes right descents.

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidrep/coxeter.hpp"
#include "braidrep/permutation.hpp"

namespace braidrep {

class Realization {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t kDefaultCap = 10'000'000;

  static Realization symmetric_group(int m) {
    if (m < 2) throw std::invalid_argument("symmetric_group needs m >= 2");
    if (m > 64) throw std::invalid_argument("symmetric_group supports at most 64 strands");
    Realization r(CoxeterType(Family::A, m - 1), m);
    r.tabulated_ = false;
    for (int s = 1; s < m; ++s) r.gens_.push_back(Permutation::transposition(m, s, s + 1));
    std::vector<int> rev(m);
    for (int i = 0; i < m; ++i) rev[i] = m - i;
    r.w0_ = Permutation::from_one_line(rev);
    return r;
  }

  // Closes the generator images under right multiplication.  The images must
  // satisfy every defining relation of the type, and the closure must have
  // exactly the group order, otherwise this throws.
  static Realization enumerate(const CoxeterType& type, std::vector<Permutation> generators,
                               std::size_t element_cap = kDefaultCap) {
    const int rank = type.rank();
    if (static_cast<int>(generators.size()) != rank)
      throw std::invalid_argument("expected " + std::to_string(rank) + " generator images");
    const int degree = generators[0].degree();
    for (const auto& g : generators)
      if (g.degree() != degree) throw std::invalid_argument("generator degrees differ");
    if (rank > 64) throw std::invalid_argument("at most 64 generators supported");

    const CoxeterMatrix cm = CoxeterMatrix::of(type);
    for (const auto& rel : coxeter_relations(cm)) {
      Permutation lhs = eval_word(generators, degree, rel.lhs);
      Permutation rhs = eval_word(generators, degree, rel.rhs);
      if (!(lhs == rhs))
        throw std::invalid_argument("generator images violate relation " + rel.lhs_text() +
                                    " = " + (rel.rhs.empty() ? "1" : rel.rhs_text()));
    }

    Realization r(type, degree);
    r.tabulated_ = true;
    r.gens_ = std::move(generators);

    r.elements_.push_back(Permutation(degree));
    r.index_.emplace(r.elements_[0], 0u);
    r.length_.push_back(0);
    std::queue<std::uint32_t> work;
    work.push(0);
    while (!work.empty()) {
      const std::uint32_t id = work.front();
      work.pop();
      for (int s = 1; s <= rank; ++s) {
        Permutation next = compose(r.elements_[id], r.gens_[s - 1]);
        auto [it, inserted] = r.index_.emplace(next, static_cast<std::uint32_t>(r.elements_.size()));
        if (inserted) {
          if (r.elements_.size() >= element_cap)
            throw std::runtime_error("Cayley closure exceeds element cap");
          r.elements_.push_back(std::move(next));
          r.length_.push_back(r.length_[id] + 1);
          work.push(it->second);
        }
        r.right_.push_back(it->second);  // laid out as id * rank + (s-1); see below
      }
    }
    // The right table rows were appended in BFS order, so the layout is
    // already right_[id * rank + (s-1)].
    const std::uint32_t n = static_cast<std::uint32_t>(r.elements_.size());
    if (static_cast<std::uint64_t>(n) != type.order())
      throw std::runtime_error("closure has order " + std::to_string(n) + ", expected " +
                               std::to_string(type.order()) + " for " + type.text());

    r.left_.resize(static_cast<std::size_t>(n) * rank);
    for (std::uint32_t id = 0; id < n; ++id)
      for (int s = 1; s <= rank; ++s)
        r.left_[static_cast<std::size_t>(id) * rank + (s - 1)] =
            r.index_.at(compose(r.gens_[s - 1], r.elements_[id]));

    int max_len = 0;
    for (std::uint32_t id = 0; id < n; ++id) max_len = std::max(max_len, r.length_[id]);
    std::uint32_t w0_id = n;
    int w0_count = 0;
    for (std::uint32_t id = 0; id < n; ++id)
      if (r.length_[id] == max_len) { w0_id = id; ++w0_count; }
    if (w0_count != 1) throw std::runtime_error("longest element is not unique");
    r.w0_ = r.elements_[w0_id];
    if (!compose(r.w0_, r.w0_).is_identity())
      throw std::runtime_error("longest element is not an involution");

    r.inv_.resize(n);
    r.comp_.resize(n);
    r.ldesc_.resize(n);
    r.rdesc_.resize(n);
    for (std::uint32_t id = 0; id < n; ++id) {
      r.inv_[id] = r.index_.at(r.elements_[id].inverse());
      r.comp_[id] = r.index_.at(compose(r.elements_[id].inverse(), r.w0_));
    }
    for (std::uint32_t id = 0; id < n; ++id) {
      Mask lm = 0, rm = 0;
      for (int s = 1; s <= rank; ++s) {
        if (r.length_[r.left_at(id, s)] < r.length_[id]) lm |= Mask{1} << (s - 1);
        if (r.length_[r.right_at(id, s)] < r.length_[id]) rm |= Mask{1} << (s - 1);
      }
      r.ldesc_[id] = lm;
      r.rdesc_[id] = rm;
    }
    return r;
  }

  const CoxeterType& type() const { return type_; }
  int degree() const { return degree_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  bool tabulated() const { return tabulated_; }

  const Permutation& generator(int s) const {
    if (s < 1 || s > generator_count()) throw std::out_of_range("generator index out of range");
    return gens_[s - 1];
  }

  const Permutation& longest() const { return w0_; }

  std::uint64_t order() const {
    return tabulated_ ? static_cast<std::uint64_t>(elements_.size()) : type_.order();
  }

  const std::vector<Permutation>& elements() const {
    if (!tabulated_) throw std::logic_error("element list requires a tabulated realization");
    return elements_;
  }

  std::optional<std::uint32_t> index_of(const Permutation& w) const {
    if (!tabulated_) return std::nullopt;
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int length(const Permutation& w) const {
    if (!tabulated_) return static_cast<int>(w.inversions());
    return length_[id_of(w)];
  }

  Mask left_descents(const Permutation& w) const {
    if (tabulated_) return ldesc_[id_of(w)];
    Mask m = 0;
    const auto& img = w.raw();
    for (int i = 0; i + 1 < degree_; ++i)
      if (img[i] > img[i + 1]) m |= Mask{1} << i;
    return m;
  }

  Mask right_descents(const Permutation& w) const {
    if (tabulated_) return rdesc_[id_of(w)];
    return left_descents(w.inverse());
  }

  Permutation product(const Permutation& a, const Permutation& b) const { return compose(a, b); }

  Permutation inverse(const Permutation& w) const {
    if (tabulated_) return elements_[inv_[id_of(w)]];
    return w.inverse();
  }

  Permutation left_mul(int s, const Permutation& w) const {
    if (tabulated_) return elements_[left_at(id_of(w), s)];
    return compose(generator(s), w);
  }

  Permutation right_mul(const Permutation& w, int s) const {
    if (tabulated_) return elements_[right_at(id_of(w), s)];
    return compose(w, generator(s));
  }

  // Right complement: the unique c with w * c = w0 and lengths adding.
  Permutation complement(const Permutation& w) const {
    if (tabulated_) return elements_[comp_[id_of(w)]];
    return compose(w.inverse(), w0_);
  }

  // Conjugation by the longest element; an involution on group elements.
  Permutation tau(const Permutation& x) const { return compose(compose(w0_, x), w0_); }

  // Meet in left weak order (largest common prefix), by stripping common
  // left descents; the smallest common descent is stripped first, which
  // makes the run deterministic (the meet itself is order-independent).
  Permutation meet_weak_left(const Permutation& a, const Permutation& b) const {
    if (tabulated_) {
      std::uint32_t u = id_of(a), v = id_of(b), t = 0;
      while (true) {
        const Mask common = ldesc_[u] & ldesc_[v];
        if (!common) break;
        const int s = lowest_bit(common) + 1;
        u = left_at(u, s);
        v = left_at(v, s);
        t = right_at(t, s);
      }
      return elements_[t];
    }
    Permutation u = a, v = b, t(degree_);
    while (true) {
      const Mask common = left_descents(u) & left_descents(v);
      if (!common) break;
      const int s = lowest_bit(common) + 1;
      u = compose(gens_[s - 1], u);
      v = compose(gens_[s - 1], v);
      t = compose(t, gens_[s - 1]);
    }
    return t;
  }

  // Reduced word for w, smallest left descent stripped first.
  std::vector<int> reduced_word(const Permutation& w) const {
    std::vector<int> out;
    Permutation cur = w;
    while (true) {
      const Mask m = left_descents(cur);
      if (!m) break;
      const int s = lowest_bit(m) + 1;
      out.push_back(s);
      cur = tabulated_ ? elements_[left_at(id_of(cur), s)] : compose(gens_[s - 1], cur);
    }
    if (!cur.is_identity()) throw std::logic_error("descent stripping did not terminate");
    return out;
  }

 private:
  Realization(CoxeterType t, int degree) : type_(t), degree_(degree), w0_(degree) {}

  static int lowest_bit(Mask m) {
    int i = 0;
    while (!(m & (Mask{1} << i))) ++i;
    return i;
  }

  static Permutation eval_word(const std::vector<Permutation>& gens, int degree,
                               const std::vector<int>& word) {
    Permutation acc(degree);
    for (int s : word) acc = compose(acc, gens[s - 1]);
    return acc;
  }

  std::uint32_t id_of(const Permutation& w) const {
    auto it = index_.find(w);
    if (it == index_.end())
      throw std::invalid_argument("permutation is not an element of this realization");
    return it->second;
  }
  std::uint32_t left_at(std::uint32_t id, int s) const {
    return left_[static_cast<std::size_t>(id) * gens_.size() + (s - 1)];
  }
  std::uint32_t right_at(std::uint32_t id, int s) const {
    return right_[static_cast<std::size_t>(id) * gens_.size() + (s - 1)];
  }

  CoxeterType type_;
  int degree_;
  bool tabulated_ = false;
  std::vector<Permutation> gens_;
  Permutation w0_;

  // Tabulated backend only.
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<int> length_;
  std::vector<std::uint32_t> right_, left_, inv_, comp_;
  std::vector<Mask> ldesc_, rdesc_;
};

}  // namespace braidrep
