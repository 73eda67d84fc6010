#pragma once

// Generator maps from a finite-type Artin system into the braid group on m
// strands: a permutation image e(s) per Coxeter generator together with a
// braid word f(s) lifting it.  Builders cover the dihedral families I2(k)
// (even k doubles the strand count, odd k embeds into S_k), the
// hyperoctahedral family B_n into 2n strands, type A itself, and the D4 map,
// which is deliberately not a homomorphism.
//
// verify() decides, relation by relation, whether f extends to a group
// homomorphism, by comparing greedy normal forms of the two sides; it also
// cross-checks the projection square pi_m(f(w)) = e(pi_S(w)) on random words.

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "braidrep/garside.hpp"

namespace braidrep {

inline constexpr std::uint64_t kDefaultSeed = 20220822ull;

struct RepMap {
  CoxeterType source_type;
  int target_strands;
  std::string provenance;
  std::shared_ptr<const Realization> source;  // W_S realized by the e-images
  std::shared_ptr<const Realization> target;  // braid strands, type A backend
  std::vector<std::vector<int>> f_words;      // one braid word per generator

  const Permutation& e_image(int s) const { return source->generator(s); }
  BraidElement f_image(int s) const {
    if (s < 1 || s > static_cast<int>(f_words.size()))
      throw std::out_of_range("generator index out of range");
    return BraidElement::from_letters(*target, f_words[s - 1]);
  }
};

// Evaluates a signed word over the source generators in W_S.
inline Permutation source_eval(const RepMap& map, const std::vector<int>& word) {
  Permutation acc(map.source->degree());
  for (int a : word) {
    if (a == 0 || std::abs(a) > map.source->generator_count())
      throw std::invalid_argument("source letter out of range");
    const Permutation& g = map.source->generator(std::abs(a));
    acc = compose(acc, a > 0 ? g : g.inverse());
  }
  return acc;
}

// Letter-by-letter image of a signed source word.
inline std::vector<int> map_letters(const RepMap& map, const std::vector<int>& word) {
  std::vector<int> out;
  for (int a : word) {
    if (a == 0 || std::abs(a) > static_cast<int>(map.f_words.size()))
      throw std::invalid_argument("source letter out of range");
    const std::vector<int>& fw = map.f_words[std::abs(a) - 1];
    if (a > 0)
      out.insert(out.end(), fw.begin(), fw.end());
    else
      for (std::size_t i = fw.size(); i-- > 0;) out.push_back(-fw[i]);
  }
  return out;
}

inline BraidElement apply_map(const RepMap& map, const std::vector<int>& word) {
  return BraidElement::from_letters(*map.target, map_letters(map, word));
}

namespace detail {

inline RepMap finish_map(CoxeterType type, int m, std::vector<Permutation> e_images,
                         std::vector<std::vector<int>> f_words, std::string provenance) {
  RepMap map{type,
             m,
             std::move(provenance),
             std::make_shared<Realization>(Realization::enumerate(type, std::move(e_images))),
             std::make_shared<Realization>(Realization::symmetric_group(m)),
             std::move(f_words)};
  for (int s = 1; s <= map.source->generator_count(); ++s) {
    const BraidElement lift = map.f_image(s);
    if (!(lift.underlying_permutation() == map.e_image(s)))
      throw std::invalid_argument("lift word for s" + std::to_string(s) +
                                  " does not project onto its permutation image");
  }
  return map;
}

}  // namespace detail

// Even dihedral: 2k strands.  e(s1) pairs neighbours, e(s2) is the crossing
// involution (13)(25)(47)...(2k-2,2k); f(s2) is its one-factor lift.
inline RepMap build_i2_even(int k) {
  if (k < 2 || k % 2) throw std::invalid_argument("build_i2_even needs even k >= 2");
  const int m = 2 * k;
  std::vector<std::vector<int>> s1_cycles, s2_cycles;
  for (int i = 1; i <= k; ++i) s1_cycles.push_back({2 * i - 1, 2 * i});
  s2_cycles.push_back({1, 3});
  for (int j = 1; j <= k - 2; ++j) s2_cycles.push_back({2 * j, 2 * j + 3});
  s2_cycles.push_back({2 * k - 2, 2 * k});
  const Permutation e1 = Permutation::from_cycles(m, s1_cycles);
  const Permutation e2 = Permutation::from_cycles(m, s2_cycles);

  std::vector<int> f1;
  for (int i = 1; i <= k; ++i) f1.push_back(2 * i - 1);
  const Realization strands = Realization::symmetric_group(m);
  const std::vector<int> f2 = strands.reduced_word(e2);

  return detail::finish_map(CoxeterType(Family::I2, k), m, {e1, e2}, {f1, f2},
                            "builtin-i2-even");
}

// Odd dihedral: k strands, plain parallel-transposition images.
inline RepMap build_i2_odd(int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("build_i2_odd needs odd k >= 3");
  const int m = k;
  std::vector<std::vector<int>> s1_cycles, s2_cycles;
  std::vector<int> f1, f2;
  for (int i = 2; i + 1 <= k; i += 2) {
    s1_cycles.push_back({i, i + 1});
    f1.push_back(i);
  }
  for (int i = 1; i + 1 <= k - 1; i += 2) {
    s2_cycles.push_back({i, i + 1});
    f2.push_back(i);
  }
  return detail::finish_map(CoxeterType(Family::I2, k), m,
                            {Permutation::from_cycles(m, s1_cycles),
                             Permutation::from_cycles(m, s2_cycles)},
                            {f1, f2}, "builtin-i2-odd");
}

inline RepMap build_i2(int k) { return k % 2 ? build_i2_odd(k) : build_i2_even(k); }

// Hyperoctahedral: 2n strands.  s1 is the short end (4-bond towards s2);
// si for i >= 2 doubles as (n-i+1, n-i+2)(n+i-1, n+i).
inline RepMap build_bn(int n) {
  if (n < 2) throw std::invalid_argument("build_bn needs n >= 2");
  const int m = 2 * n;
  std::vector<Permutation> e;
  std::vector<std::vector<int>> f;
  e.push_back(Permutation::from_cycles(m, {{n, n + 1}}));
  f.push_back({n});
  for (int i = 2; i <= n; ++i) {
    e.push_back(Permutation::from_cycles(m, {{n - i + 1, n - i + 2}, {n + i - 1, n + i}}));
    f.push_back({n - i + 1, n + i - 1});
  }
  return detail::finish_map(CoxeterType(Family::B, n), m, std::move(e), std::move(f),
                            "builtin-bn");
}

inline RepMap build_an(int n) {
  if (n < 1) throw std::invalid_argument("build_an needs n >= 1");
  const int m = n + 1;
  std::vector<Permutation> e;
  std::vector<std::vector<int>> f;
  for (int i = 1; i <= n; ++i) {
    e.push_back(Permutation::transposition(m, i, i + 1));
    f.push_back({i});
  }
  return detail::finish_map(CoxeterType(Family::A, n), m, std::move(e), std::move(f),
                            "builtin-an");
}

// The D4 map into 8 strands.  Its projection square commutes, but the lift
// fails the s2/s3 braid relation, so it is not a homomorphism.
inline RepMap build_d4() {
  const int m = 8;
  std::vector<Permutation> e = {
      Permutation::from_cycles(m, {{3, 4}, {5, 6}}),
      Permutation::from_cycles(m, {{2, 3}, {6, 7}}),
      Permutation::from_cycles(m, {{3, 5}, {4, 6}}),
      Permutation::from_cycles(m, {{1, 2}, {7, 8}}),
  };
  std::vector<std::vector<int>> f = {{3, 5}, {2, 6}, {4, 3, 5, 4}, {1, 7}};
  return detail::finish_map(CoxeterType(Family::D, 4), m, std::move(e), std::move(f),
                            "builtin-d4");
}

inline RepMap build_custom(CoxeterType type, int m, std::vector<Permutation> e_images,
                           std::vector<std::vector<int>> f_words) {
  if (static_cast<int>(e_images.size()) != type.rank() ||
      e_images.size() != f_words.size())
    throw std::invalid_argument("need one image and one lift word per generator");
  return detail::finish_map(type, m, std::move(e_images), std::move(f_words), "custom");
}

// The builtin map for a type named on the command line.
inline RepMap build_for(const CoxeterType& type) {
  switch (type.family) {
    case Family::A: return build_an(type.param);
    case Family::B: return build_bn(type.param);
    case Family::I2: return build_i2(type.param);
    case Family::D:
      if (type.param == 4) return build_d4();
      throw std::invalid_argument("no builtin map for " + type.text() +
                                  ": of the D family only D4 is covered");
  }
  throw std::logic_error("unreachable");
}

struct RelationCheck {
  Relation relation;
  bool equal = false;
  std::string nf_lhs, nf_rhs;
};

struct DiagramCheck {
  int samples = 0;
  int failures = 0;
  int max_word_length = 0;
  std::uint64_t seed = 0;
};

struct ScanReport {
  std::string kind;  // "injectivity-grid" or "kernel"
  long long bound = 0;
  std::uint64_t enumerated = 0;
  bool truncated = false;
  std::vector<std::string> kernel;  // nontrivial elements with trivial image
  bool kernel_trivial = true;
  bool images_pairwise_distinct = true;
  std::uint64_t duplicate_images = 0;
  bool kernel_candidates_pure = true;

  nlohmann::json to_json() const {
    return nlohmann::json{{"kind", kind},
                          {"bound", bound},
                          {"enumerated", enumerated},
                          {"truncated", truncated},
                          {"kernel", kernel},
                          {"kernel_trivial", kernel_trivial},
                          {"images_pairwise_distinct", images_pairwise_distinct},
                          {"duplicate_images", duplicate_images},
                          {"kernel_candidates_pure", kernel_candidates_pure}};
  }

  std::string to_text() const {
    std::string s;
    s += "scan: " + kind + " (bound " + std::to_string(bound) + ")\n";
    s += "  elements enumerated: " + std::to_string(enumerated) +
         (truncated ? " (truncated at cap)\n" : "\n");
    s += "  kernel trivial: " + std::string(kernel_trivial ? "yes" : "NO") + "\n";
    for (const auto& g : kernel) s += "    kernel element: " + g + "\n";
    s += "  images pairwise distinct: " + std::string(images_pairwise_distinct ? "yes" : "NO");
    if (!images_pairwise_distinct)
      s += " (" + std::to_string(duplicate_images) + " duplicates)";
    s += "\n";
    s += "  kernel candidates pure: " + std::string(kernel_candidates_pure ? "yes" : "NO") + "\n";
    return s;
  }
};

struct VerificationReport {
  std::string type_text;
  int strands = 0;
  std::string provenance;
  std::uint64_t group_order = 0;
  bool embedding_relations_ok = false;
  std::vector<std::string> generator_names;
  std::vector<std::string> generator_e_cycles;
  std::vector<std::string> generator_f_words;
  std::vector<RelationCheck> relations;
  DiagramCheck diagram;
  bool is_homomorphism = false;
  std::vector<ScanReport> scans;

  std::vector<const RelationCheck*> witnesses() const {
    std::vector<const RelationCheck*> out;
    for (const auto& rc : relations)
      if (!rc.equal) out.push_back(&rc);
    return out;
  }

  std::string verdict() const { return is_homomorphism ? "homomorphism" : "not a homomorphism"; }

  nlohmann::json to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t i = 0; i < generator_names.size(); ++i)
      gens.push_back({{"name", generator_names[i]},
                      {"e_cycles", generator_e_cycles[i]},
                      {"f_word", generator_f_words[i]}});
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& rc : relations)
      rels.push_back({{"lhs", rc.relation.lhs_text()},
                      {"rhs", rc.relation.rhs_text()},
                      {"equal", rc.equal},
                      {"nf_lhs", rc.nf_lhs},
                      {"nf_rhs", rc.nf_rhs}});
    nlohmann::json wits = nlohmann::json::array();
    for (const RelationCheck* rc : witnesses())
      wits.push_back({{"lhs", rc->relation.lhs_text()},
                      {"rhs", rc->relation.rhs_text()},
                      {"nf_lhs", rc->nf_lhs},
                      {"nf_rhs", rc->nf_rhs}});
    nlohmann::json scans_json = nlohmann::json::array();
    for (const auto& s : scans) scans_json.push_back(s.to_json());
    return nlohmann::json{
        {"map",
         {{"type", type_text},
          {"m", strands},
          {"provenance", provenance},
          {"group_order", group_order},
          {"embedding_relations_ok", embedding_relations_ok}}},
        {"generators", gens},
        {"relations", rels},
        {"diagram",
         {{"samples", diagram.samples},
          {"failures", diagram.failures},
          {"max_word_length", diagram.max_word_length},
          {"seed", diagram.seed}}},
        {"verdict", verdict()},
        {"is_homomorphism", is_homomorphism},
        {"witnesses", wits},
        {"scans", scans_json}};
  }

  std::string to_text() const {
    std::string s;
    s += "map: " + type_text + " -> braid group on " + std::to_string(strands) +
         " strands (" + provenance + ")\n";
    s += "embedding: order " + std::to_string(group_order) + ", relations " +
         (embedding_relations_ok ? "respected" : "VIOLATED") + "\n";
    s += "generators:\n";
    for (std::size_t i = 0; i < generator_names.size(); ++i)
      s += "  " + generator_names[i] + "  e = " + generator_e_cycles[i] +
           "  f = " + generator_f_words[i] + "\n";
    s += "relations:\n";
    for (const auto& rc : relations) {
      s += std::string("  [") + (rc.equal ? "ok" : "FAIL") + "] " + rc.relation.lhs_text() +
           " = " + rc.relation.rhs_text() + "\n";
      if (!rc.equal) {
        s += "        lhs nf: " + rc.nf_lhs + "\n";
        s += "        rhs nf: " + rc.nf_rhs + "\n";
      }
    }
    s += "diagram: " + std::to_string(diagram.samples) + " samples, " +
         std::to_string(diagram.failures) + " failures (max length " +
         std::to_string(diagram.max_word_length) + ", seed " + std::to_string(diagram.seed) +
         ")\n";
    for (const auto& sc : scans) s += sc.to_text();
    s += "verdict: " + verdict() + "\n";
    return s;
  }
};

struct VerifyOptions {
  int samples = 100;
  int max_word_length = 20;
  std::uint64_t seed = kDefaultSeed;
};

inline VerificationReport verify(const RepMap& map, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.type_text = map.source_type.text();
  rep.strands = map.target_strands;
  rep.provenance = map.provenance;
  rep.group_order = map.source->order();

  const CoxeterMatrix cm = CoxeterMatrix::of(map.source_type);
  rep.embedding_relations_ok = true;
  for (const auto& rel : coxeter_relations(cm)) {
    if (!(source_eval(map, rel.lhs) == source_eval(map, rel.rhs)))
      rep.embedding_relations_ok = false;
  }

  for (int s = 1; s <= map.source->generator_count(); ++s) {
    rep.generator_names.push_back("s" + std::to_string(s));
    rep.generator_e_cycles.push_back(map.e_image(s).cycle_text());
    rep.generator_f_words.push_back(BraidWord(*map.target, map.f_words[s - 1]).text());
  }

  rep.is_homomorphism = true;
  for (const auto& rel : artin_relations(cm)) {
    RelationCheck rc;
    rc.relation = rel;
    const BraidElement lhs = apply_map(map, rel.lhs);
    const BraidElement rhs = apply_map(map, rel.rhs);
    rc.equal = equal(lhs, rhs);
    rc.nf_lhs = lhs.text();
    rc.nf_rhs = rhs.text();
    if (!rc.equal) rep.is_homomorphism = false;
    rep.relations.push_back(std::move(rc));
  }

  rep.diagram.samples = opt.samples;
  rep.diagram.max_word_length = opt.max_word_length;
  rep.diagram.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  const int rank = map.source->generator_count();
  for (int i = 0; i < opt.samples; ++i) {
    const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_word_length + 1));
    std::vector<int> word;
    for (int j = 0; j < len; ++j) {
      int a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(rank));
      if (rng() & 1) a = -a;
      word.push_back(a);
    }
    if (!(apply_map(map, word).underlying_permutation() == source_eval(map, word)))
      ++rep.diagram.failures;
  }
  return rep;
}

// Exhaustive injectivity grid for the abelian dihedral case: every element
// of the source Artin group is s1^a s2^b, so the grid |a|,|b| <= bound covers
// a full ball.  Images are compared by normal form.
inline ScanReport injectivity_scan_i2_2(const RepMap& map, int bound) {
  if (!(map.source_type == CoxeterType(Family::I2, 2)))
    throw std::invalid_argument("injectivity grid requires the I2(2) map");
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");

  ScanReport rep;
  rep.kind = "injectivity-grid";
  rep.bound = bound;

  const BraidElement f1 = map.f_image(1), f2 = map.f_image(2);
  auto powers = [&](const BraidElement& g) {
    std::vector<BraidElement> pw(2 * bound + 1, BraidElement::identity(*map.target));
    for (int a = 1; a <= bound; ++a) pw[bound + a] = pw[bound + a - 1] * g;
    const BraidElement gi = g.inverse();
    for (int a = 1; a <= bound; ++a) pw[bound - a] = pw[bound - a + 1] * gi;
    return pw;
  };
  const std::vector<BraidElement> p1 = powers(f1), p2 = powers(f2);

  std::unordered_map<std::string, std::string> seen;
  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      const BraidElement img = p1[bound + a] * p2[bound + b];
      ++rep.enumerated;
      const std::string name = "s1^" + std::to_string(a) + " s2^" + std::to_string(b);
      if (img.is_identity() && (a || b)) {
        rep.kernel.push_back(name);
        rep.kernel_trivial = false;
        std::vector<int> word(static_cast<std::size_t>(std::abs(a)), a > 0 ? 1 : -1);
        word.insert(word.end(), static_cast<std::size_t>(std::abs(b)), b > 0 ? 2 : -2);
        if (!source_eval(map, word).is_identity()) rep.kernel_candidates_pure = false;
      }
      auto [it, inserted] = seen.emplace(img.text(), name);
      if (!inserted) {
        rep.images_pairwise_distinct = false;
        ++rep.duplicate_images;
      }
    }
  }
  return rep;
}

// Enumerates every element of the source Artin group with delta power in
// {-1, 0} and canonical length <= max_len (directly as normal forms), maps
// each through f, and looks for a nontrivial kernel and image collisions.
inline ScanReport kernel_scan(const RepMap& map, int max_len, std::size_t cap = 1'000'000) {
  if (max_len < 0) throw std::invalid_argument("bound must be nonnegative");
  ScanReport rep;
  rep.kind = "kernel";
  rep.bound = max_len;

  const Realization& src = *map.source;
  std::vector<Permutation> usable;
  for (const auto& w : src.elements())
    if (!w.is_identity() && !(w == src.longest())) usable.push_back(w);

  std::unordered_map<std::string, std::string> seen;
  std::vector<Permutation> stack;

  auto visit = [&](long long p) {
    const BraidElement g = BraidElement::from_parts(src, p, stack);
    ++rep.enumerated;
    const BraidElement img = apply_map(map, g.to_word().letters);
    if (img.is_identity() && !g.is_identity()) {
      rep.kernel.push_back(g.text());
      rep.kernel_trivial = false;
      if (!g.is_pure()) rep.kernel_candidates_pure = false;
    }
    auto [it, inserted] = seen.emplace(img.text(), g.text());
    if (!inserted) {
      rep.images_pairwise_distinct = false;
      ++rep.duplicate_images;
    }
  };

  auto dfs = [&](auto&& self, long long p, int depth) -> bool {
    if (rep.enumerated >= cap) { rep.truncated = true; return false; }
    visit(p);
    if (depth == max_len) return true;
    for (const auto& y : usable) {
      if (!stack.empty()) {
        const Realization::Mask lb = src.left_descents(y);
        const Realization::Mask ra = src.right_descents(stack.back());
        if (lb & ~ra) continue;  // pair not left-weighted, not a normal form
      }
      stack.push_back(y);
      const bool keep_going = self(self, p, depth + 1);
      stack.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };

  for (long long p : {0ll, -1ll}) {
    stack.clear();
    if (!dfs(dfs, p, 0)) break;
  }
  return rep;
}

}  // namespace braidrep
