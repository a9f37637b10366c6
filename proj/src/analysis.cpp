#include "rloop/analysis.hpp"

#include <algorithm>
#include <map>

#include "rloop/errors.hpp"

namespace rloop {

std::string_view property_name(LoopProperty property) {
  switch (property) {
    case LoopProperty::loop: return "loop";
    case LoopProperty::commutative: return "commutative";
    case LoopProperty::inverse_property: return "inverse-property";
  }
  return "?";
}

PropertyReport check_property(const RightLoopTable& table, LoopProperty property) {
  PropertyReport report{property, true, {}, std::nullopt};
  int n = table.order();

  switch (property) {
    case LoopProperty::loop:
      for (int x = 0; x < n; ++x) {
        std::vector<int> first(static_cast<std::size_t>(n), -1);
        for (int y = 0; y < n; ++y) {
          int v = table.op(x, y);
          if (first[static_cast<std::size_t>(v)] >= 0) {
            report.witnesses.push_back({x, first[static_cast<std::size_t>(v)], y});
            break;  // one witness per violating row
          }
          first[static_cast<std::size_t>(v)] = y;
        }
      }
      break;

    case LoopProperty::commutative:
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (table.op(x, y) != table.op(y, x)) report.witnesses.push_back({x, y});
      break;

    case LoopProperty::inverse_property: {
      std::vector<int> inverses(static_cast<std::size_t>(n), -1);
      for (int x = 0; x < n; ++x) {
        for (int q = 0; q < n; ++q) {
          bool good = true;
          for (int y = 0; y < n && good; ++y)
            good = table.op(q, table.op(x, y)) == y && table.op(table.op(y, x), q) == y;
          if (good) {
            inverses[static_cast<std::size_t>(x)] = q;
            break;
          }
        }
        if (inverses[static_cast<std::size_t>(x)] < 0) report.witnesses.push_back({x});
      }
      if (report.witnesses.empty()) report.inverse_map = std::move(inverses);
      break;
    }
  }

  report.holds = report.witnesses.empty();
  return report;
}

std::vector<int> left_inverse_map(const RightLoopTable& table) {
  std::vector<int> out(static_cast<std::size_t>(table.order()));
  for (int a = 0; a < table.order(); ++a)
    out[static_cast<std::size_t>(a)] = table.right_divide(table.identity(), a);
  return out;
}

Lemma1Report lemma1_check(const RightLoopTable& table) {
  PropertyReport ip = check_property(table, LoopProperty::inverse_property);
  if (!ip.holds)
    throw PreconditionFailed("inverse-property",
                             "lemma 1 applies to I.P. loops only; check_property first");

  Lemma1Report report;
  std::vector<int> linv = left_inverse_map(table);
  for (int a = 0; a < table.order(); ++a) {
    LeftTranslation la = table.left_translation(a);
    LeftTranslation lia = table.left_translation(linv[static_cast<std::size_t>(a)]);
    if (!la.bijective || !lia.bijective ||
        lia.perm().inverse() != la.perm())
      report.failing.push_back(a);
    if (linv[static_cast<std::size_t>(linv[static_cast<std::size_t>(a)])] != a)
      report.double_inverse_failing.push_back(a);
  }
  return report;
}

AlphaResult build_alpha(const RightLoopTable& base, int a, int b, const Permutation& eta) {
  if (a == base.identity())
    throw PreconditionFailed("a-not-identity", "a must differ from the identity");
  if (b == base.identity())
    throw PreconditionFailed("b-not-identity", "b must differ from the identity");
  for (LoopProperty p :
       {LoopProperty::loop, LoopProperty::commutative, LoopProperty::inverse_property})
    if (!check_property(base, p).holds)
      throw PreconditionFailed(std::string(property_name(p)),
                               "base must be a commutative I.P. loop");

  int one_over_a = base.right_divide(base.identity(), a);
  TwistSpec spec({one_over_a, b}, eta);
  RightLoopTable twisted = twist(base, spec);

  Permutation rb = twisted.right_translation(b);
  Permutation ra_inv = twisted.right_translation(one_over_a).inverse();
  // rightmost letter applied first
  Permutation realized = rb * ra_inv * rb * ra_inv;
  TranslationWord word{{{one_over_a, -1}, {b, +1}, {one_over_a, -1}, {b, +1}}};
  return AlphaResult{std::move(twisted), std::move(word), std::move(realized)};
}

AlphaIdentityReport alpha_identity_check(const RightLoopTable& base, int a, int b,
                                         const Permutation& eta) {
  AlphaResult alpha = build_alpha(base, a, b, eta);
  Permutation lb = base.left_translation(b).perm();
  Permutation la = base.left_translation(a).perm();
  Permutation target = lb * la * lb * la;

  AlphaIdentityReport report;
  for (int x = 0; x < base.order(); ++x)
    if (alpha.realized(x) != target(x)) report.mismatch_points.push_back(x);
  return report;
}

SupportReport support(const Permutation& p) {
  SupportReport report{0, {}, true};
  for (int x = 0; x < p.degree(); ++x)
    if (p(x) != x) report.moved_points.push_back(x);
  report.moved_count = report.moved_points.size();
  report.is_identity = report.moved_count == 0;
  return report;
}

MulGroupResult right_mult_group(const RightLoopTable& table, std::uint64_t cap) {
  std::vector<Permutation> letters;
  for (int a = 0; a < table.order(); ++a) {
    Permutation r = table.right_translation(a);
    if (std::find(letters.begin(), letters.end(), r) == letters.end())
      letters.push_back(std::move(r));
  }
  int generator_count = static_cast<int>(letters.size());
  std::size_t direct = letters.size();
  for (std::size_t i = 0; i < direct; ++i) {
    Permutation inv = letters[i].inverse();
    if (std::find(letters.begin(), letters.end(), inv) == letters.end())
      letters.push_back(std::move(inv));
  }

  std::map<Permutation, char> visited;
  std::vector<const Permutation*> frontier;
  auto [root, _] = visited.emplace(Permutation::identity(table.order()), 0);
  frontier.push_back(&root->first);

  while (!frontier.empty()) {
    std::vector<const Permutation*> next;
    for (const Permutation* p : frontier)
      for (const Permutation& l : letters) {
        auto [pos, inserted] = visited.emplace(l * *p, 0);
        if (inserted) {
          if (visited.size() > cap)
            return MulGroupResult{visited.size(), generator_count, false};
          next.push_back(&pos->first);
        }
      }
    frontier = std::move(next);
  }
  return MulGroupResult{visited.size(), generator_count, true};
}

HomogeneityMap homogeneity_map(const RightLoopTable& table, int x, int y) {
  int via = table.right_divide(y, x);
  LeftTranslation row = table.left_translation(via);
  return HomogeneityMap{via, std::move(row.images), row.bijective};
}

namespace {

// Shared breadth-first word closure.  Elt needs operator* (right factor
// applied first), inverse(), operator< and an identity seed.
template <class Elt>
std::map<Elt, TranslationWord> word_closure_map(const std::vector<Elt>& generators,
                                                int max_len, Elt identity_elt) {
  struct LetterMap {
    TranslationWord::Letter letter;
    Elt map;
  };
  std::vector<LetterMap> letters;
  for (int g = 0; g < static_cast<int>(generators.size()); ++g) {
    letters.push_back({{g, +1}, generators[static_cast<std::size_t>(g)]});
    letters.push_back({{g, -1}, generators[static_cast<std::size_t>(g)].inverse()});
  }

  std::map<Elt, TranslationWord> visited;
  auto [root, _] = visited.emplace(std::move(identity_elt), TranslationWord{});
  std::vector<typename std::map<Elt, TranslationWord>::iterator> frontier{root};

  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<typename std::map<Elt, TranslationWord>::iterator> next;
    for (auto reached : frontier)
      for (const LetterMap& l : letters) {
        Elt extended = l.map * reached->first;  // new letter applied last
        TranslationWord word = reached->second;
        word.letters.push_back(l.letter);
        auto [pos, inserted] = visited.emplace(std::move(extended), std::move(word));
        if (inserted) next.push_back(pos);
      }
    frontier = std::move(next);
  }
  return visited;
}

bool word_less(const TranslationWord& a, const TranslationWord& b) {
  auto key = [](const TranslationWord::Letter& l) {
    return std::pair<int, int>(l.generator, l.exponent > 0 ? 0 : 1);
  };
  return std::lexicographical_compare(
      a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end(),
      [&](const auto& x, const auto& y) { return key(x) < key(y); });
}

}  // namespace

std::vector<PermWitnessHit> witness_search(const std::vector<Permutation>& generators,
                                           int max_len, std::uint64_t max_support) {
  if (generators.empty()) return {};
  int degree = generators.front().degree();
  for (const Permutation& g : generators)
    if (g.degree() != degree) throw Error("witness generators act on different carriers");

  auto visited = word_closure_map(generators, max_len, Permutation::identity(degree));
  std::vector<PermWitnessHit> hits;
  for (const auto& [elt, word] : visited) {
    if (elt.is_identity()) continue;
    SupportReport census = support(elt);
    if (census.moved_count <= max_support) hits.push_back({word, elt, std::move(census)});
  }
  std::sort(hits.begin(), hits.end(), [](const PermWitnessHit& a, const PermWitnessHit& b) {
    if (a.moved.moved_count != b.moved.moved_count)
      return a.moved.moved_count < b.moved.moved_count;
    if (a.word.letters.size() != b.word.letters.size())
      return a.word.letters.size() < b.word.letters.size();
    return word_less(a.word, b.word);
  });
  return hits;
}

std::vector<AffineWitnessHit> witness_search(const std::vector<AffineMap>& generators,
                                             int max_len, std::uint64_t max_support) {
  auto visited = word_closure_map(generators, max_len, AffineMap::identity());
  std::vector<AffineWitnessHit> hits;
  for (const auto& [elt, word] : visited) {
    if (elt.is_identity()) continue;
    SupportClass cls = affine_support(elt);
    // only the empty class is finite; any finite bound excludes the rest
    if (cls.is_finite()) hits.push_back({word, elt, std::move(cls)});
  }
  (void)max_support;
  std::sort(hits.begin(), hits.end(), [](const AffineWitnessHit& a, const AffineWitnessHit& b) {
    if (a.word.letters.size() != b.word.letters.size())
      return a.word.letters.size() < b.word.letters.size();
    return word_less(a.word, b.word);
  });
  return hits;
}

std::vector<AffineMap> affine_word_closure(const std::vector<AffineMap>& generators,
                                           int max_len) {
  auto visited = word_closure_map(generators, max_len, AffineMap::identity());
  std::vector<AffineMap> out;
  out.reserve(visited.size());
  for (const auto& [elt, word] : visited) out.push_back(elt);
  return out;
}

}  // namespace rloop
