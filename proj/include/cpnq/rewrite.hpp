#pragma once

// One-sided rewrite systems for the E- and F-subalgebras, obtained by
// noncommutative Buchberger completion of the quantum Serre relations,
// truncated at a degree bound.  The Serre ideals are homogeneous in total
// degree and in root-lattice weight, so the truncated system decides
// equality for all expressions of degree up to the bound.

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cpnq/freealg.hpp"

namespace cpnq {

struct Rule {
  Word lead;    // deg-lex leading word, coefficient normalized to 1
  NCPoly tail;  // lead rewrites to tail; all tail words deg-lex below lead
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(LetterKind side, int rank, int degree_bound,
                std::vector<Rule> rules)
      : side_(side),
        rank_(rank),
        degree_bound_(degree_bound),
        rules_(std::move(rules)) {}

  LetterKind side() const { return side_; }
  int rank() const { return rank_; }
  int degree_bound() const { return degree_bound_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // First match of any rule lead as a subword of w: (rule index, position).
  std::optional<std::pair<size_t, size_t>> find_match(const Word& w) const {
    for (size_t r = 0; r < rules_.size(); ++r) {
      const Word& l = rules_[r].lead;
      if (l.size() > w.size()) continue;
      for (size_t pos = 0; pos + l.size() <= w.size(); ++pos) {
        bool ok = true;
        for (size_t i = 0; i < l.size(); ++i)
          if (!(w[pos + i] == l[i])) {
            ok = false;
            break;
          }
        if (ok) return std::make_pair(r, pos);
      }
    }
    return std::nullopt;
  }

  bool is_irreducible(const Word& w) const { return !find_match(w); }

  // Full reduction to normal form.  The deg-lex largest reducible monomial is
  // rewritten first, so intermediate traces are deterministic.
  NCPoly reduce(NCPoly p) const {
    for (;;) {
      // Find the largest reducible monomial.
      const Word* target = nullptr;
      std::pair<size_t, size_t> match;
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (auto m = find_match(it->first)) {
          target = &it->first;
          match = *m;
          break;
        }
      }
      if (!target) return p;
      Word w = *target;
      Scalar c = p.terms().at(w);
      const Rule& rule = rules_[match.first];
      size_t pos = match.second;
      Word prefix(w.begin(), w.begin() + pos);
      Word suffix(w.begin() + pos + rule.lead.size(), w.end());
      p.add_term(w, -c);
      NCPoly replaced = NCPoly::monomial(prefix).scaled(c) * rule.tail *
                        NCPoly::monomial(suffix);
      p += replaced;
    }
  }

  NCPoly reduce_word(const Word& w) const {
    return reduce(NCPoly::monomial(w));
  }

 private:
  LetterKind side_ = LetterKind::E;
  int rank_ = 0;
  int degree_bound_ = 0;
  std::vector<Rule> rules_;
};

namespace detail {

inline std::optional<Rule> make_rule(const NCPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const Word& lead = p.lead_word();
  const Scalar& lc = p.lead_coeff();
  NCPoly tail;
  for (const auto& [w, c] : p.terms())
    if (!(w == lead)) tail.add_term(w, -(c / lc));
  return Rule{lead, tail};
}

inline NCPoly rule_poly(const Rule& r) {
  NCPoly p = NCPoly::monomial(r.lead);
  p -= r.tail;
  return p;
}

inline void interreduce(std::vector<Rule>& rules, LetterKind side, int rank,
                        int bound) {
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < rules.size(); ++i) {
      std::vector<Rule> others;
      others.reserve(rules.size() - 1);
      for (size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      RewriteSystem sys(side, rank, bound, others);
      NCPoly reduced = sys.reduce(rule_poly(rules[i]));
      if (reduced == rule_poly(rules[i])) continue;
      changed = true;
      if (auto r = make_rule(reduced)) {
        rules[i] = *r;
      } else {
        rules.erase(rules.begin() + i);
        --i;
      }
    }
  }
}

}  // namespace detail

// Quantum Serre relations for the one-sided subalgebra of rank `rank`
// (simply laced, q_i = q).
inline std::vector<NCPoly> serre_relations(LetterKind side, int rank) {
  auto letter = [side](int i) { return Letter{side, i}; };
  std::vector<NCPoly> rels;
  Scalar q2 = Scalar::q_pow(1) + Scalar::q_pow(-1);  // q + q^{-1}
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j) {
      if (i == j) continue;
      if (i < j && j - i >= 2) {
        // Commuting pair, recorded once.
        NCPoly p = NCPoly::monomial({letter(i), letter(j)});
        p -= NCPoly::monomial({letter(j), letter(i)});
        rels.push_back(p);
      } else if (std::abs(i - j) == 1) {
        // X_i^2 X_j - (q + q^{-1}) X_i X_j X_i + X_j X_i^2
        NCPoly p = NCPoly::monomial({letter(i), letter(i), letter(j)});
        p -= NCPoly::monomial({letter(i), letter(j), letter(i)}).scaled(q2);
        p += NCPoly::monomial({letter(j), letter(i), letter(i)});
        rels.push_back(p);
      }
    }
  return rels;
}

// Noncommutative Buchberger completion of the Serre ideal, truncated at
// `degree_bound` and interreduced.
inline RewriteSystem gb_complete(LetterKind side, int rank, int degree_bound) {
  if (degree_bound < 3)
    throw std::invalid_argument("gb_complete: degree bound must be >= 3");
  std::vector<Rule> rules;
  for (const NCPoly& p : serre_relations(side, rank))
    if (auto r = detail::make_rule(p)) rules.push_back(*r);
  detail::interreduce(rules, side, rank, degree_bound);

  for (bool changed = true; changed;) {
    changed = false;
    RewriteSystem sys(side, rank, degree_bound, rules);
    std::vector<Rule> fresh;
    for (size_t a = 0; a < rules.size(); ++a)
      for (size_t b = 0; b < rules.size(); ++b) {
        const Word& la = rules[a].lead;
        const Word& lb = rules[b].lead;
        size_t maxo = std::min(la.size(), lb.size()) - 1;
        for (size_t o = 1; o <= maxo; ++o) {
          // suffix of la of length o == prefix of lb of length o?
          bool match = true;
          for (size_t i = 0; i < o; ++i)
            if (!(la[la.size() - o + i] == lb[i])) {
              match = false;
              break;
            }
          if (!match) continue;
          size_t total = la.size() + lb.size() - o;
          if (total > static_cast<size_t>(degree_bound)) continue;
          Word prefix(la.begin(), la.end() - o);
          Word suffix(lb.begin() + o, lb.end());
          NCPoly spoly = rules[a].tail * NCPoly::monomial(suffix) -
                         NCPoly::monomial(prefix) * rules[b].tail;
          spoly = sys.reduce(spoly);
          // Reduce against freshly found rules as well.
          if (!spoly.is_zero() && !fresh.empty())
            spoly = RewriteSystem(side, rank, degree_bound, fresh)
                        .reduce(spoly);
          if (auto r = detail::make_rule(spoly)) {
            fresh.push_back(*r);
            changed = true;
          }
        }
      }
    if (changed) {
      rules.insert(rules.end(), fresh.begin(), fresh.end());
      detail::interreduce(rules, side, rank, degree_bound);
    }
  }
  return RewriteSystem(side, rank, degree_bound, std::move(rules));
}

}  // namespace cpnq
