#pragma once

// Checkers for the operator families on V_h. All verdicts are exact operator
// identities (for formal h unless a rational value is given); numeric
// evaluations are recorded as extra evidence only where noted.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liecomp/report.hpp"
#include "liecomp/shiftop/classify.hpp"
#include "liecomp/shiftop/numeric.hpp"
#include "liecomp/shiftop/serialize.hpp"
#include "liecomp/shiftop/weight.hpp"
#include "liecomp/verma/bracket_table.hpp"

namespace liecomp::verma {

using shiftop::OperatorClass;

/// Memoized T(X) for one highest weight.
class OperatorCache {
 public:
  explicit OperatorCache(HighestWeight h) : h_(std::move(h)) {}
  const HighestWeight& weight() const { return h_; }

  const ShiftOperator& operator()(const Generator& g) {
    auto it = ops_.find(g);
    if (it == ops_.end()) it = ops_.emplace(g, represent(g, h_)).first;
    return it->second;
  }
  ShiftOperator operator()(const Combination& c) {
    ShiftOperator r;
    for (const auto& [g, k] : c.terms()) r += (*this)(g).scaled(Qh(k));
    return r;
  }

 private:
  HighestWeight h_;
  std::map<Generator, ShiftOperator> ops_;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline std::string pair_subject(const Generator& x, const Generator& y) {
  return "[" + x.to_string() + ", " + y.to_string() + "]";
}

}  // namespace detail

/// Exact in-half relations of the Witt composite: deviation(e_i, e_j) = 0 for
/// -1 <= i, j <= K and for -K <= i, j <= 1. Mixed pairs (i >= 2, j <= -2,
/// |i|, |j| <= K) are listed as info items with their operator class.
inline CheckReport check_witt_composite(int K, const HighestWeight& h, bool include_mixed = true) {
  detail::require(K >= 1, "max index K must be >= 1");
  CheckReport rep("witt-composite");
  rep.param("max_index", std::to_string(K)).param("h", h.to_string());
  OperatorCache T(h);
  auto check_pair = [&](int i, int j) {
    Generator x = Generator::e(i), y = Generator::e(j);
    ShiftOperator dev = shiftop::commutator(T(x), T(y)) - T(bracket(x, y));
    auto& item = rep.add(detail::pair_subject(x, y), dev.is_zero() ? Verdict::pass : Verdict::fail);
    item.operator_class = std::string(shiftop::to_string(shiftop::classify(dev)));
    if (!dev.is_zero()) item.residual = shiftop::to_string(dev);
  };
  for (int i = -1; i <= K; ++i)
    for (int j = -1; j <= K; ++j) check_pair(i, j);
  for (int i = -K; i <= 1; ++i)
    for (int j = -K; j <= 1; ++j) {
      if (i >= -1 && j >= -1) continue;  // already covered by the positive half
      check_pair(i, j);
    }
  if (include_mixed) {
    for (int i = 2; i <= K; ++i)
      for (int j = -2; j >= -K; --j) {
        Generator x = Generator::e(i), y = Generator::e(j);
        ShiftOperator dev = shiftop::commutator(T(x), T(y)) - T(bracket(x, y));
        auto& item = rep.add("mixed " + detail::pair_subject(x, y), Verdict::info);
        item.operator_class = std::string(shiftop::to_string(shiftop::classify(dev)));
      }
  }
  return rep;
}

/// Relations of the extended composite inside each half:
/// [T(e_i), T(f_j)] = -j T(f_{i+j}) and [T(f_i), T(f_j)] = 0.
/// Positive half: -1 <= i <= K (e), 0 <= j <= K (f); negative half mirrored.
inline CheckReport check_extended_composite(int K, const HighestWeight& h) {
  detail::require(K >= 1, "max index K must be >= 1");
  CheckReport rep("witt-extended");
  rep.param("max_index", std::to_string(K)).param("h", h.to_string()).param("ef_table", "[e_i,f_j] = -j f_{i+j}");
  OperatorCache T(h);
  int printed_checked = 0, printed_failed = 0;
  auto ef = [&](int i, int j) {
    Generator x = Generator::e(i), y = Generator::f(j);
    ShiftOperator comm = shiftop::commutator(T(x), T(y));
    ShiftOperator dev = comm - T(bracket(x, y));
    auto& item = rep.add(detail::pair_subject(x, y), dev.is_zero() ? Verdict::pass : Verdict::fail);
    if (!dev.is_zero()) item.residual = shiftop::to_string(dev);
    ++printed_checked;
    if (!(comm - T(printed_ef_relation(i, j))).is_zero()) {
      ++printed_failed;
      item.detail = "printed form [e_i,f_j]=j f_j fails";
    }
  };
  auto ff = [&](int i, int j) {
    Generator x = Generator::f(i), y = Generator::f(j);
    ShiftOperator comm = shiftop::commutator(T(x), T(y));
    auto& item = rep.add(detail::pair_subject(x, y), comm.is_zero() ? Verdict::pass : Verdict::fail);
    if (!comm.is_zero()) item.residual = shiftop::to_string(comm);
  };
  for (int i = -1; i <= K; ++i)
    for (int j = 0; j <= K; ++j) ef(i, j);
  for (int i = 0; i <= K; ++i)
    for (int j = 0; j <= K; ++j) ff(i, j);
  for (int i = -K; i <= 1; ++i)
    for (int j = -K; j <= 0; ++j) ef(i, j);
  for (int i = -K; i <= 0; ++i)
    for (int j = -K; j <= 0; ++j) ff(i, j);
  rep.note("e-f relations are checked against [e_i,f_j] = -j f_{i+j}; the printed form [e_i,f_j] = j f_j fails for " +
           std::to_string(printed_failed) + " of " + std::to_string(printed_checked) + " e-f pairs");
  return rep;
}

/// Symmetry: adjoint(T(e_k)) = T(e_{-k}) and adjoint(T(f_k)) = T(f_{-k}) for
/// |k| <= K, exactly. With a rational h > 0 the monomial inner products
/// <T z^m, z^n> = <z^m, T* z^n> are also compared for m, n <= numeric_bound.
inline CheckReport check_symmetric(int K, const HighestWeight& h, int numeric_bound = 8) {
  detail::require(K >= 1, "max index K must be >= 1");
  CheckReport rep("symmetric");
  rep.param("max_index", std::to_string(K)).param("h", h.to_string());
  shiftop::WeightFunction w(h.scalar());
  OperatorCache T(h);
  for (Family fam : {Family::e, Family::f}) {
    for (int k = -K; k <= K; ++k) {
      Generator g{fam, k};
      ShiftOperator adj = shiftop::adjoint(T(g), w);
      ShiftOperator diff = adj - T(g.star());
      auto& item = rep.add("adjoint(" + g.to_string() + ") = " + g.star().to_string(),
                           diff.is_zero() ? Verdict::pass : Verdict::fail);
      if (!diff.is_zero()) item.residual = shiftop::to_string(diff);
      if (h.unitarizable()) {
        const Rational& h0 = *h.rational();
        bool balanced = true;
        for (int m = 0; m <= numeric_bound && balanced; ++m)
          for (int n = 0; n <= numeric_bound && balanced; ++n) {
            Rational lhs = shiftop::monomial_inner_product(T(g), m, n, h0);
            // <z^m, A* z^n> = conj <A* z^n, z^m>; everything is real here.
            Rational rhs = shiftop::monomial_inner_product(adj, n, m, h0);
            balanced = lhs == rhs;
          }
        rep.add("inner products of " + g.to_string() + " at h=" + h0.to_string(),
                balanced ? Verdict::pass : Verdict::fail, "m, n <= " + std::to_string(numeric_bound));
      }
    }
  }
  return rep;
}

/// Absolute symmetry on degree-0 words X_1 ⊗ ... ⊗ X_m (m <= max_len,
/// |indices| <= index_bound, generators e and f). Each word product
/// P = T(X_1)...T(X_m) is compared with adjoint(P) and with the product of
/// the reversed starred word T(X_m*)...T(X_1*).
inline CheckReport check_absolutely_symmetric(int max_len, int index_bound, const HighestWeight& h) {
  detail::require(max_len >= 2, "word length must be >= 2");
  detail::require(index_bound >= 0, "index bound must be >= 0");
  CheckReport rep("absolutely-symmetric");
  rep.param("max_len", std::to_string(max_len)).param("index_bound", std::to_string(index_bound)).param("h", h.to_string());
  rep.note("T*(a) is read as the adjoint of the word product; the reversed starred word product is compared as well");
  shiftop::WeightFunction w(h.scalar());
  OperatorCache T(h);
  std::vector<Generator> letters;
  for (Family fam : {Family::e, Family::f})
    for (int k = -index_bound; k <= index_bound; ++k) letters.push_back({fam, k});

  using Word = std::vector<Generator>;
  std::map<Word, ShiftOperator> degree_zero;
  std::vector<Word> order;
  Word word;
  std::function<void(const ShiftOperator&, int)> extend = [&](const ShiftOperator& prefix, int degree) {
    if (!word.empty() && degree == 0) {
      degree_zero.emplace(word, prefix);
      order.push_back(word);
    }
    const int remaining = max_len - static_cast<int>(word.size());
    if (remaining == 0) return;
    for (const auto& g : letters) {
      int d = degree + g.degree();
      if (std::abs(d) > (remaining - 1) * index_bound) continue;
      word.push_back(g);
      extend(word.size() == 1 ? T(g) : shiftop::compose(prefix, T(g)), d);
      word.pop_back();
    }
  };
  extend(ShiftOperator::identity(), 0);
  std::sort(order.begin(), order.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& wd : order) {
    const ShiftOperator& P = degree_zero.at(wd);
    Word rev;
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) rev.push_back(it->star());
    bool adj_ok = (shiftop::adjoint(P, w) - P).is_zero();
    bool rev_ok = (degree_zero.at(rev) - P).is_zero();
    std::string subject;
    for (const auto& g : wd) subject += (subject.empty() ? "" : "⊗") + g.to_string();
    auto& item = rep.add(subject, adj_ok && rev_ok ? Verdict::pass : Verdict::fail);
    if (!adj_ok) item.detail += "product differs from its adjoint; ";
    if (!rev_ok) item.detail += "product differs from reversed starred word; ";
    if (!adj_ok || !rev_ok) item.residual = shiftop::to_string(P);
  }
  return rep;
}

enum class ClosureMode { literal, bracket };

inline const char* to_string(ClosureMode m) { return m == ClosureMode::literal ? "literal" : "bracket"; }

/// Nested commutators N = [...[[T(X_0),T(X_1)],T(X_2)]...,T(X_{n+1})] for
/// 1 <= n <= depth over generators e, f with |index| <= index_bound.
/// literal: N must be Hilbert-Schmidt. bracket: N - T(φ) must be, with φ the
/// iterated table bracket. Both classes are recorded on every item.
inline CheckReport check_absolutely_closed(int depth, int index_bound, const HighestWeight& h, ClosureMode mode) {
  detail::require(depth >= 1, "depth must be >= 1");
  detail::require(index_bound >= 0, "index bound must be >= 0");
  CheckReport rep("absolutely-closed");
  rep.param("depth", std::to_string(depth))
      .param("index_bound", std::to_string(index_bound))
      .param("h", h.to_string())
      .param("mode", to_string(mode));
  OperatorCache T(h);
  std::vector<Generator> letters;
  for (Family fam : {Family::e, Family::f})
    for (int k = -index_bound; k <= index_bound; ++k) letters.push_back({fam, k});

  std::vector<Generator> tuple;
  std::size_t literal_failures = 0, bracket_failures = 0, nonzero_phi = 0;
  std::function<void(const ShiftOperator&, const Combination&)> extend = [&](const ShiftOperator& nested,
                                                                            const Combination& phi) {
    const int n = static_cast<int>(tuple.size()) - 2;
    if (n >= 1) {
      ShiftOperator remainder = nested - T(phi);
      OperatorClass lit = shiftop::classify(nested);
      OperatorClass rem = shiftop::classify(remainder);
      bool lit_ok = shiftop::within(lit, OperatorClass::hilbert_schmidt);
      bool rem_ok = shiftop::within(rem, OperatorClass::hilbert_schmidt);
      literal_failures += lit_ok ? 0 : 1;
      bracket_failures += rem_ok ? 0 : 1;
      nonzero_phi += phi.is_zero() ? 0 : 1;
      std::string subject = "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) subject += (i ? ", " : "") + tuple[i].to_string();
      subject += ")";
      bool ok = mode == ClosureMode::literal ? lit_ok : rem_ok;
      auto& item = rep.add(subject, ok ? Verdict::pass : Verdict::fail,
                           "phi=" + phi.to_string() + "; literal=" + std::string(shiftop::to_string(lit)) +
                               "; remainder=" + std::string(shiftop::to_string(rem)));
      item.operator_class = std::string(shiftop::to_string(mode == ClosureMode::literal ? lit : rem));
      if (!ok) item.residual = shiftop::to_string(mode == ClosureMode::literal ? nested : remainder);
    }
    if (n == depth) return;
    for (const auto& g : letters) {
      tuple.push_back(g);
      if (tuple.size() == 1) {
        extend(T(g), Combination(g, 1));
      } else {
        extend(shiftop::commutator(nested, T(g)), bracket(phi, g));
      }
      tuple.pop_back();
    }
  };
  extend(ShiftOperator{}, Combination{});
  rep.note("literal-mode failures: " + std::to_string(literal_failures) +
           "; bracket-mode failures: " + std::to_string(bracket_failures));
  rep.note(nonzero_phi == 0 ? "phi vanished on every tuple"
                            : "phi is nonzero on " + std::to_string(nonzero_phi) +
                                  " tuples, so closure needs the iterated bracket (almost absolutely closed reading)");
  return rep;
}

}  // namespace liecomp::verma
