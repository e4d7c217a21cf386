#pragma once
/// Reference multiplication by exhaustive rewriting of words in the
/// generators x_i, y_i, g_k. Slow; used to cross-check the PBW product.

#include <map>
#include <vector>

#include "cheralg/cherednik/algebra.hpp"

namespace cheralg {

template <class R>
class RewriteOracle {
 public:
  enum Kind : int { X = 0, Y = 1, Gen = 2 };
  using Letter = std::pair<int, int>;  // (kind, index)
  using Word = std::vector<Letter>;

  explicit RewriteOracle(const CherednikAlgebra<R>& H) : H_(&H), G_(&H.group()), n_(H.rank()) {}

  PBWElement<R> product(const PBWElement<R>& a, const PBWElement<R>& b) const {
    std::map<Word, R> work;
    for (auto& [ga, pa] : a.terms)
      for (auto& [ma, ca] : pa.terms())
        for (auto& [gb, pb] : b.terms)
          for (auto& [mb, cb] : pb.terms()) {
            Word w = to_word(ma, ga);
            Word wb = to_word(mb, gb);
            w.insert(w.end(), wb.begin(), wb.end());
            add(work, w, ca * cb);
          }
    return normalize(std::move(work));
  }

 private:
  Word to_word(Monomial m, int g) const {
    Word w;
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < mono_exp(m, i); ++e) w.emplace_back(X, i);
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < mono_exp(m, n_ + i); ++e) w.emplace_back(Y, i);
    for (int k : G_->word(g)) w.emplace_back(Gen, k);
    return w;
  }

  static void add(std::map<Word, R>& m, const Word& w, const R& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = m.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) m.erase(it);
    }
  }

  Word splice(const Word& w, std::size_t pos, const Word& mid) const {
    Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    r.insert(r.end(), mid.begin(), mid.end());
    r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
    return r;
  }

  PBWElement<R> normalize(std::map<Word, R> work) const {
    const auto& param = H_->parameter();
    std::map<int, PolyAccumulator<R>> out;
    while (!work.empty()) {
      auto it = work.begin();
      Word w = it->first;
      R c = it->second;
      work.erase(it);
      std::size_t p = 0;
      bool rewritten = false;
      for (; p + 1 < w.size(); ++p) {
        auto [k1, i1] = w[p];
        auto [k2, i2] = w[p + 1];
        if (k1 == X && k2 == X && i1 > i2) {
          add(work, splice(w, p, {w[p + 1], w[p]}), c);
        } else if (k1 == Y && k2 == Y && i1 > i2) {
          add(work, splice(w, p, {w[p + 1], w[p]}), c);
        } else if (k1 == Y && k2 == X) {
          add(work, splice(w, p, {w[p + 1], w[p]}), c);
          if (i1 == i2) add(work, splice(w, p, {}), c * param.t);
          for (auto& s : G_->reflections()) {
            R coef = from_nf<R>(s.pairing(i1, i2)) * param.c[s.cls];
            if (is_zero(coef)) continue;
            Word sw;
            for (int k : G_->word(s.element)) sw.emplace_back(Gen, k);
            add(work, splice(w, p, sw), c * coef);
          }
        } else if (k1 == Gen && (k2 == X || k2 == Y)) {
          int ge = G_->generator_element(i1);
          const Matrix<NF>& A = k2 == X ? G_->x_action(ge) : G_->y_action(ge);
          for (int j = 0; j < n_; ++j)
            if (!is_zero(A(i2, j))) add(work, splice(w, p, {Letter(k2, j), w[p]}), c * from_nf<R>(A(i2, j)));
        } else {
          continue;
        }
        rewritten = true;
        break;
      }
      if (rewritten) continue;
      Monomial m = 0;
      int g = 0;
      for (auto [k, i] : w) {
        if (k == X) m += mono_var(i);
        else if (k == Y) m += mono_var(n_ + i);
        else g = G_->mul(g, G_->generator_element(i));
      }
      out[g].add(m, c);
    }
    PBWElement<R> r;
    for (auto& [g, acc] : out) r.add(g, acc.take(H_->names()));
    return r;
  }

  const CherednikAlgebra<R>* H_;
  const ReflectionGroup* G_;
  int n_;
};

}  // namespace cheralg
