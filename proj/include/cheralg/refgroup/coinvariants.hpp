#pragma once
/// Invariant theory of a reflection group on K[V] = K[x_1..x_n]:
/// fundamental invariants by Reynolds averaging, the Hilbert ideal's
/// Groebner basis, and the coinvariant algebra with its monomial basis.

#include <map>
#include <string>
#include <vector>

#include "cheralg/groebner/groebner.hpp"
#include "cheralg/refgroup/group.hpp"

namespace cheralg {

/// All monomials of total degree d in variables [off, off+n).
inline std::vector<Monomial> monomials_of_degree(int n, int d, int off = 0) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      Monomial m = 0;
      for (int k = 0; k < n; ++k) m += mono_var(off + k, e[k]);
      out.push_back(m);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

class Coinvariants {
 public:
  using Poly = MultiPoly<NF>;

  /// Coinvariant algebra of G acting on the polynomial ring whose linear
  /// forms transform by `action(g)` (rows give images of variables).
  /// `names` labels the variables (e.g. x1, x2).
  Coinvariants(const ReflectionGroup& G, bool dual_side, std::vector<std::string> names)
      : G_(&G), dual_(dual_side), n_(G.rank()), names_(intern_names(names)) {
    find_invariants();
    std::vector<Poly> gens = invariants_;
    gb_ = groebner_basis(gens, n_, MonomialOrder::Lex);
    basis_ = standard_monomials(gb_);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
  }

  int rank() const { return n_; }
  const std::vector<std::string>* names() const { return names_; }
  /// Substitution matrix of g on the variables.
  const Matrix<NF>& action(int g) const { return dual_ ? G_->y_action(g) : G_->x_action(g); }

  const std::vector<Poly>& invariants() const { return invariants_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const GroebnerBasis<NF>& groebner() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int index(Monomial m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }
  int degree_of(int i) const { return mono_degree(basis_[i]); }
  int top_degree() const { return basis_.empty() ? 0 : mono_degree(basis_.back()); }

  Poly normal_form(const Poly& p) const { return cheralg::normal_form(p, gb_); }

  /// Coordinates of NF(p) in the monomial basis.
  Vec<NF> coordinates(const Poly& p) const {
    Vec<NF> v(dim(), NF(0L));
    Poly r = normal_form(p);
    for (auto& [m, c] : r.terms()) v[index_.at(m)] = c;
    return v;
  }

  Poly act(int g, const Poly& p) const { return substitute_linear(p, action(g), 0); }

  /// Matrix of g on the coinvariant algebra, column i = image of basis i.
  Matrix<NF> group_matrix(int g) const {
    Matrix<NF> m(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
      auto v = coordinates(act(g, Poly(basis_[i], NF(1), names_)));
      for (int j = 0; j < dim(); ++j) m(j, i) = v[j];
    }
    return m;
  }

  /// Character of the degree-d piece, one value per group element.
  std::vector<NF> graded_character(int d) const {
    std::vector<NF> chi(G_->order(), NF(0L));
    for (int g = 0; g < G_->order(); ++g) {
      NF tr(0L);
      for (int i = 0; i < dim(); ++i) {
        if (degree_of(i) != d) continue;
        Poly img = normal_form(act(g, Poly(basis_[i], NF(1), names_)));
        tr += img.coeff(basis_[i]);
      }
      chi[g] = tr;
    }
    return chi;
  }

  /// Jacobian determinant of the fundamental invariants.
  Poly jacobian() const {
    Matrix<Poly> J(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) J(i, j) = derivative(invariants_[i], j);
    // Cofactor expansion (n is small).
    return det(J);
  }

 private:
  static Poly derivative(const Poly& p, int v) {
    std::vector<Poly::Term> t;
    for (auto& [m, c] : p.terms()) {
      int e = mono_exp(m, v);
      if (e) t.emplace_back(m - mono_var(v), c * NF(static_cast<long>(e)));
    }
    return Poly::from_terms(std::move(t), p.names());
  }
  static Poly det(const Matrix<Poly>& J) {
    int n = J.rows();
    if (n == 1) return J(0, 0);
    Poly out;
    for (int j = 0; j < n; ++j) {
      Matrix<Poly> minor(n - 1, n - 1);
      for (int r = 1; r < n; ++r)
        for (int c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(r - 1, cc++) = J(r, c);
      Poly term = J(0, j) * det(minor);
      out = (j % 2 == 0) ? out + term : out - term;
    }
    return out;
  }

  Poly reynolds(Monomial m) const {
    Poly sum;
    Poly mono(m, NF(1), names_);
    for (int g = 0; g < G_->order(); ++g) sum += act(g, mono);
    return sum.scaled(inverse(NF(static_cast<long>(G_->order()))));
  }

  void find_invariants() {
    long prod = 1;
    for (int d = 1; static_cast<int>(invariants_.size()) < n_; ++d) {
      if (d > G_->order()) throw GroupError("no polynomial invariant ring found (not a reflection group?)");
      auto mons = monomials_of_degree(n_, d);
      std::map<Monomial, int> pos;
      for (std::size_t i = 0; i < mons.size(); ++i) pos[mons[i]] = static_cast<int>(i);
      auto vec = [&](const Poly& p) {
        Vec<NF> v(mons.size(), NF(0L));
        for (auto& [m, c] : p.terms()) v[pos.at(m)] = c;
        return v;
      };
      EchelonBasis<NF> span(static_cast<int>(mons.size()));
      // Products of earlier invariants landing in degree d.
      std::vector<Poly> products{Poly(1L)};
      std::vector<int> pdeg{0};
      for (std::size_t k = 0; k < invariants_.size(); ++k) {
        std::size_t cur = products.size();
        for (std::size_t a = 0; a < cur; ++a)
          for (int mult = 1; pdeg[a] + mult * degrees_[k] <= d; ++mult) {
            products.push_back(products[a] * invariants_[k].pow(mult));
            pdeg.push_back(pdeg[a] + mult * degrees_[k]);
          }
      }
      for (std::size_t a = 0; a < products.size(); ++a)
        if (pdeg[a] == d) span.insert(vec(products[a]));
      for (Monomial m : mons) {
        Poly r = reynolds(m);
        if (r.zero()) continue;
        if (span.insert(vec(r))) {
          r = r.scaled(inverse(r.leading().second));
          invariants_.push_back(r);
          degrees_.push_back(d);
          prod *= d;
          if (static_cast<int>(invariants_.size()) == n_) break;
        }
      }
    }
    if (prod != G_->order()) throw GroupError("degrees of invariants do not multiply to |G|");
    if (jacobian().zero()) throw GroupError("fundamental invariants are dependent");
  }

  const ReflectionGroup* G_;
  bool dual_;
  int n_;
  const std::vector<std::string>* names_;
  std::vector<Poly> invariants_;
  std::vector<int> degrees_;
  GroebnerBasis<NF> gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;
};

}  // namespace cheralg
