#pragma once
/// Cherednik parameters: the c-map on reflection classes, GGOR k-parameters
/// with the conversion to c and the sharp operation, data-driven parameter
/// types, restriction to hyperplanes in the GGOR space, Euler scalars and
/// Euler families.

#include <map>
#include <string>
#include <vector>

#include "cheralg/refgroup/groupdata.hpp"

namespace cheralg {

/// t and c(class) for each reflection class.
template <class R>
struct CherednikParameter {
  R t{0L};
  std::vector<R> c;
};

/// GGOR variables k{orbit}_{j} for j = 1..e-1, orbit numbering from 1.
inline std::vector<std::string> ggor_variables(const ReflectionGroup& G) {
  std::vector<std::string> v;
  for (std::size_t o = 0; o < G.orbits().size(); ++o)
    for (int j = 1; j < G.orbits()[o].e; ++j) v.push_back("k" + std::to_string(o + 1) + "_" + std::to_string(j));
  return v;
}

/// Position of k_{o,j} (j in 1..e-1) in the flattened variable list.
inline int ggor_index(const ReflectionGroup& G, int orbit, int j) {
  int pos = 0;
  for (int o = 0; o < orbit; ++o) pos += G.orbits()[o].e - 1;
  return pos + j - 1;
}

/// c(s) = sum_{j=0}^{e-1} det(s)^j (k_{O,j+1} - k_{O,j}), k_{O,0} = k_{O,e} = 0.
template <class R>
std::vector<R> ggor_to_c(const ReflectionGroup& G, const std::vector<R>& k) {
  std::vector<R> c;
  for (auto& cls : G.reflection_classes()) {
    const Reflection& s = G.reflections()[cls[0]];
    int e = G.orbits()[s.orbit].e;
    auto kk = [&](int j) -> R {
      j = ((j % e) + e) % e;
      return j == 0 ? R(0L) : k[ggor_index(G, s.orbit, j)];
    };
    R sum(0L);
    NF pw(1);
    for (int j = 0; j < e; ++j) {
      sum += from_nf<R>(pw) * (kk(j + 1) - kk(j));
      pw = pw * s.eigenvalue;
    }
    c.push_back(sum);
  }
  return c;
}

/// k^sharp_{O,j} = k_{O,-j}.
template <class R>
std::vector<R> ggor_sharp(const ReflectionGroup& G, const std::vector<R>& k) {
  std::vector<R> out(k.size(), R(0L));
  for (std::size_t o = 0; o < G.orbits().size(); ++o) {
    int e = G.orbits()[o].e;
    for (int j = 1; j < e; ++j) out[ggor_index(G, static_cast<int>(o), j)] = k[ggor_index(G, static_cast<int>(o), e - j)];
  }
  return out;
}

/// The generic GGOR point: k variables as polynomials over K.
inline std::vector<PolyNF> generic_ggor(const ReflectionGroup& G) {
  auto vars = ggor_variables(G);
  if (static_cast<int>(vars.size()) > kMaxVars) throw GroupError("too many GGOR variables");
  auto names = intern_names(vars);
  std::vector<PolyNF> k;
  for (int i = 0; i < static_cast<int>(vars.size()); ++i) k.push_back(PolyNF::variable(i, names));
  return k;
}

/// Parses an expression in the given variables as a polynomial over K.
inline PolyNF parse_poly(const GroupData& d, const std::string& text, const std::vector<std::string>& vars) {
  auto names = intern_names(vars);
  const NumberField* K = d.field();
  return parse_scalar<PolyNF>(
      text,
      [&](const std::string& n) -> std::optional<PolyNF> {
        for (int i = 0; i < static_cast<int>(vars.size()); ++i)
          if (vars[i] == n) return PolyNF::variable(i, names);
        if (!K->is_rational() && n == K->generator_name()) return PolyNF(NF::generator(K));
        return std::nullopt;
      },
      [](const Rational& q) { return PolyNF(NF(q)); });
}

/// c-map of a data-driven parameter type (e.g. BR) at its generic point.
inline std::vector<PolyNF> param_type_c(const GroupData& d, const ParamType& pt) {
  std::vector<PolyNF> c;
  for (auto& e : pt.class_exprs) c.push_back(parse_poly(d, e, pt.vars));
  return c;
}

/// A point on a line in parameter space: one indeterminate (named after the
/// surviving variable) and the c-map over K(T).
struct ParameterLine {
  std::string description;      // e.g. the hyperplane equation
  std::string free_variable;    // empty when the point is fully numeric
  std::vector<RatNF> k;         // GGOR values (empty for explicit c)
  CherednikParameter<RatNF> param;
};

/// Converts a polynomial in `vars` whose only non-constant variable is
/// `free` into K(T).
inline RatNF to_ratfunc(const PolyNF& p, int free, const std::string& name) {
  std::vector<NF> coeffs;
  for (auto& [m, c] : p.terms()) {
    int e = free >= 0 ? mono_exp(m, free) : 0;
    if (mono_degree(m) != e) throw std::invalid_argument("more than one free parameter");
    if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, NF(0L));
    coeffs[e] += c;
  }
  return RatNF(UPoly<NF>(coeffs), UPoly<NF>(NF(1)), intern_name(name.empty() ? "T" : name));
}

/// Restriction of the GGOR space to the hyperplane `eq` = 0 (a linear form
/// in k{o}_{j}). The lex-first variable with nonzero coefficient is solved
/// for; exactly one variable may remain free.
inline ParameterLine restrict_to_hyperplane(const GroupData& d, const std::string& eq) {
  const ReflectionGroup& G = *d.G;
  auto vars = ggor_variables(G);
  PolyNF f = parse_poly(d, eq, vars);
  if (f.total_degree() != 1) throw std::invalid_argument("hyperplane equation must be linear: " + eq);
  int n = static_cast<int>(vars.size());
  std::vector<NF> a(n, NF(0L));
  NF a0(0L);
  for (auto& [m, c] : f.terms()) {
    if (m == 0) {
      a0 = c;
      continue;
    }
    for (int i = 0; i < n; ++i)
      if (mono_exp(m, i)) a[i] = c;
  }
  int solved = -1;
  for (int i = 0; i < n && solved < 0; ++i)
    if (!is_zero(a[i])) solved = i;
  std::vector<int> free;
  for (int i = 0; i < n; ++i)
    if (i != solved) free.push_back(i);
  if (free.size() > 1) throw std::invalid_argument("hyperplane leaves more than one free parameter");
  ParameterLine line;
  line.description = eq;
  int fv = free.empty() ? -1 : free[0];
  line.free_variable = fv >= 0 ? vars[fv] : "";
  RatNF T = fv >= 0 ? RatNF::variable(vars[fv]) : RatNF(0L);
  line.k.assign(n, RatNF(0L));
  if (fv >= 0) line.k[fv] = T;
  RatNF rhs = RatNF(-a0);
  if (fv >= 0) rhs = rhs - RatNF(a[fv]) * T;
  line.k[solved] = rhs / RatNF(a[solved]);
  line.param.t = RatNF(0L);
  line.param.c = ggor_to_c(G, line.k);
  return line;
}

/// Explicit parameters "name=value,..." where names are GGOR variables
/// k{o}_{j} or c{i} (reflection class i) and values may contain one
/// indeterminate. Unset GGOR variables default to 0; c-values win over k.
inline ParameterLine explicit_parameters(const GroupData& d, const std::string& spec) {
  const ReflectionGroup& G = *d.G;
  auto kvars = ggor_variables(G);
  std::vector<std::pair<std::string, std::string>> items;
  std::size_t st = 0;
  while (st < spec.size()) {
    std::size_t comma = spec.find(',', st);
    std::string item = spec.substr(st, comma == std::string::npos ? std::string::npos : comma - st);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter item without '=': " + item);
    items.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    if (comma == std::string::npos) break;
    st = comma + 1;
  }
  std::string free;
  const NumberField* K = d.field();
  auto parse_value = [&](const std::string& text) {
    return parse_scalar<RatNF>(
        text,
        [&](const std::string& n) -> std::optional<RatNF> {
          if (!K->is_rational() && n == K->generator_name()) return RatNF(NF::generator(K));
          if (free.empty()) free = n;
          if (n != free) return std::nullopt;
          return RatNF::variable(n);
        },
        [](const Rational& q) { return RatNF(NF(q)); });
  };
  ParameterLine line;
  line.description = spec;
  line.k.assign(kvars.size(), RatNF(0L));
  std::vector<std::optional<RatNF>> cset(G.num_reflection_classes());
  RatNF t(0L);
  for (auto& [name, val] : items) {
    RatNF v = parse_value(val);
    bool done = false;
    for (std::size_t i = 0; i < kvars.size(); ++i)
      if (kvars[i] == name) {
        line.k[i] = v;
        done = true;
      }
    if (!done && name == "t") {
      t = v;
      done = true;
    }
    if (!done && name.size() > 1 && name[0] == 'c') {
      int idx = std::stoi(name.substr(1)) - 1;
      if (idx < 0 || idx >= G.num_reflection_classes()) throw std::invalid_argument("no reflection class " + name);
      cset[idx] = v;
      done = true;
    }
    if (!done) throw std::invalid_argument("unknown parameter name " + name);
  }
  line.free_variable = free;
  line.param.t = t;
  line.param.c = ggor_to_c(G, line.k);
  for (std::size_t i = 0; i < cset.size(); ++i)
    if (cset[i]) line.param.c[i] = *cset[i];
  return line;
}

/// Scalar by which the Euler element acts on the lowest weight space of
/// Delta(lambda): sum_s eps_s/(eps_s-1) c(s) chi(s)/chi(1).
template <class R>
R euler_scalar(const GroupData& d, const std::vector<R>& c, int irrep) {
  const ReflectionGroup& G = *d.G;
  const Irrep& ir = d.irreps[irrep];
  R sum(0L);
  for (auto& s : G.reflections()) {
    NF eps = s.eigenvalue;
    NF w = eps / (eps - NF(1)) * ir.chi[s.element] / NF(static_cast<long>(ir.dim));
    sum += from_nf<R>(w) * c[s.cls];
  }
  return sum;
}

/// Irreps grouped by Euler scalar, in order of first appearance (indices
/// are 0-based).
template <class R>
std::vector<std::pair<std::vector<int>, R>> euler_families(const GroupData& d, const std::vector<R>& c) {
  std::vector<std::pair<std::vector<int>, R>> fam;
  for (int i = 0; i < d.num_irreps(); ++i) {
    R v = euler_scalar(d, c, i);
    bool placed = false;
    for (auto& [members, val] : fam)
      if (val == v) {
        members.push_back(i);
        placed = true;
        break;
      }
    if (!placed) fam.push_back({{i}, v});
  }
  return fam;
}

}  // namespace cheralg
