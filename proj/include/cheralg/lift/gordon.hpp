#pragma once
/// The Gordon driver: Euler families of a parameter line, heads and
/// decomposition matrices of the Verma modules per family with
/// specialization re-draws, and the resulting record with its text form,
/// parser, consistency checks and comparison.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cheralg/lift/heads.hpp"
#include "cheralg/refgroup/params.hpp"
#include "cheralg/verma/verma.hpp"

namespace cheralg {

struct SpecializationUsed {
  std::vector<int> family;  // 0-based members
  Specialization spec;
};

struct GordonRecord {
  std::string group;
  std::string param_kind = "Hyperplane";  // or "Parameters"
  std::string param_text;
  std::vector<std::string> irreps;
  std::vector<std::pair<std::vector<int>, std::string>> euler_families;
  std::vector<std::vector<int>> families_run;
  std::vector<std::optional<int>> simple_dims;
  std::vector<std::optional<std::string>> pseries;
  std::vector<std::optional<std::vector<std::string>>> gmod;
  std::vector<std::optional<std::vector<int>>> decomposition;
  std::vector<std::vector<int>> cm_families;
  std::vector<SpecializationUsed> specializations;
  std::uint64_t seed = 0;

  void resize(int n) {
    simple_dims.assign(n, std::nullopt);
    pseries.assign(n, std::nullopt);
    gmod.assign(n, std::nullopt);
    decomposition.assign(n, std::nullopt);
  }
  int size() const { return static_cast<int>(irreps.size()); }
};

struct RecordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string family_str(const std::vector<int>& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i] + 1);
  return s + "}";
}

inline std::vector<int> parse_family(const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw RecordError("bad family: " + s);
  std::vector<int> f;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) f.push_back(std::stoi(item) - 1);
  return f;
}

inline std::string strip_spaces(const std::string& s) {
  std::string r;
  for (char c : s)
    if (c != ' ') r += c;
  return r;
}

inline std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

/// Text form; unknown entries are written as '*'.
inline void write_record(std::ostream& os, const GordonRecord& r) {
  using detail::family_str;
  os << "GordonRecord\n";
  os << "Group " << r.group << "\n";
  os << r.param_kind << " " << r.param_text << "\n";
  os << "Irreps";
  for (auto& s : r.irreps) os << " " << s;
  os << "\nEulerFamilies";
  for (auto& [f, v] : r.euler_families) os << " " << family_str(f) << ":" << v;
  os << "\nFamilies";
  for (auto& f : r.families_run) os << " " << family_str(f);
  os << "\nSimpleDims [";
  for (int i = 0; i < r.size(); ++i) os << (i ? ", " : " ") << (r.simple_dims[i] ? std::to_string(*r.simple_dims[i]) : "*");
  os << " ]\nSimplePSeries [";
  for (int i = 0; i < r.size(); ++i) os << (i ? ", " : " ") << (r.pseries[i] ? *r.pseries[i] : "*");
  os << " ]\nSimpleGradedGModStruct\n";
  for (int i = 0; i < r.size(); ++i) {
    if (!r.gmod[i]) {
      os << "*\n";
      continue;
    }
    os << "(";
    for (std::size_t j = 0; j < r.gmod[i]->size(); ++j) os << (j ? ", " : "") << (*r.gmod[i])[j];
    os << ")\n";
  }
  os << "VermaDecomposition\n";
  for (int i = 0; i < r.size(); ++i) {
    if (!r.decomposition[i]) {
      os << "*\n";
      continue;
    }
    os << "(";
    for (std::size_t j = 0; j < r.decomposition[i]->size(); ++j) os << (j ? " " : "") << (*r.decomposition[i])[j];
    os << ")\n";
  }
  os << "CMFamilies";
  for (auto& f : r.cm_families) os << " " << family_str(f);
  os << "\n";
  for (auto& s : r.specializations) os << "Specialization " << family_str(s.family) << " " << describe(s.spec) << "\n";
  os << "Seed " << r.seed << "\nEnd\n";
}

inline std::string record_string(const GordonRecord& r) {
  std::ostringstream os;
  write_record(os, r);
  return os.str();
}

inline GordonRecord read_record(std::istream& is) {
  using namespace detail;
  GordonRecord r;
  std::string line;
  auto next = [&](const std::string& key) {
    bool got = false;
    while (!got && std::getline(is, line)) got = !line.empty() && line[0] != '#';
    if (!got) throw RecordError("record ends before " + key);
    auto sp = line.find(' ');
    std::string k = line.substr(0, sp);
    if (k != key) throw RecordError("expected " + key + ", got '" + line + "'");
    return sp == std::string::npos ? std::string() : trim(line.substr(sp + 1));
  };
  auto words = [](const std::string& s) {
    std::vector<std::string> w;
    std::istringstream ss(s);
    std::string x;
    while (ss >> x) w.push_back(x);
    return w;
  };
  auto bracket_list = [&](const std::string& s) {
    auto t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw RecordError("expected [ ... ]: " + s);
    auto items = split_top(t.substr(1, t.size() - 2), ',');
    for (auto& x : items) x = strip_spaces(x);
    return items;
  };
  next("GordonRecord");
  r.group = next("Group");
  {
    std::getline(is, line);
    auto sp = line.find(' ');
    r.param_kind = line.substr(0, sp);
    if (r.param_kind != "Hyperplane" && r.param_kind != "Parameters") throw RecordError("expected Hyperplane or Parameters");
    r.param_text = sp == std::string::npos ? "" : trim(line.substr(sp + 1));
  }
  r.irreps = words(next("Irreps"));
  int n = r.size();
  r.resize(n);
  for (auto& w : words(next("EulerFamilies"))) {
    auto c = w.find(':');
    if (c == std::string::npos) throw RecordError("Euler family without scalar: " + w);
    r.euler_families.emplace_back(parse_family(w.substr(0, c)), w.substr(c + 1));
  }
  for (auto& w : words(next("Families"))) r.families_run.push_back(parse_family(w));
  auto dims = bracket_list(next("SimpleDims"));
  auto ps = bracket_list(next("SimplePSeries"));
  if (static_cast<int>(dims.size()) != n || static_cast<int>(ps.size()) != n) throw RecordError("list length does not match irreps");
  for (int i = 0; i < n; ++i) {
    if (dims[i] != "*") r.simple_dims[i] = std::stoi(dims[i]);
    if (ps[i] != "*") r.pseries[i] = ps[i];
  }
  next("SimpleGradedGModStruct");
  for (int i = 0; i < n; ++i) {
    std::getline(is, line);
    line = trim(line);
    if (line == "*") continue;
    if (line.size() < 2 || line.front() != '(' || line.back() != ')') throw RecordError("bad row: " + line);
    std::vector<std::string> row;
    for (auto& x : split_top(line.substr(1, line.size() - 2), ',')) row.push_back(trim(x));
    r.gmod[i] = row;
  }
  next("VermaDecomposition");
  for (int i = 0; i < n; ++i) {
    std::getline(is, line);
    line = trim(line);
    if (line == "*") continue;
    if (line.size() < 2 || line.front() != '(' || line.back() != ')') throw RecordError("bad row: " + line);
    std::vector<int> row;
    for (auto& x : words(line.substr(1, line.size() - 2))) row.push_back(std::stoi(x));
    r.decomposition[i] = row;
  }
  for (auto& w : words(next("CMFamilies"))) r.cm_families.push_back(parse_family(w));
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto w = words(line);
    if (w[0] == "End") return r;
    if (w[0] == "Seed") {
      r.seed = std::stoull(w.at(1));
    } else if (w[0] == "Specialization") {
      SpecializationUsed u;
      u.family = parse_family(w.at(1));
      for (std::size_t k = 2; k < w.size(); ++k) {
        auto eq = w[k].find('=');
        std::string key = w[k].substr(0, eq), val = w[k].substr(eq + 1);
        if (key == "p") u.spec.p = static_cast<std::uint32_t>(std::stoul(val));
        else if (key == "root") u.spec.root = std::stoull(val);
        else if (key == "u") u.spec.u = std::stol(val);
      }
      r.specializations.push_back(u);
    } else {
      throw RecordError("unexpected line: " + line);
    }
  }
  throw RecordError("record without End");
}

/// Internal consistency: decomposition rows against Verma dimensions,
/// Poincare series at t = 1 against SimpleDims, graded structures against
/// Poincare series, CM families refining Euler families. Returns the
/// violations found.
inline std::vector<std::string> check_record(const GordonRecord& r, const std::vector<int>& verma_dims,
                                             const std::vector<int>& irrep_dims) {
  std::vector<std::string> bad;
  int n = r.size();
  auto series_at_one = [](const std::string& s) {
    long total = 0;
    for (auto& term : detail::split_top(s, '+')) {
      auto t = detail::strip_spaces(term);
      if (t.empty()) continue;
      auto star = t.find('*');
      if (t[0] == 't') total += 1;
      else total += std::stol(star == std::string::npos ? t : t.substr(0, star));
    }
    return total;
  };
  for (int i = 0; i < n; ++i) {
    std::string who = r.irreps[i];
    if (r.decomposition[i]) {
      long s = 0;
      bool known = true;
      for (int j = 0; j < n; ++j) {
        int m = (*r.decomposition[i])[j];
        if (!m) continue;
        if (!r.simple_dims[j]) known = false;
        else s += static_cast<long>(m) * *r.simple_dims[j];
      }
      if (known && s != verma_dims[i]) bad.push_back("decomposition row of " + who + " does not add up to dim Delta");
    }
    if (r.pseries[i] && r.simple_dims[i] && series_at_one(*r.pseries[i]) != *r.simple_dims[i])
      bad.push_back("Poincare series of " + who + " does not evaluate to its dimension");
    if (r.gmod[i] && r.simple_dims[i]) {
      long s = 0;
      for (int j = 0; j < n; ++j)
        if ((*r.gmod[i])[j] != "0") s += series_at_one((*r.gmod[i])[j]) * irrep_dims[j];
      if (s != *r.simple_dims[i]) bad.push_back("graded G-structure of " + who + " does not match its dimension");
    }
  }
  for (auto& cm : r.cm_families) {
    bool inside = false;
    for (auto& [ef, v] : r.euler_families)
      if (std::includes(ef.begin(), ef.end(), cm.begin(), cm.end())) inside = true;
    if (!inside) bad.push_back("CM family " + detail::family_str(cm) + " is not inside an Euler family");
  }
  return bad;
}

/// Field-by-field differences; families compare as sets, '*' entries and
/// the specialization/seed lines are not compared.
inline std::vector<std::string> compare_records(const GordonRecord& a, const GordonRecord& b) {
  std::vector<std::string> diff;
  if (a.group != b.group) {
    diff.push_back("Group: " + a.group + " vs " + b.group);
    return diff;
  }
  auto param = [](const std::string& t) {
    std::string u = detail::strip_spaces(t);
    u.erase(std::remove(u.begin(), u.end(), '*'), u.end());
    return u;
  };
  if (a.param_kind != b.param_kind || param(a.param_text) != param(b.param_text))
    diff.push_back("parameters: " + a.param_text + " vs " + b.param_text);
  if (a.irreps != b.irreps) {
    diff.push_back("Irreps differ");
    return diff;
  }
  auto fam_set = [](const std::vector<std::vector<int>>& fs) {
    std::set<std::vector<int>> s;
    for (auto f : fs) {
      std::sort(f.begin(), f.end());
      s.insert(f);
    }
    return s;
  };
  std::set<std::pair<std::vector<int>, std::string>> ea, eb;
  for (auto [f, v] : a.euler_families) std::sort(f.begin(), f.end()), ea.emplace(f, detail::strip_spaces(v));
  for (auto [f, v] : b.euler_families) std::sort(f.begin(), f.end()), eb.emplace(f, detail::strip_spaces(v));
  if (!ea.empty() && !eb.empty() && ea != eb) diff.push_back("EulerFamilies differ");
  for (int i = 0; i < a.size(); ++i) {
    const std::string& w = a.irreps[i];
    if (a.simple_dims[i] && b.simple_dims[i] && *a.simple_dims[i] != *b.simple_dims[i])
      diff.push_back("SimpleDims[" + w + "]: " + std::to_string(*a.simple_dims[i]) + " vs " + std::to_string(*b.simple_dims[i]));
    if (a.pseries[i] && b.pseries[i] && detail::strip_spaces(*a.pseries[i]) != detail::strip_spaces(*b.pseries[i]))
      diff.push_back("SimplePSeries[" + w + "]: " + *a.pseries[i] + " vs " + *b.pseries[i]);
    if (a.gmod[i] && b.gmod[i]) {
      bool same = a.gmod[i]->size() == b.gmod[i]->size();
      for (std::size_t j = 0; same && j < a.gmod[i]->size(); ++j)
        same = detail::strip_spaces((*a.gmod[i])[j]) == detail::strip_spaces((*b.gmod[i])[j]);
      if (!same) diff.push_back("SimpleGradedGModStruct[" + w + "] differs");
    }
    if (a.decomposition[i] && b.decomposition[i] && *a.decomposition[i] != *b.decomposition[i])
      diff.push_back("VermaDecomposition[" + w + "] differs");
  }
  // Only blocks whose members both records have decomposed are compared.
  auto known = [](const GordonRecord& r, const std::vector<int>& f) {
    return std::all_of(f.begin(), f.end(), [&](int m) { return r.decomposition[m].has_value(); });
  };
  auto sa = fam_set(a.cm_families), sb = fam_set(b.cm_families);
  bool cm_same = true;
  for (auto& f : sa)
    if (known(b, f) && !sb.count(f)) cm_same = false;
  for (auto& f : sb)
    if (known(a, f) && !sa.count(f)) cm_same = false;
  if (!cm_same) diff.push_back("CMFamilies differ");
  return diff;
}

struct GordonOptions {
  std::vector<int> family;        // 0-based members; empty = every Euler family
  std::vector<std::string> gset;  // generator names or 1-based indices
  std::uint64_t seed = 1;
  int redraws = 5;
  SpecializationPolicy policy;
  HeadOptions head;
};

struct GordonFailure {
  std::vector<int> family;
  std::vector<std::string> attempts;  // one message per specialization tried
};

struct GordonResult {
  GordonRecord record;
  std::vector<GordonFailure> failures;
  /// Per computed family: members, heads and the family-local matrix.
  struct FamilyResult {
    std::vector<int> members;
    Specialization spec;
    FamilyDecomposition<RatNF> dec;
    int attempts = 0;
  };
  std::vector<FamilyResult> families;
  bool ok() const { return failures.empty(); }
};

/// Generator indices of the Verma layout from names such as y1, g2 or
/// 1-based positions.
inline std::vector<int> parse_gset(const RRCALayout& L, const std::vector<std::string>& names) {
  std::vector<int> out;
  auto all = L.names();
  for (auto& n : names) {
    int k = -1;
    for (int i = 0; i < L.size(); ++i)
      if (all[i] == n) k = i;
    if (k < 0) {
      try {
        std::size_t pos = 0;
        int v = std::stoi(n, &pos);
        if (pos == n.size() && v >= 1 && v <= L.size()) k = v - 1;
      } catch (const std::exception&) {
      }
    }
    if (k < 0) throw std::invalid_argument("unknown generator '" + n + "'");
    out.push_back(k);
  }
  return out;
}

/// Seed of the random stream of one family, derived from the run seed and
/// the family's smallest member so that results do not depend on which
/// other families are computed.
inline std::mt19937_64 family_stream(std::uint64_t seed, const std::vector<int>& family) {
  int first = family.empty() ? 0 : *std::min_element(family.begin(), family.end());
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(first)};
  return std::mt19937_64(sq);
}

inline GordonResult gordon(const GroupData& d, const ParameterLine& line, const GordonOptions& opt,
                           const std::string& param_kind = "Hyperplane") {
  GordonResult out;
  GordonRecord& r = out.record;
  r.group = d.id;
  r.param_kind = param_kind;
  r.param_text = line.description;
  r.seed = opt.seed;
  for (auto& ir : d.irreps) r.irreps.push_back(ir.label);
  int n = d.num_irreps();
  r.resize(n);
  const auto& c = line.param.c;
  for (auto& [f, v] : euler_families(d, c)) r.euler_families.emplace_back(f, detail::strip_spaces(to_string(v)));

  std::vector<std::vector<int>> todo;
  if (!opt.family.empty()) {
    todo.push_back(opt.family);
  } else {
    for (auto& [f, v] : r.euler_families) todo.push_back(f);
  }
  VermaTables T(d);
  auto bad = bad_primes(d);
  RRCALayout L{d.G->rank(), d.G->num_generators()};
  HeadOptions hopt = opt.head;
  if (!opt.gset.empty()) hopt.gset = parse_gset(L, opt.gset);
  std::vector<int> irrep_dims;
  for (auto& ir : d.irreps) irrep_dims.push_back(ir.dim);

  for (auto& fam : todo) {
    for (int m : fam)
      if (m < 0 || m >= n) throw std::invalid_argument("family member out of range");
    std::vector<GradedModule<RatNF>> Vs;
    int maxdim = 0;
    for (int m : fam) {
      Vs.push_back(verma_module<RatNF>(d, T, c, m));
      maxdim = std::max(maxdim, Vs.back().dim);
    }
    auto rng = family_stream(opt.seed, fam);
    GordonFailure fail{fam, {}};
    bool done = false;
    for (int a = 0; a < opt.redraws && !done; ++a) {
      Specialization s = draw_specialization(d, c, maxdim, bad, opt.policy, rng);
      auto dec = decompose_family(Vs, s, rng, hopt);
      if (!dec.ok) {
        fail.attempts.push_back(describe(s) + ": " + dec.failure);
        continue;
      }
      done = true;
      r.families_run.push_back(fam);
      r.specializations.push_back({fam, s});
      for (std::size_t a2 = 0; a2 < fam.size(); ++a2) {
        int lam = fam[a2];
        const auto& H = dec.heads[a2].head;
        auto gc = graded_character(d, H);
        r.simple_dims[lam] = H.dim;
        r.pseries[lam] = GradedCharacter::compact(gc.poincare(irrep_dims));
        std::vector<std::string> row;
        for (auto& e : gc.entries) row.push_back(GradedCharacter::poly_str(e));
        r.gmod[lam] = row;
        std::vector<int> drow(n, 0);
        for (std::size_t b = 0; b < fam.size(); ++b) drow[fam[b]] = dec.matrix[a2][b];
        r.decomposition[lam] = drow;
      }
      std::vector<std::vector<int>> local = verma_families(dec.matrix);
      for (auto& blk : local) {
        std::vector<int> g;
        for (int i : blk) g.push_back(fam[i]);
        std::sort(g.begin(), g.end());
        r.cm_families.push_back(g);
      }
      out.families.push_back({fam, s, std::move(dec), a + 1});
    }
    if (!done) out.failures.push_back(std::move(fail));
  }
  std::sort(r.cm_families.begin(), r.cm_families.end());
  return out;
}

}  // namespace cheralg
