#pragma once
/// Group data files and the loaded bundle (group, irreps, coinvariant
/// algebras on both sides, optional parameter re-parametrizations).
///
/// File grammar (line based, '#' starts a comment):
///   group <id>
///   field <n> [<generator-name>]       cyclotomic field Q(zeta_n)
///   dimension <n>
///   generator <name>                   followed by n rows of n entries
///   diagonal <generator-name>          optional preconditioning
///   irrep <name> <d>                   followed by d rows per generator
///   paramtype <name> <var>...          followed by one line per
///                                      reflection class: c<i> <expr>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cheralg/refgroup/irreps.hpp"

namespace cheralg {

struct ParamType {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> class_exprs;  // c(class i) in terms of vars
};

class GroupData {
 public:
  std::string id;
  std::shared_ptr<const ReflectionGroup> G;
  std::vector<Irrep> irreps;
  int diagonal_generator = -1;
  std::vector<ParamType> param_types;

  /// K[V] = K[x_1..x_n] (Verma side) and K[V*] = K[y_1..y_n].
  const Coinvariants& coinv_x() const { return *cx_; }
  const Coinvariants& coinv_y() const { return *cy_; }

  const NumberField* field() const { return G->field(); }
  int num_irreps() const { return static_cast<int>(irreps.size()); }

  /// Irrep index by 1-based index, name or label (phi_{1,4} may be written
  /// phi_1_4); -1 if none.
  int find_irrep(const std::string& key) const {
    auto plain = [](std::string s) {
      std::string out;
      for (char c : s)
        if (c == ',') out += '_';
        else if (c != '{' && c != '}') out += c;
      return out;
    };
    for (int i = 0; i < num_irreps(); ++i)
      if (irreps[i].label == key || irreps[i].name == key || plain(irreps[i].label) == plain(key)) return i;
    try {
      std::size_t pos = 0;
      int k = std::stoi(key, &pos);
      if (pos == key.size() && k >= 1 && k <= num_irreps()) return k - 1;
    } catch (const std::exception&) {
    }
    return -1;
  }

  const ParamType* find_param_type(const std::string& name) const {
    for (auto& p : param_types)
      if (p.name == name) return &p;
    return nullptr;
  }

  NF parse_nf(const std::string& text) const {
    const NumberField* K = G ? G->field() : K_;
    return parse_scalar<NF>(
        text,
        [K](const std::string& n) -> std::optional<NF> {
          if (K && !K->is_rational() && n == K->generator_name()) return NF::generator(K);
          return std::nullopt;
        },
        [](const Rational& q) { return NF(q); });
  }

  static GroupData parse(std::istream& in, const std::string& origin = "<stream>") {
    GroupData d;
    std::vector<std::string> gen_names;
    std::vector<Matrix<NF>> gens;
    struct PendingIrrep {
      std::string name;
      int dim;
      std::vector<Matrix<NF>> mats;
    };
    std::vector<PendingIrrep> pending;
    int n = 0;
    std::string diag_name;
    std::vector<std::vector<std::string>> lines;
    std::string raw;
    while (std::getline(in, raw)) {
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      std::istringstream ls(raw);
      std::vector<std::string> tok;
      std::string w;
      while (ls >> w) tok.push_back(w);
      if (!tok.empty()) lines.push_back(std::move(tok));
    }
    auto fail = [&](const std::string& why) { throw GroupError(origin + ": " + why); };
    std::size_t i = 0;
    auto read_matrix = [&](int rows, int cols) {
      Matrix<NF> m(rows, cols);
      for (int r = 0; r < rows; ++r) {
        if (i >= lines.size() || static_cast<int>(lines[i].size()) != cols) fail("bad matrix row");
        for (int c = 0; c < cols; ++c) m(r, c) = d.parse_nf(lines[i][c]);
        ++i;
      }
      return m;
    };
    while (i < lines.size()) {
      auto& t = lines[i];
      const std::string& kw = t[0];
      if (kw == "group" && t.size() == 2) {
        d.id = t[1];
        ++i;
      } else if (kw == "field" && t.size() >= 2) {
        int order = std::stoi(t[1]);
        d.K_ = NumberField::cyclotomic(order, t.size() > 2 ? t[2] : "");
        ++i;
      } else if (kw == "dimension" && t.size() == 2) {
        n = std::stoi(t[1]);
        ++i;
      } else if (kw == "generator" && t.size() == 2) {
        if (!d.K_ || n <= 0) fail("field and dimension must precede generators");
        gen_names.push_back(t[1]);
        ++i;
        gens.push_back(read_matrix(n, n));
      } else if (kw == "diagonal" && t.size() == 2) {
        diag_name = t[1];
        ++i;
      } else if (kw == "irrep" && t.size() == 3) {
        PendingIrrep p{t[1], std::stoi(t[2]), {}};
        ++i;
        for (std::size_t k = 0; k < gens.size(); ++k) p.mats.push_back(read_matrix(p.dim, p.dim));
        pending.push_back(std::move(p));
      } else if (kw == "paramtype" && t.size() >= 2) {
        ParamType pt;
        pt.name = t[1];
        pt.vars.assign(t.begin() + 2, t.end());
        ++i;
        while (i < lines.size() && lines[i].size() == 2 && lines[i][0].size() > 1 && lines[i][0][0] == 'c' &&
               std::isdigit(static_cast<unsigned char>(lines[i][0][1]))) {
          pt.class_exprs.push_back(lines[i][1]);
          ++i;
        }
        d.param_types.push_back(std::move(pt));
      } else {
        fail("unrecognized line starting with '" + kw + "'");
      }
    }
    if (gens.empty()) fail("no generators");
    d.G = std::make_shared<ReflectionGroup>(d.id, d.K_, gens, gen_names);
    for (std::size_t k = 0; k < gen_names.size(); ++k)
      if (gen_names[k] == diag_name) d.diagonal_generator = static_cast<int>(k);
    if (!diag_name.empty() && d.diagonal_generator < 0) fail("unknown diagonal generator " + diag_name);
    for (auto& p : pending) {
      auto mats = p.mats;
      if (d.diagonal_generator >= 0) mats = diagonalize_generator(*d.G, mats, d.diagonal_generator);
      d.irreps.push_back(make_irrep(*d.G, p.name, mats));
    }
    // Completeness: sum of squared dimensions.
    long sq = 0;
    for (auto& ir : d.irreps) sq += static_cast<long>(ir.dim) * ir.dim;
    if (sq != d.G->order()) fail("irreps do not form a complete set");
    for (std::size_t a = 0; a < d.irreps.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (character_inner(*d.G, d.irreps[a].chi, d.irreps[b].chi) != NF(0L)) fail("duplicate irreps");
    std::vector<std::string> xs, ys;
    for (int k = 1; k <= n; ++k) {
      xs.push_back("x" + std::to_string(k));
      ys.push_back("y" + std::to_string(k));
    }
    d.cx_ = std::make_shared<Coinvariants>(*d.G, false, xs);
    d.cy_ = std::make_shared<Coinvariants>(*d.G, true, ys);
    label_irreps(*d.G, *d.cy_, d.irreps);
    for (auto& ir : d.irreps)
      if (ir.name.rfind("phi_", 0) == 0 && ir.name != ir.label)
        fail("irrep " + ir.name + " has computed label " + ir.label);
    for (auto& pt : d.param_types)
      if (static_cast<int>(pt.class_exprs.size()) != d.G->num_reflection_classes())
        fail("parameter type " + pt.name + " needs one line per reflection class");
    return d;
  }

  static GroupData load_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw GroupError("cannot open group file " + p.string());
    return parse(in, p.string());
  }

 private:
  const NumberField* K_ = nullptr;
  std::shared_ptr<Coinvariants> cx_, cy_;
};

/// Directory holding <id>.grp files: $CHERALG_GROUPS, else the shipped data.
inline std::filesystem::path group_database_dir() {
  if (const char* env = std::getenv("CHERALG_GROUPS")) return env;
#ifdef CHERALG_DATA_DIR
  return std::filesystem::path(CHERALG_DATA_DIR) / "groups";
#else
  return "data/groups";
#endif
}

inline GroupData load_group(const std::string& id) {
  auto p = group_database_dir() / (id + ".grp");
  if (!std::filesystem::exists(p)) throw GroupError("unknown group id '" + id + "' (looked in " + p.parent_path().string() + ")");
  return GroupData::load_file(p);
}

}  // namespace cheralg
