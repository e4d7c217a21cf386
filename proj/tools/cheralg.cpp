// Command-line front end: group data, Euler families, Verma modules, the
// Gordon driver and record comparison.
// Exit codes: 0 success, 1 computation failure or mismatch, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cheralg/lift.hpp"

using namespace cheralg;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamArgs {
  std::string hyperplane, params;
  void add(CLI::App* app) {
    auto* h = app->add_option("--hyperplane", hyperplane, "linear form in the GGOR variables, e.g. k1_1-k1_2");
    auto* p = app->add_option("--params", params, "explicit values name=value,... (k{o}_{j}, c{i}, t)");
    h->excludes(p);
  }
  bool given() const { return !hyperplane.empty() || !params.empty(); }
  ParameterLine line(const GroupData& d) const {
    try {
      if (!hyperplane.empty()) return restrict_to_hyperplane(d, hyperplane);
      if (!params.empty()) return explicit_parameters(d, params);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("malformed parameters: ") + e.what());
    }
    throw UsageError("one of --hyperplane or --params is required");
  }
};

GroupData group_or_usage(const std::string& id) {
  try {
    return load_group(id);
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string family_text(const std::vector<int>& f) {
  std::vector<int> one;
  for (int m : f) one.push_back(m + 1);
  return "{" + join(one, ",") + "}";
}

std::vector<int> parse_family_arg(const GroupData& d, const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int k = d.find_irrep(item);
    if (k < 0) throw UsageError("unknown irrep '" + item + "'");
    out.push_back(k);
  }
  if (out.empty()) throw UsageError("empty family");
  return out;
}

int cmd_group_info(const std::string& id) {
  GroupData d = group_or_usage(id);
  const auto& G = *d.G;
  std::cout << "group " << d.id << "\n";
  std::cout << "field " << d.field()->describe() << "\n";
  std::cout << "rank " << G.rank() << "\n";
  std::cout << "order " << G.order() << "\n";
  std::cout << "generators " << join(G.generator_names(), " ") << "\n";
  std::cout << "reflections " << G.reflections().size() << " in " << G.num_reflection_classes() << " classes, "
            << G.orbits().size() << " hyperplane orbits\n";
  std::cout << "invariant degrees " << join(d.coinv_x().degrees(), " ") << "\n";
  std::cout << "GGOR variables " << join(ggor_variables(G), " ") << "\n";
  for (int i = 0; i < d.num_irreps(); ++i) {
    const auto& ir = d.irreps[i];
    std::cout << "irrep " << i + 1 << " " << ir.label << " (" << ir.name << ") dim " << ir.dim << "\n";
  }
  for (auto& pt : d.param_types) std::cout << "paramtype " << pt.name << " " << join(pt.vars, " ") << "\n";
  return 0;
}

int cmd_euler_families(const std::string& id, const ParamArgs& pa) {
  GroupData d = group_or_usage(id);
  auto line = pa.line(d);
  for (auto& [f, v] : euler_families(d, line.param.c)) std::cout << family_text(f) << " " << to_string(v) << "\n";
  return 0;
}

int cmd_verma(const std::string& id, const std::string& irrep, const ParamArgs& pa, const std::string& out) {
  GroupData d = group_or_usage(id);
  int lam = d.find_irrep(irrep);
  if (lam < 0) throw UsageError("unknown irrep '" + irrep + "'");
  auto line = pa.line(d);
  auto V = verma_module<RatNF>(d, line.param.c, lam);
  std::cout << "dimension " << V.dim << ", generator degrees [" << join(V.gen_degrees, ",") << "]\n";
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw UsageError("cannot write " + out);
    write_module(os, V, d.field()->describe() + "(" + (line.free_variable.empty() ? "T" : line.free_variable) + ")");
  }
  return 0;
}

struct GordonArgs {
  std::string id, family, gset, exclude, out, prime_range;
  std::uint64_t seed = 1;
  int redraws = 5;
  ParamArgs pa;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) v.push_back(item);
  return v;
}

int cmd_gordon(const GordonArgs& a) {
  GroupData d = group_or_usage(a.id);
  auto line = a.pa.line(d);
  GordonOptions opt;
  opt.seed = a.seed;
  opt.redraws = a.redraws;
  if (!a.family.empty()) opt.family = parse_family_arg(d, a.family);
  opt.gset = split_list(a.gset);
  try {
    for (auto& p : split_list(a.exclude)) opt.policy.exclude.insert(std::stol(p));
    if (!a.prime_range.empty()) {
      auto r = split_list(a.prime_range);
      if (r.size() != 2) throw UsageError("--prime-range expects lo,hi");
      opt.policy.prime_lo = static_cast<std::uint32_t>(std::stoul(r[0]));
      opt.policy.prime_hi = static_cast<std::uint32_t>(std::stoul(r[1]));
    }
    if (!opt.gset.empty()) parse_gset(RRCALayout{d.G->rank(), d.G->num_generators()}, opt.gset);
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("malformed option: ") + e.what());
  }
  auto res = gordon(d, line, opt, a.pa.hyperplane.empty() ? "Parameters" : "Hyperplane");
  if (a.out.empty() || a.out == "-") {
    write_record(std::cout, res.record);
  } else {
    std::ofstream os(a.out);
    if (!os) throw UsageError("cannot write " + a.out);
    write_record(os, res.record);
  }
  std::ostream& log = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
  for (auto& f : res.families) {
    std::vector<int> dims;
    for (auto& h : f.dec.heads) dims.push_back(h.head.dim);
    log << "family " << family_text(f.members) << ": dims [" << join(dims, ",") << "] D = [";
    for (std::size_t i = 0; i < f.dec.matrix.size(); ++i) log << (i ? "," : "") << "[" << join(f.dec.matrix[i], ",") << "]";
    log << "] " << describe(f.spec) << " attempts " << f.attempts << "\n";
  }
  for (auto& f : res.failures) {
    std::cerr << "failed family " << family_text(f.family) << "\n";
    for (auto& m : f.attempts) std::cerr << "  " << m << "\n";
  }
  return res.ok() ? 0 : kFailure;
}

GordonRecord load_record(const std::string& name) {
  std::filesystem::path p = name;
  if (!std::filesystem::exists(p)) {
    auto db = std::filesystem::path(CHERALG_DATA_DIR) / "expected" / (name + ".rec");
    if (!std::filesystem::exists(db)) throw UsageError("no record file or expected entry '" + name + "'");
    p = db;
  }
  std::ifstream in(p);
  try {
    return read_record(in);
  } catch (const RecordError& e) {
    throw UsageError(p.string() + ": " + e.what());
  }
}

int cmd_compare(const std::string& a, const std::string& b) {
  auto ra = load_record(a), rb = load_record(b);
  if (ra.group != rb.group) throw UsageError("records are for different groups");
  auto diff = compare_records(ra, rb);
  for (auto& line : diff) std::cout << line << "\n";
  if (diff.empty()) std::cout << "records agree\n";
  return diff.empty() ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted rational Cherednik algebras: Verma modules, heads and decomposition matrices"};
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "group database");
  group->require_subcommand(1);
  std::string info_id;
  auto* info = group->add_subcommand("info", "print a group's data");
  info->add_option("id", info_id, "group id, e.g. G4")->required();

  std::string ef_id;
  ParamArgs ef_pa;
  auto* ef = app.add_subcommand("euler-families", "Euler families at a parameter");
  ef->add_option("id", ef_id)->required();
  ef_pa.add(ef);

  std::string vm_id, vm_irrep, vm_out;
  ParamArgs vm_pa;
  auto* vm = app.add_subcommand("verma", "construct a Verma module");
  vm->add_option("id", vm_id)->required();
  vm->add_option("irrep", vm_irrep, "irrep label, name or 1-based index")->required();
  vm->add_option("--out", vm_out, "write the module to this file");
  vm_pa.add(vm);

  GordonArgs ga;
  auto* gd = app.add_subcommand("gordon", "heads and decomposition matrices along a parameter line");
  gd->add_option("id", ga.id)->required();
  ga.pa.add(gd);
  gd->add_option("--family", ga.family, "comma separated irreps (1-based indices or labels); default all families");
  gd->add_option("--gset", ga.gset, "initial generator set, e.g. y1,y2,g2");
  gd->add_option("--p-exclude", ga.exclude, "comma separated primes to avoid");
  gd->add_option("--prime-range", ga.prime_range, "lo,hi for the specialization primes");
  gd->add_option("--seed", ga.seed, "random seed")->capture_default_str();
  gd->add_option("--redraws", ga.redraws, "specialization draws per family")->capture_default_str()->check(CLI::PositiveNumber);
  gd->add_option("--out", ga.out, "record file (default stdout)");

  std::string ca, cb;
  auto* cmp = app.add_subcommand("compare", "compare two records (families as sets, '*' entries skipped)");
  cmp->add_option("a", ca, "record file")->required();
  cmp->add_option("b", cb, "record file or expected entry name, e.g. G4_k1_1-k1_2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (info->parsed()) return cmd_group_info(info_id);
    if (ef->parsed()) return cmd_euler_families(ef_id, ef_pa);
    if (vm->parsed()) return cmd_verma(vm_id, vm_irrep, vm_pa, vm_out);
    if (gd->parsed()) return cmd_gordon(ga);
    if (cmp->parsed()) return cmd_compare(ca, cb);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
