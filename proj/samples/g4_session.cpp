// G4 on the hyperplane k1_1 = k1_2: Euler families, one Verma module and
// the heads of the family {phi_{1,4}, phi_{1,8}, phi_{2,5}}.

#include <iostream>

#include "cheralg/lift.hpp"

using namespace cheralg;

int main() {
  GroupData d = load_group("G4");
  ParameterLine line = restrict_to_hyperplane(d, "k1_1-k1_2");

  for (auto& [f, v] : euler_families(d, line.param.c)) {
    std::cout << "Euler family";
    for (int m : f) std::cout << " " << d.irreps[m].label;
    std::cout << " : " << to_string(v) << "\n";
  }

  auto V = verma_module<RatNF>(d, line.param.c, d.find_irrep("phi_{1,4}"));
  std::cout << "dim Delta(phi_{1,4}) = " << V.dim << "\n";

  GordonOptions opt;
  opt.family = {1, 2, 3};
  opt.gset = {"y1", "y2", "g2"};
  auto res = gordon(d, line, opt);
  if (!res.ok()) {
    std::cerr << "no specialization succeeded\n";
    return 1;
  }
  write_record(std::cout, res.record);
}
