// Abstract structure of a column echelon matrix and its recovery by
// ModFinder in a small graded module over Q.

#include <iostream>

#include "cheralg/lift.hpp"

using namespace cheralg;

int main() {
  Matrix<Rational> R(4, 2);
  R(0, 0) = 1, R(2, 0) = 2, R(3, 0) = 1;
  R(1, 1) = 1, R(2, 1) = 1, R(3, 1) = 4;
  AbstractStructure A = abstract_structure(R);
  std::cout << "complexity " << A.complexity << "\n" << A.str() << "\n";

  // Q^2 in degree 0: b maps e1 to 3 e1 + 6 e2 and e2 to 2 e2. The only
  // invariant line of the shape e1 + theta e2 has theta = 6.
  GradedModule<Rational> M;
  M.dim = 2;
  M.degrees = {0, 0};
  M.gen_degrees = {0};
  M.gen_names = {"b"};
  Matrix<Rational> b(2, 2);
  b(0, 0) = 3, b(1, 0) = 6, b(1, 1) = 2;
  M.actions = {SparseMatrix<Rational>::from_dense(b)};
  Matrix<Rational> guess(2, 1);
  guess(0, 0) = 1, guess(1, 0) = 5;
  auto r = modfinder(M, abstract_structure(guess));
  std::cout << to_string(r.status);
  if (r.status == ModFinderStatus::Found) std::cout << ", theta = " << r.theta[0];
  std::cout << "\n";
}
