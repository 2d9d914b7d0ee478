// Prints the commutator defect [T(e_i), T(e_j)] - (i-j) T(e_{i+j}) on the
// Verma module for formal h, with its operator class.
//   witt_deviation [i j]

#include <cstdlib>
#include <iostream>

#include "liecomp/shiftop/classify.hpp"
#include "liecomp/shiftop/serialize.hpp"
#include "liecomp/verma/bracket_table.hpp"

int main(int argc, char** argv) {
  using namespace liecomp;
  int i = argc > 2 ? std::atoi(argv[1]) : 2;
  int j = argc > 2 ? std::atoi(argv[2]) : -2;
  const auto h = verma::HighestWeight::symbolic();
  const auto dev = verma::deviation(verma::Generator::e(i), verma::Generator::e(j), h);
  std::cout << "[e_" << i << ", e_" << j << "] defect: " << shiftop::to_string(dev) << "\n";
  std::cout << "class: " << shiftop::to_string(shiftop::classify(dev)) << "\n";
}
