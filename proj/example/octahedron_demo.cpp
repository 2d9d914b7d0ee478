// Builds the octahedron composite, represents it through so(3) ⊕ so(3) with
// the given spins, and recovers the so(4) structure from the representation.
//   octahedron_demo [two_j1 two_j2]

#include <cstdlib>
#include <iostream>

#include "liecomp/octa/so4.hpp"

int main(int argc, char** argv) {
  using namespace liecomp;
  unsigned j1 = argc > 2 ? static_cast<unsigned>(std::atoi(argv[1])) : 1;
  unsigned j2 = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 1;

  const auto oct = octa::build_octahedron();
  std::cout << findim::check_axioms(oct).to_text();

  const auto rep = octa::so4_composite_rep(j1, j2);
  std::cout << "representation on " << rep.space_dim() << " dimensions\n";
  std::cout << "T(A) =\n";
  for (std::size_t r = 0; r < rep.space_dim(); ++r) {
    for (std::size_t c = 0; c < rep.space_dim(); ++c) std::cout << "  " << rep.matrix(octa::A)(r, c).to_string();
    std::cout << "\n";
  }

  auto extraction = octa::extract_so4(rep, false);
  std::cout << extraction.verdict.to_text();
  return extraction.pass() ? 0 : 1;
}
