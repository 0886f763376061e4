// Walks one positive braid through the library: closure, roller-coaster
// counts, unknotting number, the induction down to the base case, and the
// Jones polynomial of the closure.

#include <iostream>

#include "rollercoaster/braid.hpp"
#include "rollercoaster/embed.hpp"
#include "rollercoaster/invariants.hpp"
#include "rollercoaster/warp.hpp"

int main(int argc, char** argv) {
  namespace rc = rollercoaster;
  const auto word = rc::parse_braid(argc > 1 ? argv[1] : "1 2 1 2 1 2 1 2");

  const auto closure = rc::closure_gauss(word);
  const auto counts = rc::ab_counts(word);
  std::cout << "word " << word.str() << " on " << word.strands() << " strands\n"
            << "closure gauss " << closure.code.str() << "\n"
            << "closure dt    " << rc::canonical_dt(closure.code).str() << "\n"
            << "(a, b) from the top-left: (" << counts.above << ", " << counts.below << ")\n"
            << "min_warp " << rc::min_warp(closure.code).degree << ", (C - n + 1)/2 = "
            << rc::positive_unknotting(word) << "\n";

  for (const auto& step : rc::reduce(word)) {
    std::cout << "  " << step.word.str() << "  (a, b) = (" << step.counts.above << ", " << step.counts.below << ")\n";
  }

  std::cout << "jones " << rc::jones(rc::pd_from_braid(word)).str() << "\n";
}
