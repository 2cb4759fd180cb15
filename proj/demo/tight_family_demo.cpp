// Runs every 3-path cover algorithm on the tight family and a few random
// graphs, printing sizes next to the optimum and the closed-form bounds.

#include <cstdio>

#include "kpvc/kpvc.hpp"

using namespace kpvc;

namespace {

void report(const char* name, const Graph& g) {
  const auto rbound = bound_sparse3(g);
  std::printf("%-22s n=%-3zu m=%-3zu (2n+m)/6=%lld/%lld", name, g.order(), g.size(), rbound.numerator(),
              rbound.denominator());
  try {
    std::printf("  psi3=%zu", psi_exact(g, 3).psi);
  } catch (const OracleTooLarge&) {
    std::printf("  psi3=?");
  }
  std::printf("  greedy=%zu sparse3=%zu partition=%zu", greedy_k_approx(g, 3).size(), sparse3(g).size(),
              cover3_via_partition(g).size());
  if (g.max_degree() <= 3) std::printf(" subcubic=%zu", subcubic_cover3(g).size());
  std::size_t best = g.order();
  for (std::uint64_t s = 0; s < 32; ++s) best = std::min(best, caro_wei_cover(g, 3, RandomSeed{s}).size());
  std::printf(" carowei(best of 32)=%zu\n", best);
}

}  // namespace

int main() {
  report("C4", make_cycle(4));
  report("H6", make_h6());
  report("tight_sparse3(2,1)", make_tight_sparse3(2, 1));
  report("tight_sparse3(3,2)", make_tight_sparse3(3, 2));
  report("gnp(18, 0.25)", make_random_gnp(18, 0.25, RandomSeed{1}));
  report("bounded_degree(30, 3)", make_random_bounded_degree(30, 3, 0.5, RandomSeed{2}));
  const auto mop = make_random_mop(20, RandomSeed{3});
  std::printf("random_mop(20): outerplanar=%zu (n/2=10)\n", outerplanar_cover3(mop).size());
  const Graph tree = make_random_tree(20, RandomSeed{4});
  std::printf("random_tree(20): tree dp k=3 -> %zu, k=4 -> %zu\n", pvcp_tree(tree, 3).size(),
              pvcp_tree(tree, 4).size());
  return 0;
}
