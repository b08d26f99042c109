// Print the exponent table obtained from the principal nilpotent centralizer
// of every built-in system up to rank eight, together with the dimension
// bookkeeping sum(2m + 1) = dim g.

#include <iostream>
#include <vector>

#include "monodromy/chevalley.hpp"
#include "monodromy/principal.hpp"

using namespace monodromy;

int main() {
  std::vector<std::pair<Family, int>> systems;
  for (int n = 1; n <= 8; ++n) systems.emplace_back(Family::A, n);
  for (int n = 2; n <= 8; ++n) systems.emplace_back(Family::B, n);
  for (int n = 2; n <= 8; ++n) systems.emplace_back(Family::C, n);
  for (int n = 4; n <= 8; ++n) systems.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) systems.emplace_back(Family::E, n);
  systems.emplace_back(Family::F, 4);
  systems.emplace_back(Family::G, 2);

  for (auto [f, n] : systems) {
    Chevalley ch(RootSystem::build(f, n));
    auto kd = kostant_decomposition(ch, principal_triple(ch));
    int sum = 0;
    std::cout << ch.rs.name() << ": exponents";
    for (int m : kd.exponents) {
      std::cout << " " << m;
      sum += 2 * m + 1;
    }
    std::cout << ", sum(2m+1) = " << sum << (sum == ch.dim() ? " = dim" : " MISMATCH")
              << "\n";
  }
  return 0;
}
