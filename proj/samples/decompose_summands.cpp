// Split the adjoint module under the torus-normalizer subgroup and print the
// summands with their irreducibility certificates.
//
//   decompose_summands [family] [rank] [prime]     defaults: B 3 73

#include <cstdlib>
#include <iostream>

#include "monodromy/chevalley.hpp"
#include "monodromy/modrep.hpp"

using namespace monodromy;

int main(int argc, char** argv) {
  char fam = argc > 1 ? argv[1][0] : 'B';
  int rank = argc > 2 ? std::atoi(argv[2]) : 3;
  std::uint64_t prime = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 73;
  try {
    Chevalley ch(RootSystem::build(family_from_letter(fam), rank));
    Fp proto = Fp::make(0, prime);
    auto action = adjoint_normalizer_action(ch, proto);
    auto res = decompose(action, 20240815);

    std::cout << ch.rs.name() << " adjoint module over F_" << prime << ", dimension "
              << ch.dim() << "\n";
    for (std::size_t i = 0; i < res.summands.size(); ++i) {
      const auto& cert = res.certificates[i];
      std::cout << "  summand " << i << ": dim " << res.summands[i].dim() << ", "
                << (cert.irreducible ? "irreducible" : "reducible") << " ("
                << (cert.method == IrredCert::Method::weight_transitive ? "weight orbit"
                                                                        : "random spin")
                << ": " << cert.detail << ")\n";
    }
    std::cout << (res.all_irreducible ? "all summands irreducible\n"
                                      : "reducible summands remain\n");
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
