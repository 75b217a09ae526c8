// Short tour of the symbolic layer: build operators, commute them, and watch
// the normal-ordering engine reproduce the deformed brackets exactly.

#include "ncgqw/reps.hpp"
#include "ncgqw/spectrum.hpp"

#include <iostream>

int main() {
    using namespace ncgqw;

    const auto& h = heisenberg_context();
    OpExpr x = OpExpr::generator(h, 0);
    OpExpr px = OpExpr::generator(h, 2);

    std::cout << "[x_s, p_xs]       = " << commutator(x, px).to_string() << "\n";
    std::cout << "p_xs * x_s        = " << (px * x).to_string() << "\n";

    const RepMap& rep = rep_posdep_in_canonical_composed();
    std::cout << "\nposition-dependent x realized over canonical operators:\n  "
              << rep.image(0).to_string() << "\n";

    OpExpr lhs = commutator(rep.image(0), rep.image(1));
    std::cout << "\n[x, y] through the realization:\n  " << lhs.to_string() << "\n";

    OpExpr reduced = reduce_hamiltonian(rep, NeglectPolicy::leading_order());
    std::cout << "\nfirst-order reduced Hamiltonian:\n  " << reduced.to_string() << "\n";
    return 0;
}
