// Generic stabilizer of the 8-dim spin representation of so(7) over F_p.
#include <noether/orbit.hpp>

#include <cstdlib>
#include <iostream>

using namespace noether;

int main(int argc, char** argv) {
    const std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000003;
    const PrimeField f(p);
    const QuadraticSpace space(7);
    const auto spin = spin_rep(space, f);
    const auto vec = vector_rep(space, f);

    RandomSource rng(7);
    const auto v = random_point(f, spin.dimension, rng);
    const auto stab = stabilizer(spin, v);
    const auto s = subalgebra_structure(stab.kernel, vec.matrices);
    const auto on_vectors = element_matrices(vec.matrices, stab.kernel);
    const auto fp = isotypic_fingerprint(f, 7, on_vectors);

    std::cout << "field            " << f.spec().to_string() << '\n'
              << "stabilizer dim   " << stab.dimension << '\n'
              << "orbit dim        " << stab.orbit_dimension << '\n'
              << "Killing rank     " << s.killing_rank << '\n'
              << "derived dim      " << s.derived_dimension << '\n'
              << "on vectors       closure " << fp.closure << ", commutant " << fp.commutant << '\n';
}
