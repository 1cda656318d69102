// Minimal library walkthrough: build the dilated standard triangle, print its
// vertex-cone series and the lattice-point count, then assemble the Todd
// class of its normal fan and verify the coefficients sum to 1.

#include <iostream>

#include "toric/io.hpp"

using namespace toric;

int main() {
    LatticePolytope triangle = LatticePolytope::from_points(
        2, {{Int(0), Int(0)}, {Int(3), Int(0)}, {Int(0), Int(3)}});

    std::cout << "vertices:";
    for (const Vec& v : triangle.vertices()) std::cout << " " << to_string(v);
    std::cout << "\n";

    RationalGenFun chi = brion_character(triangle);
    std::cout << "lattice-point series: " << pretty_genfun(chi) << "\n";
    std::cout << "lattice points: " << count_lattice_points(triangle).str() << "\n";

    NormalFan nf = normal_fan(triangle);
    ToddClass todd = equivariant_todd(nf.fan);
    for (const auto& [id, coeff] : todd.coeff)
        std::cout << "Todd coefficient on cone " << Fan::id_string(nf.fan.cones()[id].ray_ids)
                  << ": " << pretty_genfun(coeff) << "\n";
    std::cout << "coefficients sum to 1: " << (todd_unit_identity(todd) ? "yes" : "no") << "\n";
    return 0;
}
