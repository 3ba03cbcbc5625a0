// Prints the Riemann matrix, torus decomposition and modular curve of a few
// root systems, then checks the D4 -> F4 isomorphism witness.

#include <iostream>

#include "weylpav/reference.hpp"
#include "weylpav/weylpav.hpp"

int main() {
    using namespace weylpav;
    for (const char* tag : {"A2", "G2", "F4", "E7"}) {
        const auto id = RootSystemId::parse(tag);
        const auto family = riemann_family(id);
        const auto curve = modular_curve_report(id);
        std::cout << id.tag() << "\n  z0 = " << family.z0 << "\n  torus = " << elliptic_decomposition(id).render()
                  << "\n  curve = " << curve.display_curve() << '\n';
    }
    const bool iso = verify_family_isomorphism(reference::d4_to_f4_witness(),
                                               riemann_family(RootSystemId::make(Family::D, 4)).z0,
                                               riemann_family(RootSystemId::exceptional(Family::F4)).z0);
    std::cout << "D4 ~ F4 witness: " << (iso ? "holds" : "fails") << '\n';
    return iso ? 0 : 1;
}
