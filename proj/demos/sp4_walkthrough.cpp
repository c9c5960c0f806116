// Walks through the blocks of Sp_4(3): labels on both sides, the orbit
// structure, and the matching.

#include <iostream>

#include "awcsp/awcsp.hpp"

int main() {
    using namespace awcsp;
    for (const auto& b : enum_blocks(2, 3)) {
        std::cout << "block " << b.to_string() << "\n  centraliser " << centralizer_shape(b).to_string() << "\n";
        const auto pairing = build_bijection(b);
        for (std::size_t i = 0; i < pairing.brauer.size(); ++i)
            std::cout << "  " << pairing.brauer[i].to_string() << "  ->  " << pairing.apply(i).to_string() << "\n";
        const auto report = verify_equivariance(pairing);
        std::cout << "  " << report.checked << " checks, " << report.failures.size() << " failures\n";
    }
}
