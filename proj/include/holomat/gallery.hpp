#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holomat/holo_function.hpp"

namespace holomat {

// Named example map with a linear-map view and a function view sharing the
// same action. Radius of the function view is 4.
struct GalleryEntry {
    std::string name;
    std::string description;
    LinearMapMatrix map;
    HoloFunction holo;
    std::size_t k = 0;  // size parameter, 0 when fixed
};

// Result of one executable claim about an entry.
struct GalleryAssertion {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    std::string detail;
};

// theta: M_2 -> M_2, theta(x) = x(1,1) * E(1,2). Orthogonally multiplicative
// with every value nilpotent and trace zero.
GalleryEntry gallery_nilpotent_range();

// theta: M_k -> M_{k+2} placing the first row of x along row 1 (columns
// 2 .. k+1) and the first column of x along column k+2 (rows 2 .. k+1), so
// theta(x) theta(y) = (x y)(1,1) * E(1, k+2). Values are nilpotent of order
// 3, not 2: multiplication on the range is nonzero.
GalleryEntry gallery_embed_k2(std::size_t k = 2);

// phi: M_k -> M_{2k+2}, phi(x) = x (+) theta(x) with theta as above. The
// identity-like block makes traces of unit images nonzero while the target
// dimension still rules out a similarity form.
GalleryEntry gallery_direct_sum(std::size_t k = 2);

const std::vector<std::string>& gallery_names();
// Throws Error for unknown names. k applies to the sized entries.
GalleryEntry gallery_by_name(const std::string& name, std::size_t k = 2);

// Executes the entry's claims at the default tolerances. Sampled checks use
// the given seed.
std::vector<GalleryAssertion> run_gallery_assertions(const GalleryEntry& entry,
                                                     std::uint64_t seed = 0);

}  // namespace holomat
