#pragma once

#include "soficlab/graph.hpp"

#include <cstdint>

namespace soficlab {

bool is_primitive(const Word& w);
Word least_rotation(const Word& w);
// Primitive and strictly smaller than each of its other rotations.
bool is_lyndon(const Word& w);
// Shortest r with w = r^k.
Word primitive_root(const Word& w);
Word power(const Word& w, int k);
Word concat(const Word& a, const Word& b);

// A primitive word standing for the periodic point w^infinity.
struct PrimitiveWord {
    Word word;
    bool canonical = false;

    // Throws ValidationError unless w is non-empty and primitive.
    static PrimitiveWord from(const Word& w);
    int length() const { return static_cast<int>(word.size()); }
};

std::uint64_t integer_power(std::uint64_t base, int exp); // saturates at UINT64_MAX

} // namespace soficlab
