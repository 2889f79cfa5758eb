#include "soficlab/words.hpp"

#include "soficlab/errors.hpp"

#include <algorithm>
#include <limits>

namespace soficlab {

Word primitive_root(const Word& w) {
    const size_t n = w.size();
    for (size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return Word(w.begin(), w.begin() + static_cast<long>(d));
    }
    return w;
}

bool is_primitive(const Word& w) { return !w.empty() && primitive_root(w).size() == w.size(); }

Word least_rotation(const Word& w) {
    Word best = w;
    Word rot = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

bool is_lyndon(const Word& w) {
    // Duval: w is Lyndon iff one factorisation step consumes all of it.
    const size_t n = w.size();
    if (n == 0) return false;
    size_t i = 0, j = 1;
    while (j < n && w[i] <= w[j]) {
        i = w[i] < w[j] ? 0 : i + 1;
        ++j;
    }
    return j == n && i == 0;
}

Word power(const Word& w, int k) {
    Word out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

PrimitiveWord PrimitiveWord::from(const Word& w) {
    if (!is_primitive(w)) throw ValidationError("word is empty or a proper power");
    return PrimitiveWord{w, least_rotation(w) == w};
}

std::uint64_t integer_power(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

} // namespace soficlab
