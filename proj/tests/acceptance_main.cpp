#include "acceptance.hpp"

#include <cstdio>

int main() {
    bool all = true;
    for (const auto& c : soficlab::acceptance::run_all(SOFICLAB_CORPUS_DIR)) {
        std::printf("%s criterion %d: %s (%s) [%.3fs]\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str(), c.seconds);
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
