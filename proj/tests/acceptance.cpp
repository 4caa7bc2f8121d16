// Acceptance gate: every numbered criterion at its stated tolerance, one
// verdict line each. Exit 0 only when all nine hold.
#include "frac/xlab.hpp"

#include <cstdio>
#include <exception>

int main() {
    int failed = 0;
    for (int k = 1; k <= 9; ++k) {
        try {
            frac::CheckOutcome oc = frac::run_acceptance(k);
            if (oc.pass) {
                std::printf("[PASS] %d %s/%s (%.0f ms)\n", k, oc.module.c_str(),
                            oc.name.c_str(), oc.wall_ms);
            } else {
                std::printf("[FAIL] %d %s/%s: %s\n", k, oc.module.c_str(), oc.name.c_str(),
                            oc.detail.c_str());
                ++failed;
            }
        } catch (const std::exception& e) {
            std::printf("[FAIL] %d: %s\n", k, e.what());
            ++failed;
        }
        std::fflush(stdout);
    }
    if (failed > 0) std::printf("%d of 9 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
