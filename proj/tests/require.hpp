#ifndef FRAC_TESTS_REQUIRE_HPP
#define FRAC_TESTS_REQUIRE_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                        \
    do {                                                                          \
        if (!(cond)) {                                                            \
            std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__, __LINE__,         \
                         std::string(msg).c_str());                               \
            std::exit(1);                                                         \
        }                                                                         \
    } while (0)

#define REQUIRE_NEAR(got, want, tol, msg)                                         \
    do {                                                                          \
        double rq_g = (got), rq_w = (want);                                       \
        if (!(std::abs(rq_g - rq_w) <= (tol))) {                                  \
            std::fprintf(stderr, "[FAIL] %s:%d %s (got %.17g want %.17g)\n",      \
                         __FILE__, __LINE__, std::string(msg).c_str(), rq_g,      \
                         rq_w);                                                   \
            std::exit(1);                                                         \
        }                                                                         \
    } while (0)

// The error type matters as much as the throw: callers branch exit codes on it.
#define REQUIRE_THROWS_AS(expr, extype, msg)                                      \
    do {                                                                          \
        bool rq_threw = false;                                                    \
        try {                                                                     \
            (void)(expr);                                                         \
        } catch (const extype&) {                                                 \
            rq_threw = true;                                                      \
        }                                                                         \
        if (!rq_threw) {                                                          \
            std::fprintf(stderr, "[FAIL] %s:%d %s (no %s)\n", __FILE__, __LINE__, \
                         std::string(msg).c_str(), #extype);                      \
            std::exit(1);                                                         \
        }                                                                         \
    } while (0)

inline void pass(const char* name) { std::printf("[PASS] %s\n", name); }

#endif
