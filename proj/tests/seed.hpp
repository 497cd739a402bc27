#pragma once

#include <cstdint>

// Base seed for the randomized tests; set with --seed=N on the test binary.
std::uint64_t testSeed();
