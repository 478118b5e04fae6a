#pragma once

#include <cstdint>
#include <random>

#include "shufcompat/qsym.hpp"

namespace shufcompat {

/// Seeded source for the randomized property suites; the stream depends only on the seed.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform-ish draw from [lo, hi].
    int between(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

/// One or two F terms with coefficients in {-3..3} minus {0}, sizes min_size..max_size.
QSymElement random_f_element(SplitRng& rng, int min_size, int max_size, int max_degree);

}  // namespace shufcompat
