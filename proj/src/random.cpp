#include "shufcompat/random.hpp"

#include <vector>

#include "shufcompat/composition.hpp"

namespace shufcompat {

int SplitRng::between(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

QSymElement random_f_element(SplitRng& rng, int min_size, int max_size, int max_degree) {
    QSymElement e(Basis::F, max_degree);
    int terms = rng.between(1, 2);
    for (int t = 0; t < terms; ++t) {
        int n = rng.between(min_size, max_size);
        auto comps = compositions_of(n);
        const auto& alpha = comps[rng.between(0, static_cast<int>(comps.size()) - 1)];
        int c = rng.between(1, 3) * (rng.between(0, 1) ? 1 : -1);
        e.add_term(alpha, Rational(c));
    }
    return e;
}

}  // namespace shufcompat
