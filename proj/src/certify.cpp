#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "shufcompat/shuffle.hpp"

namespace shufcompat {

void set_worker_limit(int jobs) {
    if (jobs >= 1) omp_set_num_threads(jobs);
}

std::vector<PairInstance> canonical_pairs(Notion notion, int total) {
    std::vector<PairInstance> out;
    if (total < 1) return out;
    if (notion == Notion::head_graft) {
        if (total < 2) return out;
        for (int a = 1; a <= total; ++a) {
            std::vector<int> rest;
            for (int x = 1; x <= total; ++x)
                if (x != a) rest.push_back(x);
            do {
                out.push_back({Permutation(rest), Permutation{a}});
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        return out;
    }
    const int lo = notion == Notion::shuffle ? 0 : 1;
    const int hi = notion == Notion::shuffle ? total : total - 1;
    for (int m = lo; m <= hi; ++m) {
        if (notion == Notion::weak_left || notion == Notion::weak_right) {
            std::vector<int> big(static_cast<std::size_t>(m)), small(static_cast<std::size_t>(total - m));
            std::iota(big.begin(), big.end(), total - m + 1);
            do {
                std::iota(small.begin(), small.end(), 1);
                do {
                    out.push_back({Permutation(big), Permutation(small)});
                } while (std::next_permutation(small.begin(), small.end()));
            } while (std::next_permutation(big.begin(), big.end()));
            continue;
        }
        std::vector<int> w(static_cast<std::size_t>(total));
        std::iota(w.begin(), w.end(), 1);
        do {
            PairInstance pair{Permutation(std::vector<int>(w.begin(), w.begin() + m)),
                              Permutation(std::vector<int>(w.begin() + m, w.end()))};
            if (admissible(notion, pair)) out.push_back(std::move(pair));
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
}

namespace {

struct Evaluated {
    NotionKey key;
    std::vector<StatMultiset> value;
};

std::vector<Evaluated> evaluate(Notion notion, StatTag tag, const std::vector<PairInstance>& pairs,
                                Execution exec) {
    std::vector<Evaluated> out(pairs.size());
    const long long count = static_cast<long long>(pairs.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < count; ++i) {
            const auto& p = pairs[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = {notion_key(notion, tag, p), notion_value(notion, tag, p)};
        }
    } else {
        for (long long i = 0; i < count; ++i) {
            const auto& p = pairs[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = {notion_key(notion, tag, p), notion_value(notion, tag, p)};
        }
    }
    return out;
}

}  // namespace

CompatReport certify(Notion notion, StatTag tag, int size_bound, Execution exec) {
    if (size_bound < 1) throw std::invalid_argument("certify: size bound must be at least 1");
    CompatReport report;
    report.notion = notion;
    report.stat = tag;
    report.size_bound = size_bound;
    report.scope = "canonical pairs with letters {1,...,m+n}, m+n <= " + std::to_string(size_bound);

    std::vector<PairInstance> pairs;
    for (int s = 1; s <= size_bound; ++s) {
        auto chunk = canonical_pairs(notion, s);
        pairs.insert(pairs.end(), std::make_move_iterator(chunk.begin()),
                     std::make_move_iterator(chunk.end()));
    }
    const std::vector<Evaluated> values = evaluate(notion, tag, pairs, exec);

    struct ClassState {
        std::size_t representative;
        bool violated = false;
    };
    std::map<NotionKey, ClassState> classes;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [it, inserted] = classes.try_emplace(values[i].key, ClassState{i});
        if (inserted) continue;
        ClassState& st = it->second;
        if (st.violated || values[st.representative].value == values[i].value) continue;
        st.violated = true;
        report.violations.push_back({describe_key(notion, values[i].key), pairs[st.representative],
                                     pairs[i], values[st.representative].value, values[i].value});
    }
    report.pairs_checked = pairs.size();
    report.key_classes = classes.size();
    report.verdict = report.violations.empty();
    if (!report.verdict) report.witness = report.violations.front();
    return report;
}

bool recheck_violation(Notion notion, StatTag tag, const PairInstance& a, const PairInstance& b) {
    if (!admissible(notion, a) || !admissible(notion, b)) return false;
    if (notion_key(notion, tag, a) != notion_key(notion, tag, b)) return false;
    return notion_value(notion, tag, a) != notion_value(notion, tag, b);
}

}  // namespace shufcompat
