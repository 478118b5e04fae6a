#include "shufcompat/kernel.hpp"

#include <map>
#include <stdexcept>

namespace shufcompat {

RationalVector coordinates(const QSymElement& e, int n, Basis basis) {
    const QSymElement x = to_basis(e, basis);
    const std::size_t dim = n == 0 ? 1 : (std::size_t{1} << (n - 1));
    RationalVector v(dim, Rational(0));
    for (const auto& [alpha, q] : x.terms())
        if (alpha.size() == n) v[composition_index(alpha)] = q;
    return v;
}

QSymElement element_from_coordinates(const RationalVector& v, int n, Basis basis, int max_degree) {
    const auto comps = compositions_of(n);
    QSymElement e(basis, max_degree);
    for (std::size_t i = 0; i < v.size(); ++i) e.add_term(comps[i], v[i]);
    return e;
}

bool SpanBasis::contains(const QSymElement& e) const {
    return span.contains(coordinates(e, degree, basis));
}

namespace {

void require_descent(StatTag tag) {
    if (!is_descent_statistic(tag)) throw std::invalid_argument("kernel needs a descent statistic");
}

SpanBasis empty_span(int n, Basis basis) {
    SpanBasis s;
    s.degree = n;
    s.basis = basis;
    s.ambient = compositions_of(n);
    s.span = EchelonSpan(s.ambient.size());
    return s;
}

}  // namespace

std::vector<std::vector<Composition>> equivalence_classes(StatTag tag, int n) {
    require_descent(tag);
    std::vector<std::vector<Composition>> classes;
    std::map<StatValue, std::size_t> index;
    for (const auto& c : compositions_of(n)) {
        auto [it, inserted] = index.try_emplace(stat_on_comp(tag, c), classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(c);
    }
    return classes;
}

std::vector<QSymElement> kernel_generators(StatTag tag, int n, int max_degree) {
    std::vector<QSymElement> out;
    for (const auto& cls : equivalence_classes(tag, n)) {
        for (std::size_t i = 1; i < cls.size(); ++i) {
            QSymElement g = QSymElement::basis_element(Basis::F, cls[i], max_degree);
            g.add_term(cls[0], -1);
            out.push_back(std::move(g));
        }
    }
    return out;
}

SpanBasis kernel_component(StatTag tag, int n) {
    require_descent(tag);
    SpanBasis s = empty_span(n, Basis::F);
    for (const auto& g : kernel_generators(tag, n, n)) s.span.insert(coordinates(g, n, Basis::F));
    return s;
}

SpanBasis epk_f_generators(int n) {
    SpanBasis s = empty_span(n, Basis::F);
    for (const auto& [j, k] : arrow_relations(n)) {
        QSymElement g = QSymElement::basis_element(Basis::F, j, n);
        g.add_term(k, -1);
        s.span.insert(coordinates(g, n, Basis::F));
    }
    return s;
}

SpanBasis epk_m_generators(int n) {
    SpanBasis s = empty_span(n, Basis::F);
    for (const auto& [j, k] : arrowM_relations(n)) {
        QSymElement g = QSymElement::basis_element(Basis::M, j, n);
        g.add_term(k, 1);
        s.span.insert(coordinates(g, n, Basis::F));
    }
    return s;
}

std::size_t shuffle_algebra_dimension(StatTag tag, int n) {
    const SpanBasis k = kernel_component(tag, n);
    return k.ambient.size() - k.dimension();
}

bool m_through_f_checks(int n) {
    if (n < 1) throw std::invalid_argument("m_through_f_checks needs n >= 1");
    const unsigned long long count = 1ULL << (n - 1);
    auto f_of = [n](unsigned long long mask) {
        return QSymElement::basis_element(Basis::F, comp_of_set(n, subset_from_mask(mask)), n);
    };
    auto m_of = [n](unsigned long long mask) {
        return QSymElement::basis_element(Basis::M, comp_of_set(n, subset_from_mask(mask)), n);
    };
    auto sign = [](unsigned long long b, unsigned long long c) {
        return Rational(__builtin_popcountll(b & ~c) % 2 ? -1 : 1);
    };
    for (unsigned long long c = 0; c < count; ++c) {
        QSymElement rhs_a(Basis::F, n);
        for (unsigned long long b = 0; b < count; ++b)
            if ((b & c) == c) rhs_a += sign(b, c) * f_of(b);
        if (m_to_f(m_of(c)) != rhs_a) return false;
        for (int k = 1; k <= n - 1; ++k) {
            const unsigned long long kb = 1ULL << (k - 1);
            if (c & kb) continue;
            const QSymElement lhs = m_to_f(m_of(c) + m_of(c | kb));
            QSymElement rhs_b(Basis::F, n);
            for (unsigned long long b = 0; b < count; ++b)
                if ((b & c) == c && !(b & kb)) rhs_b += sign(b, c) * f_of(b);
            if (lhs != rhs_b) return false;
            if (k < 2 || (c & (kb >> 1))) continue;
            const unsigned long long km1 = kb >> 1;
            QSymElement rhs_c(Basis::F, n);
            for (unsigned long long b = 0; b < count; ++b)
                if ((b & c) == c && !(b & kb) && !(b & km1))
                    rhs_c += sign(b, c) * (f_of(b) - f_of(b | km1));
            if (lhs != rhs_c) return false;
        }
    }
    return true;
}

std::string_view op_name(IdealOp op) {
    switch (op) {
        case IdealOp::product: return "product";
        case IdealOp::prec: return "prec";
        case IdealOp::succeq: return "succeq";
        case IdealOp::bel: return "bel";
        case IdealOp::tvi: return "tvi";
    }
    return "?";
}

std::string_view side_name(Side side) {
    switch (side) {
        case Side::left: return "left";
        case Side::right: return "right";
        case Side::both: return "both";
    }
    return "?";
}

std::optional<IdealOp> parse_op(std::string_view s) {
    for (IdealOp op : kIdealOps)
        if (op_name(op) == s) return op;
    return std::nullopt;
}

std::optional<Side> parse_side(std::string_view s) {
    for (Side side : {Side::left, Side::right, Side::both})
        if (side_name(side) == s) return side;
    return std::nullopt;
}

QSymElement apply_op(IdealOp op, const QSymElement& a, const QSymElement& b) {
    switch (op) {
        case IdealOp::product: return product(a, b);
        case IdealOp::prec: return prec(a, b);
        case IdealOp::succeq: return succeq(a, b);
        case IdealOp::bel: return bel(a, b);
        case IdealOp::tvi: return tvi(a, b);
    }
    throw std::logic_error("unknown op");
}

IdealVerdict is_op_ideal(StatTag tag, IdealOp op, Side side, int max_degree, Execution exec) {
    require_descent(tag);
    if (max_degree < 2) throw std::invalid_argument("is_op_ideal needs degree bound >= 2");
    std::vector<SpanBasis> kernels;
    for (int n = 0; n <= max_degree; ++n) kernels.push_back(kernel_component(tag, n));

    struct Task {
        Side side;
        QSymElement generator;
        QSymElement multiplier;
    };
    std::vector<Task> tasks;
    for (int d = 1; d < max_degree; ++d) {
        const auto gens = kernel_generators(tag, d, max_degree);
        for (const auto& g : gens) {
            for (int e = 1; d + e <= max_degree; ++e) {
                for (const auto& alpha : compositions_of(e)) {
                    const QSymElement f = QSymElement::basis_element(Basis::F, alpha, max_degree);
                    if (side != Side::right) tasks.push_back({Side::left, g, f});
                    if (side != Side::left) tasks.push_back({Side::right, g, f});
                }
            }
        }
    }

    std::vector<QSymElement> results(tasks.size());
    std::vector<char> ok(tasks.size(), 1);
    auto run = [&](long long i) {
        const Task& t = tasks[static_cast<std::size_t>(i)];
        QSymElement r = t.side == Side::left ? apply_op(op, t.multiplier, t.generator)
                                             : apply_op(op, t.generator, t.multiplier);
        const int n = t.generator.degree() + t.multiplier.degree();
        ok[static_cast<std::size_t>(i)] = kernels[static_cast<std::size_t>(n)].contains(r) ? 1 : 0;
        results[static_cast<std::size_t>(i)] = std::move(r);
    };
    const long long count = static_cast<long long>(tasks.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < count; ++i) run(i);
    } else {
        for (long long i = 0; i < count; ++i) run(i);
    }

    IdealVerdict verdict;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (ok[i]) continue;
        verdict.holds = false;
        verdict.witness = IdealWitness{tasks[i].side, tasks[i].generator, tasks[i].multiplier, results[i]};
        break;
    }
    return verdict;
}

bool runic_composition_criterion(StatTag tag, IdealOp op, Side side, int max_degree) {
    if (op != IdealOp::bel && op != IdealOp::tvi)
        throw std::invalid_argument("composition criterion covers bel and tvi only");
    auto join = [op](const Composition& x, const Composition& y) {
        return op == IdealOp::bel ? near_concat(x, y) : concat(x, y);
    };
    for (int d = 1; d < max_degree; ++d) {
        for (const auto& cls : equivalence_classes(tag, d)) {
            for (std::size_t i = 1; i < cls.size(); ++i) {
                const Composition& j = cls[i];
                const Composition& k = cls[0];
                for (int e = 1; d + e <= max_degree; ++e) {
                    for (const auto& g : compositions_of(e)) {
                        if (side != Side::right && !st_equivalent(tag, join(g, j), join(g, k))) return false;
                        if (side != Side::left && !st_equivalent(tag, join(j, g), join(k, g))) return false;
                    }
                }
            }
        }
    }
    return true;
}

MBinomialResult is_m_binomial(StatTag tag, int n) {
    MBinomialResult result;
    result.degree = n;
    const SpanBasis kf = kernel_component(tag, n);
    const std::size_t dim = kf.ambient.size();
    EchelonSpan kernel_m(dim);
    for (const auto& row : kf.span.rows()) {
        const QSymElement e = element_from_coordinates(row, n, Basis::F, n);
        kernel_m.insert(coordinates(e, n, Basis::M));
    }
    // v lies in the kernel iff every constraint row annihilates it.
    const std::vector<RationalVector> constraints = kernel_m.null_space();
    auto column = [&](std::size_t j) {
        RationalVector c;
        c.reserve(constraints.size());
        for (const auto& w : constraints) c.push_back(w[j]);
        return c;
    };
    auto is_zero = [](const RationalVector& v) {
        for (const auto& q : v)
            if (q != 0) return false;
        return true;
    };
    std::vector<RationalVector> cols(dim);
    for (std::size_t j = 0; j < dim; ++j) cols[j] = column(j);

    EchelonSpan found(dim);
    auto offer = [&](RationalVector v) {
        if (found.insert(v))
            result.certificate.push_back(element_from_coordinates(v, n, Basis::M, n));
    };
    for (std::size_t j = 0; j < dim; ++j) {
        if (is_zero(cols[j])) {
            RationalVector v(dim, Rational(0));
            v[j] = 1;
            offer(v);
        }
    }
    for (std::size_t j = 0; j < dim; ++j) {
        if (is_zero(cols[j])) continue;
        std::size_t lead = 0;
        while (cols[j][lead] == 0) ++lead;
        for (std::size_t k = j + 1; k < dim; ++k) {
            if (is_zero(cols[k])) continue;
            // Proportional columns c_k = t c_j give the kernel element -t M_j + M_k.
            const Rational t = cols[k][lead] / cols[j][lead];
            bool proportional = true;
            for (std::size_t r = 0; r < constraints.size() && proportional; ++r)
                if (cols[k][r] != t * cols[j][r]) proportional = false;
            if (!proportional) continue;
            RationalVector v(dim, Rational(0));
            v[j] = -t;
            v[k] = 1;
            offer(v);
        }
    }
    result.certified = found == kernel_m;
    if (result.certified) {
        result.note = "kernel spanned by " + std::to_string(result.certificate.size()) +
                      " two-term M-combinations";
    } else {
        result.certificate.clear();
        result.note = "no pairwise certificate found (two-term elements span " +
                      std::to_string(found.rank()) + " of " + std::to_string(kernel_m.rank()) +
                      " dimensions)";
    }
    return result;
}

IdealMatrix ideal_matrix(int max_degree, Execution exec) {
    IdealMatrix m;
    m.max_degree = max_degree;
    m.rows.assign(kDescentStats.begin(), kDescentStats.end());
    for (IdealOp op : kIdealOps)
        for (Side side : {Side::left, Side::right}) m.columns.emplace_back(op, side);
    int next_id = 1;
    for (StatTag tag : m.rows) {
        std::vector<IdealVerdict> row;
        std::vector<std::string> ids;
        for (const auto& [op, side] : m.columns) {
            IdealVerdict v = is_op_ideal(tag, op, side, max_degree, exec);
            ids.push_back(v.holds ? "" : "w" + std::to_string(next_id++));
            if (op == IdealOp::bel || op == IdealOp::tvi)
                if (runic_composition_criterion(tag, op, side, max_degree) != v.holds)
                    m.criterion_agrees = false;
            row.push_back(std::move(v));
        }
        m.cells.push_back(std::move(row));
        m.witness_ids.push_back(std::move(ids));
    }
    return m;
}

std::string ideal_matrix_tsv(const IdealMatrix& m) {
    std::string out = "statistic";
    for (const auto& [op, side] : m.columns)
        out += "\t" + std::string(op_name(op)) + ":" + std::string(side_name(side));
    out += "\n";
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        out += std::string(stat_name(m.rows[r]));
        for (std::size_t c = 0; c < m.columns.size(); ++c)
            out += m.cells[r][c].holds ? "\ttrue" : "\tfalse(" + m.witness_ids[r][c] + ")";
        out += "\n";
    }
    return out;
}

}  // namespace shufcompat
