#include "srg/polar.hpp"

#include <stdexcept>

namespace srg {

namespace {

FiniteField field_for(long long q) {
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("q must be a prime power");
    return FiniteField::make(pp->first, pp->second);
}

std::vector<std::vector<int>> isotropic_points(const QuadraticForm& form) {
    auto pts = projective_points(form.field(), form.dim() - 1);
    std::vector<std::vector<int>> iso;
    for (auto& p : pts)
        if (form.isotropic(p)) iso.push_back(std::move(p));
    return iso;
}

}  // namespace

long long isotropic_point_count(QuadraticForm::Kind kind, int dim, long long q) {
    auto form = QuadraticForm::standard(kind, dim, field_for(q));
    return static_cast<long long>(isotropic_points(form).size());
}

Graph polar_graph(QuadraticForm::Kind kind, int dim, long long q) {
    auto form = QuadraticForm::standard(kind, dim, field_for(q));
    auto iso = isotropic_points(form);
    int n = static_cast<int>(iso.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (form.bilinear(iso[i], iso[j]) == 0) g.set_edge(i, j);
    return g;
}

Graph affine_polar_graph(QuadraticForm::Kind epsilon, int two_d, long long q) {
    if (epsilon != QuadraticForm::Kind::Plus && epsilon != QuadraticForm::Kind::Minus)
        throw std::invalid_argument("affine polar graphs take epsilon in {+,-}");
    if (two_d % 2 != 0 || two_d <= 0)
        throw std::invalid_argument("affine polar graphs need even dimension");
    FiniteField f = field_for(q);
    auto form = QuadraticForm::standard(epsilon, two_d, f);
    long long total = 1;
    for (int i = 0; i < two_d; ++i) {
        total *= q;
        if (total > (1 << 22)) throw std::invalid_argument("vector space too large");
    }
    int n = static_cast<int>(total);
    // Cayley structure: adjacency depends only on the difference vector.
    std::vector<char> connect(n, 0);
    std::vector<int> coords(two_d);
    for (int v = 1; v < n; ++v) {
        long long rest = v;
        for (int i = 0; i < two_d; ++i) {
            coords[i] = static_cast<int>(rest % q);
            rest /= q;
        }
        if (form.eval(coords) == 0) connect[v] = 1;
    }
    std::vector<std::vector<int>> digits(n, std::vector<int>(two_d));
    for (int v = 0; v < n; ++v) {
        long long rest = v;
        for (int i = 0; i < two_d; ++i) {
            digits[v][i] = static_cast<int>(rest % q);
            rest /= q;
        }
    }
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            long long idx = 0, mult = 1;
            for (int i = 0; i < two_d; ++i) {
                idx += mult * f.sub(digits[a][i], digits[b][i]);
                mult *= q;
            }
            if (connect[idx]) g.set_edge(a, b);
        }
    return g;
}

}  // namespace srg
