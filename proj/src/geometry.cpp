#include "srg/geometry.hpp"

#include <stdexcept>

namespace srg {

ProjectivePoint normalize_projective(const FiniteField& f,
                                     std::vector<int> coords) {
    int lead = -1;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i]) {
            lead = static_cast<int>(i);
            break;
        }
    if (lead < 0) throw std::invalid_argument("zero vector is not projective");
    if (coords[lead] != 1) {
        int c = f.inv(coords[lead]);
        for (auto& x : coords) x = f.mul(x, c);
    }
    return coords;
}

std::vector<ProjectivePoint> projective_points(const FiniteField& f, int d) {
    if (d < 1) throw std::invalid_argument("projective dimension must be >= 1");
    long long count = 1;
    for (int i = 0; i <= d; ++i) {
        count *= f.q();
        if (count > (1 << 24)) throw std::invalid_argument("PG(d,q) too large");
    }
    std::vector<ProjectivePoint> pts;
    std::vector<int> coords(d + 1, 0);
    for (int pos = 0; pos <= d; ++pos) {
        std::fill(coords.begin(), coords.end(), 0);
        coords[pos] = 1;
        long long total = 1;
        for (int i = pos + 1; i <= d; ++i) total *= f.q();
        for (long long v = 0; v < total; ++v) {
            long long rest = v;
            // leftmost free coordinate most significant
            for (int i = pos + 1; i <= d; ++i) {
                long long weight = 1;
                for (int j = i + 1; j <= d; ++j) weight *= f.q();
                coords[i] = static_cast<int>(rest / weight);
                rest %= weight;
            }
            pts.push_back(coords);
        }
    }
    return pts;
}

QuadraticForm QuadraticForm::standard(Kind kind, int dim,
                                      const FiniteField& f) {
    bool even = dim % 2 == 0;
    if ((kind == Kind::Parabolic) == even)
        throw std::invalid_argument("form kind does not match dimension parity");
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    QuadraticForm form(kind, dim, f);
    if (kind == Kind::Symplectic) return form;
    form.coeff_.assign(dim, std::vector<int>(dim, 0));
    auto hyperbolic_pair = [&](int i) { form.coeff_[i][i + 1] = 1; };
    switch (kind) {
        case Kind::Plus:
            for (int i = 0; i + 1 < dim; i += 2) hyperbolic_pair(i);
            break;
        case Kind::Minus: {
            for (int i = 0; i + 3 < dim; i += 2) hyperbolic_pair(i);
            // last pair carries x^2 + xy + c y^2 with t^2 + t + c irreducible
            int a = dim - 2, c = -1;
            for (int cand = 1; cand < f.q(); ++cand) {
                bool has_root = false;
                for (int t = 0; t < f.q(); ++t)
                    if (f.add(f.add(f.mul(t, t), t), cand) == 0) {
                        has_root = true;
                        break;
                    }
                if (!has_root) {
                    c = cand;
                    break;
                }
            }
            if (c < 0) throw std::logic_error("no anisotropic binary quadratic");
            form.coeff_[a][a] = 1;
            form.coeff_[a][a + 1] = 1;
            form.coeff_[a + 1][a + 1] = c;
            break;
        }
        case Kind::Parabolic:
            form.coeff_[0][0] = 1;
            for (int i = 1; i + 1 < dim; i += 2) hyperbolic_pair(i);
            break;
        case Kind::Symplectic:
            break;
    }
    return form;
}

int QuadraticForm::eval(const std::vector<int>& x) const {
    if (kind_ == Kind::Symplectic)
        throw std::logic_error("symplectic form has no quadratic value");
    int acc = 0;
    for (int i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (int j = i; j < dim_; ++j) {
            int c = coeff_[i][j];
            if (c) acc = field_.add(acc, field_.mul(c, field_.mul(x[i], x[j])));
        }
    }
    return acc;
}

int QuadraticForm::bilinear(const std::vector<int>& x,
                            const std::vector<int>& y) const {
    if (kind_ == Kind::Symplectic) {
        // sum over pairs (2i, 2i+1) of x_{2i} y_{2i+1} - x_{2i+1} y_{2i}
        int acc = 0;
        for (int i = 0; i + 1 < dim_; i += 2) {
            acc = field_.add(acc, field_.mul(x[i], y[i + 1]));
            acc = field_.sub(acc, field_.mul(x[i + 1], y[i]));
        }
        return acc;
    }
    // Polarization B(x,y) = Q(x+y) - Q(x) - Q(y); alternating in char 2.
    std::vector<int> s(dim_);
    for (int i = 0; i < dim_; ++i) s[i] = field_.add(x[i], y[i]);
    return field_.sub(field_.sub(eval(s), eval(x)), eval(y));
}

bool QuadraticForm::isotropic(const std::vector<int>& x) const {
    if (kind_ == Kind::Symplectic) return true;
    return eval(x) == 0;
}

std::vector<ProjectivePoint> hyperoval(const FiniteField& f) {
    if (f.p() != 2) throw std::invalid_argument("hyperovals require even q");
    long long q = f.q();
    std::vector<ProjectivePoint> pts;
    for (int t = 0; t < q; ++t)
        pts.push_back({1, t, f.mul(t, t)});
    pts.push_back({0, 1, 0});
    pts.push_back({0, 0, 1});
    // Arc check: every line of PG(2,q) meets the set in 0 or 2 points.
    for (const auto& line : projective_points(f, 2)) {
        int hits = 0;
        for (const auto& p : pts) {
            int v = 0;
            for (int i = 0; i < 3; ++i) v = f.add(v, f.mul(line[i], p[i]));
            if (v == 0) ++hits;
        }
        if (hits != 0 && hits != 2)
            throw std::logic_error("hyperoval arc condition failed");
    }
    return pts;
}

}  // namespace srg
