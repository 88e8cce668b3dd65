#include "srg/gq.hpp"

#include <algorithm>
#include <stdexcept>

namespace srg {

void verify_gq(const GeneralizedQuadrangle& gq) {
    int P = gq.num_points;
    // line sizes, and lines-per-point
    std::vector<int> through(P, 0);
    for (const auto& line : gq.lines) {
        if (static_cast<int>(line.size()) != gq.s + 1)
            throw std::logic_error("GQ: line size != s+1");
        for (int p : line) {
            if (p < 0 || p >= P) throw std::logic_error("GQ: bad point index");
            ++through[p];
        }
    }
    for (int p = 0; p < P; ++p)
        if (through[p] != gq.t + 1)
            throw std::logic_error("GQ: point not on t+1 lines");
    long long exp_points = static_cast<long long>(gq.s + 1) * (gq.s * gq.t + 1);
    long long exp_lines = static_cast<long long>(gq.t + 1) * (gq.s * gq.t + 1);
    if (P != exp_points || static_cast<long long>(gq.lines.size()) != exp_lines)
        throw std::logic_error("GQ: point/line counts off");

    // collinearity bitsets; also rejects two lines through a common pair
    int words = (P + 63) / 64;
    std::vector<std::uint64_t> coll(static_cast<std::size_t>(P) * words, 0);
    auto test = [&](int a, int b) {
        return (coll[static_cast<std::size_t>(a) * words + (b >> 6)] >>
                (b & 63)) & 1u;
    };
    auto mark = [&](int a, int b) {
        coll[static_cast<std::size_t>(a) * words + (b >> 6)] |=
            std::uint64_t{1} << (b & 63);
    };
    for (const auto& line : gq.lines)
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                if (test(line[i], line[j]))
                    throw std::logic_error("GQ: two lines through one pair");
                mark(line[i], line[j]);
                mark(line[j], line[i]);
            }

    // unique-projection axiom: P off L sees exactly one point of L
    std::vector<char> on_line(P);
    for (const auto& line : gq.lines) {
        std::fill(on_line.begin(), on_line.end(), 0);
        for (int p : line) on_line[p] = 1;
        for (int p = 0; p < P; ++p) {
            if (on_line[p]) continue;
            int seen = 0;
            for (int q : line) seen += test(p, q);
            if (seen != 1)
                throw std::logic_error("GQ: projection axiom fails");
        }
    }
}

GeneralizedQuadrangle gq_ahrens_szekeres(long long q) {
    auto pp = as_prime_power(q);
    if (!pp || pp->first == 2)
        throw std::invalid_argument("AS(q) needs an odd prime power");
    FiniteField f = FiniteField::make(pp->first, pp->second);
    int Q = static_cast<int>(q);
    auto id = [Q](int x, int y, int z) { return (x * Q + y) * Q + z; };

    GeneralizedQuadrangle gq;
    gq.s = Q - 1;
    gq.t = Q + 1;
    gq.num_points = Q * Q * Q;
    for (int a = 0; a < Q; ++a)
        for (int b = 0; b < Q; ++b) {
            std::vector<int> lx, ly;
            for (int s = 0; s < Q; ++s) {
                lx.push_back(id(s, a, b));
                ly.push_back(id(a, s, b));
            }
            std::sort(lx.begin(), lx.end());
            std::sort(ly.begin(), ly.end());
            gq.lines.push_back(std::move(lx));
            gq.lines.push_back(std::move(ly));
        }
    for (int a = 0; a < Q; ++a)
        for (int b = 0; b < Q; ++b)
            for (int c = 0; c < Q; ++c) {
                std::vector<int> line;
                for (int s = 0; s < Q; ++s) {
                    int cs = f.mul(c, s);
                    int x = f.sub(f.mul(cs, s), f.sub(f.mul(b, s), a));
                    int y = f.sub(b, f.add(cs, cs));
                    line.push_back(id(x, y, s));
                }
                std::sort(line.begin(), line.end());
                gq.lines.push_back(std::move(line));
            }
    verify_gq(gq);
    return gq;
}

GeneralizedQuadrangle gq_t2_star(const FiniteField& f,
                                 const std::vector<ProjectivePoint>& oval) {
    if (f.p() != 2) throw std::invalid_argument("T2*(O) needs even q");
    int Q = static_cast<int>(f.q());
    if (static_cast<int>(oval.size()) != Q + 2)
        throw std::invalid_argument("not a hyperoval (wrong size)");
    for (const auto& pt : oval)
        if (pt.size() != 3) throw std::invalid_argument("hyperoval points live in PG(2,q)");

    auto id = [Q](const std::vector<int>& v) { return (v[0] * Q + v[1]) * Q + v[2]; };

    GeneralizedQuadrangle gq;
    gq.s = Q - 1;
    gq.t = Q + 1;
    gq.num_points = Q * Q * Q;
    // one parallel class of affine lines per hyperoval direction
    std::vector<char> used(gq.num_points);
    for (const auto& dir : oval) {
        std::fill(used.begin(), used.end(), 0);
        for (int x = 0; x < Q; ++x)
            for (int y = 0; y < Q; ++y)
                for (int z = 0; z < Q; ++z) {
                    std::vector<int> base{x, y, z};
                    if (used[id(base)]) continue;
                    std::vector<int> line;
                    for (int tpar = 0; tpar < Q; ++tpar) {
                        std::vector<int> pt(3);
                        for (int i = 0; i < 3; ++i)
                            pt[i] = f.add(base[i], f.mul(tpar, dir[i]));
                        used[id(pt)] = 1;
                        line.push_back(id(pt));
                    }
                    std::sort(line.begin(), line.end());
                    gq.lines.push_back(std::move(line));
                }
    }
    std::sort(gq.lines.begin(), gq.lines.end());
    verify_gq(gq);
    return gq;
}

Graph gq_point_graph(const GeneralizedQuadrangle& gq) {
    Graph g(gq.num_points);
    for (const auto& line : gq.lines)
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j)
                g.set_edge(line[i], line[j]);
    return g;
}

GeneralizedQuadrangle gq_dual(const GeneralizedQuadrangle& gq) {
    GeneralizedQuadrangle d;
    d.s = gq.t;
    d.t = gq.s;
    d.num_points = static_cast<int>(gq.lines.size());
    d.lines.assign(gq.num_points, {});
    for (int li = 0; li < d.num_points; ++li)
        for (int p : gq.lines[li]) d.lines[p].push_back(li);
    for (auto& line : d.lines) std::sort(line.begin(), line.end());
    verify_gq(d);
    return d;
}

}  // namespace srg
