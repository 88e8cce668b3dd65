#include "srg/registry.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "srg/designs.hpp"
#include "srg/families.hpp"
#include "srg/gq.hpp"
#include "srg/hadamard.hpp"
#include "srg/oracle.hpp"
#include "srg/polar.hpp"

namespace srg {

std::string default_data_dir() {
    if (const char* env = std::getenv("SRG_DATA_DIR"); env && *env) return env;
#ifdef SRG_SOURCE_DATA_DIR
    return SRG_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long long isqrt_ll(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::string graph_on(const std::string& display, long long n) {
    return display + ": Graph on " + std::to_string(n) + " vertices";
}

Recipe recipe(const std::string& id, std::vector<long long> args,
              std::string display) {
    return Recipe{id, std::move(args), std::move(display), nullptr};
}

// ---- projective isotropic point counts (closed forms, cross-checked in
// tests against exhaustive evaluation) ----

long long quadric_points(int eps, int D, long long q) {
    // eps: +1 plus type (D even), -1 minus type (D even), 0 parabolic (D odd)
    if (D <= 0) return 0;
    if (eps == 0) return D == 1 ? 0 : (ipow(q, D - 1) - 1) / (q - 1);
    int m = D / 2;
    if (eps == +1) return (ipow(q, m - 1) + 1) * (ipow(q, m) - 1) / (q - 1);
    return (ipow(q, m) + 1) * (ipow(q, m - 1) - 1) / (q - 1);
}

struct PolarFamily {
    const char* id;
    const char* symbol;
    QuadraticForm::Kind kind;
    int eps;       // +1, -1, or 0 for parabolic
    int d_step;    // 2 (even dims) or also 2 for odd dims starting at 5
    int d_start;   // smallest vector-space dimension with a rank >= 2 space
};

std::optional<Recipe> match_polar(const PolarFamily& fam, const SrgParams& p) {
    for (long long q = 2; q <= p.n; ++q) {
        if (!as_prime_power(q)) continue;
        for (int D = fam.d_start; D <= 40; D += fam.d_step) {
            // vector count cap keeps the builder exhaustive-enumeration safe
            long long vectors = 1;
            bool too_big = false;
            for (int i = 0; i < D; ++i) {
                vectors *= q;
                if (vectors > (1 << 22)) {
                    too_big = true;
                    break;
                }
            }
            if (too_big) break;
            long long n = quadric_points(fam.eps, D, q);
            if (n > p.n) break;
            if (n != p.n) continue;
            long long mu = quadric_points(fam.eps, D - 2, q);
            long long k = q * mu;
            long long lambda = q - 1 + q * q * quadric_points(fam.eps, D - 4, q);
            if (k == p.k && lambda == p.lambda && mu == p.mu) {
                std::ostringstream disp;
                disp << fam.symbol << '(' << D << ',' << q << ')';
                return recipe(fam.id, {D, q}, disp.str());
            }
        }
    }
    return std::nullopt;
}

std::optional<Recipe> match_affine_polar(int eps, const SrgParams& p) {
    for (long long q = 2; q * q <= p.n; ++q) {
        if (!as_prime_power(q)) continue;
        long long n = q * q;
        int two_d = 2;
        while (n < p.n && n <= (1 << 22)) {
            n *= q;
            ++two_d;
        }
        if (n != p.n || two_d % 2 || two_d < 4) continue;
        int d = two_d / 2;
        long long k = (ipow(q, d - 1) + eps) * (ipow(q, d) - eps);
        long long lambda =
            q * (ipow(q, d - 2) + eps) * (ipow(q, d - 1) - eps) + q - 2;
        long long mu = ipow(q, d - 1) * (ipow(q, d - 1) + eps);
        if (k == p.k && lambda == p.lambda && mu == p.mu) {
            std::ostringstream disp;
            disp << "VO^" << (eps > 0 ? '+' : '-') << '(' << two_d << ',' << q
                 << ')';
            return recipe(eps > 0 ? "affine-polar-plus" : "affine-polar-minus",
                          {two_d, q}, disp.str());
        }
    }
    return std::nullopt;
}

}  // namespace

Registry::Registry(const std::string& data_dir) {
    std::string table_path = data_dir + "/nonexistence.txt";
    try {
        table_ = NonexistenceTable::load(table_path);
    } catch (const std::runtime_error&) {
        table_ = NonexistenceTable::empty();
    }
    code_db_ = load_code_database(data_dir + "/twoweight");
}

void Registry::register_entry(ConstructionEntry entry) {
    for (const auto& e : entries_)
        if (e.id == entry.id)
            throw std::invalid_argument("duplicate construction id: " + entry.id);
    // keep tiers contiguous and in order; within a tier, registration order
    auto pos = entries_.end();
    while (pos != entries_.begin() && (pos - 1)->tier > entry.tier) --pos;
    entries_.insert(pos, std::move(entry));
}

Registry Registry::with_defaults(const std::string& data_dir) {
    Registry reg(data_dir);

    // ---------- tier 1: finite-geometry families ----------
    reg.register_entry(
        {"paley", 1,
         [](const SrgParams& p) -> std::optional<Recipe> {
             long long q = p.n;
             if (q > 2000 || q % 4 != 1 || !as_prime_power(q)) return std::nullopt;
             if (p.k != (q - 1) / 2 || p.lambda != (q - 5) / 4 ||
                 p.mu != (q - 1) / 4)
                 return std::nullopt;
             return recipe("paley", {q}, "Paley(" + std::to_string(q) + ")");
         },
         [](const Recipe& r) { return paley_graph(r.args[0]); }});

    auto match_gq_family = [](const SrgParams& p, bool even_q, bool dual,
                              const char* id,
                              const char* name) -> std::optional<Recipe> {
        for (long long q = 2; q * q * q <= 2 * p.n; ++q) {
            auto pp = as_prime_power(q);
            if (!pp) continue;
            if (even_q != (pp->first == 2)) continue;
            if (q > 11) break;  // GQ axiom verification stays desk-scale
            long long n = dual ? q * q * (q + 2) : q * q * q;
            long long k = dual ? q * (q + 1) : (q - 1) * (q + 2);
            long long lambda = dual ? q : q - 2;
            long long mu = dual ? q : q + 2;
            if (p.n == n && p.k == k && p.lambda == lambda && p.mu == mu) {
                std::ostringstream disp;
                if (dual)
                    disp << name << '(' << q << ")*; GQ(" << (q + 1) << ", "
                         << (q - 1) << ')';
                else
                    disp << name << '(' << q << "); GQ(" << (q - 1) << ", "
                         << (q + 1) << ')';
                return recipe(id, {q}, disp.str());
            }
        }
        return std::nullopt;
    };

    reg.register_entry(
        {"as-gq", 1,
         [match_gq_family](const SrgParams& p) {
             return match_gq_family(p, false, false, "as-gq", "AS");
         },
         [](const Recipe& r) {
             return gq_point_graph(gq_ahrens_szekeres(r.args[0]));
         }});
    reg.register_entry(
        {"as-gq-dual", 1,
         [match_gq_family](const SrgParams& p) {
             return match_gq_family(p, false, true, "as-gq-dual", "AS");
         },
         [](const Recipe& r) {
             return gq_point_graph(gq_dual(gq_ahrens_szekeres(r.args[0])));
         }});
    auto build_t2star = [](long long q) {
        auto pp = as_prime_power(q);
        FiniteField f = FiniteField::make(pp->first, pp->second);
        return gq_t2_star(f, hyperoval(f));
    };
    reg.register_entry(
        {"t2star-gq", 1,
         [match_gq_family](const SrgParams& p) {
             return match_gq_family(p, true, false, "t2star-gq", "T2*");
         },
         [build_t2star](const Recipe& r) {
             return gq_point_graph(build_t2star(r.args[0]));
         }});
    reg.register_entry(
        {"t2star-gq-dual", 1,
         [match_gq_family](const SrgParams& p) {
             return match_gq_family(p, true, true, "t2star-gq-dual", "T2*");
         },
         [build_t2star](const Recipe& r) {
             return gq_point_graph(gq_dual(build_t2star(r.args[0])));
         }});

    const PolarFamily polar_families[] = {
        {"polar-o-odd", "O", QuadraticForm::Kind::Parabolic, 0, 2, 5},
        {"polar-o-plus", "O^+", QuadraticForm::Kind::Plus, +1, 2, 4},
        {"polar-o-minus", "O^-", QuadraticForm::Kind::Minus, -1, 2, 4},
    };
    for (const auto& fam : polar_families) {
        reg.register_entry(
            {fam.id, 1,
             [fam](const SrgParams& p) { return match_polar(fam, p); },
             [fam](const Recipe& r) {
                 return polar_graph(fam.kind, static_cast<int>(r.args[0]),
                                    r.args[1]);
             }});
    }
    reg.register_entry(
        {"affine-polar-plus", 1,
         [](const SrgParams& p) { return match_affine_polar(+1, p); },
         [](const Recipe& r) {
             return affine_polar_graph(QuadraticForm::Kind::Plus,
                                       static_cast<int>(r.args[0]), r.args[1]);
         }});
    reg.register_entry(
        {"affine-polar-minus", 1,
         [](const SrgParams& p) { return match_affine_polar(-1, p); },
         [](const Recipe& r) {
             return affine_polar_graph(QuadraticForm::Kind::Minus,
                                       static_cast<int>(r.args[0]), r.args[1]);
         }});

    // ---------- tier 2: combinatorial families ----------
    reg.register_entry(
        {"clique-union", 2,
         [](const SrgParams& p) -> std::optional<Recipe> {
             if (p.mu != 0 || p.lambda != p.k - 1) return std::nullopt;
             if (p.n % (p.k + 1) != 0 || p.n / (p.k + 1) < 2) return std::nullopt;
             long long parts = p.n / (p.k + 1);
             return recipe("clique-union", {parts, p.k + 1},
                           std::to_string(parts) + "xK" + std::to_string(p.k + 1));
         },
         [](const Recipe& r) {
             Graph g(static_cast<int>(r.args[0] * r.args[1]));
             int t = static_cast<int>(r.args[1]);
             for (int part = 0; part < r.args[0]; ++part)
                 for (int i = 0; i < t; ++i)
                     for (int j = i + 1; j < t; ++j)
                         g.set_edge(part * t + i, part * t + j);
             return g;
         }});
    reg.register_entry(
        {"complete-multipartite", 2,
         [](const SrgParams& p) -> std::optional<Recipe> {
             if (p.mu != p.k || p.lambda != 2 * p.k - p.n) return std::nullopt;
             long long t = p.n - p.k;
             if (t < 1 || p.n % t != 0 || p.n / t < 2) return std::nullopt;
             long long parts = p.n / t;
             return recipe("complete-multipartite", {parts, t},
                           "K_{" + std::to_string(parts) + "x" +
                               std::to_string(t) + "}");
         },
         [](const Recipe& r) {
             int parts = static_cast<int>(r.args[0]);
             int t = static_cast<int>(r.args[1]);
             Graph g(parts * t);
             for (int u = 0; u < g.order(); ++u)
                 for (int v = u + 1; v < g.order(); ++v)
                     if (u / t != v / t) g.set_edge(u, v);
             return g;
         }});
    reg.register_entry(
        {"johnson", 2,
         [](const SrgParams& p) -> std::optional<Recipe> {
             long long m = (1 + isqrt_ll(1 + 8 * p.n)) / 2;
             if (m < 4 || m > 64 || m * (m - 1) / 2 != p.n) return std::nullopt;
             if (p.k != 2 * (m - 2) || p.lambda != m - 2 || p.mu != 4)
                 return std::nullopt;
             return recipe("johnson", {m, 2}, "J(" + std::to_string(m) + ",2)");
         },
         [](const Recipe& r) {
             return johnson_graph(static_cast<int>(r.args[0]),
                                  static_cast<int>(r.args[1]));
         }});
    reg.register_entry(
        {"oa-block", 2,
         [](const SrgParams& p) -> std::optional<Recipe> {
             long long s = isqrt_ll(p.n);
             if (s < 2 || s * s != p.n || s > 44 || !as_prime_power(s))
                 return std::nullopt;
             if (p.k % (s - 1) != 0) return std::nullopt;
             long long c = p.k / (s - 1);
             if (c < 2 || c > s) return std::nullopt;
             if (p.lambda != s - 2 + (c - 1) * (c - 2) || p.mu != c * (c - 1))
                 return std::nullopt;
             return recipe("oa-block", {c, s},
                           "OA(" + std::to_string(c) + "," + std::to_string(s) + ")");
         },
         [](const Recipe& r) {
             return oa_block_graph(orthogonal_array(static_cast<int>(r.args[0]),
                                                    static_cast<int>(r.args[1])));
         }});
    reg.register_entry(
        {"steiner-sts", 2,
         [](const SrgParams& p) -> std::optional<Recipe> {
             if (p.mu != 9) return std::nullopt;
             long long v = (1 + isqrt_ll(1 + 24 * p.n)) / 2;
             if (v * (v - 1) / 6 != p.n || v % 6 != 3 || v < 9 || v > 105)
                 return std::nullopt;
             if (p.k != 3 * (v - 3) / 2 || p.lambda != (v + 3) / 2)
                 return std::nullopt;
             return recipe("steiner-sts", {v}, "S(2,3," + std::to_string(v) + ")");
         },
         [](const Recipe& r) {
             return steiner_graph(steiner_triple_system(static_cast<int>(r.args[0])));
         }});
    reg.register_entry(
        {"rshcd", 2,
         [](const SrgParams& p) -> std::optional<Recipe> {
             long long root = isqrt_ll(p.n);
             if (root * root != p.n || p.n < 16 || p.n > 1024) return std::nullopt;
             long long m = p.n;
             while (m % 4 == 0) m /= 4;
             if (m != 1) return std::nullopt;  // Kronecker envelope: n = 4^e
             for (int eps : {+1, -1}) {
                 long long k = (p.n - eps * root) / 2;
                 long long lm = p.n / 4 - eps * root / 2;
                 if (p.k == k && p.lambda == lm && p.mu == lm) {
                     std::ostringstream disp;
                     disp << "RSHCD(" << p.n << ',' << (eps > 0 ? '+' : '-') << ')';
                     return recipe("rshcd", {p.n, eps}, disp.str());
                 }
             }
             return std::nullopt;
         },
         [](const Recipe& r) {
             long long n = r.args[0];
             int eps = static_cast<int>(r.args[1]);
             Rshcd m = rshcd_base4(eps);
             while (m.mat.order() < n) m = rshcd_kronecker(m, rshcd_base4(1));
             return rshcd_to_graph(m);
         }});
    reg.register_entry(
        {"switch-oa", 2,
         [](const SrgParams& p) -> std::optional<Recipe> {
             long long s = isqrt_ll(p.n - 1);
             if (s < 3 || s * s + 1 != p.n || s % 2 == 0 || s > 43 ||
                 !as_prime_power(s))
                 return std::nullopt;
             long long h = (s - 1) / 2;  // switched-class count seen by the oracle
             if (p.k != s * h || p.lambda != h * h - 1 || p.mu != h * h)
                 return std::nullopt;
             return recipe("switch-oa", {(s + 1) / 2, s},
                           "SwitchOA(c=" + std::to_string((s + 1) / 2) + ", n=" +
                               std::to_string(s) + ")");
         },
         [](const Recipe& r) {
             int c = static_cast<int>(r.args[0]);
             int s = static_cast<int>(r.args[1]);
             return switch_oa_graph(orthogonal_array(c + 1, s), c);
         }});
    reg.register_entry(
        {"conference-descendant", 2,
         [](const SrgParams& p) -> std::optional<Recipe> {
             long long q = p.n;
             if (q > 2000 || q % 4 != 1 || !as_prime_power(q)) return std::nullopt;
             if (p.k != (q - 1) / 2 || p.lambda != (q - 5) / 4 ||
                 p.mu != (q - 1) / 4)
                 return std::nullopt;
             return recipe("conference-descendant", {q},
                           "ConferenceTwographDescendant(" + std::to_string(q + 1) +
                               ")");
         },
         [](const Recipe& r) {
             PmOneMatrix c = conference_paley(r.args[0]);
             return descendant(graph_from_seidel(c), 0);
         }});

    // ---------- tier 3: two-weight code graphs ----------
    auto db = std::make_shared<CodeDbReport>(reg.code_db_);
    reg.register_entry(
        {"two-weight-db", 3,
         [db](const SrgParams& p) -> std::optional<Recipe> {
             for (std::size_t i = 0; i < db->entries.size(); ++i) {
                 const CodeDbEntry& e = db->entries[i];
                 if (e.expected == p) {
                     std::ostringstream disp;
                     disp << "TwoWeightCode(q=" << e.code.field.q()
                          << ", [" << e.code.length << ',' << e.code.dim
                          << "], w=" << (e.adjacency_is_w1 ? e.witness.w1
                                                           : e.witness.w2)
                          << ", " << e.source << ")";
                     return recipe("two-weight-db",
                                   {static_cast<long long>(i)}, disp.str());
                 }
             }
             return std::nullopt;
         },
         [db](const Recipe& r) {
             const CodeDbEntry& e = db->entries[static_cast<std::size_t>(r.args[0])];
             Graph g = two_weight_graph(e.code, e.witness);
             return e.adjacency_is_w1 ? g : complement(g);
         }});

    // Hyperoval-generated two-weight codes exist even with an empty data
    // directory; their parameters are certified once here.
    {
        for (long long q : {4LL, 8LL}) {
            auto pp = as_prime_power(q);
            FiniteField f = FiniteField::make(pp->first, pp->second);
            LinearCode code = code_from_point_set(f, hyperoval(f));
            auto witness = two_weight_witness(code);
            if (!witness) throw std::logic_error("hyperoval code is not two-weight");
            auto cert = certify(two_weight_graph(code, *witness));
            if (!cert || !cert->verified)
                throw std::logic_error("hyperoval code graph failed the oracle");
            SrgParams params = cert->params;
            reg.register_entry(
                {"two-weight-hyperoval-q" + std::to_string(q), 3,
                 [params, q](const SrgParams& p) -> std::optional<Recipe> {
                     if (!(p == params)) return std::nullopt;
                     return recipe("two-weight-hyperoval-q" + std::to_string(q),
                                   {q}, "HyperovalCode(q=" + std::to_string(q) + ")");
                 },
                 [](const Recipe& r) {
                     auto pp2 = as_prime_power(r.args[0]);
                     FiniteField f2 = FiniteField::make(pp2->first, pp2->second);
                     LinearCode c2 = code_from_point_set(f2, hyperoval(f2));
                     return two_weight_graph(c2, *two_weight_witness(c2));
                 }});
        }
    }

    // ---------- tier 4: sporadic recipes ----------
    reg.register_entry(
        {"witt-blocks", 4,
         [](const SrgParams& p) -> std::optional<Recipe> {
             if (p == SrgParams{253, 140, 87, 65})
                 return recipe("witt-blocks", {0}, "WittBlockIntersection(2-(23,7,21))");
             if (p == SrgParams{176, 105, 68, 54})
                 return recipe("witt-blocks", {1}, "WittBlockIntersection(2-(22,7,16))");
             if (p == SrgParams{120, 77, 52, 44})
                 return recipe("witt-blocks", {2}, "WittBlockIntersection(2-(21,7,12))");
             return std::nullopt;
         },
         [](const Recipe& r) {
             IncidenceStructure witt = witt_design_23();
             std::set<int> removed;
             for (int i = 0; i < r.args[0]; ++i) removed.insert(i);
             return block_intersection_graph(remove_points(witt, removed), {3});
         }});
    reg.register_entry(
        {"ternary-golay-distance", 4,
         [](const SrgParams& p) -> std::optional<Recipe> {
             if (!(p == SrgParams{243, 110, 37, 60})) return std::nullopt;
             return recipe("ternary-golay-distance", {},
                           "TernaryGolayDualDistance9");
         },
         [](const Recipe&) {
             return code_distance_graph(dual_code(golay_ternary_11()), 9);
         }});
    reg.register_entry(
        {"binary-golay-weight12", 4,
         [](const SrgParams& p) -> std::optional<Recipe> {
             if (!(p == SrgParams{1288, 792, 476, 504})) return std::nullopt;
             return recipe("binary-golay-weight12", {}, "BinaryGolayWeight12");
         },
         [](const Recipe&) { return codeword_support_graph_1288(); }});
    reg.register_entry(
        {"johnson-distance", 4,
         [](const SrgParams& p) -> std::optional<Recipe> {
             if (p == SrgParams{120, 63, 30, 36})
                 return recipe("johnson-distance", {10, 3},
                               "JohnsonDistance(J(10,3), {2})");
             if (p == SrgParams{126, 25, 8, 4})
                 return recipe("johnson-distance", {9, 4},
                               "JohnsonDistance(J(9,4), {1,4})");
             return std::nullopt;
         },
         [](const Recipe& r) {
             if (r.args[0] == 10)
                 return distance_graph(johnson_graph(10, 3), {2});
             return distance_graph(johnson_graph(9, 4), {1, 4});
         }});
    reg.register_entry(
        {"mathon-rosa", 4,
         [](const SrgParams& p) -> std::optional<Recipe> {
             if (!(p == SrgParams{280, 117, 44, 52})) return std::nullopt;
             return recipe("mathon-rosa", {}, "MathonRosaPartitions");
         },
         [](const Recipe&) { return mathon_rosa_graph(); }});

    // ---------- tier 5: complement wrapper (handled by match()) ----------
    reg.register_entry({"complement", 5, nullptr, nullptr});

    return reg;
}

std::optional<Recipe> Registry::match(const SrgParams& p) const {
    for (const auto& e : entries_) {
        if (e.tier == 5) {
            // complement wrapper: p realizable iff complement_params(p) is
            SrgParams cp;
            try {
                cp = complement_params(p);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (cp == p) continue;
            for (const auto& inner : entries_) {
                if (inner.tier == 5 || !inner.matcher) continue;
                if (auto ir = inner.matcher(cp)) {
                    Recipe r;
                    r.entry_id = "complement";
                    r.args = {};
                    r.provenance = "Complement(" + ir->provenance + ")";
                    r.inner = std::make_shared<Recipe>(std::move(*ir));
                    return r;
                }
            }
            continue;
        }
        if (!e.matcher) continue;
        if (auto r = e.matcher(p)) return r;
    }
    return std::nullopt;
}

namespace {

const ConstructionEntry* find_entry(const std::vector<ConstructionEntry>& entries,
                                    const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace

LookupResult Registry::lookup(long long n, long long k, long long lambda,
                              std::optional<long long> mu) const {
    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](LookupResult r) {
        r.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        return r;
    };
    if (n < 4)
        return finish({LookupStatus::Infeasible, std::nullopt,
                       "identity: n must be at least 4", false, 0});
    if (!mu) {
        mu = derive_mu(n, k, lambda);
        if (!mu)
            return finish({LookupStatus::Infeasible, std::nullopt,
                           "identity: no integral mu completes (n,k,lambda)",
                           false, 0});
    }
    SrgParams p{n, k, lambda, *mu};
    FeasibilityVerdict verdict = check_feasibility(p, table_);
    if (verdict.infeasible)
        return finish({LookupStatus::Infeasible, std::nullopt,
                       std::string(rule_name(verdict.rule)) + ": " + verdict.detail,
                       false, 0});
    auto r = match(p);
    if (!r) return finish({LookupStatus::Unknown, std::nullopt,
                           "no implemented construction matches", false, 0});

    Graph g = build(*r);
    auto measured = is_strongly_regular(g);
    if (!measured || !(*measured == p))
        throw std::logic_error("registry invariant breach: construction " +
                               r->entry_id + " failed the oracle for " +
                               to_string(p));
    LookupResult res;
    res.status = LookupStatus::Exists;
    res.graph = std::move(g);
    res.detail = graph_on(r->provenance, n);
    res.degenerate = p.is_degenerate();
    return finish(std::move(res));
}

Graph Registry::build(const Recipe& r) const {
    if (r.entry_id == "complement") {
        if (!r.inner) throw std::logic_error("complement recipe without inner");
        return complement(build(*r.inner));
    }
    const ConstructionEntry* e = find_entry(entries_, r.entry_id);
    if (!e || !e->builder)
        throw std::logic_error("no builder for entry " + r.entry_id);
    return e->builder(r);
}

Existence Registry::existence(long long n, long long k, long long lambda,
                              std::optional<long long> mu) const {
    if (n < 4) return Existence::False;
    if (!mu) {
        mu = derive_mu(n, k, lambda);
        if (!mu) return Existence::False;
    }
    SrgParams p{n, k, lambda, *mu};
    if (check_feasibility(p, table_).infeasible) return Existence::False;
    return match(p) ? Existence::True : Existence::Unknown;
}

std::vector<ScanRow> Registry::scan(long long max_n) const {
    std::vector<ScanRow> rows;
    for_each_identity_tuple(max_n, [&](const SrgParams& p) {
        FeasibilityVerdict verdict = check_feasibility(p, table_);
        if (verdict.infeasible) {
            if (verdict.rule == FeasibilityRule::Identity ||
                verdict.rule == FeasibilityRule::Integrality)
                return;  // not part of the enumerated catalogue
            rows.push_back({p, Existence::False,
                            std::string(rule_name(verdict.rule)) + ": " +
                                verdict.detail});
            return;
        }
        if (auto r = match(p))
            rows.push_back({p, Existence::True, r->provenance});
        else
            rows.push_back({p, Existence::Unknown, ""});
    });
    return rows;
}

std::string Registry::scan_csv(long long max_n) const {
    std::ostringstream out;
    out << "n,k,lambda,mu,status,detail\n";
    for (const auto& row : scan(max_n)) {
        const char* status = row.status == Existence::True
                                 ? "exists"
                                 : (row.status == Existence::False ? "nonexistent"
                                                                   : "unknown");
        std::string detail = row.detail;
        for (auto& ch : detail)
            if (ch == ',') ch = ';';
        out << row.p.n << ',' << row.p.k << ',' << row.p.lambda << ','
            << row.p.mu << ',' << status << ',' << detail << '\n';
    }
    return out.str();
}

}  // namespace srg
