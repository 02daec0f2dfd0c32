#pragma once

#include "dc1lab/chain_graph.hpp"
#include "dc1lab/shadowing.hpp"
#include "dc1lab/systems.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dc1lab {

using Bits = std::vector<std::uint8_t>;

Bits parse_bits(std::string_view text);
std::string bits_to_string(const Bits& bits);

/// Blocks for one level n: two r-separated cycles through z and w and two
/// connecting chains, all of the same length a_n. Each path has a_n + 1
/// vertices; *_points are the palette indices of the pseudo-orbit entries.
struct LevelBlocks {
    std::size_t level = 0;
    Resolution resolution;
    std::size_t length = 0;
    Path gamma0, gamma1, alpha, beta;
    std::vector<std::uint16_t> gamma0_points, gamma1_points, alpha_points, beta_points;
};

struct GatheredBlocks {
    Point z;
    Point w;
    Rational r;
    std::vector<LevelBlocks> levels;
    /// Points used as pseudo-orbit entries (z, w, their orbits, and
    /// representatives of the other visited vertices).
    std::vector<Point> palette;
};

/// One resolution per level. Shifts reuse the system's cylinder depth at
/// every level; box systems use N = 8n boxes at delta = 1/n.
std::vector<Resolution> default_grids(const SystemSpec& spec, std::size_t n_max);

/// Throws PreconditionError when z, w are not related at some level or when
/// no common length exists, and Error naming the level when the separated
/// cycle search fails.
GatheredBlocks gather_blocks(const SystemSpec& spec, const Point& z, const Point& w,
                             const Rational& r, std::size_t n_max,
                             const std::vector<Resolution>& grids);

/// Minimal repetition counts: m_1 = 2 and, for n > 1, the least m >= 2 with
/// (a_n(m-2)+1) / (b_n + a_n m + 1) > 1 - 1/n.
struct Multiplicities {
    std::vector<BigInt> a, m, b, c;  // index n-1 holds level n

    std::size_t levels() const noexcept { return a.size(); }
};

Multiplicities schedule_multiplicities(std::span<const std::size_t> block_lengths);

/// The level-n inequality, checked exactly (n >= 2).
bool schedule_inequality_holds(const BigInt& a, const BigInt& m, const BigInt& b, std::size_t n);

struct Dc1Schedule {
    GatheredBlocks blocks;
    Multiplicities counts;

    std::size_t levels() const noexcept { return counts.levels(); }
    std::size_t a(std::size_t n) const;
    std::size_t m(std::size_t n) const;
    std::size_t b(std::size_t n) const;
    std::size_t c(std::size_t n) const;
};

Dc1Schedule build_schedule(GatheredBlocks blocks, std::size_t n_max);

/// xi(u) = c_{u_1,1} c_{u_2,2} ... with c_{0,n} = gamma0^m_n and
/// c_{1,n} = alpha gamma1^(m_n-2) beta. Each block contributes its first
/// a_n m_n entries; the final z is appended once.
struct XiOrbit {
    Bits u;
    PseudoOrbit orbit;
    std::vector<std::size_t> block_start;  // b_1 .. b_{|u|+1}
};

/// Throws PreconditionError when |u| exceeds the schedule or the orbit would
/// not fit in memory.
XiOrbit build_xi(const Bits& u, const Dc1Schedule& sched);

struct PairStatistics {
    std::vector<std::size_t> checkpoints;
    std::vector<Rational> delta_grid;
    std::vector<Rational> s_grid;
    std::vector<std::vector<std::uint64_t>> closeness_counts;   // [checkpoint][delta]
    std::vector<std::vector<std::uint64_t>> separation_counts;  // [checkpoint][s]

    double closeness(std::size_t cp, std::size_t k) const;
    double separation(std::size_t cp, std::size_t k) const;
};

/// Dyadic 2^-1 .. 2^-10.
std::vector<Rational> default_dyadic_grid();

/// Exact counts of d(f^i x0, f^i x1) < delta and > s over [0, c) per checkpoint.
PairStatistics dc1_statistics(const SystemSpec& spec, const Point& x0, const Point& x1,
                              std::span<const std::size_t> checkpoints,
                              const std::vector<Rational>& delta_grid,
                              const std::vector<Rational>& s_grid);

struct CertificateLevel {
    std::size_t n = 0;
    std::size_t checkpoint = 0;  // c_n
    bool agree = false;          // u_n == v_n
    std::string kind;            // "closeness" or "separation"
    Rational threshold;          // delta, or r/3
    std::uint64_t measured = 0;
    double eps0 = 0.0;
    double eps1 = 0.0;
    double bound = 0.0;          // with tracking terms
    double plain_bound = 0.0;    // c_n (1 - 1/n)
    double margin = 0.0;         // measured - bound
    bool pass = false;
};

struct Dc1Certificate {
    std::string system;
    Point z, w;
    Rational r;
    Rational closeness_delta;
    Bits u, v;
    std::vector<CertificateLevel> levels;
    bool passed = false;
    std::string verdict;
};

/// Everything one end-to-end run produces.
struct Dc1Run {
    Dc1Schedule schedule;
    XiOrbit xi_u, xi_v;
    SymbolSeq x_u, x_v;
    Dc1Certificate certificate;
};

/// Builds xi(u), xi(v), shadows them exactly, counts at every c_n and checks
/// the closeness bound where u_n = v_n and the separation bound (at r/3)
/// where they differ. Shifts of finite type only; u != v required.
Dc1Run certify_dc1(const SystemSpec& spec, const Dc1Schedule& sched, const Bits& u, const Bits& v,
                   const Rational& closeness_delta = Rational(1, 2));

/// Shorthand: gather, schedule and certify with n_max = |u|.
Dc1Run run_dc1(const SystemSpec& spec, const Point& z, const Point& w, const Rational& r,
               const Bits& u, const Bits& v, const Rational& closeness_delta = Rational(1, 2));

/// Four chains gamma_ij (i, j in {x, y}) of common length a at the chosen
/// cylinder depth.
struct FactorConstruction {
    Point x, y;
    std::size_t depth = 0;
    Rational ball_radius;
    std::optional<Rational> eps;
    ChainGraph graph;
    VertexId x_vertex = 0, y_vertex = 0;
    std::size_t length = 0;
    std::array<std::array<Path, 2>, 2> chains;
};

/// Shifts only. With eps: requires 0 < eps < d(x,y)/2 and works at the least
/// depth k >= system depth with 2^-k <= eps. Without eps the depth-k cylinders
/// of x and y serve as the neighbourhoods and must be disjoint.
FactorConstruction factor_construct(const SystemSpec& spec, const Point& x, const Point& y,
                                    std::optional<Rational> eps = std::nullopt);

struct FactorSample {
    Bits s;
    SymbolSeq point;
    std::vector<Rational> ball_distances;  // d(f^{(i-1)a} x(s), x_{s_i})
    bool ball_condition = false;
};

FactorSample sample_factor(const SystemSpec& spec, const FactorConstruction& f, const Bits& s);

struct EntropyBound {
    std::size_t length = 0;
    double lower_bound = 0.0;   // log(2) / a
    double sft_entropy = 0.0;   // log of the adjacency spectral radius
};

EntropyBound entropy_lower_bound(const SystemSpec& spec, const FactorConstruction& f);

struct NearPair {
    FactorConstruction factor;
    Point p, q;  // shadows of xi(0^inf), xi(1^inf)
    Point z, w;  // picked from the omega-limit of (p, q) under f^a
    Rational dz, dw;
    Rational r;
    Dc1Run run;
};

/// The entropy-pair-to-DC1 route: factor at (x, y), the periodic shadow pair
/// over 0^inf and 1^inf, then a certified run at (z, w) with u = 0^n,
/// v = (01)^(n/2).
NearPair approximate_dc1_near(const SystemSpec& spec, const Point& x, const Point& y,
                              const Rational& eps, std::size_t n_max = 6);

}  // namespace dc1lab
