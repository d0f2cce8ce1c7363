/**
 * h*-vectors of lattice simplices.
 *
 * The generic route enumerates the lattice points of the fundamental
 * parallelepiped through the Smith normal form of the lifted vertex matrix
 * and buckets them by height. Closed forms cover trees, odd cycles, and
 * complete graphs. An independent route counts lattice points of the
 * dilates t*P by a box scan and inverts the Ehrhart series relation.
 */
#pragma once

#include "lapsim/graph.hpp"
#include "lapsim/linalg.hpp"
#include "lapsim/matrix.hpp"
#include "lapsim/numeric.hpp"
#include "lapsim/simplex.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace lapsim {

enum class HStarStrategy {
    generic_snf,
    cycle_closed_form,
    complete_compositions,
    tree_closed_form,
    dilate_interpolation,
};

inline std::string_view to_string(HStarStrategy s) {
    switch (s) {
        case HStarStrategy::generic_snf: return "generic_snf";
        case HStarStrategy::cycle_closed_form: return "cycle_closed_form";
        case HStarStrategy::complete_compositions: return "complete_compositions";
        case HStarStrategy::tree_closed_form: return "tree_closed_form";
        case HStarStrategy::dilate_interpolation: return "dilate_interpolation";
    }
    return "?";
}

inline HStarStrategy parse_strategy(std::string_view s) {
    for (auto k : {HStarStrategy::generic_snf, HStarStrategy::cycle_closed_form,
                   HStarStrategy::complete_compositions, HStarStrategy::tree_closed_form,
                   HStarStrategy::dilate_interpolation})
        if (s == to_string(k)) return k;
    throw ParseError("unknown h* strategy '" + std::string(s) + "'");
}

/// (h*_0, ..., h*_d) plus the strategy that produced it. Equality compares
/// entries only.
struct HStarVector {
    IntVector entries;
    HStarStrategy strategy = HStarStrategy::generic_snf;

    std::size_t size() const { return entries.size(); }
    const Integer& operator[](std::size_t i) const { return entries[i]; }

    Integer sum() const {
        Integer s = 0;
        for (const auto& x : entries) s += x;
        return s;
    }

    friend bool operator==(const HStarVector& a, const HStarVector& b) { return a.entries == b.entries; }
    friend bool operator==(const HStarVector& a, const IntVector& b) { return a.entries == b; }
};

inline std::string to_string(const HStarVector& h, std::string_view sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out += sep;
        out += h[i].str();
    }
    return out;
}

struct EnumerationLimits {
    Integer fpp_cap = 10'000'000;
    /// Candidate points the dilate scan may test before giving up.
    Integer box_cap = 100'000'000;
    unsigned jobs = 1;
};

// ---------------------------------------------------------------------------
// Fundamental parallelepiped

struct FppPoint {
    IntVector point;   ///< last coordinate is the height
    Integer height;
    RatVector coeffs;  ///< lambda, entries in [0, 1), lambda * [V | 1] = point
};

/**
 * Walks Z^n / (row lattice of M), M = [V | 1], via U * M * V' = D.
 *
 * With q ranging over prod Z/d_i, the coefficient vector of the coset of
 * q * V'^{-1} is q * D^{-1} * U; taking fractional parts lands on the unique
 * parallelepiped representative. Everything is kept as numerators b over
 * N = |det M|, so b_j = sum_i q_i (N / d_i) U_ij  (mod N).
 */
class FppEnumerator {
public:
    FppEnumerator(const IntMatrix& vertices, const Integer& cap) {
        require_simplex_shape(vertices);
        lifted_ = vertices.with_ones_column();
        volume_ = abs_value(determinant(lifted_));
        if (volume_ == 0) throw SingularityError("fpp: vertices are affinely dependent");
        if (volume_ > cap)
            throw FeasibilityError("fpp: enumeration needs " + volume_.str() +
                                       " parallelepiped points, above the cap of " + cap.str(),
                                   volume_);
        auto snf = smith_normal_form(lifted_);
        const std::size_t n = lifted_.rows();
        for (std::size_t i = 0; i < n; ++i) {
            const Integer& d = snf.D(i, i);
            if (d == 1) continue;
            radices_.push_back(static_cast<std::uint64_t>(d));
            IntVector step(n);
            for (std::size_t j = 0; j < n; ++j) step[j] = floor_mod(volume_ / d * snf.U(i, j), volume_);
            steps_.push_back(std::move(step));
        }
        count_ = static_cast<std::uint64_t>(volume_);
    }

    std::uint64_t count() const { return count_; }
    const Integer& denominator() const { return volume_; }
    const IntMatrix& lifted() const { return lifted_; }
    std::size_t n() const { return lifted_.rows(); }

    /// Calls f(b) with the numerator vector of every point with index in
    /// [begin, end) of the mixed-radix order.
    template <class F>
    void for_each_numerators(std::uint64_t begin, std::uint64_t end, F&& f) const {
        if (begin >= end) return;
        const std::size_t n = lifted_.rows();
        std::vector<std::uint64_t> digits(radices_.size());
        std::uint64_t rest = begin;
        for (std::size_t k = 0; k < radices_.size(); ++k) {
            digits[k] = rest % radices_[k];
            rest /= radices_[k];
        }
        IntVector b(n, Integer(0));
        for (std::size_t k = 0; k < radices_.size(); ++k)
            for (std::size_t j = 0; j < n; ++j) b[j] += steps_[k][j] * digits[k];
        for (auto& x : b) x = floor_mod(x, volume_);

        for (std::uint64_t idx = begin; idx < end; ++idx) {
            f(static_cast<const IntVector&>(b));
            // odometer increment
            for (std::size_t k = 0; k < radices_.size(); ++k) {
                if (++digits[k] < radices_[k]) {
                    for (std::size_t j = 0; j < n; ++j) {
                        b[j] += steps_[k][j];
                        if (b[j] >= volume_) b[j] -= volume_;
                    }
                    break;
                }
                digits[k] = 0;
                // undo radix-1 steps: subtract (r-1)*step, i.e. add step once more mod N
                for (std::size_t j = 0; j < n; ++j)
                    b[j] = floor_mod(b[j] - steps_[k][j] * (radices_[k] - 1), volume_);
            }
        }
    }

    Integer height_of(const IntVector& b) const {
        Integer s = 0;
        for (const auto& x : b) s += x;
        if (s % volume_ != 0) throw InconsistencyError("fpp: coefficient sum is not integral");
        return s / volume_;
    }

    FppPoint point_of(const IntVector& b) const {
        IntVector p = row_times(b, lifted_);
        for (auto& x : p) {
            if (x % volume_ != 0) throw InconsistencyError("fpp: non-integral parallelepiped point");
            x /= volume_;
        }
        RatVector coeffs(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) coeffs[i] = Rational(b[i], volume_);
        Integer h = p.back();
        return {std::move(p), std::move(h), std::move(coeffs)};
    }

private:
    IntMatrix lifted_;
    Integer volume_;
    std::vector<std::uint64_t> radices_;
    std::vector<IntVector> steps_;
    std::uint64_t count_ = 0;
};

/// Visit every lattice point of the fundamental parallelepiped.
inline void for_each_fpp_point(const IntMatrix& vertices, const Integer& cap,
                               const std::function<void(const FppPoint&)>& visit) {
    FppEnumerator e(vertices, cap);
    e.for_each_numerators(0, e.count(), [&](const IntVector& b) { visit(e.point_of(b)); });
}

inline std::vector<FppPoint> fpp_points(const IntMatrix& vertices, const Integer& cap = 10'000'000) {
    std::vector<FppPoint> out;
    for_each_fpp_point(vertices, cap, [&](const FppPoint& p) { out.push_back(p); });
    return out;
}

/**
 * Height histogram of the parallelepiped points. Work is split into `jobs`
 * contiguous index ranges; per-range histograms are summed, so the result
 * does not depend on the split.
 */
inline IntVector fpp_height_counts(const IntMatrix& vertices, const EnumerationLimits& limits = {}) {
    FppEnumerator e(vertices, limits.fpp_cap);
    const std::size_t n = e.n();
    const std::uint64_t total = e.count();
    const unsigned jobs = std::max(1u, std::min<unsigned>(limits.jobs, static_cast<unsigned>(
                                                                          std::min<std::uint64_t>(total, 64))));
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(n, 0));
    auto work = [&](unsigned job) {
        const std::uint64_t begin = total * job / jobs;
        const std::uint64_t end = total * (job + 1) / jobs;
        e.for_each_numerators(begin, end, [&](const IntVector& b) {
            Integer h = e.height_of(b);
            partial[job].at(static_cast<std::size_t>(h)) += 1;
        });
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
        for (auto& t : threads) t.join();
    }
    IntVector counts(n, Integer(0));
    for (const auto& p : partial)
        for (std::size_t i = 0; i < n; ++i) counts[i] += p[i];
    return counts;
}

inline HStarVector hstar_generic(const IntMatrix& vertices, const EnumerationLimits& limits = {}) {
    return {fpp_height_counts(vertices, limits), HStarStrategy::generic_snf};
}

// ---------------------------------------------------------------------------
// Closed forms

/**
 * Odd cycles: parallelepiped points are ((a*1 + b*(0..n-1)) mod n) / n * [L_B | 1]
 * for a, b in Z/n, at height (1/n) sum_j ((a + j b) mod n).
 */
inline HStarVector hstar_cycle_closed_form(std::size_t n) {
    if (n < 3 || n % 2 == 0) throw DomainError("hstar_cycle_closed_form: n must be odd and >= 3");
    IntVector counts(n, Integer(0));
    for (std::size_t alpha = 0; alpha < n; ++alpha)
        for (std::size_t beta = 0; beta < n; ++beta) {
            std::size_t s = 0;
            for (std::size_t j = 0; j < n; ++j) s += (alpha + j * beta) % n;
            if (s % n != 0) throw InconsistencyError("hstar_cycle_closed_form: fractional height");
            counts.at(s / n) += 1;
        }
    return {std::move(counts), HStarStrategy::cycle_closed_form};
}

/// Weak compositions of `total` into `parts` parts, each in [0, max_part],
/// by inclusion-exclusion on ((1 - x^{m+1}) / (1 - x))^parts.
inline Integer bounded_weak_compositions(std::size_t total, std::size_t parts, std::size_t max_part) {
    if (parts == 0) return total == 0 ? 1 : 0;
    Integer result = 0;
    const std::size_t width = max_part + 1;
    for (std::size_t k = 0; k <= parts && k * width <= total; ++k) {
        Integer term = binomial(Integer(parts), static_cast<long long>(k)) *
                       binomial(Integer(total - k * width + parts - 1), static_cast<long long>(parts - 1));
        result += (k % 2 == 0) ? term : Integer(-term);
    }
    return result;
}

/// Complete graphs: h*_i counts weak compositions of i*n into n parts below n.
inline HStarVector hstar_complete(std::size_t n) {
    if (n < 2) throw DomainError("hstar_complete: n must be at least 2");
    IntVector h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = bounded_weak_compositions(i * n, n, n - 1);
    return {std::move(h), HStarStrategy::complete_compositions};
}

/// Trees: T_G is equivalent to S_{n-1}(1), whose h* is all ones.
inline HStarVector hstar_tree(std::size_t n) {
    if (n < 2) throw DomainError("hstar_tree: n must be at least 2");
    return {IntVector(n, Integer(1)), HStarStrategy::tree_closed_form};
}

// ---------------------------------------------------------------------------
// Ehrhart polynomial

/// L(t) = sum_i h*_i C(t + d - i, d).
inline Integer ehrhart_eval(const HStarVector& h, const Integer& t) {
    if (h.size() == 0) throw DomainError("ehrhart_eval: empty h*-vector");
    if (t < 0) throw DomainError("ehrhart_eval: t must be nonnegative");
    const long long d = static_cast<long long>(h.size()) - 1;
    Integer total = 0;
    for (long long i = 0; i <= d; ++i) total += h[static_cast<std::size_t>(i)] * binomial(t + d - i, d);
    return total;
}

/**
 * Invert L(t) = sum_i h*_i C(t + d - i, d) for t = 0..d. The system is
 * lower triangular with unit diagonal.
 */
inline HStarVector hstar_from_counts(const IntVector& counts) {
    if (counts.empty()) throw DomainError("hstar_from_counts: no counts supplied");
    if (counts[0] != 1) throw InconsistencyError("hstar_from_counts: L(0) = " + counts[0].str() + ", expected 1");
    const long long d = static_cast<long long>(counts.size()) - 1;
    IntVector h(counts.size());
    for (long long t = 0; t <= d; ++t) {
        Integer v = counts[static_cast<std::size_t>(t)];
        for (long long i = 0; i < t; ++i) v -= h[static_cast<std::size_t>(i)] * binomial(Integer(t + d - i), d);
        if (v < 0)
            throw InconsistencyError("hstar_from_counts: negative coefficient h*_" + std::to_string(t) +
                                     " = " + v.str());
        h[static_cast<std::size_t>(t)] = v;
    }
    return {std::move(h), HStarStrategy::dilate_interpolation};
}

// ---------------------------------------------------------------------------
// Dilate counting (independent oracle route)

/**
 * Scans the integer box spanned by entrywise min/max of t * (vertex rows),
 * accepting x when the barycentric coordinates of (x, t) with respect to
 * [V | 1] are all nonnegative (all positive when `interior` is set). Coordinates are fixed one at a time; for the
 * next coordinate only the values that can still satisfy every barycentric
 * inequality (given the box bounds of the coordinates after it) are tried,
 * so no point of the box that lies in t * P is ever skipped.
 */
class DilateScanner {
public:
    DilateScanner(const IntMatrix& vertices, const Integer& t, const Integer& cap, bool interior = false)
        : t_(t), cap_(cap), margin_(interior ? 1 : 0) {
        require_simplex_shape(vertices);
        if (t < 0) throw DomainError("count_dilate_points: t must be nonnegative");
        auto inv = scaled_inverse(vertices.with_ones_column());
        weights_ = inv.adjugate;
        if (inv.det < 0)
            for (std::size_t r = 0; r < weights_.rows(); ++r) weights_.negate_row(r);
        d_ = vertices.cols();
        n_ = vertices.rows();
        lo_.resize(d_);
        hi_.resize(d_);
        for (std::size_t k = 0; k < d_; ++k) {
            Integer mn = vertices(0, k), mx = vertices(0, k);
            for (std::size_t r = 1; r < n_; ++r) {
                mn = std::min(mn, vertices(r, k));
                mx = std::max(mx, vertices(r, k));
            }
            lo_[k] = mn * t;
            hi_[k] = mx * t;
        }
        // slack_[k][i]: largest contribution coordinates k..d-1 can add to form i
        slack_.assign(d_ + 1, IntVector(n_, Integer(0)));
        for (std::size_t k = d_; k-- > 0;)
            for (std::size_t i = 0; i < n_; ++i) {
                const Integer& w = weights_(k, i);
                slack_[k][i] = slack_[k + 1][i] + std::max(lo_[k] * w, hi_[k] * w);
            }
    }

    template <class F>
    void scan(F&& on_point) {
        IntVector acc(n_);
        for (std::size_t i = 0; i < n_; ++i) acc[i] = t_ * weights_(d_, i);
        IntVector x(d_);
        visited_ = 0;
        recurse(0, acc, x, on_point);
    }

    const Integer& visited() const { return visited_; }

private:
    template <class F>
    void recurse(std::size_t k, IntVector& acc, IntVector& x, F& on_point) {
        if (k == d_) {
            for (const auto& a : acc)
                if (a < margin_) return;
            on_point(static_cast<const IntVector&>(x));
            return;
        }
        Integer lower = lo_[k], upper = hi_[k];
        for (std::size_t i = 0; i < n_; ++i) {
            const Integer& w = weights_(k, i);
            Integer room = acc[i] + slack_[k + 1][i] - margin_;  // need room + x*w >= 0
            if (w == 0) {
                if (room < 0) return;
            } else if (w > 0) {
                lower = std::max(lower, Integer(-floor_div(room, w)));
            } else {
                upper = std::min(upper, floor_div(room, Integer(-w)));
            }
        }
        if (lower > upper) return;
        visited_ += upper - lower + 1;
        if (visited_ > cap_)
            throw FeasibilityError("count_dilate_points: scan exceeds the cap of " + cap_.str() +
                                       " candidate points",
                                   visited_);
        for (std::size_t i = 0; i < n_; ++i) acc[i] += lower * weights_(k, i);
        for (Integer v = lower; v <= upper; ++v) {
            x[k] = v;
            recurse(k + 1, acc, x, on_point);
            for (std::size_t i = 0; i < n_; ++i) acc[i] += weights_(k, i);
        }
        for (std::size_t i = 0; i < n_; ++i) acc[i] -= (upper + 1) * weights_(k, i);
    }

    Integer t_;
    Integer cap_;
    Integer margin_;
    IntMatrix weights_;
    std::size_t d_ = 0;
    std::size_t n_ = 0;
    IntVector lo_, hi_;
    std::vector<IntVector> slack_;
    Integer visited_ = 0;
};

/// |t * P  intersect  Z^d|
inline Integer count_dilate_points(const IntMatrix& vertices, const Integer& t,
                                   const EnumerationLimits& limits = {}) {
    DilateScanner scanner(vertices, t, limits.box_cap);
    Integer count = 0;
    scanner.scan([&](const IntVector&) { ++count; });
    return count;
}

/// Lattice points of P itself, in lexicographic order.
inline std::vector<IntVector> lattice_points(const IntMatrix& vertices, const EnumerationLimits& limits = {}) {
    DilateScanner scanner(vertices, 1, limits.box_cap);
    std::vector<IntVector> out;
    scanner.scan([&](const IntVector& x) { out.push_back(x); });
    return out;
}

/// Lattice points in the relative interior of t * P.
inline Integer count_interior_points(const IntMatrix& vertices, const Integer& t,
                                     const EnumerationLimits& limits = {}) {
    DilateScanner scanner(vertices, t, limits.box_cap, true);
    Integer count = 0;
    scanner.scan([&](const IntVector&) { ++count; });
    return count;
}

/**
 * h* from lattice point counts alone. Only dilates up to about d/2 are
 * scanned: reciprocity gives L(-t) = (-1)^d * #interior(t * P), so
 * L(-floor(d/2)) .. L(ceil(d/2)) are d + 1 consecutive values of a degree-d
 * polynomial, and the rest of L(0..d) follows by extending the difference
 * table.
 */
inline HStarVector hstar_dilate(const IntMatrix& vertices, const EnumerationLimits& limits = {}) {
    require_simplex_shape(vertices);
    const std::size_t d = vertices.cols();
    const std::size_t back = d / 2;
    IntVector values;  // L(-back), ..., L(d - back)
    for (std::size_t t = back; t >= 1; --t) {
        Integer inner = count_interior_points(vertices, Integer(t), limits);
        values.push_back(d % 2 ? Integer(-inner) : inner);
    }
    for (std::size_t t = 0; t + back <= d; ++t) values.push_back(count_dilate_points(vertices, Integer(t), limits));

    // After the loop tail[d - j] is the j-th difference ending at the last value.
    IntVector tail(values);
    for (std::size_t j = 1; j <= d; ++j)
        for (std::size_t i = 0; i + j <= d; ++i) tail[i] = tail[i + 1] - tail[i];
    std::reverse(tail.begin(), tail.end());
    IntVector counts(values.begin() + static_cast<std::ptrdiff_t>(back), values.end());
    for (std::size_t step = 0; step < back; ++step) {
        for (std::size_t j = d; j-- > 0;) tail[j] += tail[j + 1];
        counts.push_back(tail[0]);
    }
    return hstar_from_counts(counts);
}

// ---------------------------------------------------------------------------
// Laplacian simplex entry points

inline bool strategy_applies(const LaplacianSimplex& s, HStarStrategy strategy) {
    const Graph& g = s.graph();
    switch (strategy) {
        case HStarStrategy::generic_snf:
        case HStarStrategy::dilate_interpolation: return true;
        case HStarStrategy::cycle_closed_form: return g.is_cycle() && g.n() % 2 == 1;
        case HStarStrategy::complete_compositions: return g.is_complete();
        case HStarStrategy::tree_closed_form: return g.is_tree();
    }
    return false;
}

/// The closed form that applies to this graph, if any.
inline std::optional<HStarStrategy> fast_path_for(const LaplacianSimplex& s) {
    for (auto k : {HStarStrategy::tree_closed_form, HStarStrategy::cycle_closed_form,
                   HStarStrategy::complete_compositions})
        if (strategy_applies(s, k)) return k;
    return std::nullopt;
}

/**
 * h*(T_G). Without an explicit strategy a closed form is used when the graph
 * is a tree, an odd cycle, or complete, and the generic enumeration
 * otherwise.
 */
inline HStarVector hstar(const LaplacianSimplex& s, std::optional<HStarStrategy> strategy = std::nullopt,
                         const EnumerationLimits& limits = {}) {
    HStarStrategy chosen = strategy ? *strategy : fast_path_for(s).value_or(HStarStrategy::generic_snf);
    if (!strategy_applies(s, chosen))
        throw DomainError("hstar: strategy " + std::string(to_string(chosen)) + " does not apply to this graph");
    switch (chosen) {
        case HStarStrategy::generic_snf: return hstar_generic(s.vertex_matrix(), limits);
        case HStarStrategy::dilate_interpolation: return hstar_dilate(s.vertex_matrix(), limits);
        case HStarStrategy::cycle_closed_form: return hstar_cycle_closed_form(s.n());
        case HStarStrategy::complete_compositions: return hstar_complete(s.n());
        case HStarStrategy::tree_closed_form: return hstar_tree(s.n());
    }
    throw DomainError("hstar: unknown strategy");
}

inline std::vector<FppPoint> fpp_points(const LaplacianSimplex& s, const Integer& cap = 10'000'000) {
    return fpp_points(s.vertex_matrix(), cap);
}

inline Integer count_dilate_points(const LaplacianSimplex& s, const Integer& t, const EnumerationLimits& limits = {}) {
    return count_dilate_points(s.vertex_matrix(), t, limits);
}

inline std::vector<IntVector> lattice_points(const LaplacianSimplex& s, const EnumerationLimits& limits = {}) {
    return lattice_points(s.vertex_matrix(), limits);
}

}  // namespace lapsim
