#pragma once

// The implicit monotone random geometric graph: seeded uniform sampling of
// the parameter cube, the connection-radius formula, the coordinate-wise
// partial order, and a uniform-grid index answering radius queries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace btt {

inline constexpr std::uint32_t kNoId = std::numeric_limits<std::uint32_t>::max();

// Volume of the d-dimensional unit euclidean ball.
inline double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

// gamma = (1+eta) * 2 * (d * theta_d)^(-1/d), the radius prefactor.
inline double radius_gamma(int d, double eta) {
    if (d < 2) throw std::invalid_argument("dimension must be >= 2");
    if (!(eta > 0.0)) throw std::invalid_argument("radius slack must be positive");
    return (1.0 + eta) * 2.0 * std::pow(double(d) * unit_ball_volume(d), -1.0 / d);
}

// Connection radius r_n = gamma * (ln n / n)^(1/d).
inline double connection_radius(int n, int d, double eta) {
    if (n < 2) throw std::invalid_argument("sample count must be >= 2");
    return radius_gamma(d, eta) * std::pow(std::log(double(n)) / double(n), 1.0 / d);
}

struct GraphParams {
    int n = 0;
    int d = 2;
    double eta = 1.0;
    std::uint64_t seed = 0;
    double h = 0.01;
    std::optional<double> radius_override;  // test/oracle fixtures only

    double radius() const {
        return radius_override ? *radius_override : connection_radius(n, d, eta);
    }
};

struct SplitMix64 {
    std::uint64_t s;

    explicit SplitMix64(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0,1) from the top 53 bits.
    double next01() { return (next() >> 11) * (1.0 / 9007199254740992.0); }
};

// n interior samples plus the two cube corners: id 0 is the all-zeros start,
// id n+1 the all-ones goal. Stored as one flat row-major array.
struct SampleSet {
    int d = 0;
    int n = 0;
    std::vector<double> coords;

    std::uint32_t size() const { return std::uint32_t(n) + 2; }
    std::uint32_t start_id() const { return 0; }
    std::uint32_t goal_id() const { return std::uint32_t(n) + 1; }

    std::span<const double> point(std::uint32_t id) const {
        return {coords.data() + std::size_t(id) * d, std::size_t(d)};
    }
};

inline SampleSet sample(int n, int d, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("sample count must be >= 0");
    if (d < 2) throw std::invalid_argument("dimension must be >= 2");
    SampleSet s;
    s.d = d;
    s.n = n;
    s.coords.assign(std::size_t(n + 2) * d, 0.0);
    SplitMix64 rng(seed);
    for (int i = 1; i <= n; ++i) {
        for (int k = 0; k < d; ++k) s.coords[std::size_t(i) * d + k] = rng.next01();
    }
    for (int k = 0; k < d; ++k) s.coords[std::size_t(n + 1) * d + k] = 1.0;
    return s;
}

inline void check_same_dim(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("point dimension mismatch");
}

// x precedes y in every coordinate (ties allowed).
inline bool leq(std::span<const double> x, std::span<const double> y) {
    check_same_dim(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] <= y[i])) return false;
    }
    return true;
}

// Every coordinate of y exceeds the matching coordinate of x by at least delta.
inline bool leq_delta(std::span<const double> x, std::span<const double> y, double delta) {
    check_same_dim(x, y);
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] - x[i] >= delta)) return false;
    }
    return true;
}

inline double dist_sq(std::span<const double> x, std::span<const double> y) {
    check_same_dim(x, y);
    double q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = x[i] - y[i];
        q += t * t;
    }
    return q;
}

inline double point_dist(std::span<const double> x, std::span<const double> y) {
    return std::sqrt(dist_sq(x, y));
}

// Uniform grid over [0,1]^d with cells at least as wide as the query radius,
// so a query inspects only the 3^d cells around its center. Points can be
// deactivated (and are then never returned); the structure is built once.
class GridIndex {
  public:
    GridIndex(const SampleSet& samples, double cell_size) : samples_(&samples) {
        if (!(cell_size > 0.0)) throw std::invalid_argument("cell size must be positive");
        cell_size_ = cell_size;
        const std::uint32_t npts = samples.size();
        // Cells per axis: never finer than cell_size allows, and capped so the
        // total cell count stays proportional to the point count. Fewer, larger
        // cells keep the 3^d-neighborhood guarantee intact.
        const double cap = std::max(4096.0, 4.0 * double(npts));
        long m = long(1.0 / cell_size);
        m = std::min(m, long(std::pow(cap, 1.0 / samples.d)));
        m_ = std::max(1L, m);
        axis_width_ = 1.0 / double(m_);

        std::size_t total = 1;
        for (int k = 0; k < samples.d; ++k) total *= std::size_t(m_);
        cells_.resize(total);
        point_cell_.resize(npts);
        point_slot_.resize(npts);
        active_.assign(npts, 1);
        for (std::uint32_t id = 0; id < npts; ++id) {
            const std::size_t c = cell_of(samples.point(id));
            point_cell_[id] = std::uint32_t(c);
            point_slot_[id] = std::uint32_t(cells_[c].size());
            cells_[c].push_back(id);
        }
    }

    double cell_size() const { return axis_width_; }
    bool active(std::uint32_t id) const { return active_[id] != 0; }

    // Removes id from all future query results; repeated calls are no-ops.
    void deactivate(std::uint32_t id) {
        if (id >= active_.size() || !active_[id]) return;
        active_[id] = 0;
        auto& cell = cells_[point_cell_[id]];
        const std::uint32_t slot = point_slot_[id];
        const std::uint32_t moved = cell.back();
        cell[slot] = moved;
        point_slot_[moved] = slot;
        cell.pop_back();
    }

    // Active points within distance r of z (inclusive), excluding `exclude`.
    void radius_query(std::span<const double> z, double r,
                      std::vector<std::uint32_t>& out,
                      std::uint32_t exclude = kNoId) const {
        if (int(z.size()) != samples_->d) {
            throw std::invalid_argument("query dimension mismatch");
        }
        if (m_ > 1 && r > axis_width_ * (1.0 + 1e-9)) {
            throw std::invalid_argument("query radius exceeds grid cell size");
        }
        out.clear();
        const int d = samples_->d;
        const double rr = r * r;

        idx_lo_.resize(d);
        idx_hi_.resize(d);
        idx_cur_.resize(d);
        for (int k = 0; k < d; ++k) {
            const long c = axis_cell(z[k]);
            idx_lo_[k] = std::max(0L, c - 1);
            idx_hi_[k] = std::min(m_ - 1, c + 1);
            idx_cur_[k] = idx_lo_[k];
        }
        while (true) {
            std::size_t lin = 0;
            for (int k = d - 1; k >= 0; --k) lin = lin * std::size_t(m_) + std::size_t(idx_cur_[k]);
            for (const std::uint32_t id : cells_[lin]) {
                if (id == exclude) continue;
                if (dist_sq(z, samples_->point(id)) <= rr) out.push_back(id);
            }
            int k = 0;
            while (k < d && ++idx_cur_[k] > idx_hi_[k]) {
                idx_cur_[k] = idx_lo_[k];
                ++k;
            }
            if (k == d) break;
        }
    }

  private:
    long axis_cell(double x) const {
        long c = long(x * double(m_));
        return std::clamp(c, 0L, m_ - 1);
    }

    std::size_t cell_of(std::span<const double> p) const {
        std::size_t lin = 0;
        for (int k = samples_->d - 1; k >= 0; --k) {
            lin = lin * std::size_t(m_) + std::size_t(axis_cell(p[k]));
        }
        return lin;
    }

    const SampleSet* samples_;
    double cell_size_ = 0.0;
    double axis_width_ = 0.0;
    long m_ = 1;
    std::vector<std::vector<std::uint32_t>> cells_;
    std::vector<std::uint32_t> point_cell_;
    std::vector<std::uint32_t> point_slot_;
    std::vector<char> active_;
    mutable std::vector<long> idx_lo_, idx_hi_, idx_cur_;
};

inline std::vector<std::uint32_t> near(const GridIndex& index, std::span<const double> z,
                                       double r, std::uint32_t exclude = kNoId) {
    std::vector<std::uint32_t> out;
    index.radius_query(z, r, out, exclude);
    return out;
}

}  // namespace btt
