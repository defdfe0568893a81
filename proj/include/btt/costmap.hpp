#pragma once

// Cost maps over the configuration cube [0,1]^d, where coordinate i is the
// normalized arc-length progress of agent i along its curve. Includes the
// sampled bottleneck cost of a straight segment between two configurations.

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "btt/geometry.hpp"

namespace btt {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class CostMap {
  public:
    virtual ~CostMap() = default;
    virtual int dimension() const = 0;
    virtual double eval(std::span<const double> x) const = 0;

  protected:
    void check_dim(std::span<const double> x) const {
        if (int(x.size()) != dimension()) {
            throw std::invalid_argument("configuration dimension mismatch");
        }
    }
};

// Largest pairwise distance between agent positions.
class FrechetCostMap : public CostMap {
  public:
    explicit FrechetCostMap(std::vector<Polyline> curves) : curves_(std::move(curves)) {
        if (curves_.size() < 2) throw std::invalid_argument("need at least 2 curves");
    }

    int dimension() const override { return int(curves_.size()); }

    double eval(std::span<const double> x) const override {
        check_dim(x);
        positions(x);
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
            for (std::size_t j = i + 1; j < pts_.size(); ++j) {
                worst = std::max(worst, dist(pts_[i], pts_[j]));
            }
        }
        return worst;
    }

    const std::vector<Polyline>& curves() const { return curves_; }

  protected:
    void positions(std::span<const double> x) const {
        pts_.resize(curves_.size());
        for (std::size_t i = 0; i < curves_.size(); ++i) pts_[i] = curves_[i].eval(x[i]);
    }
    std::vector<Polyline> curves_;
    mutable std::vector<Point2> pts_;
};

// Reciprocal of the smallest pairwise distance; +inf when two agents coincide.
class SafestCoordCostMap : public FrechetCostMap {
  public:
    explicit SafestCoordCostMap(std::vector<Polyline> curves)
        : FrechetCostMap(std::move(curves)) {}

    double eval(std::span<const double> x) const override {
        check_dim(x);
        positions(x);
        double closest = kInf;
        for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
            for (std::size_t j = i + 1; j < pts_.size(); ++j) {
                closest = std::min(closest, dist(pts_[i], pts_[j]));
            }
        }
        return closest == 0.0 ? kInf : 1.0 / closest;
    }
};

// Distance from the leader (curve 0) to its nearest wall-visible follower;
// +inf when every follower is occluded.
class LeaderFollowCostMap : public CostMap {
  public:
    LeaderFollowCostMap(std::vector<Polyline> curves, std::vector<Segment> walls)
        : curves_(std::move(curves)), walls_(std::move(walls)) {
        if (curves_.size() < 2) throw std::invalid_argument("need a leader and a follower");
    }

    int dimension() const override { return int(curves_.size()); }

    double eval(std::span<const double> x) const override {
        check_dim(x);
        const Point2 lead = curves_[0].eval(x[0]);
        double best = kInf;
        for (std::size_t i = 1; i < curves_.size(); ++i) {
            const Point2 f = curves_[i].eval(x[i]);
            if (visible(lead, f, walls_)) best = std::min(best, dist(lead, f));
        }
        return best;
    }

    const std::vector<Polyline>& curves() const { return curves_; }
    const std::vector<Segment>& walls() const { return walls_; }

  private:
    std::vector<Polyline> curves_;
    std::vector<Segment> walls_;
};

// Closed-form maps used as test fixtures and oracle inputs.
class AnalyticCostMap : public CostMap {
  public:
    struct Bump {
        std::vector<double> center;
        double amplitude = 1.0;
        double width = 0.1;
    };

    static AnalyticCostMap constant(int d, double value) {
        AnalyticCostMap m(d);
        m.form_ = Form::constant;
        m.bias_ = value;
        return m;
    }

    static AnalyticCostMap linear(std::vector<double> weights, double bias) {
        AnalyticCostMap m(int(weights.size()));
        m.form_ = Form::linear;
        m.weights_ = std::move(weights);
        m.bias_ = bias;
        return m;
    }

    static AnalyticCostMap bumps(int d, std::vector<Bump> bumps, double bias) {
        AnalyticCostMap m(d);
        m.form_ = Form::bumps;
        m.bias_ = bias;
        m.bumps_ = std::move(bumps);
        for (const Bump& b : m.bumps_) {
            if (int(b.center.size()) != d) throw std::invalid_argument("bump center dimension");
            if (b.width <= 0.0) throw std::invalid_argument("bump width must be positive");
        }
        return m;
    }

    int dimension() const override { return d_; }

    double eval(std::span<const double> x) const override {
        check_dim(x);
        switch (form_) {
            case Form::constant:
                return bias_;
            case Form::linear: {
                double v = bias_;
                for (int i = 0; i < d_; ++i) v += weights_[i] * x[i];
                return v;
            }
            case Form::bumps: {
                double v = bias_;
                for (const Bump& b : bumps_) {
                    double q = 0.0;
                    for (int i = 0; i < d_; ++i) {
                        const double t = x[i] - b.center[i];
                        q += t * t;
                    }
                    v += b.amplitude * std::exp(-q / (2.0 * b.width * b.width));
                }
                return v;
            }
        }
        throw std::logic_error("unreachable");
    }

  private:
    enum class Form { constant, linear, bumps };

    explicit AnalyticCostMap(int d) : d_(d) {
        if (d < 1) throw std::invalid_argument("dimension must be positive");
    }

    int d_;
    Form form_ = Form::constant;
    double bias_ = 0.0;
    std::vector<double> weights_;
    std::vector<Bump> bumps_;
};

// Pass-through wrapper that counts evaluations.
class CountingCostMap : public CostMap {
  public:
    explicit CountingCostMap(const CostMap& inner) : inner_(&inner) {}

    int dimension() const override { return inner_->dimension(); }

    double eval(std::span<const double> x) const override {
        ++evals_;
        return inner_->eval(x);
    }

    std::uint64_t evals() const { return evals_; }
    void reset() { evals_ = 0; }

  private:
    const CostMap* inner_;
    mutable std::uint64_t evals_ = 0;
};

// Bottleneck cost of the segment z -> x, sampled at k+1 evenly spaced points
// (endpoints included) with k = ceil(|x-z| / h). Symmetric in its endpoints:
// sample t values come in mirrored pairs, so swapping z and x reproduces the
// same set of evaluation points bit for bit.
inline double edge_cost(const CostMap& m, std::span<const double> z,
                        std::span<const double> x, double h) {
    if (z.size() != x.size()) throw std::invalid_argument("endpoint dimension mismatch");
    if (!(h > 0.0)) throw std::invalid_argument("sampling step must be positive");
    const int d = int(z.size());

    double sq = 0.0;
    for (int i = 0; i < d; ++i) {
        const double t = x[i] - z[i];
        sq += t * t;
    }
    const long k = std::lround(std::ceil(std::sqrt(sq) / h));

    static thread_local std::vector<double> pt;
    pt.resize(d);

    double worst = -kInf;
    for (long j = 0; j <= k; ++j) {
        const double t = (k == 0) ? 0.0 : double(j) / double(k);
        const double s = (k == 0) ? 1.0 : double(k - j) / double(k);
        for (int i = 0; i < d; ++i) pt[i] = z[i] * s + x[i] * t;
        const double v = m.eval(pt);
        if (std::isnan(v)) throw std::domain_error("cost map produced NaN");
        if (v > worst) worst = v;
    }
    return worst;
}

}  // namespace btt
