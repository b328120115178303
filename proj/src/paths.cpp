#include "hk/paths.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "hk/errors.hpp"

namespace hk {

PathModel PathModel::constant(int m, Scalar a, Scalar b, bool restricted) {
    if (m < 1) throw std::invalid_argument("path model needs m >= 1");
    return {m, [a](long) { return a; }, [b](long) { return b; }, restricted};
}

PathModel PathModel::shifted(int m, Scalar a, Scalar b, Scalar t) {
    if (m < 1) throw std::invalid_argument("path model needs m >= 1");
    Scalar ground = a + t;
    return {m, [a, ground](long h) { return h == 0 ? ground : a; }, [b](long) { return b; }, true};
}

PathModel PathModel::for_spec(const SequenceSpec& spec) {
    switch (spec.family) {
        case Family::restricted: return constant(spec.m, spec.a, spec.b, true);
        case Family::shifted: return shifted(spec.m, spec.a, spec.b, spec.t);
        case Family::unrestricted: break;
    }
    return constant(spec.m, spec.a, spec.b, false);
}

Scalar path_weight_to(const PathModel& model, long n, long height) {
    if (n < 0) throw std::invalid_argument("path length must be non-negative");
    const long top = n;
    const long bottom = model.restricted ? 0 : -n;
    const long rows = top - bottom + 1;
    const long drop = model.m - 1;  // horizontal extent of a down-step
    if (height < bottom || height > top) return 0;
    // w[x][h - bottom]
    std::vector<std::vector<Scalar>> w(static_cast<std::size_t>(n + 1), std::vector<Scalar>(static_cast<std::size_t>(rows)));
    auto cell = [&](long x, long h) -> Scalar& { return w[static_cast<std::size_t>(x)][static_cast<std::size_t>(h - bottom)]; };
    cell(0, 0) = 1;
    for (long x = 0; x <= n; ++x) {
        if (x > 0)
            for (long h = bottom; h <= top; ++h) {
                Scalar v;
                if (h - 1 >= bottom && !cell(x - 1, h - 1).is_zero()) v += cell(x - 1, h - 1);
                if (!cell(x - 1, h).is_zero()) v += model.s(h) * cell(x - 1, h);
                if (drop > 0 && x - drop >= 0 && h + 1 <= top && !cell(x - drop, h + 1).is_zero())
                    v += model.t(h) * cell(x - drop, h + 1);
                cell(x, h) = std::move(v);
            }
        if (drop == 0)
            // vertical down-steps within the column, from the top down
            for (long h = top - 1; h >= bottom; --h)
                if (!cell(x, h + 1).is_zero()) cell(x, h) += model.t(h) * cell(x, h + 1);
    }
    return cell(n, height);
}

Scalar path_weight_dp(const PathModel& model, long n) { return path_weight_to(model, n, 0); }

namespace {

// Depth-first enumeration of vertex-disjoint path systems. Each complete
// system is reported by its step profile: the number of level steps and of
// down-steps ending at each height. Weights depend only on the profile.
class SystemEnumerator {
public:
    SystemEnumerator(const PathSystemQuery& q, bool keep_zero_steps)
        : q_(q),
          keep_zero_(keep_zero_steps),
          used_(q.n, false),
          sigma_(q.n, 0),
          left_(-static_cast<long>(q.n)),
          width_(static_cast<long>(2 * q.n + q.k) + 1),
          depth_(q.model.restricted ? 0 : width_),
          rows_(width_ + depth_ + 1),
          occupied_(static_cast<std::size_t>(width_ * rows_), false),
          profile_(static_cast<std::size_t>(2 * rows_), 0) {
        for (long h = -depth_; h <= width_; ++h) {
            level_zero_.push_back(q.model.s(h).is_zero());
            down_zero_.push_back(q.model.t(h).is_zero());
        }
    }

    template <typename Visit>
    void run(Visit&& visit) {
        visit_ = [&](bool horizontal) { visit(profile_, horizontal, sign()); };
        next_path(0, false);
    }

    /// Height of profile slot i, and whether it counts level steps.
    long slot_height(std::size_t i) const { return static_cast<long>(i % static_cast<std::size_t>(rows_)) - depth_; }
    bool slot_is_level(std::size_t i) const { return i < static_cast<std::size_t>(rows_); }

private:
    int sign() const {
        int inversions = 0;
        for (std::size_t i = 0; i < sigma_.size(); ++i)
            for (std::size_t j = i + 1; j < sigma_.size(); ++j)
                if (sigma_[i] > sigma_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    std::size_t row(long h) const { return static_cast<std::size_t>(h + depth_); }

    std::vector<bool>::reference occupied(long x, long h) {
        return occupied_[static_cast<std::size_t>(x - left_) * static_cast<std::size_t>(rows_) + row(h)];
    }

    bool reachable(long x, long h, long target) const {
        const long width = target - x;
        if (width < 0) return false;
        if (h >= 0) return width >= static_cast<long>(q_.model.m - 1) * h;
        return width >= -h;
    }

    void next_path(std::size_t i, bool horizontal) {
        if (i == q_.n) {
            visit_(horizontal);
            return;
        }
        const long x0 = -static_cast<long>(i);
        if (occupied(x0, 0)) return;
        for (std::size_t j = 0; j < q_.n; ++j) {
            if (used_[j]) continue;
            used_[j] = true;
            sigma_[i] = j;
            occupied(x0, 0) = true;
            walk(i, x0, 0, static_cast<long>(j + q_.k), horizontal);
            occupied(x0, 0) = false;
            used_[j] = false;
        }
    }

    void step(std::size_t i, long x, long h, long target, bool horizontal, int kind) {
        if (h < -depth_ || h > width_) return;
        if (!keep_zero_ && ((kind == 1 && level_zero_[row(h)]) || (kind == 2 && down_zero_[row(h)]))) return;
        if (!reachable(x, h, target)) return;
        auto cell = occupied(x, h);
        if (cell) return;
        cell = true;
        const std::size_t slot = kind == 1 ? row(h) : row(h) + static_cast<std::size_t>(rows_);
        if (kind) ++profile_[slot];
        walk(i, x, h, target, horizontal || kind == 1);
        if (kind) --profile_[slot];
        occupied(x, h) = false;
    }

    void walk(std::size_t i, long x, long h, long target, bool horizontal) {
        if (x == target && h == 0) {
            next_path(i + 1, horizontal);
            return;
        }
        step(i, x + 1, h + 1, target, horizontal, 0);
        step(i, x + 1, h, target, horizontal, 1);
        step(i, x + q_.model.m - 1, h - 1, target, horizontal, 2);
    }

    const PathSystemQuery& q_;
    bool keep_zero_;
    std::vector<bool> used_;
    std::vector<std::size_t> sigma_;
    long left_, width_, depth_, rows_;
    std::vector<bool> occupied_;
    std::vector<bool> level_zero_, down_zero_;
    std::vector<int> profile_;
    std::function<void(bool)> visit_;
};

void check_cap(const PathSystemQuery& q) {
    if (q.n > q.cap)
        throw CapExceeded("path-system enumeration is capped at n = " + std::to_string(q.cap));
}

}  // namespace

Scalar lgv_det_oracle(const PathSystemQuery& q) {
    check_cap(q);
    if (q.n == 0) return 1;
    std::map<std::vector<int>, long> signed_counts;
    SystemEnumerator e(q, false);
    e.run([&](const std::vector<int>& profile, bool, int sign) { signed_counts[profile] += sign; });
    Scalar total;
    for (const auto& [profile, count] : signed_counts) {
        if (count == 0) continue;
        Scalar w(count);
        for (std::size_t i = 0; i < profile.size(); ++i) {
            if (profile[i] == 0) continue;
            const long h = e.slot_height(i);
            w *= (e.slot_is_level(i) ? q.model.s(h) : q.model.t(h)).pow(profile[i]);
        }
        total += w;
    }
    return total;
}

HorizontalCensus horizontal_step_census(const PathSystemQuery& q) {
    check_cap(q);
    if (q.k != 2) throw std::invalid_argument("horizontal_step_census needs k = 2");
    if (q.n % static_cast<std::size_t>(q.model.m) != 0)
        throw std::invalid_argument("horizontal_step_census needs a size divisible by m");
    HorizontalCensus c;
    SystemEnumerator e(q, true);
    e.run([&](const std::vector<int>&, bool horizontal, int) {
        ++c.systems;
        if (horizontal) ++c.with_horizontal;
    });
    return c;
}

}  // namespace hk
