#pragma once

#include <cstddef>
#include <functional>

#include "hk/scalar.hpp"
#include "hk/sequences.hpp"

namespace hk {

/// Steps U = (1,1) of weight 1, H = (1,0) of weight s(h) at height h, and
/// D = (m-1,-1) of weight t(h) where h is the height it ends on. For m = 1
/// the down-step is vertical.
struct PathModel {
    int m = 2;
    std::function<Scalar(long)> s;
    std::function<Scalar(long)> t;
    bool restricted = true;  // heights stay >= 0

    static PathModel constant(int m, Scalar a, Scalar b, bool restricted = true);
    /// Horizontal steps on height 0 weigh a+t.
    static PathModel shifted(int m, Scalar a, Scalar b, Scalar t);
    /// The model whose path weights are the terms of spec.
    static PathModel for_spec(const SequenceSpec& spec);
};

/// Total weight of the paths from (0,0) to (n,height).
Scalar path_weight_to(const PathModel& model, long n, long height);
/// Total weight of the paths from (0,0) to (n,0).
Scalar path_weight_dp(const PathModel& model, long n);

inline constexpr std::size_t kDefaultEnumerationCap = 6;

/// n paths from A_i = (-i,0) to E_j = (j+k,0), i, j < n.
struct PathSystemQuery {
    PathModel model;
    std::size_t k = 0;
    std::size_t n = 1;
    std::size_t cap = kDefaultEnumerationCap;
};

/// Signed weight sum over all systems of vertex-disjoint paths A_i -> E_sigma(i).
/// Throws CapExceeded when n > cap.
Scalar lgv_det_oracle(const PathSystemQuery& q);

struct HorizontalCensus {
    std::size_t systems = 0;
    std::size_t with_horizontal = 0;
};

/// Counts the vertex-disjoint systems (ignoring weights) and those that use
/// at least one horizontal step. Requires k = 2 and n divisible by m.
HorizontalCensus horizontal_step_census(const PathSystemQuery& q);

}  // namespace hk
