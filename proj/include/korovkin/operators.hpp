#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "korovkin/function_sample.hpp"
#include "korovkin/grid.hpp"
#include "korovkin/quadrature.hpp"
#include "korovkin/tolerances.hpp"

namespace korovkin {

using IndexPredicate = std::function<bool(std::size_t)>;

/// Net of linear operators w ↦ T_w acting on samples of one grid.
struct OperatorFamily {
  std::string name;
  std::function<FunctionSample(std::size_t, const FunctionSample&)> apply;
  /// (T_w f)(node) without computing the other nodes; optional.
  std::function<double(std::size_t, const FunctionSample&, std::size_t)> apply_at;
  bool positivity_declared = true;
  std::string domain_note;

  double value_at(std::size_t w, const FunctionSample& f, std::size_t node) const {
    return apply_at ? apply_at(w, f, node) : apply(w, f)[node];
  }
};

struct MellinParams {
  std::size_t dimension = 1;
  /// Membership in the distinguished set F; default: not a perfect square.
  IndexPredicate in_f;
  std::string f_name = "non-squares";
  std::size_t w_range = 200;
  std::size_t quadrature_points = 24;

  MellinParams();
  void validate() const;
};

/// (M_w f)(s) = ∫_{[0,1]^N} K_w(t) f(s ⊙ t) dt with K_w = c_w · Π t_d^w,
/// c_w = (w+1)^N on F and (w+1)^{N+1} off F.
FunctionSample mellin_apply(const FunctionSample& f, std::size_t w, const MellinParams& params);
OperatorFamily mellin_family(const MellinParams& params);

enum class MellinTag { e0, er, er2 };

/// Sup-norm errors of M_w on the moment functions: e0 → 0 on F and w off F,
/// e_r → 1/(w+2), e_r² → 2/(w+3).
double mellin_error_closed_form(MellinTag tag, std::size_t w, const MellinParams& params);

inline constexpr std::size_t kKantorovichMaxN = 400;

struct KantorovichParams {
  std::size_t n_range = 100;
  /// Gating set H (density zero); default: perfect squares.
  IndexPredicate gate;
  std::string gate_name = "squares";

  KantorovichParams();
  void validate(const Tolerances& tol = {}) const;
};

/// Bivariate Kantorovich operator on the unit simplex. f needs an analytic
/// evaluator on [0, 1]^2 since the cells with k + j = n leave the simplex.
FunctionSample kantorovich_apply(const FunctionSample& f, std::size_t n);
double kantorovich_apply_at(const FunctionSample& f, std::size_t n, std::size_t node);
OperatorFamily kantorovich_family(std::size_t n_range = kKantorovichMaxN);

/// apply(n, f) = 0 for n ∈ H, base.apply(n, f) otherwise.
OperatorFamily gate_family(OperatorFamily base, IndexPredicate h, std::string h_name);

OperatorFamily identity_family();
OperatorFamily zero_family();
/// T_w f = -f; positivity fails for every w.
OperatorFamily negated_identity_family();

struct PositivityReport {
  std::vector<std::size_t> positive;
  double complement_density = 0.0;
  bool complement_small = false;
};

/// Applies the family to `trials` random sums of squares of affine
/// functions; w is kept iff every output is >= -1e-8 nodewise.
PositivityReport check_positivity_set(const OperatorFamily& family, const GridPtr& grid,
                                      std::size_t w_max, std::size_t trials,
                                      std::uint64_t seed = 1, const Tolerances& tol = {});

}  // namespace korovkin
