#pragma once

#include "bergman/common.hpp"

namespace bergman {

// Point of the open unit ball in R^n with its squared norm cached.
struct BallPoint {
    Vec coords;
    double norm_sq = 0.0;

    BallPoint() = default;
    explicit BallPoint(Vec c) : coords(std::move(c)) { norm_sq = bergman::norm_sq(coords); }
    BallPoint(std::initializer_list<double> c) : BallPoint(Vec(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    double norm() const;
    bool interior() const { return norm_sq < 1.0; }
    std::span<const double> span() const { return coords; }
};

// 1 - |x|^2 evaluated as (1-|x|)(1+|x|); avoids cancellation near the sphere.
double one_minus_sq(const BallPoint& x);
double one_minus_sq(double norm_value);

// sqrt(1 - 2<x,y> + |x|^2 |y|^2). Throws std::invalid_argument on dimension
// mismatch; radicands below -1e-12 indicate a bug and throw std::logic_error,
// smaller negatives clamp to zero.
double bracket(const BallPoint& x, const BallPoint& y);

// Canonical involution of the ball exchanging a and 0.
BallPoint mobius(const BallPoint& a, const BallPoint& x);

// Pseudo-hyperbolic distance |a-b|/[a,b] in [0,1).
double rho(const BallPoint& a, const BallPoint& b);

// Squared distance form used by hot loops: rho^2 = d2 / (d2 + m) with
// d2 = |a-b|^2 and m = (1-|a|^2)(1-|b|^2); all terms nonnegative.
double rho_sq(std::span<const double> a, double a_nsq,
              std::span<const double> b, double b_nsq);

struct EuclideanBall {
    Vec center;
    double radius = 0.0;

    bool contains(std::span<const double> x) const;
};

// Euclidean realization of {x : rho(x,a) < r}.
EuclideanBall pseudo_ball(const BallPoint& a, double r);

// |J_phi_a(x)| = ((1-|a|^2)/[x,a]^2)^n.
double jacobian_magnitude(const BallPoint& a, const BallPoint& x);

// Step size heuristic for the finite-difference operators below.
double fd_default_step(const BallPoint& a);

// (1-|a|^2) * central-difference gradient of f at a.
Vec hyperbolic_gradient(const ScalarField& f, const BallPoint& a, double h);

// (1-|a|^2)^2 Lap f(a) + 2(n-2)(1-|a|^2) <a, grad f(a)>, via central differences.
double laplacian_h(const ScalarField& f, const BallPoint& a, double h);

}  // namespace bergman
