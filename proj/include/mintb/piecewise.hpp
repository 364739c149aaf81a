#ifndef MINTB_PIECEWISE_HPP
#define MINTB_PIECEWISE_HPP

#include <vector>

#include "mintb/latency.hpp"
#include "mintb/length_value.hpp"
#include "mintb/rational.hpp"

namespace mintb {

// Continuous nondecreasing piecewise-linear function on [0, inf), exact
// rational everywhere. Effective latencies of series-parallel networks with
// linear latencies live in a restricted class: strictly increasing except
// for at most one final flat piece that extends to infinity (reached when a
// constant-latency edge starts absorbing all additional flow). Both
// composition rules below stay inside that class.
class PiecewiseLinearFn {
 public:
  struct Piece {
    Rational x;      // piece is valid on [x, next.x)
    Rational y;      // value at x
    Rational slope;  // >= 0; zero only on the final piece
  };

  // Single linear latency a*x + b as a function.
  static PiecewiseLinearFn linear(const LinearLatency& lat);

  // Equilibrium latency of a bundle of parallel links (water-filling across
  // links sorted by intercept).
  static PiecewiseLinearFn parallel_links(const std::vector<LinearLatency>& links);

  // Pointwise sum: effective latency of a series composition.
  friend PiecewiseLinearFn operator+(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b);

  // Effective latency of a parallel composition: inverse (flow-capacity)
  // functions add on the overlap of ranges; below the dearer child's
  // intercept the cheaper child carries everything.
  static PiecewiseLinearFn parallel(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b);

  Rational eval(const Rational& x) const;
  const Rational& value_at_zero() const { return pieces_.front().y; }

  // Supremum of the function: the flat-tail value, or +inf when the function
  // increases without bound.
  LengthValue cap() const;

  // Largest flow x with eval(x) <= y. Requires y <= cap(); at a finite cap
  // this returns the flat-tail start (the capacity actually carried at a
  // strictly smaller latency), and for y below the intercept it returns 0.
  Rational inverse_below_cap(const Rational& y) const;

  bool at_cap(const Rational& y) const {
    const LengthValue c = cap();
    return c.is_finite() && c.value() == y;
  }

  const std::vector<Piece>& pieces() const { return pieces_; }

  // Invariant audit for tests: breakpoints strictly increasing from 0,
  // continuity, slopes >= 0, zero slope only on the last piece.
  void check() const;

 private:
  explicit PiecewiseLinearFn(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
  std::vector<Piece> pieces_;
};

}  // namespace mintb

#endif
