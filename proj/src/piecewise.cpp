#include "mintb/piecewise.hpp"

#include <algorithm>

#include "mintb/errors.hpp"

namespace mintb {

PiecewiseLinearFn PiecewiseLinearFn::linear(const LinearLatency& lat) {
  return PiecewiseLinearFn({Piece{Rational(0), lat.intercept, lat.slope}});
}

LengthValue PiecewiseLinearFn::cap() const {
  const Piece& last = pieces_.back();
  if (last.slope == 0) return LengthValue(last.y);
  return LengthValue::infinity();
}

Rational PiecewiseLinearFn::eval(const Rational& x) const {
  int lo = 0, hi = static_cast<int>(pieces_.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (pieces_[mid].x <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const Piece& p = pieces_[lo];
  return p.y + p.slope * (x - p.x);
}

Rational PiecewiseLinearFn::inverse_below_cap(const Rational& y) const {
  if (y <= pieces_.front().y) return Rational(0);
  const LengthValue c = cap();
  if (c.is_finite()) {
    if (y > c.value()) throw InternalError("inverse above function cap");
    if (y == c.value()) return pieces_.back().x;
  }
  // Last piece whose start value is < y; within it the function is strictly
  // increasing (zero slopes only occur at the cap, excluded above).
  int lo = 0, hi = static_cast<int>(pieces_.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (pieces_[mid].y < y) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const Piece& p = pieces_[lo];
  if (p.slope == 0) throw InternalError("inverse hit a flat piece below cap");
  return p.x + (y - p.y) / p.slope;
}

PiecewiseLinearFn operator+(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b) {
  std::vector<PiecewiseLinearFn::Piece> out;
  std::size_t i = 0, j = 0;
  Rational x(0);
  while (true) {
    const PiecewiseLinearFn::Piece& pa = a.pieces_[i];
    const PiecewiseLinearFn::Piece& pb = b.pieces_[j];
    out.push_back({x, pa.y + pa.slope * (x - pa.x) + pb.y + pb.slope * (x - pb.x),
                   pa.slope + pb.slope});
    const bool more_a = i + 1 < a.pieces_.size();
    const bool more_b = j + 1 < b.pieces_.size();
    if (!more_a && !more_b) break;
    if (more_a && (!more_b || a.pieces_[i + 1].x <= b.pieces_[j + 1].x)) {
      x = a.pieces_[i + 1].x;
      ++i;
      if (more_b && b.pieces_[j + 1].x == x) ++j;
    } else {
      x = b.pieces_[j + 1].x;
      ++j;
    }
  }
  // Adjacent pieces with equal slopes merge (continuity makes them collinear).
  std::vector<PiecewiseLinearFn::Piece> merged;
  for (auto& p : out) {
    if (!merged.empty() && merged.back().slope == p.slope) continue;
    merged.push_back(std::move(p));
  }
  return PiecewiseLinearFn(std::move(merged));
}

namespace {

// Capacity profile: the y-breakpoints at which the summed inverse function
// h(y) = h_a(y) + h_b(y) changes slope are exactly the piece start values.
std::vector<Rational> collect_y_breakpoints(const PiecewiseLinearFn& a,
                                            const PiecewiseLinearFn& b, const Rational& y0,
                                            const LengthValue& cap) {
  std::vector<Rational> ys;
  for (const auto& fn : {&a, &b}) {
    for (const auto& p : fn->pieces()) {
      if (p.y < y0) continue;
      if (cap.is_finite() && p.y >= cap.value()) continue;
      ys.push_back(p.y);
    }
  }
  ys.push_back(y0);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

// Reciprocal slope of fn at latency level y (0 while y is below the
// intercept, i.e. the function carries no flow yet).
Rational inverse_slope_at(const PiecewiseLinearFn& fn, const Rational& y) {
  if (y < fn.value_at_zero()) return Rational(0);
  const auto& pieces = fn.pieces();
  int lo = 0, hi = static_cast<int>(pieces.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (pieces[mid].y <= y) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (pieces[lo].slope == 0) throw InternalError("flat piece below cap in parallel combine");
  return 1 / pieces[lo].slope;
}

}  // namespace

PiecewiseLinearFn PiecewiseLinearFn::parallel(const PiecewiseLinearFn& a,
                                              const PiecewiseLinearFn& b) {
  const Rational y0 = std::min(a.value_at_zero(), b.value_at_zero());
  const LengthValue capv = min(a.cap(), b.cap());

  if (capv.is_finite() && capv.value() == y0) {
    // One side absorbs everything at the shared intercept.
    return PiecewiseLinearFn({Piece{Rational(0), y0, Rational(0)}});
  }

  const auto ys = collect_y_breakpoints(a, b, y0, capv);
  std::vector<Piece> out;
  Rational x(0);
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const Rational& ya = ys[k];
    const Rational hs = inverse_slope_at(a, ya) + inverse_slope_at(b, ya);
    if (hs == 0) throw InternalError("parallel combine produced a zero-capacity band");
    out.push_back(Piece{x, ya, 1 / hs});
    if (k + 1 < ys.size()) {
      x += (ys[k + 1] - ya) * hs;
    } else if (capv.is_finite()) {
      x += (capv.value() - ya) * hs;
    }
  }
  if (capv.is_finite()) out.push_back(Piece{x, capv.value(), Rational(0)});

  std::vector<Piece> merged;
  for (auto& p : out) {
    if (!merged.empty() && merged.back().slope == p.slope) continue;
    merged.push_back(std::move(p));
  }
  return PiecewiseLinearFn(std::move(merged));
}

PiecewiseLinearFn PiecewiseLinearFn::parallel_links(const std::vector<LinearLatency>& links) {
  // Water-filling: sweep the latency level upward across intercepts; each
  // positive-slope link joins at its intercept, the cheapest constant link
  // caps the level.
  LengthValue capv = LengthValue::infinity();
  std::vector<const LinearLatency*> rising;
  Rational y0;
  bool have_y0 = false;
  for (const auto& l : links) {
    if (!have_y0 || l.intercept < y0) {
      y0 = l.intercept;
      have_y0 = true;
    }
    if (l.slope == 0) {
      capv = min(capv, LengthValue(l.intercept));
    } else {
      rising.push_back(&l);
    }
  }
  if (!have_y0) throw Error("empty parallel bundle");
  if (capv.is_finite() && capv.value() == y0) {
    return PiecewiseLinearFn({Piece{Rational(0), y0, Rational(0)}});
  }

  std::vector<Rational> ys{y0};
  for (const auto* l : rising) {
    if (l->intercept > y0 && (!capv.is_finite() || l->intercept < capv.value())) {
      ys.push_back(l->intercept);
    }
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<Piece> out;
  Rational x(0);
  for (std::size_t k = 0; k < ys.size(); ++k) {
    Rational hs(0);
    for (const auto* l : rising) {
      if (l->intercept <= ys[k]) hs += 1 / l->slope;
    }
    if (hs == 0) throw InternalError("parallel links with no capacity below the cap");
    out.push_back(Piece{x, ys[k], 1 / hs});
    if (k + 1 < ys.size()) {
      x += (ys[k + 1] - ys[k]) * hs;
    } else if (capv.is_finite()) {
      x += (capv.value() - ys[k]) * hs;
    }
  }
  if (capv.is_finite()) out.push_back(Piece{x, capv.value(), Rational(0)});
  return PiecewiseLinearFn(std::move(out));
}

void PiecewiseLinearFn::check() const {
  if (pieces_.empty()) throw InternalError("piecewise function with no pieces");
  if (pieces_.front().x != 0) throw InternalError("domain must start at 0");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].slope < 0) throw InternalError("negative slope");
    if (pieces_[i].slope == 0 && i + 1 != pieces_.size()) {
      throw InternalError("flat piece before the end");
    }
    if (i + 1 < pieces_.size()) {
      if (pieces_[i + 1].x <= pieces_[i].x) throw InternalError("breakpoints not increasing");
      const Rational cont =
          pieces_[i].y + pieces_[i].slope * (pieces_[i + 1].x - pieces_[i].x);
      if (cont != pieces_[i + 1].y) throw InternalError("discontinuity between pieces");
    }
  }
}

}  // namespace mintb
