#include <doctest.h>

#include <cmath>
#include <numbers>

#include "schubert/error.hpp"
#include "schubert/tracker.hpp"

using namespace schubert;
using namespace schubert::tracker;

namespace {

Polynomial var(int i) { return Polynomial::variable(i); }
Polynomial cst(double c, int tdeg = 0) { return Polynomial::constant(c, tdeg); }

ComplexVector vec(std::initializer_list<Complex> v) {
  ComplexVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto c : v) out(i++) = c;
  return out;
}

// x^2 + y - 2 - t = 0, x - y - t y = 0; at t = 0 the roots are x = y = 1 and x = y = -2
ParametricSystem two_by_two() {
  Polynomial f1 = var(0) * var(0) + var(1) - cst(2.0) - cst(1.0, 1);
  Polynomial f2 = var(0) - var(1) - var(1).shifted(1);
  return {{"x", "y"}, {f1, f2}};
}

}  // namespace

TEST_CASE("gamma path endpoints and interior") {
  auto g = gamma_path(1);
  CHECK(std::abs(g.at(0.0)) < 1e-15);
  CHECK(std::abs(g.at(1.0) - Complex(1.0)) < 1e-15);
  for (double s : {0.1, 0.5, 0.9}) CHECK(std::abs(g.at(s).imag()) > 1e-6);
  CHECK(g.theta > 0.1);
  CHECK(g.theta < std::numbers::pi - 0.1);
  CHECK(gamma_path(2).theta != g.theta);
  GammaPath quarter{std::numbers::pi / 2, false};
  Complex i(0, 1);
  CHECK(std::abs(quarter.at(0.5) - 0.5 * i / (1.0 + 0.5 * (i - 1.0))) < 1e-15);
  const double h = 1e-6;
  CHECK(std::abs((g.at(0.4 + h) - g.at(0.4 - h)) / (2 * h) - g.derivative(0.4)) < 1e-8);
  auto r = g.reverse();
  CHECK(std::abs(r.at(0.3) - g.at(0.7)) < 1e-15);
  CHECK(std::abs((r.at(0.4 + h) - r.at(0.4 - h)) / (2 * h) - r.derivative(0.4)) < 1e-8);
}

TEST_CASE("linear and quadratic paths") {
  ParametricSystem lin({"x"}, {var(0) - cst(1.0, 1)});
  auto h = square(lin, {vec({0.0})}, 7);
  CHECK(h.m.isIdentity());
  auto r = track(h, vec({0.0}));
  CHECK(r.status == PathStatus::Success);
  CHECK(std::abs(r.endpoint(0) - 1.0) < 1e-12);

  ParametricSystem quad({"x"}, {var(0) * var(0) - cst(1.0) - cst(1.0, 1)});
  auto hq = square(quad, {vec({1.0}), vec({-1.0})}, 3);
  auto rs = track_all(hq, {vec({1.0}), vec({-1.0})});
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].status == PathStatus::Success);
  CHECK(rs[1].status == PathStatus::Success);
  CHECK(std::abs(rs[0].endpoint(0) - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(rs[1].endpoint(0) + std::sqrt(2.0)) < 1e-12);
  CHECK(rs[0].path_id == 0);
  CHECK(rs[1].path_id == 1);
  CHECK(track_all(hq, {}).empty());
}

TEST_CASE("a pole at t = 1 is reported as divergence") {
  ParametricSystem pole({"x"}, {var(0) - var(0).shifted(1) - cst(1.0)});
  auto h = square(pole, {vec({1.0})}, 5);
  TrackOptions o;
  o.max_retries = 0;
  auto r = track(h, vec({1.0}), o);
  CHECK(r.status == PathStatus::Diverged);
  auto all = track_all(h, {vec({1.0})});
  CHECK(all[0].status == PathStatus::Diverged);
  CHECK(all[0].attempts == 4);
}

TEST_CASE("a double root is rejected when squaring") {
  Polynomial d = var(0) - cst(1.0, 1);
  ParametricSystem dbl({"x"}, {d * d});
  CHECK_THROWS_AS(square(dbl, {vec({0.0})}, 1), SchubertError);
  try {
    square(dbl, {vec({0.0})}, 1);
  } catch (const SchubertError& e) {
    CHECK(e.kind() == SchubertError::Kind::NonGeneric);
    CHECK(std::string(e.what()).find("start 0") != std::string::npos);
  }
  CHECK_THROWS_AS(square(dbl, {vec({0.5})}, 1), SchubertError);
}

TEST_CASE("overdetermined systems are squared and checked against the full system") {
  auto base = two_by_two();
  auto eqs = base.equations();
  Polynomial extra = eqs[0] + eqs[1] + eqs[1];
  eqs.push_back(extra);
  ParametricSystem over({"x", "y"}, eqs);
  std::vector<ComplexVector> starts{vec({1.0, 1.0}), vec({-2.0, -2.0})};
  auto h = square(over, starts, 9);
  CHECK(h.m.rows() == 2);
  CHECK(h.m.cols() == 3);
  for (Eigen::Index i = 0; i < h.m.size(); ++i) CHECK(std::abs(std::abs(h.m(i)) - 1.0) < 1e-14);
  ComplexVector v;
  h.evaluate(starts[0], 0.3, &v, nullptr, nullptr);
  CHECK(v.size() == 2);
  auto rs = track_all(h, starts);
  for (const auto& r : rs) {
    CHECK(r.status == PathStatus::Success);
    CHECK(over(r.endpoint, 1.0).cwiseAbs().maxCoeff() < 1e-8);
    // t = 1: x = 2y, 4y^2 + y - 3 = 0
    Complex y = r.endpoint(1);
    CHECK(std::abs(4.0 * y * y + y - 3.0) < 1e-10);
  }
  CHECK(std::abs(rs[0].endpoint(0) - rs[1].endpoint(0)) > 0.1);
}

TEST_CASE("squared homotopy derivatives match finite differences") {
  auto eqs = two_by_two().equations();
  eqs.push_back(eqs[0] * eqs[1] + eqs[1]);
  ParametricSystem over({"x", "y"}, eqs);
  auto h = square(over, {vec({1.0, 1.0})}, 4);
  ComplexVector x = vec({Complex(0.3, 0.1), Complex(-0.7, 0.4)});
  double s = 0.37, d = 1e-6;
  ComplexVector f, ds;
  ComplexMatrix j;
  h.evaluate(x, s, &f, &j, &ds);
  for (int k = 0; k < 2; ++k) {
    ComplexVector xp = x, xm = x, fp, fm;
    xp(k) += d;
    xm(k) -= d;
    h.evaluate(xp, s, &fp, nullptr, nullptr);
    h.evaluate(xm, s, &fm, nullptr, nullptr);
    CHECK(((fp - fm) / (2 * d) - j.col(k)).norm() < 1e-6 * (1.0 + j.norm()));
  }
  ComplexVector fp, fm;
  h.evaluate(x, s + d, &fp, nullptr, nullptr);
  h.evaluate(x, s - d, &fm, nullptr, nullptr);
  CHECK(((fp - fm) / (2 * d) - ds).norm() < 1e-6 * (1.0 + ds.norm()));
}

TEST_CASE("determinism across thread counts and reversal") {
  auto base = two_by_two();
  std::vector<ComplexVector> starts{vec({1.0, 1.0}), vec({-2.0, -2.0})};
  auto h = square(base, starts, 12);
  TrackOptions one, many;
  one.threads = 1;
  many.threads = 4;
  auto a = track_all(h, starts, one);
  auto b = track_all(h, starts, many);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].status == b[i].status);
    CHECK((a[i].endpoint - b[i].endpoint).norm() < 1e-12);
    CHECK(a[i].steps == b[i].steps);
  }
  auto back = h.reverse();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto r = track(back, a[i].endpoint);
    CHECK(r.status == PathStatus::Success);
    CHECK((r.endpoint - starts[i]).norm() < 1e-8);
  }
}

TEST_CASE("option validation") {
  ParametricSystem lin({"x"}, {var(0) - cst(1.0, 1)});
  auto h = square(lin, {vec({0.0})}, 7);
  TrackOptions bad;
  bad.min_step = 0.5;
  bad.max_step = 0.1;
  CHECK_THROWS_AS(track(h, vec({0.0}), bad), SchubertError);
  CHECK_THROWS_AS(square(lin, {vec({0.5})}, 1), SchubertError);
}
