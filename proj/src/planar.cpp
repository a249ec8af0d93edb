#include "charnum/planar.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace charnum::planar {

namespace {

constexpr int kMaxDegree = 64;

struct Tables {
  std::vector<std::int64_t> a1, a1l, a2;
};

// Counts are filled iteratively from the base data N1(A1)=N1(A2)=0, N1(S)=1,
// N2(A1L)=3, N2(A2)=0 and the tangency inputs below.
std::int64_t tangent_count(int d) { return 2 * static_cast<std::int64_t>(d - 1); }
std::int64_t tangent_at_point_count(int) { return 1; }
std::int64_t second_order_tangent_count(int d) { return d >= 2 ? 3 * static_cast<std::int64_t>(d - 2) : 0; }

const Tables& tables() {
  static std::mutex mutex;
  static Tables t;
  std::lock_guard<std::mutex> lock(mutex);
  if (t.a1.empty()) {
    t.a1.assign(kMaxDegree + 1, 0);
    t.a1l.assign(kMaxDegree + 1, 0);
    t.a2.assign(kMaxDegree + 1, 0);
    t.a1[1] = 0;
    for (int d = 2; d <= kMaxDegree; ++d) {
      t.a1[d] = (2 * d - 1) + t.a1[d - 1] + 2 * tangent_count(d - 1);
    }
    t.a1l[1] = 0;
    t.a1l[2] = 3;
    t.a2[1] = 0;
    t.a2[2] = 0;
    for (int d = 3; d <= kMaxDegree; ++d) {
      t.a1l[d] = 1 + t.a1l[d - 1] + 2 * tangent_at_point_count(d - 1);
      t.a2[d] = 3 * tangent_count(d - 1) + 3 * d * tangent_at_point_count(d - 1) +
                t.a2[d - 1] + 3 * t.a1l[d - 1] + 2 * second_order_tangent_count(d - 1);
    }
  }
  return t;
}

}  // namespace

std::optional<Invariant> invariant_from_string(std::string_view name) {
  if (name == "a1") return Invariant::A1;
  if (name == "a1l") return Invariant::A1L;
  if (name == "a2") return Invariant::A2;
  if (name == "t1") return Invariant::T1;
  if (name == "t1pt") return Invariant::T1Pt;
  if (name == "t2") return Invariant::T2;
  if (name == "smooth") return Invariant::Smooth;
  return std::nullopt;
}

std::string_view invariant_name(Invariant kind) {
  switch (kind) {
    case Invariant::A1: return "a1";
    case Invariant::A1L: return "a1l";
    case Invariant::A2: return "a2";
    case Invariant::T1: return "t1";
    case Invariant::T1Pt: return "t1pt";
    case Invariant::T2: return "t2";
    case Invariant::Smooth: return "smooth";
  }
  throw std::logic_error("invariant_name: bad enum");
}

std::int64_t delta(int d) {
  if (d < 1) throw std::invalid_argument("delta: degree must be >= 1");
  return static_cast<std::int64_t>(d) * (d + 3) / 2;
}

std::int64_t count(Invariant kind, int d) {
  if (d < 1 || d > kMaxDegree) {
    throw std::invalid_argument("count: degree must be in 1..64");
  }
  switch (kind) {
    case Invariant::Smooth: return 1;
    case Invariant::T1: return tangent_count(d);
    case Invariant::T1Pt: return tangent_at_point_count(d);
    case Invariant::T2: return second_order_tangent_count(d);
    case Invariant::A1: return tables().a1[d];
    case Invariant::A1L: return tables().a1l[d];
    case Invariant::A2: return tables().a2[d];
  }
  throw std::logic_error("count: bad enum");
}

std::int64_t count_with_line_points(Invariant kind, int d, int k) {
  if (kind != Invariant::A1 && kind != Invariant::A1L && kind != Invariant::A2) {
    throw std::invalid_argument("count_with_line_points: supported kinds are a1, a1l, a2");
  }
  if (d < 3 || d > kMaxDegree) {
    throw std::invalid_argument("count_with_line_points: degree must be in 3..64");
  }
  if (k < 0 || k > d) {
    throw std::invalid_argument("count_with_line_points: need 0 <= k <= d");
  }
  if (k <= d - 1) return count(kind, d);
  // At k = d the configurations where the line becomes a component of the
  // curve split off; their contribution follows the residual degree d-1 curve.
  switch (kind) {
    case Invariant::A1: return count(Invariant::A1, d) - (d - 1) * count(Invariant::Smooth, d - 1);
    case Invariant::A1L: return count(Invariant::A1L, d) - count(Invariant::Smooth, d - 1);
    case Invariant::A2: return count(Invariant::A2, d) - 3 * count(Invariant::T1, d - 1);
    default: break;
  }
  throw std::logic_error("count_with_line_points: unreachable");
}

}  // namespace charnum::planar
