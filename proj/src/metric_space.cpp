#include "mlines/metric_space.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace mlines {

namespace {

std::string triple_text(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void check_index(const MetricSpace& m, PointId p) {
  if (p >= m.size()) {
    throw Error(ErrorCode::PointOutOfRange, "point " + std::to_string(p) + " outside space", {p});
  }
}

}  // namespace

DistMatrix MetricSpace::matrix() const {
  DistMatrix out(n_, std::vector<Dist>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = dist_[i * n_ + j];
  }
  return out;
}

MetricSpace validate_metric(const DistMatrix& matrix, Dist scale, std::size_t max_points) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorCode::TooFewPoints, "empty matrix");
  if (n > max_points) {
    throw Error(ErrorCode::NTooLarge,
                std::to_string(n) + " points exceeds limit " + std::to_string(max_points));
  }
  if (scale <= 0) throw Error(ErrorCode::MalformedInput, "scale must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has wrong length", {i});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0) {
      throw Error(ErrorCode::NonZeroDiagonal, "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0", {i});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw Error(ErrorCode::Asymmetric, "d(i,j) != d(j,i) at (" + std::to_string(i) + "," + std::to_string(j) + ")", {i, j});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && matrix[i][j] <= 0) {
        throw Error(ErrorCode::NonPositiveOffDiagonal, "d(" + std::to_string(i) + "," + std::to_string(j) + ") <= 0", {i, j});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (matrix[i][k] > matrix[i][j] + matrix[j][k]) {
          throw Error(ErrorCode::TriangleViolation, "d(i,k) > d(i,j) + d(j,k) at " + triple_text(i, j, k), {i, j, k});
        }
      }
    }
  }
  MetricSpace m;
  m.n_ = n;
  m.scale_ = scale;
  m.dist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(matrix[i].begin(), matrix[i].end(), m.dist_.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  m.parent_.resize(n);
  std::iota(m.parent_.begin(), m.parent_.end(), PointId{0});
  return m;
}

MetricSpace metric_from_rationals(const std::vector<std::vector<std::pair<Dist, Dist>>>& entries,
                                  std::size_t max_points) {
  Dist lcd = 1;
  for (const auto& row : entries) {
    for (const auto& [num, den] : row) {
      if (den <= 0) throw Error(ErrorCode::MalformedInput, "non-positive denominator");
      lcd = std::lcm(lcd, den / std::gcd(num < 0 ? -num : num, den));
    }
  }
  DistMatrix scaled(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    scaled[i].reserve(entries[i].size());
    for (const auto& [num, den] : entries[i]) {
      const Dist g = std::gcd(num < 0 ? -num : num, den);
      scaled[i].push_back((num / g) * (lcd / (den / g)));
    }
  }
  return validate_metric(scaled, lcd, max_points);
}

bool between(const MetricSpace& m, PointId a, PointId b, PointId c) {
  check_index(m, a);
  check_index(m, b);
  check_index(m, c);
  return m.between(a, b, c);
}

bool collinear(const MetricSpace& m, PointId a, PointId b, PointId c) {
  check_index(m, a);
  check_index(m, b);
  check_index(m, c);
  if (a == b || b == c || a == c) {
    throw Error(ErrorCode::DuplicatePoint, "collinearity needs three distinct points", {a, b, c});
  }
  return m.between(a, b, c) || m.between(b, c, a) || m.between(c, a, b);
}

Diameter diameter(const MetricSpace& m) {
  if (m.size() < 2) throw Error(ErrorCode::TooFewPoints, "diameter needs at least two points");
  Diameter best{m.dist(0, 1), {0, 1}};
  for (PointId i = 0; i < m.size(); ++i) {
    for (PointId j = i + 1; j < m.size(); ++j) {
      if (m.dist(i, j) > best.value) best = {m.dist(i, j), {i, j}};
    }
  }
  return best;
}

std::vector<Dist> distance_set(const MetricSpace& m) {
  std::vector<Dist> values;
  values.push_back(0);
  for (PointId i = 0; i < m.size(); ++i) {
    for (PointId j = i + 1; j < m.size(); ++j) values.push_back(m.dist(i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

MetricSpace subspace(const MetricSpace& m, const std::vector<PointId>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptySubset, "subspace of no points");
  PointSet seen(m.size());
  for (PointId p : points) {
    check_index(m, p);
    if (seen.contains(p)) throw Error(ErrorCode::DuplicatePoint, "point listed twice in subspace", {p});
    seen.insert(p);
  }
  MetricSpace s;
  s.n_ = points.size();
  s.scale_ = m.scale_;
  s.dist_.resize(s.n_ * s.n_);
  for (std::size_t i = 0; i < s.n_; ++i) {
    for (std::size_t j = 0; j < s.n_; ++j) s.dist_[i * s.n_ + j] = m.dist(points[i], points[j]);
  }
  s.parent_ = points;
  return s;
}

std::vector<PointId> sphere(const MetricSpace& m, PointId z, Dist d) {
  std::vector<PointId> out;
  for (PointId x = 0; x < m.size(); ++x) {
    if (x != z && m.dist(x, z) == d) out.push_back(x);
  }
  return out;
}

bool is_graph_metric(const MetricSpace& m) {
  const std::size_t n = m.size();
  const Dist unit = m.scale();
  std::vector<std::vector<PointId>> adj(n);
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = 0; j < n; ++j) {
      if (i != j && m.dist(i, j) == unit) adj[i].push_back(j);
    }
  }
  std::vector<Dist> level(n);
  for (PointId s = 0; s < n; ++s) {
    std::fill(level.begin(), level.end(), -1);
    level[s] = 0;
    std::deque<PointId> queue{s};
    while (!queue.empty()) {
      const PointId u = queue.front();
      queue.pop_front();
      for (PointId v : adj[u]) {
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (PointId t = 0; t < n; ++t) {
      if (level[t] < 0 || level[t] * unit != m.dist(s, t)) return false;
    }
  }
  return true;
}

}  // namespace mlines
