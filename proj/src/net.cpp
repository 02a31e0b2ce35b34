#include "korovkin/net.hpp"

#include <cmath>
#include <string>

#include "korovkin/error.hpp"

namespace korovkin {

Net::Net(IndexKind kind, std::size_t horizon, std::vector<double> values)
    : kind_(kind), horizon_(horizon), values_(std::move(values)) {
  if (horizon_ < kMinHorizon) {
    throw Error(ErrorKind::horizon_too_small,
                "net horizon " + std::to_string(horizon_) + " is below " +
                    std::to_string(kMinHorizon));
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw Error(ErrorKind::non_finite, "net value at flat index " + std::to_string(k));
    }
  }
}

Net Net::single(std::size_t horizon, const std::function<double(std::size_t)>& value) {
  std::vector<double> v(horizon);
  for (std::size_t w = 1; w <= horizon; ++w) v[w - 1] = value(w);
  return Net(IndexKind::Single, horizon, std::move(v));
}

Net Net::pair(std::size_t horizon,
              const std::function<double(std::size_t, std::size_t)>& value) {
  std::vector<double> v(horizon * horizon);
  for (std::size_t i = 1; i <= horizon; ++i)
    for (std::size_t j = 1; j <= horizon; ++j) v[(i - 1) * horizon + (j - 1)] = value(i, j);
  return Net(IndexKind::Pair, horizon, std::move(v));
}

Net Net::from_values(std::vector<double> values) {
  const std::size_t h = values.size();
  return Net(IndexKind::Single, h, std::move(values));
}

double Net::operator()(std::size_t w) const {
  if (kind_ != IndexKind::Single) throw Error(ErrorKind::invalid_argument, "pair net indexed by one index");
  if (w < 1 || w > horizon_) throw Error(ErrorKind::out_of_range, "index " + std::to_string(w));
  return values_[w - 1];
}

double Net::operator()(std::size_t i, std::size_t j) const {
  if (kind_ != IndexKind::Pair) throw Error(ErrorKind::invalid_argument, "single net indexed by a pair");
  if (i < 1 || j < 1 || i > horizon_ || j > horizon_)
    throw Error(ErrorKind::out_of_range, "index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return values_[(i - 1) * horizon_ + (j - 1)];
}

double Net::pair_value(std::size_t i, std::size_t j) const {
  if (kind_ == IndexKind::Single) return values_[j - 1];
  return values_[(i - 1) * horizon_ + (j - 1)];
}

Net Net::diagonal() const {
  if (kind_ == IndexKind::Single) return *this;
  std::vector<double> v(horizon_);
  for (std::size_t w = 1; w <= horizon_; ++w) v[w - 1] = values_[(w - 1) * horizon_ + (w - 1)];
  return Net(IndexKind::Single, horizon_, std::move(v));
}

Net Net::map(const std::function<double(double)>& fn) const {
  std::vector<double> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = fn(values_[k]);
  return Net(kind_, horizon_, std::move(v));
}

Net Net::zip(const Net& other, const std::function<double(double, double)>& fn) const {
  if (other.kind_ != kind_) throw Error(ErrorKind::invalid_argument, "nets differ in index kind");
  if (other.horizon_ != horizon_) throw Error(ErrorKind::horizon_mismatch, "nets differ in horizon");
  std::vector<double> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = fn(values_[k], other.values_[k]);
  return Net(kind_, horizon_, std::move(v));
}

Net operator+(const Net& a, const Net& b) {
  return a.zip(b, [](double x, double y) { return x + y; });
}
Net operator-(const Net& a, const Net& b) {
  return a.zip(b, [](double x, double y) { return x - y; });
}
Net operator*(double s, const Net& a) {
  return a.map([s](double x) { return s * x; });
}
Net abs(const Net& a) {
  return a.map([](double x) { return std::abs(x); });
}

}  // namespace korovkin
