#include "locodyn/timeseries.hpp"

#include <fstream>
#include <stdexcept>

#include "locodyn/io.hpp"

namespace locodyn::plant {

TimeSeries::TimeSeries(double dt, double t0) : dt_(dt), t0_(t0) {
  if (!(dt > 0.0)) throw std::invalid_argument("TimeSeries: dt must be positive");
}

bool TimeSeries::has_channel(const std::string& name) const {
  for (const auto& n : names_)
    if (n == name) return true;
  return false;
}

std::size_t TimeSeries::add_channel(const std::string& name) {
  if (length_ != 0) throw std::logic_error("TimeSeries: add channels before appending rows");
  if (has_channel(name)) throw std::invalid_argument("TimeSeries: duplicate channel " + name);
  names_.push_back(name);
  cols_.emplace_back();
  return names_.size() - 1;
}

void TimeSeries::append_row(const std::vector<double>& values) {
  if (values.size() != cols_.size())
    throw std::invalid_argument("TimeSeries: row width does not match channel count");
  for (std::size_t i = 0; i < values.size(); ++i) cols_[i].push_back(values[i]);
  ++length_;
}

const std::vector<double>& TimeSeries::channel(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return cols_[i];
  throw std::out_of_range("TimeSeries: no channel named " + name);
}

std::vector<double> TimeSeries::time_axis() const {
  std::vector<double> t(length_);
  for (std::size_t i = 0; i < length_; ++i) t[i] = time(i);
  return t;
}

void TimeSeries::add_event(double t, std::string kind) {
  if (!events_.empty() && t < events_.back().t)
    throw std::invalid_argument("TimeSeries: events must be time ordered");
  events_.push_back({t, std::move(kind)});
}

std::vector<double> TimeSeries::event_times(const std::string& kind) const {
  std::vector<double> out;
  for (const auto& e : events_)
    if (e.kind == kind) out.push_back(e.t);
  return out;
}

void TimeSeries::write_csv(std::ostream& os) const {
  os << "t";
  for (const auto& n : names_) os << "," << n;
  os << "\n";
  for (std::size_t i = 0; i < length_; ++i) {
    os << io::format_double(time(i));
    for (const auto& c : cols_) os << "," << io::format_double(c[i]);
    os << "\n";
  }
}

void TimeSeries::write_csv_file(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("TimeSeries: cannot open " + path);
  write_csv(f);
}

}  // namespace locodyn::plant
