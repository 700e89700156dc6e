#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace locodyn::plant {

// Timestamped discrete event attached to a simulation trace, e.g. a
// stance/flight transition.
struct Event {
  double t = 0.0;
  std::string kind;
};

// Uniformly sampled multi-channel record. All channels share one clock;
// the first CSV column is always time.
class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(double dt, double t0 = 0.0);

  double dt() const { return dt_; }
  double t0() const { return t0_; }
  std::size_t size() const { return length_; }
  double time(std::size_t i) const { return t0_ + dt_ * double(i); }

  const std::vector<std::string>& channel_names() const { return names_; }
  bool has_channel(const std::string& name) const;

  // Registers an empty channel and returns its index.
  std::size_t add_channel(const std::string& name);

  // Appends one sample to every channel; values must match channel count.
  void append_row(const std::vector<double>& values);

  const std::vector<double>& channel(const std::string& name) const;
  const std::vector<double>& channel(std::size_t idx) const { return cols_[idx]; }

  std::vector<double> time_axis() const;

  void add_event(double t, std::string kind);
  const std::vector<Event>& events() const { return events_; }

  // Events of one kind, in time order.
  std::vector<double> event_times(const std::string& kind) const;

  void write_csv(std::ostream& os) const;
  void write_csv_file(const std::string& path) const;

 private:
  double dt_ = 0.0;
  double t0_ = 0.0;
  std::size_t length_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> cols_;
  std::vector<Event> events_;
};

}  // namespace locodyn::plant
