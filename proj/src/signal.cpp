#include "fanosim/signal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fanosim/format.hpp"

namespace fanosim {

std::string_view mode_name(RunMode m) { return m == RunMode::ideal ? "ideal" : "pulse"; }

RunMode parse_mode(std::string_view s) {
  if (s == "ideal") return RunMode::ideal;
  if (s == "pulse") return RunMode::pulse;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "' (ideal|pulse)");
}

void ExperimentResult::push_back(double time, Complex value, double sre, double sim) {
  t.push_back(time);
  values.push_back(value);
  std_re.push_back(sre);
  std_im.push_back(sim);
}

void ExperimentResult::validate() const {
  if (values.size() != t.size() || std_re.size() != t.size() || std_im.size() != t.size())
    throw std::invalid_argument("experiment result columns differ in length");
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (!std::isfinite(t[j]) || !std::isfinite(values[j].real()) || !std::isfinite(values[j].imag()))
      throw std::invalid_argument("experiment result holds a non-finite value");
    if (j > 0 && !(t[j] > t[j - 1])) throw std::invalid_argument("time grid is not strictly increasing");
  }
}

std::string to_csv(const ExperimentResult& r) {
  std::ostringstream os;
  os << "t,re,im,std_re,std_im,mode\n";
  for (std::size_t j = 0; j < r.size(); ++j)
    os << format_fixed(r.t[j]) << ',' << format_fixed(r.values[j].real()) << ',' << format_fixed(r.values[j].imag())
       << ',' << format_fixed(r.std_re[j]) << ',' << format_fixed(r.std_im[j]) << ',' << mode_name(r.mode) << '\n';
  return os.str();
}

std::vector<double> TimeGrid::points() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int j = 0; j < steps; ++j) out[j] = t_start + j * dt;
  return out;
}

void TimeGrid::validate() const {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be > 0");
  if (!std::isfinite(t_start)) throw std::invalid_argument("t_start must be finite");
}

}  // namespace fanosim
