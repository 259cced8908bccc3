#include "fanosim/io.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace fanosim {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp =
      dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot replace " + path.string());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

constexpr double kW = 640, kH = 400, kL = 60, kR = 20, kT = 40, kB = 50;

struct Axes {
  double x0, x1, y0, y1;

  double px(double x) const { return kL + (x - x0) / (x1 - x0) * (kW - kL - kR); }
  double py(double y) const { return kH - kB - (y - y0) / (y1 - y0) * (kH - kT - kB); }
};

Axes fit(double x0, double x1, double y0, double y1) {
  if (!(x1 > x0)) x0 -= 0.5, x1 += 0.5;
  if (!(y1 > y0)) y0 -= 0.5, y1 += 0.5;
  const double pad = 0.05 * (y1 - y0);
  return {x0, x1, y0 - pad, y1 + pad};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void frame(std::ostringstream& os, const Axes& a, const std::string& title, const std::string& xlabel) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  os << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR << "\" height=\"" << kH - kT - kB
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = a.x0 + (a.x1 - a.x0) * i / 4, y = a.y0 + (a.y1 - a.y0) * i / 4;
    os << "<text x=\"" << num(a.px(x)) << "\" y=\"" << kH - kB + 16 << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    os << "<text x=\"" << kL - 6 << "\" y=\"" << num(a.py(y) + 4) << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
  }
  os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 10 << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  if (a.y0 < 0 && a.y1 > 0)
    os << "<line x1=\"" << kL << "\" x2=\"" << kW - kR << "\" y1=\"" << num(a.py(0)) << "\" y2=\"" << num(a.py(0))
       << "\" stroke=\"#bbb\"/>\n";
}

void series(std::ostringstream& os, const Axes& a, const std::vector<double>& x, const std::vector<double>& y,
            const std::vector<double>& err, const std::string& color) {
  if (x.empty()) return;
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) os << num(a.px(x[i])) << "," << num(a.py(y[i])) << " ";
  os << "\"/>\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << "<circle cx=\"" << num(a.px(x[i])) << "\" cy=\"" << num(a.py(y[i])) << "\" r=\"2\" fill=\"" << color << "\"/>\n";
    if (!err.empty() && err[i] > 0)
      os << "<line x1=\"" << num(a.px(x[i])) << "\" x2=\"" << num(a.px(x[i])) << "\" y1=\"" << num(a.py(y[i] - err[i]))
         << "\" y2=\"" << num(a.py(y[i] + err[i])) << "\" stroke=\"" << color << "\"/>\n";
  }
}

}  // namespace

std::string svg_signal(const ExperimentResult& r, const std::string& title) {
  std::vector<double> re, im;
  for (auto v : r.values) re.push_back(v.real()), im.push_back(v.imag());
  double lo = 0, hi = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    lo = std::min({lo, re[i] - r.std_re[i], im[i] - r.std_im[i]});
    hi = std::max({hi, re[i] + r.std_re[i], im[i] + r.std_im[i]});
  }
  const Axes a = fit(r.t.empty() ? 0 : r.t.front(), r.t.empty() ? 1 : r.t.back(), lo, hi);
  std::ostringstream os;
  frame(os, a, title, "t");
  series(os, a, r.t, re, r.std_re, "#1f5fbf");
  series(os, a, r.t, im, r.std_im, "#c0392b");
  os << "<text x=\"" << kW - kR - 80 << "\" y=\"" << kT + 16 << "\" fill=\"#1f5fbf\">Re</text>\n";
  os << "<text x=\"" << kW - kR - 40 << "\" y=\"" << kT + 16 << "\" fill=\"#c0392b\">Im</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string svg_spectrum(const Spectrum& s, const std::vector<Peak>& peaks, const std::string& title) {
  std::vector<double> re;
  double lo = 0, hi = 0;
  for (std::size_t i = 0; i < s.amplitude.size(); ++i) {
    re.push_back(s.amplitude[i].real());
    lo = std::min(lo, re.back() - s.std[i]);
    hi = std::max(hi, re.back() + s.std[i]);
  }
  const Axes a = fit(s.eta.empty() ? -1 : s.eta.front(), s.eta.empty() ? 1 : s.eta.back(), lo, hi);
  std::ostringstream os;
  frame(os, a, title, "eta");
  series(os, a, s.eta, re, s.std, "#1f5fbf");
  for (const auto& p : peaks)
    os << "<line x1=\"" << num(a.px(p.frequency)) << "\" x2=\"" << num(a.px(p.frequency)) << "\" y1=\"" << kT
       << "\" y2=\"" << kH - kB << "\" stroke=\"#c0392b\" stroke-dasharray=\"4 3\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace fanosim
