#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fanosim/signal.hpp"
#include "fanosim/spectral.hpp"

namespace fanosim {

// Writes to a temporary file in the target directory, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Static SVG plots: real and imaginary parts against t (with error bars when
// present), and Re S~ against eta with the given peaks marked.
std::string svg_signal(const ExperimentResult& r, const std::string& title);
std::string svg_spectrum(const Spectrum& s, const std::vector<Peak>& peaks, const std::string& title);

}  // namespace fanosim
