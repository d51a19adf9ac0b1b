#pragma once

#include <span>
#include <string>

namespace pcdpe::cli {

// Two-column plot files: Gaussian KDE with Silverman bandwidth, plus a raw
// histogram, written as "<stem>_kde.tsv" / "<stem>_hist.tsv" under dir.
void write_plot_data(const std::string& dir, const std::string& stem,
                     std::span<const double> values);

}  // namespace pcdpe::cli
