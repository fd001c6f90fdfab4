#pragma once

#include <vector>

#include "fatsep/separator.hpp"
#include "problem.hpp"

namespace fatsep::detail {

struct Shell {
  int index = 0;
  double magnification = 1.0;
  Bits boundary;
  Bits small_boundary;
  int measure = 0;
  int small_measure = 0;
};

struct Sweep {
  std::size_t best = 0;
  double size_threshold = 0.0;
  std::vector<Shell> shells;
};

struct Separation {
  BoxRegion box;
  BoxRegion base_box;
  double m_star = 1.0;
  Bits inside, outside, boundary;
  std::vector<std::size_t> mu_total, mu_inside, mu_outside, mu_boundary;
  bool degenerate = false;

  bool balanced(double cap) const;
};

BoxRegion find_base_box(const Problem& problem, const Bits& subset, int tau, const SeparatorConfig& cfg,
                        bool* degenerate = nullptr);

Sweep shell_sweep(const Problem& problem, const Bits& subset, const BoxRegion& base, int g,
                  const SeparatorConfig& cfg);

Separation separate(const Problem& problem, const Bits& subset, const SeparatorConfig& cfg);

int shell_count(std::size_t dim, int g, int cap);

}  // namespace fatsep::detail
