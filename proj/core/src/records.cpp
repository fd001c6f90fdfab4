#include "fatsep/records.hpp"

#include <sstream>

#include "fatsep/instance_io.hpp"

namespace fatsep {

namespace {

void put_ids(std::ostream& os, const char* key, const std::vector<int>& ids) {
  os << key;
  for (int id : ids) os << ' ' << id;
  os << '\n';
}

void put_point(std::ostream& os, const char* key, const Point& p) {
  os << key;
  for (double c : p.coords()) os << ' ' << format_double(c);
  os << '\n';
}

void put_box(std::ostream& os, const char* key, const BoxRegion& b) {
  os << key;
  for (double c : b.low().coords()) os << ' ' << format_double(c);
  for (double c : b.high().coords()) os << ' ' << format_double(c);
  os << '\n';
}

void put_stats(std::ostream& os, const SearchStats& s, bool timing) {
  os << "optimal " << (s.optimal ? 1 : 0) << '\n';
  os << "nodes " << s.nodes << '\n';
  os << "depth " << s.depth << '\n';
  os << "separations " << s.separations << '\n';
  os << "fallbacks " << s.fallbacks << '\n';
  if (timing) os << "wall_ms " << format_double(s.wall_time.count() * 1e3) << '\n';
}

void put_losses(std::ostream& os, const std::vector<LevelLoss>& losses) {
  for (const auto& l : losses) {
    os << "loss depth=" << l.depth << " boundary_objects=" << l.boundary_objects
       << " boundary_measure=" << l.boundary_measure << " total_measure=" << l.total_measure << '\n';
  }
}

void put_measure(std::ostream& os, const char* key, const MeasureEstimate& m) {
  os << key << ' ' << m.value << (m.kind == EstimateKind::Exact ? " exact" : " greedy") << '\n';
}

}  // namespace

std::string format_record(const PackSolution& s, bool timing) {
  std::ostringstream os;
  os << "pack " << s.value << '\n';
  put_stats(os, s.stats, timing);
  put_ids(os, "witness", s.witness);
  return os.str();
}

std::string format_record(const PierceSolution& s, bool timing) {
  std::ostringstream os;
  os << "pierce " << s.value << '\n';
  put_stats(os, s.stats, timing);
  for (const auto& p : s.witness) put_point(os, "point", p);
  return os.str();
}

std::string format_record(const PtasPackResult& r, bool timing) {
  return format_record(r.solution, timing) + [&] {
    std::ostringstream os;
    put_losses(os, r.losses);
    return os.str();
  }();
}

std::string format_record(const PtasPierceResult& r, bool timing) {
  return format_record(r.solution, timing) + [&] {
    std::ostringstream os;
    put_losses(os, r.losses);
    return os.str();
  }();
}

std::string format_record(const SeparatorResult& r) {
  std::ostringstream os;
  put_box(os, "box", r.box);
  put_box(os, "base_box", r.base_box);
  os << "m_star " << format_double(r.m_star) << '\n';
  os << "degenerate " << (r.degenerate ? 1 : 0) << '\n';
  put_measure(os, "mu_total", r.mu_total);
  put_measure(os, "mu_inside", r.mu_inside);
  put_measure(os, "mu_outside", r.mu_outside);
  put_measure(os, "mu_boundary", r.mu_boundary);
  put_ids(os, "inside", r.inside_ids);
  put_ids(os, "outside", r.outside_ids);
  put_ids(os, "boundary", r.boundary_ids);
  return os.str();
}

std::string format_record(const OracleResult& r, bool pack) {
  std::ostringstream os;
  os << (pack ? "pack " : "pierce ") << r.value << '\n';
  os << "method " << to_string(r.method) << '\n';
  if (pack) {
    put_ids(os, "witness", r.ids);
  } else {
    for (const auto& p : r.points) put_point(os, "point", p);
  }
  return os.str();
}

}  // namespace fatsep
