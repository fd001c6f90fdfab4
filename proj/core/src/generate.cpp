#include "fatsep/generate.hpp"

#include <cmath>
#include <random>

#include "fatsep/error.hpp"
#include "fatsep/instance_io.hpp"

namespace fatsep {

const char* to_string(Family f) {
  switch (f) {
    case Family::Random:
      return "random";
    case Family::Clusters:
      return "clusters";
    case Family::Grid:
      return "grid";
  }
  return "?";
}

const char* to_string(ShapeKind s) {
  switch (s) {
    case ShapeKind::Ball:
      return "ball";
    case ShapeKind::Box:
      return "box";
    case ShapeKind::Mixed:
      return "mixed";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "random") return Family::Random;
  if (s == "clusters") return Family::Clusters;
  if (s == "grid") return Family::Grid;
  throw Error("unknown family '" + s + "' (random, clusters, grid)");
}

ShapeKind parse_shape(const std::string& s) {
  if (s == "ball" || s == "disk") return ShapeKind::Ball;
  if (s == "box") return ShapeKind::Box;
  if (s == "mixed") return ShapeKind::Mixed;
  throw Error("unknown shape '" + s + "' (ball, box, mixed)");
}

void GenSpec::validate() const {
  if (dim < 2 || dim > 8) throw Error("dimension must be in [2, 8]");
  if (family != Family::Grid && n < 0) throw Error("n must be non-negative");
  if (family == Family::Random && !(density > 0.0)) throw Error("density must be positive");
  if (!(min_size > 0.0 && min_size <= max_size)) throw Error("need 0 < min_size <= max_size");
  if (family == Family::Clusters && clusters < 1) throw Error("clusters must be at least 1");
  if (family == Family::Grid && (k < 0 || per_site < 1)) throw Error("grid needs k >= 0 and per_site >= 1");
  if (family == Family::Grid && !(spacing > 1.2)) throw Error("grid spacing must exceed 1.2");
}

namespace {

class Maker {
 public:
  Maker(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // object of size `s` centred at `c`
  FatObject make(const std::vector<double>& c, double s) {
    bool ball = spec_.shape == ShapeKind::Ball;
    if (spec_.shape == ShapeKind::Mixed) ball = uniform(0.0, 1.0) < 0.5;
    if (ball) return FatObject::ball(0, Point(c), s / 2.0);
    // longest side s, the others in [s/2, s]
    const auto d = c.size();
    const auto longest = static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, d - 1)(rng_));
    std::vector<double> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double side = i == longest ? s : uniform(0.5 * s, s);
      lo[i] = c[i] - side / 2.0;
      hi[i] = c[i] + side / 2.0;
    }
    return FatObject::box(0, Point(std::move(lo)), Point(std::move(hi)));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  const GenSpec& spec_;
  std::mt19937_64 rng_;
};

}  // namespace

Instance gen_instance(const GenSpec& spec) {
  spec.validate();
  Maker maker(spec);
  const auto d = static_cast<std::size_t>(spec.dim);
  std::vector<FatObject> objs;
  std::string label;
  switch (spec.family) {
    case Family::Random: {
      const double side = std::pow(std::max(1, spec.n) / spec.density, 1.0 / spec.dim);
      for (int i = 0; i < spec.n; ++i) {
        std::vector<double> c(d);
        for (auto& x : c) x = maker.uniform(0.0, side);
        objs.push_back(maker.make(c, maker.uniform(spec.min_size, spec.max_size)));
      }
      label = "random";
      break;
    }
    case Family::Clusters: {
      std::normal_distribution<double> spread(0.0, 1.0);
      for (int i = 0; i < spec.n; ++i) {
        const int cluster = i % spec.clusters;
        std::vector<double> c(d);
        for (auto& x : c) x = spread(maker.rng());
        c[0] += 10.0 * cluster;
        objs.push_back(maker.make(c, maker.uniform(spec.min_size, spec.max_size)));
      }
      label = "clusters";
      break;
    }
    case Family::Grid: {
      std::size_t sites = 1;
      for (std::size_t i = 0; i < d; ++i) sites *= static_cast<std::size_t>(spec.k);
      for (std::size_t site = 0; site < sites; ++site) {
        std::vector<double> base(d);
        std::size_t rest = site;
        for (std::size_t i = 0; i < d; ++i) {
          base[i] = spec.spacing * static_cast<double>(rest % static_cast<std::size_t>(spec.k));
          rest /= static_cast<std::size_t>(spec.k);
        }
        for (int j = 0; j < spec.per_site; ++j) {
          // centres within 0.1 per axis of the site and sizes >= 0.8 keep the
          // objects at one site pairwise intersecting for d <= 8
          std::vector<double> c = base;
          for (auto& x : c) x += maker.uniform(-0.1, 0.1);
          objs.push_back(maker.make(c, maker.uniform(0.8, 1.0)));
        }
      }
      label = "grid-k" + std::to_string(spec.k);
      if (spec.spacing != GenSpec{}.spacing) label += "-sp" + format_double(spec.spacing);
      break;
    }
  }
  label += "-" + std::string(to_string(spec.shape)) + "-d" + std::to_string(spec.dim) + "-n" +
           std::to_string(objs.size()) + "-s" + std::to_string(spec.seed);
  Instance inst = make_instance(spec.dim, std::move(objs), std::move(label));
  inst.seed = spec.seed;
  return inst;
}

}  // namespace fatsep
