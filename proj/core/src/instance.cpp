#include "fatsep/instance.hpp"

#include <string>

#include "fatsep/error.hpp"

namespace fatsep {

void Instance::validate(double max_aspect) const {
  if (dim < 2) throw Error("instance dimension must be at least 2");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& obj = objects[i];
    if (obj.id != static_cast<int>(i)) {
      throw Error("object ids must be dense: expected " + std::to_string(i) + ", got " + std::to_string(obj.id));
    }
    if (obj.dim() != static_cast<std::size_t>(dim)) {
      throw Error("object " + std::to_string(i) + " has dimension " + std::to_string(obj.dim()) +
                  ", instance has " + std::to_string(dim));
    }
    fatsep::validate(obj, max_aspect);
  }
}

Instance make_instance(int dim, std::vector<FatObject> objects, std::string label) {
  Instance inst;
  inst.dim = dim;
  inst.label = std::move(label);
  inst.objects = std::move(objects);
  for (std::size_t i = 0; i < inst.objects.size(); ++i) inst.objects[i].id = static_cast<int>(i);
  return inst;
}

std::vector<FatObject> select(const Instance& inst, const std::vector<int>& ids) {
  std::vector<FatObject> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(inst.objects.at(static_cast<std::size_t>(id)));
  return out;
}

}  // namespace fatsep
