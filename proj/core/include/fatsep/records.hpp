#pragma once

#include <string>

#include "fatsep/exact_solver.hpp"
#include "fatsep/oracle.hpp"
#include "fatsep/ptas.hpp"
#include "fatsep/separator.hpp"

namespace fatsep {

/// Line-oriented text records for solver output. Timings are only written
/// when `timing` is set, so records of seeded runs compare byte for byte.
std::string format_record(const PackSolution& s, bool timing = false);
std::string format_record(const PierceSolution& s, bool timing = false);
std::string format_record(const PtasPackResult& r, bool timing = false);
std::string format_record(const PtasPierceResult& r, bool timing = false);
std::string format_record(const SeparatorResult& r);
std::string format_record(const OracleResult& r, bool pack);

}  // namespace fatsep
