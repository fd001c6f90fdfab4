#include "fatsep/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "fatsep/error.hpp"

namespace fatsep {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buf, end);
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

double parse_number(std::string_view word, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, "bad number '" + std::string(word) + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(std::string_view word, std::size_t line) {
  Int v{};
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, "bad integer '" + std::string(word) + "'");
  }
  return v;
}

std::string_view field(std::string_view word, std::string_view key, std::size_t line) {
  if (word.substr(0, key.size()) != key) throw ParseError(line, "expected " + std::string(key) + "<value>");
  return word.substr(key.size());
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  std::size_t declared = 0;
  bool header = false;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') {
      if (line.starts_with("# label=")) inst.label = std::string(line.substr(8));
      if (line.starts_with("# seed=")) inst.seed = parse_int<std::uint64_t>(line.substr(7), lineno);
      continue;
    }
    auto words = split_words(line);
    if (words.empty()) continue;
    if (!header) {
      if (words.size() != 4 || words[0] != "fatsep" || words[1] != "v1") {
        throw ParseError(lineno, "expected header 'fatsep v1 d=<d> n=<n>'");
      }
      inst.dim = parse_int<int>(field(words[2], "d=", lineno), lineno);
      declared = parse_int<std::size_t>(field(words[3], "n=", lineno), lineno);
      if (inst.dim < 2) throw ParseError(lineno, "dimension must be at least 2");
      header = true;
      continue;
    }
    const auto d = static_cast<std::size_t>(inst.dim);
    const int id = static_cast<int>(inst.objects.size());
    std::vector<double> v;
    for (std::size_t k = 1; k < words.size(); ++k) v.push_back(parse_number(words[k], lineno));
    if (words[0] == "ball") {
      if (v.size() != d + 1) {
        throw ParseError(lineno, "ball needs " + std::to_string(d + 1) + " numbers, got " + std::to_string(v.size()));
      }
      const double r = v.back();
      v.pop_back();
      inst.objects.push_back(FatObject::ball(id, Point(std::move(v)), r));
    } else if (words[0] == "box") {
      if (v.size() != 2 * d) {
        throw ParseError(lineno, "box needs " + std::to_string(2 * d) + " numbers, got " + std::to_string(v.size()));
      }
      Point low(std::vector<double>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d)));
      Point high(std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(d), v.end()));
      inst.objects.push_back(FatObject::box(id, std::move(low), std::move(high)));
    } else {
      throw ParseError(lineno, "unknown object kind '" + std::string(words[0]) + "'");
    }
    try {
      validate(inst.objects.back());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
  if (inst.objects.size() != declared) {
    throw ParseError(lineno, "header declares " + std::to_string(declared) + " objects, found " +
                                 std::to_string(inst.objects.size()));
  }
  return inst;
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << "fatsep v1 d=" << inst.dim << " n=" << inst.size() << '\n';
  if (!inst.label.empty()) os << "# label=" << inst.label << '\n';
  if (inst.seed != 0) os << "# seed=" << inst.seed << '\n';
  for (const auto& obj : inst.objects) {
    if (const auto* b = std::get_if<Ball>(&obj.shape)) {
      os << "ball";
      for (double c : b->center.coords()) os << ' ' << format_double(c);
      os << ' ' << format_double(b->radius) << '\n';
    } else {
      const auto& box = std::get<AxisBox>(obj.shape);
      os << "box";
      for (double c : box.low.coords()) os << ' ' << format_double(c);
      for (double c : box.high.coords()) os << ' ' << format_double(c);
      os << '\n';
    }
  }
  return os.str();
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_instance(inst);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace fatsep
