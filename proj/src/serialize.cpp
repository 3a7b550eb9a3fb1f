#include "dimwit/serialize.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dimwit {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::json vector_to_json(const StateVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const cplx& a : v.amplitudes()) arr.push_back({a.real(), a.imag()});
  return arr;
}

StateVector vector_from_json(const nlohmann::json& arr, Field field) {
  if (!arr.is_array() || arr.empty())
    throw StructuralError("state vector must be a non-empty array");
  std::vector<cplx> amp;
  for (const auto& c : arr) {
    if (!c.is_array() || c.size() != 2)
      throw StructuralError("amplitudes must be [re, im] pairs");
    amp.emplace_back(c[0].get<double>(), c[1].get<double>());
  }
  return StateVector(std::move(amp), field);
}

}  // namespace

nlohmann::json scenario_to_json(const Scenario& s) {
  s.validate();
  nlohmann::json j;
  j["dim"] = s.dim;
  j["field"] = to_string(s.field);
  j["preparations"] = nlohmann::json::array();
  for (const auto& p : s.preparations) {
    if (!p.pure_source())
      throw StructuralError("only pure-state scenarios can be serialized");
    j["preparations"].push_back(vector_to_json(*p.pure_source()));
  }
  j["effects"] = nlohmann::json::array();
  for (const auto& e : s.effects) {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : e.columns()) cols.push_back(vector_to_json(c));
    j["effects"].push_back({{"columns", cols}});
  }
  return j;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw StructuralError("scenario document must be an object");
  try {
    Scenario s;
    s.dim = j.at("dim").get<int>();
    const std::string f = j.at("field").get<std::string>();
    if (f == "real")
      s.field = Field::Real;
    else if (f == "complex")
      s.field = Field::Complex;
    else
      throw StructuralError("field must be \"real\" or \"complex\"");
    for (const auto& p : j.at("preparations"))
      s.preparations.push_back(Preparation::pure(vector_from_json(p, s.field)));
    for (const auto& e : j.at("effects")) {
      std::vector<StateVector> cols;
      for (const auto& c : e.at("columns")) cols.push_back(vector_from_json(c, s.field));
      s.effects.push_back(Effect::projector(std::move(cols)));
    }
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("malformed scenario document: ") + e.what());
  }
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void save_scenario(const Scenario& s, const std::string& path) {
  write_file(path, canonical_dump(scenario_to_json(s)));
}

Scenario load_scenario(const std::string& path) {
  return scenario_from_json(nlohmann::json::parse(read_file(path)));
}

std::string pm_to_csv(const ProbabilityMatrix& pm) {
  std::ostringstream os;
  const std::size_t n = static_cast<std::size_t>(pm.k()) + 1;
  for (std::size_t j = 0; j < n; ++j) os << (j ? "," : "") << "x" << j + 1;
  os << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      os << (j ? "," : "") << format_double(pm.at(i, j));
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw StructuralError("malformed number in CSV: " + s);
  return v;
}

std::int64_t parse_int(const std::string& s) {
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw StructuralError("malformed integer in CSV: " + s);
  return v;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line != "\r") lines.push_back(line);
  return lines;
}

}  // namespace

ProbabilityMatrix pm_from_csv(const std::string& text) {
  const auto lines = nonempty_lines(text);
  if (lines.size() < 3) throw StructuralError("probability CSV needs header and rows");
  const std::size_t n = split_csv_line(lines[0]).size();
  if (lines.size() != n + 1)
    throw StructuralError("probability CSV row count does not match header");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto cells = split_csv_line(lines[i + 1]);
    if (cells.size() != n) throw StructuralError("probability CSV is ragged");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_double(cells[j]);
  }
  return ProbabilityMatrix(std::move(m));
}

std::string counts_to_csv(const ShotData& data) {
  data.validate();
  std::ostringstream os;
  os << "i,j,n_ij,n\n";
  for (std::size_t i = 0; i < data.counts.rows(); ++i)
    for (std::size_t j = 0; j < data.counts.cols(); ++j)
      os << i + 1 << "," << j + 1 << "," << data.counts(i, j) << "," << data.shots
         << "\n";
  return os.str();
}

ShotData counts_from_csv(const std::string& text) {
  const auto lines = nonempty_lines(text);
  if (lines.size() < 2) throw StructuralError("counts CSV needs header and rows");
  if (split_csv_line(lines[0]).size() != 4)
    throw StructuralError("counts CSV header must be i,j,n_ij,n");
  std::size_t k = 0, m = 0;
  std::int64_t shots = -1;
  struct Cell {
    std::size_t i, j;
    std::int64_t n;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto f = split_csv_line(lines[r]);
    if (f.size() != 4) throw StructuralError("counts CSV is ragged");
    Cell c{static_cast<std::size_t>(parse_int(f[0])),
           static_cast<std::size_t>(parse_int(f[1])), parse_int(f[2])};
    const std::int64_t n = parse_int(f[3]);
    if (shots < 0) shots = n;
    if (n != shots) throw StructuralError("counts CSV mixes different N values");
    if (c.i < 1 || c.j < 1) throw StructuralError("counts CSV indices are 1-based");
    k = std::max(k, c.i);
    m = std::max(m, c.j);
    cells.push_back(c);
  }
  if (m != k + 1) throw StructuralError("counts CSV must cover k x (k+1) cells");
  if (cells.size() != k * m)
    throw StructuralError("counts CSV must contain every cell exactly once");
  ShotData data;
  data.shots = shots;
  data.counts = Matrix<std::int64_t>(k, m, -1);
  for (const Cell& c : cells) {
    if (data.counts(c.i - 1, c.j - 1) != -1)
      throw StructuralError("counts CSV repeats a cell");
    data.counts(c.i - 1, c.j - 1) = c.n;
  }
  data.validate();
  return data;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write file: " + path);
  out << content;
}

}  // namespace dimwit
