#include "rkgrasp/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace rkgrasp {

ParseError::ParseError(std::string source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), source_(std::move(source)), line_(line) {}

namespace {

/// Line-oriented tokenizer: strips '#' comments and skips blank lines.
class LineReader {
 public:
  LineReader(std::istream& in, std::string_view source, bool comments = true)
      : in_(in), source_(source), comments_(comments) {}

  /// Next non-empty line split on whitespace; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (comments_) {
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      }
      std::istringstream ss(raw);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> expect(std::string_view what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) fail("unexpected end of file, expected " + std::string(what));
    return tokens;
  }

  /// A line with exactly `count` tokens.
  std::vector<std::string> expect_count(std::size_t count, std::string_view what) {
    std::vector<std::string> tokens = expect(what);
    if (tokens.size() != count)
      fail("expected " + std::to_string(count) + " " + std::string(what) + ", found " + std::to_string(tokens.size()));
    return tokens;
  }

  void expect_end() {
    std::vector<std::string> tokens;
    if (next(tokens)) fail("unexpected trailing content");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(std::string(source_), line_, message); }

  int line() const { return line_; }

  double number(const std::string& tok) const {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
      fail("invalid number '" + tok + "'");
    return v;
  }

  int integer(const std::string& tok) const {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("invalid integer '" + tok + "'");
    return v;
  }

  int positive(const std::string& tok, std::string_view what) const {
    const int v = integer(tok);
    if (v <= 0) fail(std::string(what) + " must be positive");
    return v;
  }

 private:
  std::istream& in_;
  std::string_view source_;
  bool comments_;
  int line_ = 0;
};

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  return in;
}

Eigen::VectorXd read_vector(LineReader& r, int count, std::string_view what) {
  const auto tok = r.expect_count(static_cast<std::size_t>(count), what);
  Eigen::VectorXd v(count);
  for (int i = 0; i < count; ++i) v[i] = r.number(tok[i]);
  return v;
}

Matrix read_matrix(LineReader& r, int rows, int cols, std::string_view what) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) m.row(i) = read_vector(r, cols, what).transpose();
  return m;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::string upper_trim(const std::string& raw) {
  std::string s = trim(raw);
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

void write_row(std::ostream& out, const Eigen::Ref<const Eigen::RowVectorXd>& row) {
  for (Eigen::Index j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
  out << '\n';
}

}  // namespace

TspInstance read_tsplib(std::istream& in, std::string_view source) {
  LineReader r(in, source, false);
  TspInstance inst;
  int dimension = 0;
  std::string weight_type;
  std::string weight_format = "FULL_MATRIX";
  std::vector<std::string> tok;

  // Header: KEY : VALUE lines until a *_SECTION keyword.
  std::string section;
  while (r.next(tok)) {
    std::string line;
    for (const auto& t : tok) line += t + " ";
    const auto colon = line.find(':');
    const std::string key = upper_trim(line.substr(0, colon));
    if (colon == std::string::npos) {
      section = key;
      break;
    }
    const std::string value = line.substr(colon + 1);
    const std::string uvalue = upper_trim(value);
    if (key == "NAME") {
      inst.name = trim(value);
    } else if (key == "DIMENSION") {
      dimension = r.positive(uvalue, "DIMENSION");
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = uvalue;
      if (weight_type != "EUC_2D" && weight_type != "EXPLICIT")
        r.fail("unsupported EDGE_WEIGHT_TYPE: " + weight_type);
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      weight_format = uvalue;
      if (weight_format != "FULL_MATRIX" && weight_format != "UPPER_ROW")
        r.fail("unsupported EDGE_WEIGHT_FORMAT: " + weight_format);
    } else if (key == "TYPE") {
      if (uvalue != "TSP" && uvalue != "ATSP") r.fail("unsupported TYPE: " + uvalue);
    }
  }
  if (dimension == 0) r.fail("missing DIMENSION");
  if (weight_type.empty()) r.fail("missing EDGE_WEIGHT_TYPE");

  const int n = dimension;
  inst.distance = Matrix::Zero(n, n);
  if (weight_type == "EUC_2D") {
    if (section != "NODE_COORD_SECTION") r.fail("expected NODE_COORD_SECTION");
    Eigen::MatrixX2d xy(n, 2);
    for (int i = 0; i < n; ++i) {
      const auto t = r.expect_count(3, "node coordinate fields");
      const int id = r.integer(t[0]);
      if (id < 1 || id > n) r.fail("node id out of range");
      xy(id - 1, 0) = r.number(t[1]);
      xy(id - 1, 1) = r.number(t[2]);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) inst.distance(i, j) = std::floor((xy.row(i) - xy.row(j)).norm() + 0.5);
  } else {
    if (section != "EDGE_WEIGHT_SECTION") r.fail("expected EDGE_WEIGHT_SECTION");
    const std::size_t needed = weight_format == "FULL_MATRIX" ? static_cast<std::size_t>(n) * n
                                                               : static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<double> values;
    while (values.size() < needed) {
      if (!r.next(tok)) r.fail("edge weight section truncated");
      for (const auto& t : tok) values.push_back(r.number(t));
    }
    if (values.size() != needed) r.fail("too many edge weights");
    std::size_t k = 0;
    if (weight_format == "FULL_MATRIX") {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inst.distance(i, j) = values[k++];
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inst.distance(i, j) = inst.distance(j, i) = values[k++];
    }
  }
  while (r.next(tok))
    if (upper_trim(tok[0]) != "EOF") r.fail("unexpected content after data section");

  if (n < 3) r.fail("at least 3 cities are required");
  const int line = r.line();
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(source), line, e.what());
  }
  return inst;
}

StcpInstance read_stcp(std::istream& in, std::string_view source) {
  LineReader r(in, source);
  auto head = r.expect("header 'rows cols [steiner]'");
  if (head.size() != 2 && head.size() != 3) r.fail("header must be 'rows cols [steiner]'");
  const int rows = r.positive(head[0], "row count");
  const int cols = r.positive(head[1], "column count");
  bool steiner = false;
  if (head.size() == 3) {
    if (head[2] != "steiner") r.fail("unknown header flag '" + head[2] + "'");
    steiner = true;
  }
  std::vector<StcpInstance::Triple> triples;
  triples.reserve(rows);
  for (int i = 0; i < rows; ++i) {
    const auto t = r.expect("row");
    if (t.size() != 3) r.fail("row weight != 3 (found " + std::to_string(t.size()) + " entries)");
    StcpInstance::Triple tr{};
    for (int k = 0; k < 3; ++k) {
      const int c = r.integer(t[k]);
      if (c < 1 || c > cols) r.fail("column index " + t[k] + " out of range 1.." + std::to_string(cols));
      tr[k] = c - 1;
    }
    if (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2]) r.fail("row weight != 3 (repeated column)");
    triples.push_back(tr);
  }
  r.expect_end();
  try {
    return StcpInstance(cols, std::move(triples), steiner, std::string(source));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(source), r.line(), e.what());
  }
}

SspInstance read_ssp(std::istream& in, std::string_view source) {
  LineReader r(in, source);
  const auto head = r.expect_count(3, "header fields 'jobs tools C'");
  const int jobs = r.positive(head[0], "job count");
  const int tools = r.positive(head[1], "tool count");
  const int cap = r.positive(head[2], "magazine capacity");
  SspInstance::ToolMatrix m(jobs, tools);
  for (int t = 0; t < jobs; ++t) {
    const auto row = r.expect_count(static_cast<std::size_t>(tools), "tool entries");
    int count = 0;
    for (int u = 0; u < tools; ++u) {
      const int v = r.integer(row[u]);
      if (v != 0 && v != 1) r.fail("non-binary entry '" + row[u] + "'");
      m(t, u) = v;
      count += v;
    }
    if (count > cap)
      r.fail("job " + std::to_string(t + 1) + " needs " + std::to_string(count) + " tools, magazine holds " +
             std::to_string(cap));
  }
  r.expect_end();
  return SspInstance(std::move(m), cap, std::string(source));
}

NcgppInstance read_ncgpp(std::istream& in, std::string_view source) {
  LineReader r(in, source);
  const auto head = r.expect_count(2, "header fields '|B| |N|'");
  const int nb = r.positive(head[0], "station count");
  const int nr = r.positive(head[1], "RNC count");
  NcgppInstance inst;
  inst.name = std::string(source);
  inst.traffic = read_vector(r, nb, "traffic values");
  if ((inst.traffic.array() < 0.0).any()) r.fail("negative traffic");
  inst.capacity = read_vector(r, nr, "capacity values");
  if ((inst.capacity.array() <= 0.0).any()) r.fail("capacities must be positive");
  inst.handover = Matrix(nb, nb);
  for (int b = 0; b < nb; ++b) {
    inst.handover.row(b) = read_vector(r, nb, "handover values").transpose();
    if ((inst.handover.row(b).array() < 0.0).any()) r.fail("negative handover count");
    if (inst.handover(b, b) != 0.0) r.fail("H(b,b) must be 0");
  }
  r.expect_end();
  return inst;
}

ThlpInstance read_thlp(std::istream& in, std::string_view source) {
  LineReader r(in, source);
  auto head = r.expect("header 'n p discount [collection distribution]'");
  if (head.size() != 3 && head.size() != 5) r.fail("header must be 'n p discount [collection distribution]'");
  ThlpInstance inst;
  inst.name = std::string(source);
  const int n = r.positive(head[0], "node count");
  inst.hubs = r.positive(head[1], "hub count");
  inst.discount = r.number(head[2]);
  if (head.size() == 5) {
    inst.collection = r.number(head[3]);
    inst.distribution = r.number(head[4]);
  }
  if (inst.hubs > n) r.fail("hub count exceeds node count");
  if (!(inst.discount > 0.0 && inst.discount <= 1.0)) r.fail("discount must be in (0,1]");

  const auto body = r.expect_count(1, "body kind COORD or MATRIX");
  if (body[0] == "COORD") {
    const Matrix xy = read_matrix(r, n, 2, "coordinates");
    inst.cost = Matrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inst.cost(i, j) = (xy.row(i) - xy.row(j)).norm();
  } else if (body[0] == "MATRIX") {
    inst.cost = read_matrix(r, n, n, "cost values");
  } else {
    r.fail("unknown body kind '" + body[0] + "'");
  }
  inst.demand = read_matrix(r, n, n, "demand values");
  r.expect_end();
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(source), r.line(), e.what());
  }
  return inst;
}

namespace {

template <typename Reader>
auto parse_file(const std::filesystem::path& path, Reader&& read) {
  std::ifstream in = open(path);
  return read(in, path.string());
}

}  // namespace

TspInstance parse_tsplib(const std::filesystem::path& path) {
  TspInstance inst = parse_file(path, [](std::istream& in, const std::string& s) { return read_tsplib(in, s); });
  if (inst.name.empty()) inst.name = path.stem().string();
  return inst;
}

StcpInstance parse_stcp(const std::filesystem::path& path) {
  const StcpInstance raw = parse_file(path, [](std::istream& in, const std::string& s) { return read_stcp(in, s); });
  return StcpInstance(raw.columns(), raw.triples(), raw.steiner(), path.stem().string());
}

SspInstance parse_ssp(const std::filesystem::path& path) {
  const SspInstance raw = parse_file(path, [](std::istream& in, const std::string& s) { return read_ssp(in, s); });
  return SspInstance(raw.matrix(), raw.capacity(), path.stem().string());
}

NcgppInstance parse_ncgpp(const std::filesystem::path& path) {
  NcgppInstance inst = parse_file(path, [](std::istream& in, const std::string& s) { return read_ncgpp(in, s); });
  inst.name = path.stem().string();
  return inst;
}

ThlpInstance parse_thlp(const std::filesystem::path& path) {
  ThlpInstance inst = parse_file(path, [](std::istream& in, const std::string& s) { return read_thlp(in, s); });
  inst.name = path.stem().string();
  return inst;
}

void write_tsplib(std::ostream& out, const TspInstance& inst) {
  const auto old = out.precision(17);
  out << "NAME : " << (inst.name.empty() ? "unnamed" : inst.name) << '\n'
      << "TYPE : TSP\n"
      << "DIMENSION : " << inst.size() << '\n'
      << "EDGE_WEIGHT_TYPE : EXPLICIT\n"
      << "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n"
      << "EDGE_WEIGHT_SECTION\n";
  for (int i = 0; i < inst.size(); ++i) write_row(out, inst.distance.row(i));
  out << "EOF\n";
  out.precision(old);
}

void write_stcp(std::ostream& out, const StcpInstance& inst) {
  out << inst.rows() << ' ' << inst.columns() << (inst.steiner() ? " steiner" : "") << '\n';
  for (const auto& t : inst.triples()) out << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

void write_ssp(std::ostream& out, const SspInstance& inst) {
  out << inst.jobs() << ' ' << inst.tools() << ' ' << inst.capacity() << '\n';
  for (int t = 0; t < inst.jobs(); ++t) {
    for (int u = 0; u < inst.tools(); ++u) out << (u ? " " : "") << inst.matrix()(t, u);
    out << '\n';
  }
}

void write_ncgpp(std::ostream& out, const NcgppInstance& inst) {
  const auto old = out.precision(17);
  out << inst.stations() << ' ' << inst.rncs() << '\n';
  write_row(out, inst.traffic.transpose());
  write_row(out, inst.capacity.transpose());
  for (int b = 0; b < inst.stations(); ++b) write_row(out, inst.handover.row(b));
  out.precision(old);
}

void write_thlp(std::ostream& out, const ThlpInstance& inst) {
  const auto old = out.precision(17);
  out << inst.size() << ' ' << inst.hubs << ' ' << inst.discount << ' ' << inst.collection << ' '
      << inst.distribution << "\nMATRIX\n";
  for (int i = 0; i < inst.size(); ++i) write_row(out, inst.cost.row(i));
  for (int i = 0; i < inst.size(); ++i) write_row(out, inst.demand.row(i));
  out.precision(old);
}

}  // namespace rkgrasp
