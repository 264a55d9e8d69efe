#include "tww/io.hpp"

#include <fstream>
#include <sstream>

#include "tww/errors.hpp"

namespace tww {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational");
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const BigInt p(text.substr(0, slash));
      const BigInt q(text.substr(slash + 1));
      if (q == 0) throw InputError("zero denominator in '" + text + "'");
      return Rational(p, q);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+") throw InputError("bad decimal '" + text + "'");
      BigInt scale = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
      return Rational(BigInt(digits), scale);
    }
    return Rational(BigInt(text));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed rational '" + text + "'");
  }
}

std::string rational_to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

Rational InstanceData::edge_weight_of(int u, int v) const {
  auto it = edge_weight.find(normalized(u, v));
  return it == edge_weight.end() ? Rational(1) : it->second;
}

bool InstanceData::in_prescribed(int u, int v) const {
  if (!graph.adjacent(u, v)) return false;
  return !prescribed || prescribed->count(normalized(u, v)) > 0;
}

std::vector<Edge> InstanceData::prescribed_edges() const {
  if (!prescribed) return graph.edges();
  return {prescribed->begin(), prescribed->end()};
}

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;
  std::string line;

  bool next(std::istringstream& tokens) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      tokens.clear();
      tokens.str(line);
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  }
};

int read_int(std::istringstream& tokens, LineReader& r) {
  long long x;
  if (!(tokens >> x)) r.fail("expected an integer");
  return static_cast<int>(x);
}

std::string read_word(std::istringstream& tokens, LineReader& r) {
  std::string s;
  if (!(tokens >> s)) r.fail("missing field");
  return s;
}

void expect_end(std::istringstream& tokens, LineReader& r) {
  std::string extra;
  if (tokens >> extra) r.fail("trailing token '" + extra + "'");
}

int read_header(LineReader& r, std::istringstream& tokens, const std::string& keyword) {
  if (!r.next(tokens)) throw InputError("empty input, expected '" + keyword + " <n>'");
  std::string head;
  tokens >> head;
  if (head != keyword) r.fail("expected header '" + keyword + " <n>'");
  const int n = read_int(tokens, r);
  if (n < 0) r.fail("negative vertex count");
  expect_end(tokens, r);
  return n;
}

}  // namespace

InstanceData read_instance(std::istream& in) {
  LineReader r{in, 0, {}};
  std::istringstream tokens;
  const int n = read_header(r, tokens, "tgf");
  InstanceData data;
  data.graph = Trigraph(n);
  data.vertex_weight.assign(n, Rational(1));
  data.demand.assign(n, 1);
  data.host_label.assign(n, 0);
  std::vector<Edge> y_lines;
  std::vector<std::pair<Edge, Rational>> ew_lines;
  auto vertex = [&](int v) {
    if (v < 0 || v >= n) r.fail("vertex " + std::to_string(v) + " out of range");
    return v;
  };
  while (r.next(tokens)) {
    std::string kind;
    tokens >> kind;
    if (kind == "b" || kind == "r") {
      const int u = vertex(read_int(tokens, r));
      const int v = vertex(read_int(tokens, r));
      if (u == v) r.fail("self-loop");
      const Rel want = kind == "b" ? Rel::Black : Rel::Red;
      const Rel have = data.graph.rel(u, v);
      if (have != Rel::None && have != want) r.fail("pair listed as both black and red");
      data.graph.set(u, v, want);
    } else if (kind == "w") {
      const int v = vertex(read_int(tokens, r));
      data.vertex_weight[v] = parse_rational(read_word(tokens, r));
      if (data.vertex_weight[v] < 0) r.fail("negative weight");
    } else if (kind == "d") {
      const int v = vertex(read_int(tokens, r));
      const int k = read_int(tokens, r);
      if (k < 1) r.fail("demand must be at least 1");
      data.demand[v] = k;
    } else if (kind == "ew") {
      const int u = vertex(read_int(tokens, r));
      const int v = vertex(read_int(tokens, r));
      const Rational q = parse_rational(read_word(tokens, r));
      if (q < 0) r.fail("negative weight");
      ew_lines.push_back({normalized(u, v), q});
    } else if (kind == "y") {
      const int u = vertex(read_int(tokens, r));
      const int v = vertex(read_int(tokens, r));
      y_lines.push_back(normalized(u, v));
    } else if (kind == "g") {
      const int v = vertex(read_int(tokens, r));
      data.host_label[v] = read_int(tokens, r);
    } else if (kind == "gh") {
      const int v = read_int(tokens, r);
      if (v < 0) r.fail("negative pattern vertex");
      data.pattern_label[v] = read_int(tokens, r);
    } else if (kind == "tw") {
      std::vector<std::string> words;
      std::string w;
      while (tokens >> w) words.push_back(w);
      if (words.size() < 2) r.fail("tuple weight needs a tuple and a weight");
      std::vector<int> tuple;
      for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        try {
          tuple.push_back(vertex(std::stoi(words[i])));
        } catch (const std::logic_error&) {
          r.fail("bad tuple entry '" + words[i] + "'");
        }
      }
      const Rational q = parse_rational(words.back());
      if (q < 0) r.fail("negative weight");
      data.tuple_weight[tuple] = q;
      continue;
    } else {
      r.fail("unknown line kind '" + kind + "'");
    }
    expect_end(tokens, r);
  }
  for (const auto& [e, q] : ew_lines) {
    if (!data.graph.adjacent(e.first, e.second)) throw InputError("edge weight on a non-edge");
    data.edge_weight[e] = q;
  }
  if (!y_lines.empty()) {
    data.prescribed.emplace();
    for (const auto& e : y_lines) {
      if (!data.graph.adjacent(e.first, e.second)) throw InputError("prescribed pair is not an edge");
      data.prescribed->insert(e);
    }
  }
  return data;
}

InstanceData read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return read_instance(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_trigraph(std::ostream& out, const Trigraph& g) {
  out << "tgf " << g.n() << "\n";
  for (const auto& [u, v] : g.black_edges()) out << "b " << u << " " << v << "\n";
  for (const auto& [u, v] : g.red_edges()) out << "r " << u << " " << v << "\n";
}

void write_instance(std::ostream& out, const InstanceData& data) {
  write_trigraph(out, data.graph);
  const int n = data.graph.n();
  for (int v = 0; v < n && v < static_cast<int>(data.vertex_weight.size()); ++v)
    if (data.vertex_weight[v] != 1) out << "w " << v << " " << rational_to_string(data.vertex_weight[v]) << "\n";
  for (int v = 0; v < n && v < static_cast<int>(data.demand.size()); ++v)
    if (data.demand[v] != 1) out << "d " << v << " " << data.demand[v] << "\n";
  for (const auto& [e, q] : data.edge_weight)
    out << "ew " << e.first << " " << e.second << " " << rational_to_string(q) << "\n";
  if (data.prescribed)
    for (const auto& e : *data.prescribed) out << "y " << e.first << " " << e.second << "\n";
  for (int v = 0; v < n && v < static_cast<int>(data.host_label.size()); ++v)
    if (data.host_label[v] != 0) out << "g " << v << " " << data.host_label[v] << "\n";
  for (const auto& [v, k] : data.pattern_label) out << "gh " << v << " " << k << "\n";
  for (const auto& [t, q] : data.tuple_weight) {
    out << "tw";
    for (int v : t) out << " " << v;
    out << " " << rational_to_string(q) << "\n";
  }
}

ContractionSequence read_sequence(std::istream& in) {
  LineReader r{in, 0, {}};
  std::istringstream tokens;
  ContractionSequence seq;
  seq.origin = read_header(r, tokens, "seq");
  while (r.next(tokens)) {
    std::string kind;
    tokens >> kind;
    if (kind != "c") r.fail("expected 'c u v w'");
    ContractionStep s;
    s.u = read_int(tokens, r);
    s.v = read_int(tokens, r);
    s.w = read_int(tokens, r);
    expect_end(tokens, r);
    seq.steps.push_back(s);
  }
  return seq;
}

ContractionSequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return read_sequence(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_sequence(std::ostream& out, const ContractionSequence& seq) {
  out << "seq " << seq.origin << "\n";
  for (const auto& s : seq.steps) out << "c " << s.u << " " << s.v << " " << s.w << "\n";
}

}  // namespace tww
