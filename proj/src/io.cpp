#include "csg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace csg {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

std::vector<Word> words_from_json(const json& arr, size_t expect, const char* what) {
  if (!arr.is_array() || arr.size() != expect)
    throw ParseError(std::string("marking must list one word per ") + what);
  std::vector<Word> out;
  for (const auto& w : arr) out.push_back(parse_word(w.get<std::string>()));
  return out;
}

}  // namespace

std::string fatgraph_to_json(const Fatgraph& g, const Pi1Marking* m) {
  json j;
  j["half_edges"] = g.darts;
  j["pairing"] = g.rev;
  j["heads"] = g.head;
  j["vertex_cycles"] = g.rot;
  j["tail"] = g.tail;
  if (m) {
    std::vector<std::string> words;
    for (const Word& w : m->label) words.push_back(format_word(w));
    j["marking"] = words;
  }
  return j.dump(2) + "\n";
}

Fatgraph fatgraph_from_json(const std::string& text, std::optional<Pi1Marking>* m) {
  json j = parse_json(text);
  Fatgraph g;
  try {
    g.darts = j.at("half_edges").get<int>();
    g.rev = j.at("pairing").get<std::vector<int>>();
    g.head = j.at("heads").get<std::vector<int>>();
    g.rot = j.at("vertex_cycles").get<std::vector<std::vector<int>>>();
    g.tail = j.at("tail").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("fatgraph JSON: ") + e.what());
  }
  g.check_well_formed();
  if (m) {
    if (j.contains("marking")) {
      Pi1Marking pm;
      pm.label = words_from_json(j["marking"], g.darts, "dart");
      *m = std::move(pm);
    } else {
      m->reset();
    }
  }
  return g;
}

std::string diagram_to_json(const ChordDiagram& c, const DiagramMarking* m) {
  json j;
  // slot tokens match the literal form exactly
  std::vector<std::string> slots;
  std::string lit = format_diagram(c);
  std::string cur;
  for (char ch : lit.substr(1, lit.size() - 2)) {
    if (ch == ' ') {
      slots.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) slots.push_back(cur);
  j["slots"] = slots;
  if (m) {
    std::vector<std::string> words;
    for (const Word& w : m->val) words.push_back(format_word(w));
    j["marking"] = words;
  }
  return j.dump(2) + "\n";
}

ChordDiagram diagram_from_json(const std::string& text, std::optional<DiagramMarking>* m) {
  json j = parse_json(text);
  if (!j.contains("slots") || !j["slots"].is_array())
    throw ParseError("diagram JSON needs a slots array");
  std::string lit = "[";
  bool first = true;
  for (const auto& tok : j["slots"]) {
    if (!first) lit += ' ';
    first = false;
    lit += tok.get<std::string>();
  }
  lit += "]";
  ChordDiagram c = parse_diagram(lit);
  if (m) {
    if (j.contains("marking")) {
      DiagramMarking dm;
      dm.val = words_from_json(j["marking"], c.k, "chord");
      *m = std::move(dm);
    } else {
      m->reset();
    }
  }
  return c;
}

std::vector<ChordSlide> parse_slides(const std::string& text) {
  std::vector<ChordSlide> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos || line[at] == '#') continue;
    std::istringstream ls(line);
    ChordSlide s;
    if (!(ls >> s.mover >> s.along))
      throw ParseError("slide line " + std::to_string(lineno) + ": expected two slot numbers");
    std::string extra;
    if (ls >> extra)
      throw ParseError("slide line " + std::to_string(lineno) + ": trailing tokens");
    out.push_back(s);
  }
  return out;
}

std::string format_slides(const std::vector<ChordSlide>& slides) {
  std::string out;
  for (const ChordSlide& s : slides)
    out += std::to_string(s.mover) + " " + std::to_string(s.along) + "\n";
  return out;
}

MatZ parse_matrix(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos || line[at] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> row;
    long long v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw ParseError("matrix row " + std::to_string(rows.size() + 1) + ": not an integer");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw ParseError("ragged matrix rows");
  MatZ m(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

std::string format_matrix(const MatZ& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw ParseError("cannot write " + path);
}

}  // namespace csg
