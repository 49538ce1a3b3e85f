#include "omlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "omlab/errors.hpp"

namespace omlab {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string key;
  std::size_t key_column;
  std::vector<Token> values;
};

struct Document {
  std::vector<Line> lines;
  std::optional<std::uint64_t> seed;
};

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  const auto ok = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; };
  if (!std::isalnum(static_cast<unsigned char>(s.front())) && s.front() != '_') return false;
  for (char c : s) {
    if (!ok(c)) return false;
  }
  return true;
}

std::optional<std::uint64_t> seed_comment(std::string_view comment) {
  std::istringstream in{std::string(comment)};
  std::string key;
  std::uint64_t seed = 0;
  if (in >> key && key == "seed:" && in >> seed) {
    std::string rest;
    if (!(in >> rest)) return seed;
  }
  return std::nullopt;
}

std::vector<Token> split_tokens(std::string_view text, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({std::string(text.substr(start, i - start)), offset + start + 1});
  }
  return out;
}

Document tokenize(std::string_view text) {
  Document doc;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      if (auto seed = seed_comment(raw.substr(hash + 1))) doc.seed = seed;
      raw = raw.substr(0, hash);
    }
    std::size_t first = 0;
    while (first < raw.size() && std::isspace(static_cast<unsigned char>(raw[first]))) ++first;
    if (first == raw.size()) {
      if (end == text.size()) break;
      continue;
    }
    const auto colon = raw.find(':', first);
    if (colon == std::string_view::npos) throw ParseError(number, first + 1, "expected `key:`");
    Line line{number, std::string(raw.substr(first, colon - first)), first + 1, {}};
    while (!line.key.empty() && std::isspace(static_cast<unsigned char>(line.key.back()))) line.key.pop_back();
    line.values = split_tokens(raw.substr(colon + 1), colon + 1);
    doc.lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return doc;
}

GroundSet parse_elements(const Line& line) {
  std::vector<std::string> labels;
  for (const auto& t : line.values) {
    if (!valid_label(t.text)) throw ParseError(line.number, t.column, "invalid element label '" + t.text + "'");
    labels.push_back(t.text);
  }
  try {
    return GroundSet(std::move(labels));
  } catch (const Error& ex) {
    throw ParseError(line.number, line.key_column, ex.what());
  }
}

std::size_t element_index(const GroundSet& ground, const Line& line, const Token& t, std::string_view label) {
  const std::size_t i = ground.find(label);
  if (i == ground.size()) {
    throw ParseError(line.number, t.column, "unknown element '" + std::string(label) + "'");
  }
  return i;
}

[[noreturn]] void unexpected_key(const Line& line) {
  throw ParseError(line.number, line.key_column, "unexpected key '" + line.key + "'");
}

template <typename OnCircuit>
GroundSet parse_family(const Document& doc, OnCircuit&& on_circuit) {
  std::optional<GroundSet> ground;
  for (const auto& line : doc.lines) {
    if (line.key == "elements") {
      if (ground) throw ParseError(line.number, line.key_column, "duplicate `elements:` line");
      ground = parse_elements(line);
    } else if (line.key == "circuit") {
      if (!ground) throw ParseError(line.number, line.key_column, "`circuit:` before `elements:`");
      on_circuit(*ground, line);
    } else {
      unexpected_key(line);
    }
  }
  if (!ground) throw ParseError(doc.lines.empty() ? 1 : doc.lines.back().number, 1, "missing `elements:` line");
  return *ground;
}

Matroid matroid_from(const Document& doc) {
  std::vector<Subset> circuits;
  GroundSet ground = parse_family(doc, [&](const GroundSet& g, const Line& line) {
    Subset c;
    for (const auto& t : line.values) {
      const std::size_t i = element_index(g, line, t, t.text);
      if (c.contains(i)) throw ParseError(line.number, t.column, "repeated element '" + t.text + "'");
      c = c.with(i);
    }
    circuits.push_back(c);
  });
  return validate_matroid(std::move(ground), std::move(circuits));
}

OrientedMatroid om_from(const Document& doc) {
  std::vector<SignedSet> reps;
  GroundSet ground = parse_family(doc, [&](const GroundSet& g, const Line& line) {
    SignedSet x;
    for (const auto& t : line.values) {
      if (t.text.size() < 2 || (t.text[0] != '+' && t.text[0] != '-')) {
        throw ParseError(line.number, t.column, "expected signed element like +a or -b, got '" + t.text + "'");
      }
      const std::size_t i = element_index(g, line, t, std::string_view(t.text).substr(1));
      if (x.support().contains(i)) throw ParseError(line.number, t.column, "repeated element '" + t.text + "'");
      (t.text[0] == '+' ? x.pos : x.neg) = (t.text[0] == '+' ? x.pos : x.neg).with(i);
    }
    reps.push_back(x);
  });
  return validate_representatives(std::move(ground), std::move(reps));
}

Rational coordinate(const Line& line, const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const InvalidArgument&) {
    throw ParseError(line.number, t.column, "malformed coordinate '" + t.text + "'");
  }
}

PointConfig points_from(const Document& doc) {
  PointConfig config;
  bool have_dim = false;
  bool have_anchor = false;
  for (const auto& line : doc.lines) {
    if (line.key == "dim") {
      if (have_dim) throw ParseError(line.number, line.key_column, "duplicate `dim:` line");
      if (line.values.size() != 1) throw ParseError(line.number, line.key_column, "`dim:` takes one value");
      const auto& t = line.values.front();
      if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          t.text.size() > 2 || std::stoul(t.text) == 0) {
        throw ParseError(line.number, t.column, "dimension must be a positive integer");
      }
      config.dim = std::stoul(t.text);
      have_dim = true;
    } else if (line.key == "x") {
      if (!have_dim) throw ParseError(line.number, line.key_column, "`x:` before `dim:`");
      if (have_anchor) throw ParseError(line.number, line.key_column, "duplicate `x:` line");
      if (line.values.size() != config.dim) throw ParseError(line.number, line.key_column, "anchor needs " + std::to_string(config.dim) + " coordinates");
      for (const auto& t : line.values) config.anchor.push_back(coordinate(line, t));
      have_anchor = true;
    } else if (line.key == "point") {
      if (!have_dim) throw ParseError(line.number, line.key_column, "`point:` before `dim:`");
      if (line.values.empty()) throw ParseError(line.number, line.key_column, "point needs a label");
      LabeledPoint p;
      const Token& label = line.values.front();
      if (!valid_label(label.text)) throw ParseError(line.number, label.column, "invalid point label '" + label.text + "'");
      p.label = label.text;
      std::size_t end = line.values.size();
      if (end > 1 && line.values.back().text.rfind("color=", 0) == 0) {
        const Token& c = line.values.back();
        const std::string digits = c.text.substr(6);
        if (digits.empty() || digits.size() > 2 ||
            !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
          throw ParseError(line.number, c.column, "malformed color '" + c.text + "'");
        }
        p.color = std::stoul(digits);
        --end;
      }
      if (end - 1 != config.dim) {
        throw ParseError(line.number, line.key_column, "point '" + p.label + "' needs " + std::to_string(config.dim) + " coordinates");
      }
      for (std::size_t k = 1; k < end; ++k) p.coords.push_back(coordinate(line, line.values[k]));
      config.points.push_back(std::move(p));
    } else {
      unexpected_key(line);
    }
  }
  if (!have_dim) throw ParseError(1, 1, "missing `dim:` line");
  if (!have_anchor) throw ParseError(1, 1, "missing `x:` line");
  validate_config(config);
  return config;
}

InstanceKind infer_kind(const Document& doc) {
  for (const auto& line : doc.lines) {
    if (line.key == "dim" || line.key == "x" || line.key == "point") return InstanceKind::Points;
  }
  for (const auto& line : doc.lines) {
    if (line.key == "circuit" && !line.values.empty()) {
      const char c = line.values.front().text.front();
      return (c == '+' || c == '-') ? InstanceKind::OrientedMatroid : InstanceKind::Matroid;
    }
  }
  return InstanceKind::Matroid;
}

std::string header(const Provenance& p) {
  return p.seed ? "# seed: " + std::to_string(*p.seed) + "\n" : std::string();
}

std::string elements_line(const GroundSet& g) {
  std::string out = "elements:";
  for (const auto& l : g.labels()) out += " " + l;
  return out + "\n";
}

}  // namespace

InstanceBundle parse_instance(std::string_view text, std::optional<InstanceKind> hint) {
  const Document doc = tokenize(text);
  InstanceBundle bundle;
  bundle.provenance.seed = doc.seed;
  switch (hint.value_or(infer_kind(doc))) {
    case InstanceKind::Matroid: bundle.matroid = matroid_from(doc); break;
    case InstanceKind::OrientedMatroid: bundle.om = om_from(doc); break;
    case InstanceKind::Points: bundle.points = points_from(doc); break;
  }
  return bundle;
}

InstanceBundle load_instance(const std::filesystem::path& path, std::optional<InstanceKind> hint) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (!hint) {
    const auto ext = path.extension().string();
    if (ext == ".matroid") hint = InstanceKind::Matroid;
    if (ext == ".om") hint = InstanceKind::OrientedMatroid;
    if (ext == ".points") hint = InstanceKind::Points;
  }
  InstanceBundle bundle = parse_instance(buf.str(), hint);
  bundle.provenance.source = path.string();
  return bundle;
}

Matroid parse_matroid(std::string_view text) { return matroid_from(tokenize(text)); }
OrientedMatroid parse_oriented_matroid(std::string_view text) { return om_from(tokenize(text)); }
PointConfig parse_points(std::string_view text) { return points_from(tokenize(text)); }

std::string emit_matroid(const Matroid& m) {
  std::string out = elements_line(m.ground());
  for (Subset c : m.circuits()) {
    out += "circuit:";
    for (std::size_t i : c.indices()) out += " " + m.ground().label(i);
    out += "\n";
  }
  return out;
}

std::string emit_oriented_matroid(const OrientedMatroid& om) {
  std::string out = elements_line(om.ground());
  for (const auto& x : om.representatives()) {
    out += "circuit:";
    for (std::size_t i : x.support().indices()) {
      out += x.pos.contains(i) ? " +" : " -";
      out += om.ground().label(i);
    }
    out += "\n";
  }
  return out;
}

std::string emit_points(const PointConfig& config) {
  std::string out = "dim: " + std::to_string(config.dim) + "\nx:";
  for (const auto& c : config.anchor) out += " " + to_string(c);
  out += "\n";
  for (const auto& p : config.points) {
    out += "point: " + p.label;
    for (const auto& c : p.coords) out += " " + to_string(c);
    if (p.color) out += " color=" + std::to_string(*p.color);
    out += "\n";
  }
  return out;
}

std::string emit_instance(const InstanceBundle& bundle) {
  std::string out = header(bundle.provenance);
  if (bundle.points) out += emit_points(*bundle.points);
  if (bundle.matroid) out += emit_matroid(*bundle.matroid);
  if (bundle.om) out += emit_oriented_matroid(*bundle.om);
  return out;
}

std::string format_report(const GroundSet& ground, const WitnessReport& report, bool with_witness) {
  std::string out = std::string("hypothesis: ") + (report.hypothesis_holds ? "HOLDS" : "FAILS") + "\n";
  for (Subset v : report.violators) out += "violator: " + ground.format(v) + "\n";
  if (with_witness) {
    if (report.witness) {
      out += "witness: " + ground.format(*report.witness) + "\n";
    } else {
      out += report.counterexample ? "witness: none (theorem counterexample)\n" : "witness: none\n";
    }
  }
  out += "trace:\n";
  for (const auto& t : report.trace) {
    out += "  " + ground.format(t.checked) + " -> " + (t.found ? ground.format(*t.found) : std::string("none")) + "\n";
  }
  return out;
}

std::string format_pair_analysis(const GroundSet& ground, const std::vector<VertexView>& views,
                                 const std::vector<PairClassification>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < views.size(); ++i) {
    out += "vertex " + std::to_string(i) + ": cocircuit=" + ground.format(views[i].cocircuit.support()) +
           " zero=" + ground.format(views[i].zero_set) + "\n";
  }
  for (const auto& p : pairs) {
    out += "pair {" + std::to_string(p.first) + "," + std::to_string(p.second) + "}: " + to_string(p.tag) +
           " double_circuit=" + (p.double_circuit_found ? ground.format(*p.double_circuit_found) : std::string("none")) +
           "\n";
  }
  return out;
}

}  // namespace omlab
