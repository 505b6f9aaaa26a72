#include "barlat/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "barlat/error.hpp"

namespace barlat::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                      ": '" + std::string(field) +
                                      "' is not a decimal number");
  }
  return value;
}

Barcode build(std::vector<Bar> bars) {
  try {
    return Barcode(std::move(bars));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string word_json(std::span<const int> word) {
  std::string out = "[";
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (p) out += ", ";
    out += std::to_string(word[p]);
  }
  return out + "]";
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Barcode parse_barcode_csv(std::string_view text) {
  std::vector<Bar> bars;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text.remove_prefix(newline == std::string_view::npos ? text.size()
                                                         : newline + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos ||
        line.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                        ": expected 'birth,death'");
    }
    const double birth = parse_double(line.substr(0, comma), line_no);
    const double death = parse_double(line.substr(comma + 1), line_no);
    if (!(birth < death)) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                        ": birth must be less than death");
    }
    bars.push_back({birth, death});
  }
  return build(std::move(bars));
}

Barcode parse_barcode_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorKind::Parse, "barcode JSON must be an array of pairs");
  }
  std::vector<Bar> bars;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
        !item[1].is_number()) {
      throw Error(ErrorKind::Parse, "element " + std::to_string(i) +
                                        " is not a [birth, death] pair");
    }
    bars.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return build(std::move(bars));
}

Barcode parse_barcode(std::string_view text, BarcodeFormat format) {
  return format == BarcodeFormat::Csv ? parse_barcode_csv(text)
                                      : parse_barcode_json(text);
}

BarcodeFormat detect_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".csv") return BarcodeFormat::Csv;
  if (ext == ".json") return BarcodeFormat::Json;
  throw Error(ErrorKind::Parse, "cannot infer the format of '" +
                                    path.string() + "'; use --format");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Parse, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::Parse, "cannot write '" + path.string() + "'");
  }
  out << contents;
}

Barcode read_barcode(const std::filesystem::path& path,
                     std::optional<BarcodeFormat> format) {
  const auto fmt = format ? *format : detect_format(path);
  return parse_barcode(read_file(path), fmt);
}

std::string barcode_to_csv(const Barcode& barcode) {
  std::string out;
  for (const Bar& bar : barcode.bars()) {
    out += format_number(bar.birth) + "," + format_number(bar.death) + "\n";
  }
  return out;
}

std::string barcode_to_json(const Barcode& barcode) {
  std::string out = "[";
  bool first = true;
  for (const Bar& bar : barcode.bars()) {
    if (!first) out += ", ";
    first = false;
    out += "[" + format_number(bar.birth) + ", " + format_number(bar.death) + "]";
  }
  return out + "]\n";
}

std::vector<int> parse_word(std::string_view line) {
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const char c = line[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} || value < 1 ||
        (ptr != line.data() + line.size() &&
         !std::isspace(static_cast<unsigned char>(*ptr)) && *ptr != ',')) {
      throw Error(ErrorKind::Parse,
                  "'" + std::string(line) + "' is not a word of positive integers");
    }
    word.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  if (word.empty()) throw Error(ErrorKind::Parse, "empty word");
  return word;
}

std::vector<Multiperm> parse_word_lines(std::string_view text) {
  std::vector<Multiperm> out;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    const std::string_view line = trim(text.substr(0, newline));
    text.remove_prefix(newline == std::string_view::npos ? text.size()
                                                         : newline + 1);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(Multiperm::from_word(parse_word(line)));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
  }
  return out;
}

Multiperm parse_multiperm_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    return Multiperm(doc.at("n").get<int>(), doc.at("m").get<int>(),
                     doc.at("word").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid multipermutation JSON: ") +
                                      e.what());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string multiperm_to_json(const Multiperm& s) {
  return "{\"n\": " + std::to_string(s.alphabet_size()) +
         ", \"m\": " + std::to_string(s.multiplicity()) +
         ", \"word\": " + word_json(s.word()) + "}";
}

std::string hasse_to_dot(const HasseDiagram& diagram) {
  std::ostringstream os;
  const auto& spec = diagram.spec();
  os << "digraph barcode_lattice {\n";
  os << "  // n=" << spec.n << " k=" << spec.k << " elements="
     << diagram.size() << " covers=" << diagram.covers().size() << "\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    os << "  n" << i << " [label=\"";
    const auto w = diagram.word(i);
    for (std::size_t p = 0; p < w.size(); ++p) os << (p ? " " : "") << w[p];
    os << "\\nrank " << diagram.ranks()[i] << "\"];\n";
  }
  for (const auto& [lo, hi] : diagram.covers()) {
    os << "  n" << lo << " -> n" << hi << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string hasse_to_json(const HasseDiagram& diagram) {
  std::ostringstream os;
  os << "{\"elements\": [";
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    const auto w = diagram.word(i);
    os << (i ? ", " : "") << word_json(std::vector<int>(w.begin(), w.end()));
  }
  os << "], \"covers\": [";
  bool first = true;
  for (const auto& [lo, hi] : diagram.covers()) {
    os << (first ? "" : ", ") << "[" << lo << ", " << hi << "]";
    first = false;
  }
  os << "], \"ranks\": [";
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    os << (i ? ", " : "") << diagram.ranks()[i];
  }
  os << "]}\n";
  return os.str();
}

std::string vertices_to_csv(const VertexSet& set) {
  std::string out;
  for (const auto& v : set.vertices) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c) out += ',';
      out += std::to_string(v[c]);
    }
    out += '\n';
  }
  return out;
}

std::string vertices_to_json(const VertexSet& set) {
  std::string out = "{\"ambient\": " + std::to_string(set.ambient) +
                    ", \"vertices\": [";
  for (std::size_t i = 0; i < set.vertices.size(); ++i) {
    if (i) out += ", ";
    out += word_json(set.vertices[i]);
  }
  return out + "]}\n";
}

std::string dimension_report_to_json(const DimensionReport& report) {
  return "{\"ambient\": " + std::to_string(report.ambient) +
         ", \"dim\": " + std::to_string(report.dim) +
         ", \"expected\": " + std::to_string(report.expected) +
         ", \"blocks\": " + std::to_string(report.blocks) + "}\n";
}

std::string convergence_report_to_json(const ConvergenceReport& report) {
  return "{\"d_inf\": " + format_number(report.d_inf) +
         ", \"d_q\": " + format_number(report.d_q) +
         ", \"bound_inf\": " + format_number(report.bound_inf) +
         ", \"bound_q\": " + format_number(report.bound_q) +
         ", \"alpha\": " + format_number(report.alpha) +
         ", \"delta\": " + format_number(report.delta) +
         ", \"pass\": " + (report.pass ? "true" : "false") + "}\n";
}

}  // namespace barlat::io
