#include "queueposet/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "queueposet/errors.hpp"

namespace queueposet {

namespace {

using nlohmann::json;

// A step into a JSON document: an object key or an array index.
using PathStep = std::variant<std::string, std::size_t>;
using Path = std::vector<PathStep>;

std::string path_string(const Path& path) {
  std::string out;
  for (const auto& step : path) {
    if (const auto* key = std::get_if<std::string>(&step)) {
      if (!out.empty()) out += '.';
      out += *key;
    } else {
      out += '[' + std::to_string(std::get<std::size_t>(step)) + ']';
    }
  }
  return out;
}

// Walks the raw text along `path` to report the line of the offending value.
// The document is known to be valid JSON at this point.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  std::size_t line_of(const Path& path) {
    i_ = 0;
    line_ = 1;
    for (const auto& step : path) {
      skip_space();
      if (i_ >= text_.size()) break;
      if (const auto* key = std::get_if<std::string>(&step)) {
        if (!enter_key(*key)) break;
      } else if (!enter_index(std::get<std::size_t>(step))) {
        break;
      }
    }
    skip_space();
    return line_;
  }

 private:
  void advance() {
    if (text_[i_] == '\n') ++line_;
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance();
  }

  std::string read_string() {
    std::string out;
    advance();  // opening quote
    while (i_ < text_.size() && text_[i_] != '"') {
      if (text_[i_] == '\\') advance();
      if (i_ < text_.size()) {
        out.push_back(text_[i_]);
        advance();
      }
    }
    if (i_ < text_.size()) advance();
    return out;
  }

  void skip_value() {
    skip_space();
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    if (c == '"') {
      read_string();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      do {
        if (text_[i_] == '"') {
          read_string();
          continue;
        }
        if (text_[i_] == '{' || text_[i_] == '[') ++depth;
        if (text_[i_] == '}' || text_[i_] == ']') --depth;
        advance();
      } while (depth > 0 && i_ < text_.size());
    } else {
      while (i_ < text_.size() && text_[i_] != ',' && text_[i_] != '}' && text_[i_] != ']') {
        advance();
      }
    }
  }

  bool enter_key(const std::string& key) {
    if (text_[i_] != '{') return false;
    advance();
    for (;;) {
      skip_space();
      if (i_ >= text_.size() || text_[i_] != '"') return false;
      const std::string k = read_string();
      skip_space();
      if (i_ < text_.size()) advance();  // colon
      skip_space();
      if (k == key) return true;
      skip_value();
      skip_space();
      if (i_ >= text_.size() || text_[i_] != ',') return false;
      advance();
    }
  }

  bool enter_index(std::size_t index) {
    if (text_[i_] != '[') return false;
    advance();
    for (std::size_t k = 0;; ++k) {
      skip_space();
      if (i_ >= text_.size() || text_[i_] == ']') return false;
      if (k == index) return true;
      skip_value();
      skip_space();
      if (i_ >= text_.size() || text_[i_] != ',') return false;
      advance();
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text), locator_(text) {
    try {
      doc_ = json::parse(text);
    } catch (const json::parse_error& e) {
      std::size_t line = 1;
      const std::size_t end = std::min<std::size_t>(e.byte, text.size());
      for (std::size_t k = 0; k + 1 < end; ++k) {
        if (text[k] == '\n') ++line;
      }
      throw ParseError(std::string("malformed JSON: ") + e.what(), line, "");
    }
  }

  const json& doc() const { return doc_; }

  [[noreturn]] void fail(const std::string& message, const Path& path) {
    const std::string field = path_string(path);
    throw ParseError(field + ": " + message, locator_.line_of(path), field);
  }

  const json& object_field(const json& obj, const std::string& key, const Path& at, bool required,
                           json::value_t type) {
    static const json kNull;
    Path path = at;
    path.emplace_back(key);
    if (!obj.contains(key)) {
      if (required) fail("missing field", path);
      return kNull;
    }
    const json& value = obj.at(key);
    if (value.type() != type) fail(std::string("expected ") + type_name(type), path);
    return value;
  }

  // Element names are strings or integers.
  std::string name(const json& value, const Path& path) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_number_unsigned()) return std::to_string(value.get<unsigned long long>());
    fail("expected a string or integer element name", path);
  }

  double number(const json& value, const Path& path) {
    if (!value.is_number()) fail("expected a number", path);
    return value.get<double>();
  }

 private:
  static const char* type_name(json::value_t type) {
    switch (type) {
      case json::value_t::object:
        return "an object";
      case json::value_t::array:
        return "an array";
      default:
        return "a different type";
    }
  }

  std::string_view text_;
  Locator locator_;
  json doc_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json names_json(const Poset& p) {
  json out = json::array();
  for (const auto& n : p.names()) out.push_back(n);
  return out;
}

json covers_json(const Poset& p) {
  json out = json::array();
  for (const auto& c : p.covers()) out.push_back(json::array({p.name(c.lower), p.name(c.upper)}));
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
};

}  // namespace

std::variant<Poset, UpwardDiagram> parse_poset(std::string_view text) {
  Reader r(text);
  const json& doc = r.doc();
  if (!doc.is_object()) r.fail("expected an object", {});

  const json& elements = r.object_field(doc, "elements", {}, true, json::value_t::array);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(r.name(elements[i], {std::string("elements"), i}));
  }
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!seen.emplace(names[i], i).second) {
        r.fail("duplicate element '" + names[i] + "'", {std::string("elements"), i});
      }
    }
  }
  auto known = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };

  std::vector<std::pair<std::string, std::string>> relations;
  const json& rel = r.object_field(doc, "relations", {}, false, json::value_t::array);
  if (rel.is_array()) {
    for (std::size_t i = 0; i < rel.size(); ++i) {
      const Path at{std::string("relations"), i};
      if (!rel[i].is_array() || rel[i].size() != 2) r.fail("expected a pair [lower, upper]", at);
      std::array<std::string, 2> pair;
      for (std::size_t k = 0; k < 2; ++k) {
        Path item = at;
        item.emplace_back(k);
        pair[k] = r.name(rel[i][k], item);
        if (!known(pair[k])) r.fail("unknown element '" + pair[k] + "'", item);
      }
      relations.emplace_back(pair[0], pair[1]);
    }
  }

  Poset p = Poset::from_relations(names, relations);

  const json& pos = r.object_field(doc, "pos", {}, false, json::value_t::object);
  if (!pos.is_object()) return p;
  std::vector<std::optional<Point>> points(p.size());
  for (const auto& [key, value] : pos.items()) {
    const Path at{std::string("pos"), key};
    const auto e = p.find(key);
    if (!e) r.fail("unknown element '" + key + "'", at);
    if (!value.is_array() || value.size() != 2) r.fail("expected [x, y]", at);
    points[*e] = Point{r.number(value[0], {std::string("pos"), key, std::size_t{0}}),
                       r.number(value[1], {std::string("pos"), key, std::size_t{1}})};
  }
  std::vector<Point> coords;
  for (const auto& pt : points) {
    if (!pt) return p;
    coords.push_back(*pt);
  }
  return UpwardDiagram(std::move(p), std::move(coords));
}

std::string poset_to_json(const Poset& p) {
  json out;
  out["elements"] = names_json(p);
  out["relations"] = covers_json(p);
  return dump(out);
}

std::string diagram_to_json(const UpwardDiagram& d) {
  const Poset& p = d.poset();
  json out;
  out["elements"] = names_json(p);
  out["relations"] = covers_json(p);
  json pos = json::object();
  for (Element e = 0; e < p.size(); ++e) {
    pos[p.name(e)] = json::array({d.position(e).x, d.position(e).y});
  }
  out["pos"] = std::move(pos);
  return dump(out);
}

QueueLayout parse_layout(const Poset& p, std::string_view text) {
  Reader r(text);
  const json& doc = r.doc();
  if (!doc.is_object()) r.fail("expected an object", {});

  auto element = [&](const json& value, const Path& at) {
    const std::string n = r.name(value, at);
    const auto e = p.find(n);
    if (!e) r.fail("unknown element '" + n + "'", at);
    return *e;
  };

  const json& order_json = r.object_field(doc, "order", {}, true, json::value_t::array);
  std::vector<Element> order;
  for (std::size_t i = 0; i < order_json.size(); ++i) {
    order.push_back(element(order_json[i], {std::string("order"), i}));
  }
  QueueLayout layout;
  try {
    layout.extension = LinearExtension::unchecked(std::move(order));
  } catch (const NotALinearExtension&) {
    r.fail("order must list every element exactly once", {std::string("order")});
  }
  if (layout.extension.size() != p.size()) {
    r.fail("order must list every element exactly once", {std::string("order")});
  }

  const json& queues = r.object_field(doc, "queues", {}, true, json::value_t::array);
  std::size_t count = 0;
  for (std::size_t i = 0; i < queues.size(); ++i) {
    const Path at{std::string("queues"), i};
    const json& entry = queues[i];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || entry[0].size() != 2) {
      r.fail("expected [[lower, upper], queue]", at);
    }
    const Cover c{element(entry[0][0], {std::string("queues"), i, std::size_t{0}, std::size_t{0}}),
                  element(entry[0][1], {std::string("queues"), i, std::size_t{0}, std::size_t{1}})};
    if (!entry[1].is_number_unsigned() && !(entry[1].is_number_integer() && entry[1].get<long long>() >= 0)) {
      r.fail("queue index must be a nonnegative integer", {std::string("queues"), i, std::size_t{1}});
    }
    const auto q = entry[1].get<std::size_t>();
    if (!layout.queue_of.emplace(c, q).second) r.fail("cover listed twice", at);
    count = std::max(count, q + 1);
  }
  layout.queue_count = count;
  if (doc.contains("queue_count")) {
    const json& qc = doc.at("queue_count");
    if (!qc.is_number_unsigned() && !(qc.is_number_integer() && qc.get<long long>() >= 0)) {
      r.fail("queue_count must be a nonnegative integer", {std::string("queue_count")});
    }
    layout.queue_count = qc.get<std::size_t>();
  }
  return layout;
}

std::string layout_to_json(const Poset& p, const QueueLayout& layout) {
  json out;
  json order = json::array();
  for (Element e : layout.extension.order()) order.push_back(p.name(e));
  out["order"] = std::move(order);
  json queues = json::array();
  for (const auto& [c, q] : layout.queue_of) {
    queues.push_back(json::array({json::array({p.name(c.lower), p.name(c.upper)}), q}));
  }
  out["queues"] = std::move(queues);
  out["queue_count"] = layout.queue_count;
  return dump(out);
}

std::string to_dot(const Poset& p, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element e = 0; e < p.size(); ++e) {
    out << "  n" << e << " [label=" << dot_quote(p.name(e));
    if (options.positions) {
      const Point& pt = options.positions->at(e);
      out << ", pos=\"" << pt.x << ',' << pt.y << "!\"";
    }
    out << "];\n";
  }
  for (const auto& c : p.covers()) {
    out << "  n" << c.lower << " -> n" << c.upper;
    if (options.layout) {
      const auto it = options.layout->queue_of.find(c);
      if (it != options.layout->queue_of.end()) {
        out << " [label=\"" << it->second << "\", color=\"" << kPalette[it->second % kPalette.size()]
            << "\"]";
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace queueposet
