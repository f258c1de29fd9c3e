#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "queueposet/diagram.hpp"
#include "queueposet/layout.hpp"
#include "queueposet/poset.hpp"

namespace queueposet {

// Poset JSON: {"elements": [...], "relations": [[a, b], ...],
// "pos": {name: [x, y], ...}}. Element names may be strings or integers.
// With coordinates for every element the result is a validated diagram.
// Throws ParseError (with line and field), CycleError or InvalidDiagram.
std::variant<Poset, UpwardDiagram> parse_poset(std::string_view text);

// Relations are written as the cover pairs.
std::string poset_to_json(const Poset& p);
std::string diagram_to_json(const UpwardDiagram& d);

// Layout JSON: {"order": [...], "queues": [[[a, b], q], ...]} plus an
// optional "queue_count". Structural problems (non-covers, nesting, order
// violations) are left for verify_layout; malformed input throws ParseError.
QueueLayout parse_layout(const Poset& p, std::string_view text);
std::string layout_to_json(const Poset& p, const QueueLayout& layout);

struct DotOptions {
  const std::vector<Point>* positions = nullptr;
  const QueueLayout* layout = nullptr;
};

// Covers drawn bottom-up; queue indices become edge labels and colors.
std::string to_dot(const Poset& p, const DotOptions& options = {});

}  // namespace queueposet
