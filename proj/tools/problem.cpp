#include "problem.hpp"

#include "fsing/errors.hpp"
#include "fsing/parser.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fsing::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_unsigned(std::string_view s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

// Parses `text`, which starts at 0-based `offset` in the line, and reports
// errors with the column in the line.
Polynomial parse_at(std::string_view text, std::size_t offset, const Ring& R, std::size_t line) {
  try {
    return parse_polynomial(text, R);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    const std::string suffix = " at column " + std::to_string(e.column());
    if (msg.size() >= suffix.size() && msg.compare(msg.size() - suffix.size(), suffix.size(), suffix) == 0) {
      msg.resize(msg.size() - suffix.size());
    }
    throw ParseError("line " + std::to_string(line) + ": " + msg, offset + e.column());
  }
}

enum class Block { none, ring, ideal, canonical, element, task };

struct Line {
  std::size_t number;
  std::string_view text;
  // position of `text` in the original line
  std::size_t offset;
};

struct RingSpec {
  std::optional<std::uint64_t> p;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::grevlex();
  std::size_t header_line = 0;
};

Ring build_ring(const RingSpec& spec) {
  if (!spec.p) fail(spec.header_line, "[ring] needs p");
  if (spec.variables.empty()) fail(spec.header_line, "[ring] needs variables");
  if (*spec.p > 0xFFFFFFFFull) fail(spec.header_line, "p is too large");
  try {
    return Ring(static_cast<std::uint32_t>(*spec.p), spec.variables, spec.order);
  } catch (const InputError& e) {
    fail(spec.header_line, e.what());
  }
}

void read_ring_line(RingSpec& spec, const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string_view::npos) fail(l.number, "expected 'key = value' in [ring]");
  const auto key = trim(l.text.substr(0, eq));
  const auto value = trim(l.text.substr(eq + 1));
  if (key == "p") {
    spec.p = parse_unsigned(value, l.number, "p");
  } else if (key == "variables") {
    std::string_view rest = value;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      auto name = trim(rest.substr(0, comma));
      if (name.empty()) fail(l.number, "empty variable name");
      spec.variables.emplace_back(name);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else if (key == "order") {
    try {
      spec.order = parse_order(value);
    } catch (const InputError& e) {
      fail(l.number, e.what());
    }
  } else {
    fail(l.number, "unknown [ring] key '" + std::string(key) + "'");
  }
}

}  // namespace

const Ideal& Problem::ideal(const std::string& name) const {
  for (const auto& [n, I] : ideals) {
    if (n == name) return I;
  }
  std::string known;
  for (const auto& entry : ideals) known += (known.empty() ? "" : ", ") + entry.first;
  throw InputError("no ideal named '" + name + "' (file defines: " + (known.empty() ? "none" : known) + ")");
}

const Polynomial* Problem::element(const std::string& name) const {
  auto it = elements.find(name);
  return it == elements.end() ? nullptr : &it->second;
}

MonomialOrder parse_order(std::string_view text) {
  text = trim(text);
  if (text == "grevlex") return MonomialOrder::grevlex();
  if (text == "lex") return MonomialOrder::lex();
  const std::string_view prefix = "elimination(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    auto inner = trim(text.substr(prefix.size(), text.size() - prefix.size() - 1));
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), k);
    if (ec == std::errc() && ptr == inner.data() + inner.size()) return MonomialOrder::elimination(k);
  }
  throw InputError("unknown monomial order '" + std::string(text) + "' (grevlex, lex, elimination(k))");
}

Problem parse_problem(std::string_view text) {
  RingSpec spec;
  std::optional<Ring> ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::optional<std::vector<Polynomial>> canonical;
  std::map<std::string, Polynomial> elements;
  std::optional<std::string> task;

  Block block = Block::none;
  std::string name;
  std::vector<Polynomial> gens;
  // element blocks collect text and parse at the end of the block
  std::string element_text;
  std::size_t element_line = 0;

  auto finish_block = [&](std::size_t line) {
    switch (block) {
      case Block::ring:
        ring = build_ring(spec);
        break;
      case Block::ideal:
        ideals.emplace_back(name, Ideal(*ring, std::move(gens)));
        break;
      case Block::canonical:
        canonical = std::move(gens);
        break;
      case Block::element:
        if (trim(element_text).empty()) fail(element_line, "[element " + name + "] is empty");
        elements.emplace(name, parse_at(element_text, 0, *ring, element_line));
        break;
      case Block::task:
        if (!task) fail(line, "[task] is empty");
        break;
      case Block::none:
        break;
    }
    gens.clear();
    element_text.clear();
  };

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;

    std::string_view body = raw.substr(0, raw.find('#'));
    const auto lead = body.find_first_not_of(" \t\r");
    if (lead == std::string_view::npos) continue;
    Line l{number, trim(body), lead};

    if (l.text.front() == '[') {
      if (l.text.back() != ']') fail(number, "unterminated block header");
      finish_block(number);
      std::string_view header = trim(l.text.substr(1, l.text.size() - 2));
      const auto space = header.find_first_of(" \t");
      std::string_view kind = header.substr(0, space);
      name = space == std::string_view::npos ? "" : std::string(trim(header.substr(space)));
      if (kind == "ring") {
        if (ring || block == Block::ring) fail(number, "duplicate [ring] block");
        block = Block::ring;
        spec.header_line = number;
        continue;
      }
      if (!ring) fail(number, "the [ring] block must come first");
      if (kind == "ideal") {
        if (name.empty()) fail(number, "[ideal] needs a name");
        for (const auto& entry : ideals) {
          if (entry.first == name) fail(number, "duplicate ideal '" + name + "'");
        }
        block = Block::ideal;
      } else if (kind == "canonical") {
        if (canonical) fail(number, "duplicate [canonical] block");
        block = Block::canonical;
      } else if (kind == "element") {
        if (name.empty()) fail(number, "[element] needs a name");
        if (elements.count(name)) fail(number, "duplicate element '" + name + "'");
        block = Block::element;
        element_line = number + 1;
      } else if (kind == "task") {
        if (task) fail(number, "duplicate [task] block");
        block = Block::task;
      } else {
        fail(number, "unknown block [" + std::string(header) + "]");
      }
      continue;
    }

    switch (block) {
      case Block::none:
        fail(number, "text outside of a block");
      case Block::ring:
        read_ring_line(spec, l);
        break;
      case Block::ideal:
      case Block::canonical: {
        std::size_t from = 0;
        while (from <= body.size()) {
          auto comma = body.find(',', from);
          if (comma == std::string_view::npos) comma = body.size();
          std::string_view part = body.substr(from, comma - from);
          if (trim(part).empty()) fail(number, "empty generator");
          gens.push_back(parse_at(part, from, *ring, number));
          from = comma + 1;
        }
        break;
      }
      case Block::element:
        if (element_text.empty()) element_line = number;
        element_text += std::string(l.text) + " ";
        break;
      case Block::task:
        if (task) fail(number, "[task] holds a single command line");
        task = std::string(l.text);
        break;
    }
  }
  finish_block(number);
  if (!ring) throw InputError("problem file has no [ring] block");
  return Problem{*ring, std::move(ideals), std::move(canonical), std::move(elements), std::move(task)};
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace fsing::cli
