#include "rsim/formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace rsim {
namespace {

bool is_field_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// A physical line that still holds content after stripping comments.
struct Line {
  std::size_t number;  // 1-based
  std::size_t indent;  // columns trimmed from the front of the physical line
  std::string_view text;

  // 1-based column in the physical line for offset i into `text`.
  std::size_t column(std::size_t i) const { return indent + i + 1; }
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t b = 0, e = line.size();
    while (b < e && is_field_space(line[b])) ++b;
    while (e > b && is_field_space(line[e - 1])) --e;
    if (e > b) out.push_back({lineno, b, line.substr(b, e - b)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view field) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < field.size()) {
    while (i < field.size() && is_field_space(field[i])) ++i;
    std::size_t j = i;
    while (j < field.size() && !is_field_space(field[j])) ++j;
    if (j > i) out.push_back(field.substr(i, j - i));
    i = j;
  }
  return out;
}

const char* kFieldNames[3] = {"reactants", "inhibitors", "products"};

}  // namespace

ReactionSystem parse_model(std::string_view text, Strictness mode) {
  std::vector<std::string> names;
  std::unordered_map<std::string, EntityId> ids;
  const auto intern = [&](std::string_view name) {
    const auto it = ids.find(std::string(name));
    if (it != ids.end()) return it->second;
    const EntityId id = static_cast<EntityId>(names.size());
    names.emplace_back(name);
    ids.emplace(names.back(), id);
    return id;
  };

  std::vector<Reaction> reactions;
  for (const Line& line : content_lines(text)) {
    // Split into exactly three comma-separated fields.
    std::string_view fields[3];
    std::size_t start = 0;
    int nfields = 0;
    for (std::size_t i = 0; i <= line.text.size(); ++i) {
      const bool at_end = i == line.text.size();
      if (!at_end && line.text[i] != ',') continue;
      if (nfields == 3)
        throw ParseError(line.number, line.column(i),
                         "expected 3 comma-separated fields, found more");
      fields[nfields++] = line.text.substr(start, i - start);
      start = i + 1;
    }
    if (nfields != 3)
      throw ParseError(line.number, line.column(line.text.size()),
                       std::string("expected 3 comma-separated fields, found ") +
                           std::to_string(nfields));

    std::vector<EntityId> sets[3];
    for (int f = 0; f < 3; ++f) {
      for (std::string_view tok : tokens(fields[f])) {
        const EntityId id = intern(tok);
        for (EntityId seen : sets[f])
          if (seen == id)
            throw ParseError(line.number, "duplicate entity '" + std::string(tok) + "' in " +
                                              kFieldNames[f]);
        sets[f].push_back(id);
      }
      const bool may_be_empty = f == 1 && mode == Strictness::AllowEmptyInhibitors;
      if (sets[f].empty() && !may_be_empty)
        throw ParseError(line.number, std::string("empty ") + kFieldNames[f] + " field");
    }
    for (EntityId r : sets[0])
      for (EntityId i : sets[1])
        if (r == i)
          throw ParseError(line.number, "entity '" + names[r] +
                                            "' appears as both reactant and inhibitor");
    reactions.emplace_back(std::move(sets[0]), std::move(sets[1]), std::move(sets[2]));
  }
  return ReactionSystem(std::move(names), std::move(reactions), mode);
}

std::string write_model(const ReactionSystem& sys) {
  std::string out;
  const auto append_set = [&](std::span<const EntityId> ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) out += ' ';
      out += sys.name_of(ids[i]);
    }
  };
  for (const Reaction& r : sys.reactions()) {
    append_set(r.reactants());
    out += ", ";
    append_set(r.inhibitors());
    out += ", ";
    append_set(r.products());
    out += '\n';
  }
  return out;
}

namespace {

State parse_state_line(const Line& line, const ReactionSystem& sys) {
  State s(sys.entity_count());
  if (line.text == ".") return s;
  for (std::string_view tok : tokens(line.text)) {
    const auto id = sys.find_entity(tok);
    if (!id) throw ParseError(line.number, "unknown entity '" + std::string(tok) + "'");
    s.set(*id);
  }
  return s;
}

std::string write_state_line(const State& s, const ReactionSystem& sys) {
  if (s.none()) return ".\n";
  std::string out;
  bool first = true;
  s.for_each_set_bit([&](std::size_t i) {
    if (!first) out += ' ';
    out += sys.name_of(static_cast<EntityId>(i));
    first = false;
  });
  out += '\n';
  return out;
}

}  // namespace

ContextSequence parse_context(std::string_view text, const ReactionSystem& sys) {
  ContextSequence ctx;
  for (const Line& line : content_lines(text)) ctx.steps.push_back(parse_state_line(line, sys));
  return ctx;
}

std::string write_context(const ContextSequence& ctx, const ReactionSystem& sys) {
  std::string out;
  for (const State& s : ctx.steps) out += write_state_line(s, sys);
  return out;
}

Trajectory parse_trajectory(std::string_view text, const ReactionSystem& sys) {
  Trajectory tr;
  for (const Line& line : content_lines(text)) tr.states.push_back(parse_state_line(line, sys));
  return tr;
}

std::string write_trajectory(const Trajectory& tr, const ReactionSystem& sys) {
  std::string out;
  for (const State& s : tr.states) out += write_state_line(s, sys);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("error while reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("error while writing '" + path + "'");
}

}  // namespace rsim
