#include "rsim/core.hpp"

#include <algorithm>
#include <cctype>

namespace rsim {
namespace {

void sort_and_check_unique(std::vector<EntityId>& ids, const char* set_name) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw ValidationError(std::string("duplicate entity in ") + set_name);
}

bool valid_entity_name(const std::string& name) {
  if (name.empty()) return false;
  for (unsigned char c : name)
    if (std::isspace(c) || c == ',' || c == '#') return false;
  return true;
}

void check_ids_in_range(std::span<const EntityId> ids, std::size_t n, const char* set_name) {
  for (EntityId id : ids)
    if (id >= n)
      throw ValidationError(std::string("entity index ") + std::to_string(id) + " in " +
                            set_name + " is out of range for a background set of " +
                            std::to_string(n));
}

}  // namespace

Reaction::Reaction(std::vector<EntityId> reactants, std::vector<EntityId> inhibitors,
                   std::vector<EntityId> products)
    : reactants_(std::move(reactants)),
      inhibitors_(std::move(inhibitors)),
      products_(std::move(products)) {
  sort_and_check_unique(reactants_, "reactants");
  sort_and_check_unique(inhibitors_, "inhibitors");
  sort_and_check_unique(products_, "products");
  std::vector<EntityId> overlap;
  std::set_intersection(reactants_.begin(), reactants_.end(), inhibitors_.begin(),
                        inhibitors_.end(), std::back_inserter(overlap));
  if (!overlap.empty())
    throw ValidationError("entity " + std::to_string(overlap.front()) +
                          " appears as both reactant and inhibitor");
}

ReactionSystem::ReactionSystem(std::vector<std::string> entity_names,
                               std::vector<Reaction> reactions, Strictness mode)
    : names_(std::move(entity_names)), reactions_(std::move(reactions)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_entity_name(names_[i]))
      throw ValidationError("invalid entity name '" + names_[i] +
                            "' (must be non-empty, without whitespace, ',' or '#')");
    if (!index_.emplace(names_[i], static_cast<EntityId>(i)).second)
      throw ValidationError("duplicate entity name '" + names_[i] + "'");
  }
  for (std::size_t r = 0; r < reactions_.size(); ++r) {
    const Reaction& rx = reactions_[r];
    const std::string where = "reaction " + std::to_string(r);
    if (rx.reactants().empty())
      throw ValidationError(where + ": reactant set must not be empty");
    if (rx.products().empty())
      throw ValidationError(where + ": product set must not be empty");
    if (mode == Strictness::Strict && rx.inhibitors().empty())
      throw ValidationError(where + ": inhibitor set must not be empty in strict mode");
    check_ids_in_range(rx.reactants(), names_.size(), "reactants");
    check_ids_in_range(rx.inhibitors(), names_.size(), "inhibitors");
    check_ids_in_range(rx.products(), names_.size(), "products");
  }
}

std::optional<EntityId> ReactionSystem::find_entity(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool enabled(const Reaction& r, const State& t) {
  for (EntityId id : r.reactants())
    if (!t.test(id)) return false;
  for (EntityId id : r.inhibitors())
    if (t.test(id)) return false;
  return true;
}

State result(const ReactionSystem& sys, const State& t) {
  if (t.size() != sys.entity_count())
    throw DimensionError("state width " + std::to_string(t.size()) +
                         " does not match background set size " +
                         std::to_string(sys.entity_count()));
  State out(sys.entity_count());
  for (const Reaction& r : sys.reactions())
    if (enabled(r, t))
      for (EntityId id : r.products()) out.set(id);
  return out;
}

State step(const ReactionSystem& sys, const State& current, const State& context) {
  State t;
  t.assign_or(current, context);
  return result(sys, t);
}

void ReferenceEngine::step(const State& current, const State& context, State& out) {
  union_buf_.assign_or(current, context);
  out = result(sys_, union_buf_);
}

Trajectory run(Engine& engine, const ContextSequence& ctx) {
  const std::size_t n = engine.entity_count();
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx[i].size() != n)
      throw DimensionError("context state " + std::to_string(i) + " has width " +
                           std::to_string(ctx[i].size()) + ", expected " + std::to_string(n));
  engine.reset();
  Trajectory tr;
  tr.states.reserve(ctx.size() + 1);
  State current(n);
  tr.states.push_back(current);
  State next(n);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    engine.step(current, ctx[i], next);
    tr.states.push_back(next);
    std::swap(current, next);
  }
  return tr;
}

Trajectory run(Engine& engine, const ContextSequence& ctx, std::size_t steps) {
  ContextSequence padded;
  padded.steps.reserve(steps);
  const State empty(engine.entity_count());
  for (std::size_t i = 0; i < steps; ++i)
    padded.steps.push_back(i < ctx.size() ? ctx[i] : empty);
  return run(engine, padded);
}

}  // namespace rsim
