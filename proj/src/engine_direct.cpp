#include "rsim/engine_direct.hpp"

namespace rsim {
namespace {

void check_width(const State& s, std::size_t n, const char* what) {
  if (s.size() != n)
    throw DimensionError(std::string(what) + " has width " + std::to_string(s.size()) +
                         ", expected " + std::to_string(n));
}

}  // namespace

std::vector<CompiledReaction> compile(const ReactionSystem& sys) {
  std::vector<CompiledReaction> out;
  out.reserve(sys.reaction_count());
  for (const Reaction& r : sys.reactions()) {
    // Reaction sets are already sorted ascending.
    out.push_back({{r.reactants().begin(), r.reactants().end()},
                   {r.inhibitors().begin(), r.inhibitors().end()},
                   {r.products().begin(), r.products().end()}});
  }
  return out;
}

DirectEngine::DirectEngine(const ReactionSystem& sys, const kernels::Table* kernels)
    : compiled_(compile(sys)),
      n_entities_(sys.entity_count()),
      kernels_(kernels != nullptr ? kernels : &kernels::active()),
      union_buf_(sys.entity_count()) {}

void DirectEngine::step(const State& current, const State& context, State& out) {
  check_width(current, n_entities_, "current state");
  check_width(context, n_entities_, "context state");
  union_buf_.assign_or(current, context, kernels_);
  out.assign_zero(n_entities_);
  for (const CompiledReaction& r : compiled_)
    if (probe_enabled(r, union_buf_))
      for (EntityId id : r.products) out.set(id);
}

}  // namespace rsim
