#pragma once

#include "rsim/core.hpp"

namespace rsim {

// One reaction compiled to ascending entity-index vectors, so enabledness is
// a sequence of single-bit probes into the state.
struct CompiledReaction {
  std::vector<EntityId> reactants, inhibitors, products;

  friend bool operator==(const CompiledReaction&, const CompiledReaction&) = default;
};

std::vector<CompiledReaction> compile(const ReactionSystem& sys);

// All reactant bits set and no inhibitor bit set; exits on the first miss.
inline bool probe_enabled(const CompiledReaction& r, const State& t) {
  for (EntityId id : r.reactants)
    if (!t.test(id)) return false;
  for (EntityId id : r.inhibitors)
    if (t.test(id)) return false;
  return true;
}

// Simulation by direct evaluation over a bit-vector state.
class DirectEngine final : public Engine {
 public:
  explicit DirectEngine(const ReactionSystem& sys, const kernels::Table* kernels = nullptr);

  std::string_view name() const override { return "direct"; }
  std::size_t entity_count() const override { return n_entities_; }
  void step(const State& current, const State& context, State& out) override;

  std::span<const CompiledReaction> compiled() const { return compiled_; }

 private:
  std::vector<CompiledReaction> compiled_;
  std::size_t n_entities_;
  const kernels::Table* kernels_;
  State union_buf_;
};

}  // namespace rsim
